#include <algorithm>
#include <limits>

#include "csg/error.hpp"
#include "csg/profile.hpp"

namespace csg {

Profile::Profile(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw InputError("a profile needs at least one class");
  prefix_.resize(counts_.size());
  int acc = 0;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] < 0) throw InputError("profile entries must be nonnegative");
    acc += counts_[k];
    prefix_[k] = acc;
  }
}

DeltaOrder delta_compare(const Profile& p, const Profile& q) {
  if (p.size() != q.size()) throw InputError("profiles of different lengths are not comparable");
  bool ge = true;
  bool le = true;
  for (int k = 0; k < p.size(); ++k) {
    const int a = p.prefix()[static_cast<std::size_t>(k)];
    const int b = q.prefix()[static_cast<std::size_t>(k)];
    if (a < b) ge = false;
    if (a > b) le = false;
  }
  if (ge && le) return DeltaOrder::Equal;
  if (ge) return DeltaOrder::Dominates;
  if (le) return DeltaOrder::DominatedBy;
  return DeltaOrder::Incomparable;
}

bool delta_geq(const Profile& p, const Profile& q) {
  const auto r = delta_compare(p, q);
  return r == DeltaOrder::Dominates || r == DeltaOrder::Equal;
}

ProfileBox::ProfileBox(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InputError("a profile box needs at least one class");
  for (int s : sizes_)
    if (s < 1) throw InputError("class sizes must be positive");
}

int ProfileBox::n() const {
  int total = 0;
  for (int s : sizes_) total += s;
  return total;
}

std::uint64_t ProfileBox::volume() const {
  std::uint64_t v = 1;
  for (int s : sizes_) {
    const auto f = static_cast<std::uint64_t>(s) + 1;
    if (v > std::numeric_limits<std::uint64_t>::max() / f) return std::numeric_limits<std::uint64_t>::max();
    v *= f;
  }
  return v;
}

bool ProfileBox::contains(const Profile& p) const {
  if (p.size() != t()) return false;
  for (int k = 0; k < t(); ++k)
    if (p[k] > sizes_[static_cast<std::size_t>(k)]) return false;
  return true;
}

bool ProfileBox::step_down(std::vector<int>& counts) const {
  // Mixed-radix decrement from the last digit.
  for (int k = t() - 1; k >= 0; --k) {
    auto& c = counts[static_cast<std::size_t>(k)];
    if (c > 0) {
      --c;
      return true;
    }
    c = sizes_[static_cast<std::size_t>(k)];
  }
  return false;
}

std::vector<Profile> ProfileBox::profiles() const {
  const std::uint64_t v = volume();
  if (v > (std::uint64_t{1} << 26)) throw CapacityError("profile box too large to materialize");
  std::vector<Profile> out;
  out.reserve(static_cast<std::size_t>(v));
  std::vector<int> counts = sizes_;
  do {
    out.emplace_back(counts);
  } while (step_down(counts));
  return out;
}

Profile profile_of(const TypePartition& partition, Coalition s) {
  std::vector<int> counts;
  counts.reserve(partition.classes.size());
  Coalition covered;
  for (Coalition cls : partition.class_masks()) {
    counts.push_back((s & cls).size());
    covered = covered | cls;
  }
  if (!s.subset_of(covered)) throw InputError("coalition has a member outside the partitioned player set");
  return Profile(std::move(counts));
}

}  // namespace csg
