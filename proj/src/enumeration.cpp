#include "csg/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "csg/error.hpp"
#include "csg/simd/kernels.hpp"
#include "simd/search.hpp"

namespace csg {

namespace {

constexpr std::uint64_t kMaxCompositions = 10'000'000;

std::uint64_t binomial_saturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

// Largest box over all compositions is the most balanced one.
std::uint64_t largest_box(int n, int t) {
  const int q = n / t;
  const int extra = n % t;
  unsigned __int128 v = 1;
  for (int k = 0; k < t; ++k) {
    v *= static_cast<unsigned>(q + (k < extra ? 1 : 0) + 1);
    if (v > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(v);
}

void compositions_into(int rest, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(rest);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = rest - (parts - 1); first >= 1; --first) {
    cur.push_back(first);
    compositions_into(rest - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

// Largest antichain of the componentwise order on the box; the delta order
// extends it, so this bounds the rows of any partial matrix.
std::size_t box_width(const std::vector<int>& sizes) {
  std::vector<std::uint64_t> level{1};
  for (int s : sizes) {
    std::vector<std::uint64_t> next(level.size() + static_cast<std::size_t>(s), 0);
    for (std::size_t i = 0; i < level.size(); ++i)
      for (int c = 0; c <= s; ++c) next[i + static_cast<std::size_t>(c)] += level[i];
    level = std::move(next);
  }
  return static_cast<std::size_t>(*std::max_element(level.begin(), level.end()));
}

std::uint64_t cond4_bits(const std::vector<int>& sizes, const std::vector<int>& counts) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k)
    if (counts[k] > 0 && counts[k + 1] < sizes[k + 1]) bits |= std::uint64_t{1} << k;
  return bits;
}

std::uint64_t full_cond4(int t) { return t <= 1 ? 0 : (~std::uint64_t{0} >> (65 - t)); }

struct Restrictions {
  bool veto_rows = false;
  bool null_rows = false;
  bool empty = false;
  bool role_check = false;
};

Restrictions restrictions_for(const EnumSpec& spec) {
  Restrictions r;
  r.veto_rows = spec.require.contains(Role::Vetoer);
  r.null_rows = spec.require.contains(Role::Null);
  // Nulls need at least two classes.
  r.empty = r.null_rows && spec.t == 1;
  const RoleSet pruned{Role::Vetoer, Role::Null};
  r.role_check = !spec.forbid.empty() || !pruned.contains_all(spec.require);
  return r;
}

bool row_allowed(const Restrictions& r, const std::vector<int>& sizes, const std::vector<int>& counts) {
  if (r.veto_rows && counts.front() != sizes.front()) return false;
  if (r.null_rows && counts.back() != 0) return false;
  return true;
}

// Per-worker acceptance: role filter, row tally and materialization.
class Acceptor {
 public:
  Acceptor(const EnumSpec& spec, const Restrictions& restr, std::vector<int> sizes, bool materialize, bool tally)
      : spec_(spec), restr_(restr), sizes_(std::move(sizes)), materialize_(materialize), tally_(tally) {}

  bool needs_rows() const { return materialize_ || restr_.role_check; }
  bool needs_visit() const { return needs_rows() || tally_; }

  bool accept(int depth, const std::function<Matrix()>& rows) {
    if (needs_rows()) {
      auto inv = Invariants::trusted(sizes_, rows());
      if (restr_.role_check) {
        const RoleSet present = structural_role_flags(inv);
        if (!present.contains_all(spec_.require) || present.intersects(spec_.forbid)) return false;
      }
      if (materialize_) out_.push_back(std::move(inv));
    }
    if (tally_) {
      if (by_rows_.size() <= static_cast<std::size_t>(depth)) by_rows_.resize(static_cast<std::size_t>(depth) + 1, 0);
      ++by_rows_[static_cast<std::size_t>(depth)];
    }
    return true;
  }

  std::vector<Invariants> take() { return std::exchange(out_, {}); }
  const std::vector<std::uint64_t>& by_rows() const { return by_rows_; }

 private:
  const EnumSpec& spec_;
  const Restrictions& restr_;
  std::vector<int> sizes_;
  bool materialize_;
  bool tally_;
  std::vector<Invariants> out_;
  std::vector<std::uint64_t> by_rows_;
};

struct BitsetBox {
  std::vector<int> sizes;
  Matrix cand;
  std::size_t words = 0;
  std::vector<std::uint64_t> down;
  std::vector<std::uint64_t> cond4;
  std::vector<std::uint64_t> cond_sets;
  std::vector<std::uint64_t> allowed;
  std::size_t max_depth = 0;
  detail::BoxView view;
};

BitsetBox build_bitset_box(const std::vector<int>& sizes, const Restrictions& restr) {
  BitsetBox b;
  b.sizes = sizes;
  ProfileBox box(sizes);
  const auto all = box.profiles();
  std::vector<Profile> prof(all.begin(), all.end() - 1);  // drop the zero profile
  const std::size_t c = prof.size();
  const int t = static_cast<int>(sizes.size());
  b.words = (c + 63) / 64;
  b.cand.reserve(c);
  for (const auto& p : prof) b.cand.push_back(p.counts());

  b.down.assign(c * b.words, 0);
  for (std::size_t i = 0; i < c; ++i) {
    const auto& pi = prof[i].prefix();
    for (std::size_t j = i + 1; j < c; ++j) {
      const auto& pj = prof[j].prefix();
      bool dom = true;
      for (int k = 0; k < t && dom; ++k) dom = pi[static_cast<std::size_t>(k)] >= pj[static_cast<std::size_t>(k)];
      if (dom) b.down[i * b.words + j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }

  b.cond4.resize(c);
  b.cond_sets.assign(static_cast<std::size_t>(std::max(t - 1, 0)) * b.words, 0);
  b.allowed.assign(b.words, 0);
  for (std::size_t i = 0; i < c; ++i) {
    b.cond4[i] = cond4_bits(sizes, b.cand[i]);
    for (std::uint64_t bits = b.cond4[i]; bits != 0; bits &= bits - 1)
      b.cond_sets[static_cast<std::size_t>(std::countr_zero(bits)) * b.words + i / 64] |= std::uint64_t{1} << (i % 64);
    if (row_allowed(restr, sizes, b.cand[i])) b.allowed[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  b.max_depth = box_width(sizes);
  b.view = detail::BoxView{c, b.words, t, b.down.data(), b.cond4.data(), b.cond_sets.data(), full_cond4(t)};
  return b;
}

using ShardFn = std::uint64_t (*)(const detail::ShardTask&, const detail::SearchHooks&);

ShardFn bitset_kernel() {
  if (simd::active_level() == simd::Level::Avx2 && simd::avx2_kernels() != nullptr && detail::search_avx2_compiled())
    return detail::search_shard_avx2;
  return detail::search_shard_scalar;
}

struct BitsetWorker {
  const BitsetBox& box;
  Acceptor& acceptor;
  int row_limit;
  std::vector<std::uint64_t> arena;
  std::vector<int> chosen;

  BitsetWorker(const BitsetBox& b, Acceptor& a, int limit)
      : box(b), acceptor(a), row_limit(limit), arena((b.max_depth + 2) * b.words), chosen(b.max_depth + 1) {}

  static bool visit(void* ctx, const int* rows, int depth) {
    auto* self = static_cast<BitsetWorker*>(ctx);
    return self->acceptor.accept(depth, [&] {
      Matrix m;
      m.reserve(static_cast<std::size_t>(depth));
      for (int d = 0; d < depth; ++d) m.push_back(self->box.cand[static_cast<std::size_t>(rows[d])]);
      return m;
    });
  }

  std::uint64_t run(int first) {
    detail::ShardTask task{&box.view, box.allowed.data(), first, row_limit, arena.data(), chosen.data()};
    detail::SearchHooks hooks;
    if (acceptor.needs_visit()) hooks = {this, &BitsetWorker::visit};
    return bitset_kernel()(task, hooks);
  }
};

class PrefixScanWorker {
 public:
  PrefixScanWorker(const std::vector<int>& sizes, const Restrictions& restr, Acceptor& acceptor, int row_limit)
      : box_(sizes),
        sizes_(sizes),
        restr_(restr),
        acceptor_(acceptor),
        row_limit_(row_limit),
        stride_(simd::padded_lanes(sizes.size())),
        full_(full_cond4(static_cast<int>(sizes.size()))),
        kernels_(simd::active_kernels()) {}

  std::uint64_t run(const std::vector<int>& first) {
    found_ = 0;
    place(0, first, 0);
    return found_;
  }

 private:
  void write_prefix(std::size_t slot, const std::vector<int>& counts) {
    if (prefix_.size() < (slot + 1) * stride_) prefix_.resize((slot + 1) * stride_, 0);
    int acc = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      acc += counts[k];
      prefix_[slot * stride_ + k] = static_cast<std::uint16_t>(acc);
    }
  }

  void place(std::size_t depth, const std::vector<int>& counts, std::uint64_t mask) {
    const std::uint64_t cm = mask | cond4_bits(sizes_, counts);
    if (chosen_.size() <= depth) chosen_.resize(depth + 1);
    chosen_[depth] = counts;
    write_prefix(depth, counts);
    const auto rows = static_cast<int>(depth) + 1;
    if (row_limit_ != 0 && rows == row_limit_) {
      if (cm == full_) accept(rows);
      return;
    }
    if (cm == full_ && row_limit_ == 0) accept(rows);

    std::vector<int> cur = counts;
    while (box_.step_down(cur)) {
      if (std::all_of(cur.begin(), cur.end(), [](int c) { return c == 0; })) break;
      if (!row_allowed(restr_, sizes_, cur)) continue;
      write_prefix(depth + 1, cur);
      if (kernels_.any_dominates(prefix_.data(), depth + 1, stride_, prefix_.data() + (depth + 1) * stride_)) continue;
      place(depth + 1, cur, cm);
    }
  }

  void accept(int rows) {
    const bool ok = !acceptor_.needs_visit() || acceptor_.accept(rows, [&] {
      return Matrix(chosen_.begin(), chosen_.begin() + rows);
    });
    if (ok) ++found_;
  }

  ProfileBox box_;
  const std::vector<int>& sizes_;
  const Restrictions& restr_;
  Acceptor& acceptor_;
  int row_limit_;
  std::size_t stride_;
  std::uint64_t full_;
  const simd::KernelTable& kernels_;
  std::vector<std::uint16_t> prefix_;
  Matrix chosen_;
  std::uint64_t found_ = 0;
};

struct RunResult {
  BigInt total = 0;
  std::vector<BigInt> by_rows;
};

// Shards of one composition are its admissible first rows, in decreasing lex
// order; each shard is searched independently and merged by addition.
class CompositionRun {
 public:
  CompositionRun(const EnumSpec& spec, const Restrictions& restr, std::vector<int> sizes, const InvariantsSink* sink,
                 bool tally)
      : spec_(spec), restr_(restr), sizes_(std::move(sizes)), sink_(sink), tally_(tally) {
    ProfileBox box(sizes_);
    const std::uint64_t candidates = box.volume() - 1;
    bitset_ = spec.engine == Engine::Bitset || (spec.engine == Engine::Auto && candidates <= kMaxBitsetCandidates);
    if (bitset_ && candidates > kMaxBitsetCandidates)
      throw InputError("bitset engine supports at most " + std::to_string(kMaxBitsetCandidates) + " candidate rows");
    if (bitset_) {
      bbox_ = build_bitset_box(sizes_, restr_);
      for (std::size_t i = 0; i < bbox_.cand.size(); ++i)
        if (bbox_.cand[i].front() > 0 && ((bbox_.allowed[i / 64] >> (i % 64)) & 1U) != 0) firsts_.push_back(static_cast<int>(i));
    } else {
      cursor_ = box.top().counts();
    }
  }

  void run(RunResult& result) {
    const int jobs = std::max(1, spec_.jobs);
    if (jobs == 1) {
      worker(result, true);
      return;
    }
    std::vector<std::thread> pool;
    std::vector<RunResult> parts(static_cast<std::size_t>(jobs));
    pool.reserve(static_cast<std::size_t>(jobs));
    std::exception_ptr failure;
    std::mutex fail_mu;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          worker(parts[static_cast<std::size_t>(w)], false);
        } catch (...) {
          std::lock_guard lock(fail_mu);
          if (!failure) failure = std::current_exception();
          abort_ = true;
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    for (auto& part : parts) merge(result, part);
  }

 private:
  struct Shard {
    std::size_t index;
    int first;
    std::vector<int> counts;
  };

  bool next_shard(Shard& shard) {
    std::lock_guard lock(cursor_mu_);
    if (abort_) return false;
    if (bitset_) {
      if (next_ >= firsts_.size()) return false;
      shard.index = next_;
      shard.first = firsts_[next_++];
      return true;
    }
    while (!cursor_done_) {
      std::vector<int> cur = cursor_;
      if (!ProfileBox(sizes_).step_down(cursor_) ||
          std::all_of(cursor_.begin(), cursor_.end(), [](int c) { return c == 0; }))
        cursor_done_ = true;
      if (cur.front() > 0 && row_allowed(restr_, sizes_, cur)) {
        shard.index = next_++;
        shard.counts = std::move(cur);
        return true;
      }
    }
    return false;
  }

  static void merge(RunResult& into, const RunResult& part) {
    into.total += part.total;
    if (into.by_rows.size() < part.by_rows.size()) into.by_rows.resize(part.by_rows.size(), 0);
    for (std::size_t r = 0; r < part.by_rows.size(); ++r) into.by_rows[r] += part.by_rows[r];
  }

  void worker(RunResult& result, bool inline_sink) {
    Acceptor acceptor(spec_, restr_, sizes_, sink_ != nullptr, tally_);
    std::optional<BitsetWorker> bw;
    std::optional<PrefixScanWorker> pw;
    if (bitset_)
      bw.emplace(bbox_, acceptor, spec_.rows.value_or(0));
    else
      pw.emplace(sizes_, restr_, acceptor, spec_.rows.value_or(0));

    Shard shard;
    while (next_shard(shard)) {
      const std::uint64_t found = bitset_ ? bw->run(shard.first) : pw->run(shard.counts);
      result.total += found;
      if (sink_ != nullptr) deliver(shard.index, acceptor.take(), inline_sink);
    }
    const auto& rows = acceptor.by_rows();
    if (result.by_rows.size() < rows.size()) result.by_rows.resize(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) result.by_rows[r] += rows[r];
  }

  // Emits shard outputs in shard order; the sink is never called concurrently.
  void deliver(std::size_t index, std::vector<Invariants> games, bool inline_sink) {
    if (inline_sink) {
      for (const auto& g : games) (*sink_)(g);
      return;
    }
    std::lock_guard lock(emit_mu_);
    pending_.emplace(index, std::move(games));
    while (!pending_.empty() && pending_.begin()->first == emitted_) {
      for (const auto& g : pending_.begin()->second) (*sink_)(g);
      pending_.erase(pending_.begin());
      ++emitted_;
    }
  }

  const EnumSpec& spec_;
  const Restrictions& restr_;
  std::vector<int> sizes_;
  const InvariantsSink* sink_;
  bool tally_;
  bool bitset_ = false;
  BitsetBox bbox_;
  std::vector<int> firsts_;

  std::mutex cursor_mu_;
  std::size_t next_ = 0;
  std::vector<int> cursor_;
  bool cursor_done_ = false;
  std::atomic<bool> abort_{false};

  std::mutex emit_mu_;
  std::map<std::size_t, std::vector<Invariants>> pending_;
  std::size_t emitted_ = 0;
};

RunResult run_spec(const EnumSpec& spec, const InvariantsSink* sink, bool tally) {
  check_spec(spec);
  RunResult result;
  const Restrictions restr = restrictions_for(spec);
  if (restr.empty) return result;
  if (spec.rows && *spec.rows > 0 && tally) result.by_rows.resize(static_cast<std::size_t>(*spec.rows) + 1, 0);
  for (auto& sizes : compositions(spec.n, spec.t)) {
    CompositionRun run(spec, restr, std::move(sizes), sink, tally);
    run.run(result);
  }
  return result;
}

}  // namespace

void check_spec(const EnumSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxPlayers)
    throw InputError("n must be between 1 and " + std::to_string(kMaxPlayers) + ", got " + std::to_string(spec.n));
  if (spec.t < 1 || spec.t > spec.n)
    throw InputError("t must be between 1 and n = " + std::to_string(spec.n) + ", got " + std::to_string(spec.t));
  if (spec.rows && *spec.rows < 1) throw InputError("rows must be positive, got " + std::to_string(*spec.rows));
  if (spec.jobs < 1) throw InputError("jobs must be positive, got " + std::to_string(spec.jobs));
  if (spec.require.intersects(spec.forbid)) throw InputError("a role is both required and forbidden");
  if (binomial_saturating(spec.n - 1, spec.t - 1) > kMaxCompositions)
    throw CapacityError("too many class-size vectors for n = " + std::to_string(spec.n) + ", t = " + std::to_string(spec.t));
  if (largest_box(spec.n, spec.t) > kMaxBoxProfiles)
    throw CapacityError("profile box exceeds 2^30 candidate rows for n = " + std::to_string(spec.n) +
                        ", t = " + std::to_string(spec.t));
  if (spec.engine == Engine::Bitset && largest_box(spec.n, spec.t) - 1 > kMaxBitsetCandidates)
    throw InputError("bitset engine supports at most " + std::to_string(kMaxBitsetCandidates) + " candidate rows");
}

std::vector<std::vector<int>> compositions(int n, int t) {
  if (n < 1) throw InputError("n must be positive, got " + std::to_string(n));
  if (t < 1 || t > n) throw InputError("t must be between 1 and n = " + std::to_string(n) + ", got " + std::to_string(t));
  if (binomial_saturating(n - 1, t - 1) > kMaxCompositions)
    throw CapacityError("too many class-size vectors for n = " + std::to_string(n) + ", t = " + std::to_string(t));
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions_into(n, t, cur, out);
  return out;
}

BigInt enumerate(const EnumSpec& spec, const InvariantsSink& sink) { return run_spec(spec, &sink, false).total; }

std::vector<Invariants> enumerate_all(const EnumSpec& spec) {
  std::vector<Invariants> out;
  enumerate(spec, [&](const Invariants& inv) { out.push_back(inv); });
  return out;
}

BigInt count(const EnumSpec& spec) { return run_spec(spec, nullptr, false).total; }

BigInt RowTable::at(int t, int r) const {
  auto it = cells.find({t, r});
  return it == cells.end() ? BigInt(0) : it->second;
}

BigInt RowTable::row_total(int r) const {
  BigInt s = 0;
  for (const auto& [key, v] : cells)
    if (key.second == r) s += v;
  return s;
}

BigInt RowTable::type_total(int t) const {
  BigInt s = 0;
  for (const auto& [key, v] : cells)
    if (key.first == t) s += v;
  return s;
}

RowTable count_by_rows(int n, int jobs) {
  if (n < 1) throw InputError("n must be positive, got " + std::to_string(n));
  RowTable table;
  table.n = n;
  for (int t = 1; t <= n; ++t) {
    EnumSpec spec;
    spec.n = n;
    spec.t = t;
    spec.count_only = true;
    spec.jobs = jobs;
    const auto res = run_spec(spec, nullptr, true);
    for (std::size_t r = 1; r < res.by_rows.size(); ++r)
      if (res.by_rows[r] != 0) table.cells[{t, static_cast<int>(r)}] = res.by_rows[r];
  }
  return table;
}

}  // namespace csg
