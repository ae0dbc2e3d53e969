#include "permspec/enumerator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "permspec/permanent.hpp"
#include "permspec/sequences.hpp"

namespace permspec {

namespace {

bool is_binary_kind(ClassKind kind) {
  return kind == ClassKind::Lambda3 || kind == ClassKind::Lambda3Diag || kind == ClassKind::Lambda3Sym;
}

void validate(const EnumerationTask& task) {
  if (task.n < 3) throw Error(Errc::invalid_argument, "enumeration needs n >= 3");
  const ClassKind kind = task.spec.kind();
  const long limit = enumeration_limit(kind, task.allow_large);
  if (task.n > limit) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "enumeration limit: n=" << task.n << " exceeds " << limit << " for " << to_string(kind) << " (about "
        << estimated_class_size(kind, task.n) << " members)";
    if (!task.allow_large && task.n <= enumeration_limit(kind, true)) msg << "; allow_large raises the limit";
    throw Error(Errc::enumeration_limit, msg.str());
  }
  if (task.shard && (task.shard->count == 0 || task.shard->index >= task.shard->count))
    throw Error(Errc::invalid_argument, "shard index must be below the shard count");
}

class PrefixGate {
 public:
  PrefixGate(std::optional<Shard> shard, unsigned worker, unsigned workers)
      : shard_(shard.value_or(Shard{})), worker_(worker), workers_(workers) {}

  bool owns() {
    const std::size_t index = next_++;
    if (index % shard_.count != shard_.index) return false;
    return owned_++ % workers_ == worker_;
  }

 private:
  Shard shard_;
  std::size_t worker_;
  std::size_t workers_;
  std::size_t next_ = 0;
  std::size_t owned_ = 0;
};

using BinaryLeaf = std::function<void(std::span<const std::uint64_t>, std::uint64_t)>;

// Row-by-row search over (0,1) classes. The permanent is carried along as a
// subset DP: layer k holds, for each k-set of columns, the number of ways the
// first k rows match into it.
class BinaryWalker {
 public:
  BinaryWalker(ClassKind kind, std::size_t n, bool permanents, bool indecomposable_only, PrefixGate gate,
               const BinaryLeaf& leaf)
      : kind_(kind),
        n_(n),
        permanents_(permanents),
        indecomposable_only_(indecomposable_only),
        gate_(gate),
        leaf_(leaf),
        rows_(n, 0),
        colsum_(n, 0) {
    if (permanents_) {
      layer_.assign(n + 1, std::vector<std::uint64_t>(std::size_t{1} << n, 0));
      touched_.assign(n + 1, {});
      layer_[0][0] = 1;
      touched_[0].push_back(0);
    }
  }

  void run() { descend(0); }

 private:
  void descend(std::size_t i) {
    if (i == 2 && !gate_.owns()) return;
    if (i == n_) {
      if (indecomposable_only_ && !is_connected_support(rows_)) return;
      leaf_(rows_, permanents_ ? layer_[n_][(std::size_t{1} << n_) - 1] : 0);
      return;
    }
    std::vector<std::size_t> cand;
    switch (kind_) {
      case ClassKind::Lambda3: {
        for (std::size_t c = 0; c < n_; ++c)
          if (colsum_[c] < 3) cand.push_back(c);
        for (std::size_t z = 2; z < cand.size(); ++z)
          for (std::size_t y = 1; y < z; ++y)
            for (std::size_t x = 0; x < y; ++x) place(i, bit(cand[x]) | bit(cand[y]) | bit(cand[z]));
        break;
      }
      case ClassKind::Lambda3Diag: {
        // columns to the right keep room for their own diagonal one
        for (std::size_t c = 0; c < n_; ++c)
          if (c != i && colsum_[c] < (c < i ? 3 : 2)) cand.push_back(c);
        for (std::size_t y = 1; y < cand.size(); ++y)
          for (std::size_t x = 0; x < y; ++x) place(i, bit(i) | bit(cand[x]) | bit(cand[y]));
        break;
      }
      default: {
        std::uint64_t forced = 0;
        for (std::size_t r = 0; r < i; ++r)
          if ((rows_[r] >> i) & 1u) forced |= bit(r);
        const int need = 2 - std::popcount(forced);
        if (need < 0) return;
        for (std::size_t c = i + 1; c < n_; ++c)
          if (colsum_[c] < 2) cand.push_back(c);
        const std::uint64_t base = forced | bit(i);
        if (need == 0) {
          place(i, base);
        } else if (need == 1) {
          for (std::size_t c : cand) place(i, base | bit(c));
        } else {
          for (std::size_t y = 1; y < cand.size(); ++y)
            for (std::size_t x = 0; x < y; ++x) place(i, base | bit(cand[x]) | bit(cand[y]));
        }
        break;
      }
    }
  }

  void place(std::size_t i, std::uint64_t mask) {
    rows_[i] = mask;
    for (std::uint64_t m = mask; m; m &= m - 1) ++colsum_[std::countr_zero(m)];
    const std::size_t remaining = n_ - i - 1;
    bool feasible = true;
    for (std::size_t c = 0; c < n_ && feasible; ++c)
      if (static_cast<std::size_t>(3 - colsum_[c]) > remaining) feasible = false;
    if (feasible && permanents_) feasible = extend(i, mask);
    if (feasible) descend(i + 1);
    if (permanents_) clear(i + 1);
    for (std::uint64_t m = mask; m; m &= m - 1) --colsum_[std::countr_zero(m)];
    rows_[i] = 0;
  }

  bool extend(std::size_t i, std::uint64_t mask) {
    auto& next = layer_[i + 1];
    auto& next_touched = touched_[i + 1];
    for (std::size_t s : touched_[i]) {
      const std::uint64_t v = layer_[i][s];
      for (std::uint64_t m = mask & ~static_cast<std::uint64_t>(s); m; m &= m - 1) {
        const std::size_t t = s | (std::size_t{1} << std::countr_zero(m));
        if (next[t] == 0) next_touched.push_back(t);
        next[t] += v;
      }
    }
    return !next_touched.empty();
  }

  void clear(std::size_t k) {
    for (std::size_t s : touched_[k]) layer_[k][s] = 0;
    touched_[k].clear();
  }

  static std::uint64_t bit(std::size_t c) { return std::uint64_t{1} << c; }

  ClassKind kind_;
  std::size_t n_;
  bool permanents_;
  bool indecomposable_only_;
  PrefixGate gate_;
  const BinaryLeaf& leaf_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> colsum_;
  std::vector<std::vector<std::uint64_t>> layer_;
  std::vector<std::vector<std::size_t>> touched_;
};

using WeightedLeaf = std::function<void(const WeightedMatrix&)>;

// Rows pick the columns of alpha, beta and gamma; each weight is used once per column.
class TripleWalker {
 public:
  TripleWalker(bool diagonal, std::size_t n, const Weights& w, bool indecomposable_only, PrefixGate gate,
               const WeightedLeaf& leaf)
      : diagonal_(diagonal), n_(n), w_(w), indecomposable_only_(indecomposable_only), gate_(gate), leaf_(leaf),
        pick_(n) {}

  void run() { descend(0); }
  std::uint64_t bare_count() const { return bare_; }

 private:
  void descend(std::size_t i) {
    if (i == 2 && !gate_.owns()) return;
    if (i == n_) {
      emit();
      return;
    }
    for (std::size_t ca = 0; ca < n_; ++ca) {
      if (used_a_ >> ca & 1u) continue;
      for (std::size_t cb = 0; cb < n_; ++cb) {
        if (cb == ca || (used_b_ >> cb & 1u) || (diagonal_ && cb != i)) continue;
        for (std::size_t cg = 0; cg < n_; ++cg) {
          if (cg == ca || cg == cb || (used_g_ >> cg & 1u)) continue;
          pick_[i] = {ca, cb, cg};
          used_a_ ^= bit(ca), used_b_ ^= bit(cb), used_g_ ^= bit(cg);
          descend(i + 1);
          used_a_ ^= bit(ca), used_b_ ^= bit(cb), used_g_ ^= bit(cg);
        }
      }
    }
  }

  void emit() {
    std::vector<std::uint64_t> support(n_);
    for (std::size_t i = 0; i < n_; ++i) support[i] = bit(pick_[i][0]) | bit(pick_[i][1]) | bit(pick_[i][2]);
    if (indecomposable_only_ && !is_connected_support(support)) return;
    if (!leaf_) {
      ++bare_;
      return;
    }
    WeightedMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      m(i, pick_[i][0]) = w_.alpha;
      m(i, pick_[i][1]) = w_.beta;
      m(i, pick_[i][2]) = w_.gamma;
    }
    leaf_(m);
  }

  static std::uint64_t bit(std::size_t c) { return std::uint64_t{1} << c; }

  bool diagonal_;
  std::size_t n_;
  Weights w_;
  bool indecomposable_only_;
  PrefixGate gate_;
  const WeightedLeaf& leaf_;
  std::vector<std::array<std::size_t, 3>> pick_;
  std::uint64_t used_a_ = 0, used_b_ = 0, used_g_ = 0;
  std::uint64_t bare_ = 0;
};

// Every orientation of the cycles of a symmetric pattern's off-diagonal part.
// Without a leaf only the number of orientations is returned.
std::uint64_t orient(std::span<const std::uint64_t> rows, const Weights& w, const WeightedLeaf& leaf) {
  const std::size_t n = rows.size();
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle{start};
    seen[start] = true;
    std::size_t prev = start, cur = static_cast<std::size_t>(std::countr_zero(rows[start] & ~(std::uint64_t{1} << start)));
    while (cur != start) {
      cycle.push_back(cur);
      seen[cur] = true;
      const std::uint64_t nb = rows[cur] & ~(std::uint64_t{1} << cur) & ~(std::uint64_t{1} << prev);
      prev = cur;
      cur = static_cast<std::size_t>(std::countr_zero(nb));
    }
    cycles.push_back(std::move(cycle));
  }
  if (!leaf) return std::uint64_t{1} << cycles.size();
  std::vector<std::size_t> perm(n);
  for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << cycles.size()); ++flips) {
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      const auto& cyc = cycles[c];
      const std::size_t len = cyc.size();
      for (std::size_t k = 0; k < len; ++k) {
        if ((flips >> c) & 1u)
          perm[cyc[(k + 1) % len]] = cyc[k];
        else
          perm[cyc[k]] = cyc[(k + 1) % len];
      }
    }
    leaf(matrix_from_permutation(perm, w));
  }
  return std::uint64_t{1} << cycles.size();
}

void walk_binary(const EnumerationTask& task, unsigned worker, unsigned workers, bool permanents,
                 const BinaryLeaf& leaf) {
  BinaryWalker walker(task.spec.kind(), static_cast<std::size_t>(task.n), permanents, task.indecomposable_only,
                      PrefixGate(task.shard, worker, workers), leaf);
  walker.run();
}

// An empty leaf only counts; the count is returned.
std::uint64_t walk_weighted(const EnumerationTask& task, unsigned worker, unsigned workers, const WeightedLeaf& leaf) {
  const Weights& w = *task.spec.weights();
  const PrefixGate gate(task.shard, worker, workers);
  std::uint64_t count = 0;
  if (task.spec.kind() == ClassKind::LambdaABGSym) {
    BinaryLeaf pattern = [&](std::span<const std::uint64_t> rows, std::uint64_t) { count += orient(rows, w, leaf); };
    BinaryWalker walker(ClassKind::Lambda3Sym, static_cast<std::size_t>(task.n), false, task.indecomposable_only,
                        gate, pattern);
    walker.run();
    return count;
  }
  TripleWalker walker(task.spec.kind() == ClassKind::LambdaABGDiag, static_cast<std::size_t>(task.n), w,
                      task.indecomposable_only, gate, leaf);
  walker.run();
  return leaf ? 0 : walker.bare_count();
}

bool connected(const WeightedMatrix& m) {
  std::vector<std::uint64_t> support(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j) != 0) support[i] |= std::uint64_t{1} << j;
  return is_connected_support(support);
}

}  // namespace

long enumeration_limit(ClassKind kind, bool allow_large) {
  switch (kind) {
    case ClassKind::Lambda3: return allow_large ? 7 : 6;
    case ClassKind::Lambda3Diag: return allow_large ? 9 : 8;
    case ClassKind::Lambda3Sym: return allow_large ? 12 : 10;
    case ClassKind::LambdaABG: return allow_large ? 7 : 6;
    case ClassKind::LambdaABGDiag: return allow_large ? 8 : 7;
    case ClassKind::LambdaABGSym: return allow_large ? 12 : 10;
  }
  return 0;
}

double estimated_class_size(ClassKind kind, long n) {
  const double x = static_cast<double>(n);
  const double nfact = std::tgamma(x + 1);
  switch (kind) {
    case ClassKind::Lambda3: return asymptotic_estimate(AsymptoticClass::Lambda3, n);
    case ClassKind::Lambda3Diag: return asymptotic_estimate(AsymptoticClass::Lambda3Diag, n);
    case ClassKind::LambdaABG: return nfact * to_double(latin_k(n));
    case ClassKind::LambdaABGDiag: return to_double(latin_k(n));
    // permutations without cycles shorter than 3, before and after forgetting orientation
    case ClassKind::LambdaABGSym: return nfact * std::exp(-1.5);
    case ClassKind::Lambda3Sym: return nfact * std::exp(-0.75) / std::sqrt(std::numbers::pi * x);
  }
  return 0;
}

void for_each_binary(const EnumerationTask& task,
                     const std::function<void(std::span<const std::uint64_t>, std::uint64_t)>& visit) {
  validate(task);
  if (!is_binary_kind(task.spec.kind())) throw Error(Errc::invalid_argument, "for_each_binary needs a (0,1) class");
  walk_binary(task, 0, 1, true, visit);
}

void for_each_weighted(const EnumerationTask& task, const std::function<void(const WeightedMatrix&)>& visit) {
  validate(task);
  if (!task.spec.is_weighted()) throw Error(Errc::invalid_argument, "for_each_weighted needs a weighted class");
  walk_weighted(task, 0, 1, visit);
}

std::vector<BinaryMatrix> enumerate_binary(const EnumerationTask& task) {
  std::vector<BinaryMatrix> out;
  const auto n = static_cast<std::size_t>(task.n);
  for_each_binary(task, [&](std::span<const std::uint64_t> rows, std::uint64_t) {
    out.emplace_back(n, std::vector<std::uint64_t>(rows.begin(), rows.end()));
  });
  return out;
}

std::vector<WeightedMatrix> enumerate_weighted(const EnumerationTask& task) {
  std::vector<WeightedMatrix> out;
  for_each_weighted(task, [&](const WeightedMatrix& m) { out.push_back(m); });
  return out;
}

ScanResult scan(const EnumerationTask& task) {
  validate(task);
  const unsigned workers = std::max(1u, task.workers);
  const bool binary = is_binary_kind(task.spec.kind());

  struct Local {
    std::uint64_t count = 0;
    std::set<std::uint64_t> per, indec;
    std::set<ExactValue> wper, windec;
  };
  std::vector<Local> locals(workers);

  auto work = [&](unsigned w) {
    Local& local = locals[w];
    if (binary) {
      BinaryLeaf leaf = [&](std::span<const std::uint64_t> rows, std::uint64_t per) {
        ++local.count;
        if (!task.with_permanents) return;
        local.per.insert(per);
        if (task.indecomposable_only || is_connected_support(rows)) local.indec.insert(per);
      };
      walk_binary(task, w, workers, task.with_permanents, leaf);
    } else if (!task.with_permanents) {
      local.count = walk_weighted(task, w, workers, WeightedLeaf{});
    } else {
      WeightedLeaf leaf = [&](const WeightedMatrix& m) {
        ++local.count;
        ExactValue per = permanent_ryser(m);
        if (task.indecomposable_only || connected(m)) local.windec.insert(per);
        local.wper.insert(std::move(per));
      };
      walk_weighted(task, w, workers, leaf);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  ScanResult result;
  std::vector<ExactValue> per, indec;
  for (const auto& local : locals) {
    result.count += BigInt(static_cast<unsigned long>(local.count));
    for (auto v : local.per) per.emplace_back(static_cast<unsigned long>(v));
    for (auto v : local.indec) indec.emplace_back(static_cast<unsigned long>(v));
    per.insert(per.end(), local.wper.begin(), local.wper.end());
    indec.insert(indec.end(), local.windec.begin(), local.windec.end());
  }
  result.spectrum = Spectrum(std::move(per));
  result.indecomposable = Spectrum(std::move(indec));
  return result;
}

namespace {

ClassSpec diagonal_counterpart(const ClassSpec& spec) {
  switch (spec.kind()) {
    case ClassKind::Lambda3: return ClassSpec::binary(ClassKind::Lambda3Diag);
    case ClassKind::LambdaABG: return ClassSpec::weighted(ClassKind::LambdaABGDiag, *spec.weights());
    default: return spec;
  }
}

}  // namespace

Spectrum brute_spectrum(const ClassSpec& spec, long n, const BruteOptions& options) {
  EnumerationTask task;
  task.spec = options.via_diagonal ? diagonal_counterpart(spec) : spec;
  task.n = n;
  task.allow_large = options.allow_large;
  task.workers = options.workers;
  return scan(task).spectrum;
}

BigInt brute_count(const ClassSpec& spec, long n, const BruteOptions& options) {
  if (spec.is_weighted() && !spec.weights()->pairwise_distinct())
    throw Error(Errc::invalid_argument, "counting a weighted class needs pairwise distinct weights");
  EnumerationTask task;
  task.spec = spec;
  task.n = n;
  task.allow_large = options.allow_large;
  task.workers = options.workers;
  task.with_permanents = false;
  return scan(task).count;
}

IndecomposableSpectrum indecomposable_spectrum(long n, const BruteOptions& options) {
  EnumerationTask task;
  task.spec = ClassSpec::binary(options.via_diagonal ? ClassKind::Lambda3Diag : ClassKind::Lambda3);
  task.n = n;
  task.allow_large = options.allow_large;
  task.workers = options.workers;
  task.indecomposable_only = true;
  IndecomposableSpectrum out;
  out.spectrum = scan(task).indecomposable;
  out.mu1 = out.spectrum.max();
  return out;
}

bool MciReport::ok() const {
  if (!violations.empty()) return false;
  return std::all_of(bounds.begin(), bounds.end(), [](const MuBound& b) { return b.holds; });
}

MciReport mci_check(long n_max, const std::map<long, Spectrum>& indecomposable) {
  if (n_max < 3) throw Error(Errc::invalid_argument, "mci_check needs n_max >= 3");
  MciReport report;
  report.n_max = n_max;
  for (long s = 3; s <= n_max; ++s) {
    auto it = indecomposable.find(s);
    if (it == indecomposable.end() || it->second.empty())
      throw Error(Errc::missing_spectrum, "missing spectrum for size " + std::to_string(s));
    report.mu1[s] = it->second.max();
  }
  for (long n1 = 3; 2 * n1 <= n_max; ++n1)
    for (long n2 = n1; n1 + n2 <= n_max; ++n2) {
      MciPair pair{n1, n2, report.mu1[n1 + n2], report.mu1[n1] * report.mu1[n2], false};
      pair.holds = pair.lhs <= pair.rhs;
      if (!pair.holds) report.violations.push_back(pair);
      report.pairs.push_back(std::move(pair));
    }
  for (long s = 4; s <= n_max; ++s) {
    const ExactValue& mu = report.mu1[s];
    report.bounds.push_back({s, mu, mu * mu <= pow(ExactValue(3), s)});
  }
  return report;
}

MciReport mci_check(long n_max, const BruteOptions& options) {
  std::map<long, Spectrum> spectra;
  for (long s = 3; s <= n_max; ++s) spectra[s] = indecomposable_spectrum(s, options).spectrum;
  return mci_check(n_max, spectra);
}

}  // namespace permspec
