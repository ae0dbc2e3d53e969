#include "permspec/upper.hpp"

#include <algorithm>
#include <functional>

#include "permspec/sequences.hpp"

namespace permspec {

std::string to_string(UpperKind kind) { return kind == UpperKind::Symmetric ? "symmetric" : "general"; }

namespace {

struct Frame {
  long n, t, j;
  ExactValue floor;
  ExactValue unit;  // 6^((n-j)/3)
};

Frame frame(long n, long t) {
  if (t < 0) throw Error(Errc::invalid_argument, "t must be nonnegative");
  const long j = n % 3;
  if (n < 4 * (3 * t + j))
    throw Error(Errc::hypothesis_violated, "hypothesis violated: need n >= " + std::to_string(4 * (3 * t + j)));
  Frame f{n, t, j, pow(ExactValue(9), 3 * t + j) * pow(ExactValue(6), (n - 4 * j) / 3 - 4 * t),
          pow(ExactValue(6), (n - j) / 3)};
  return f;
}

ExactValue tau(const Frame& f, long i) { return pow(ExactValue(9), 3 * f.t + f.j) * pow(ExactValue(6), i - 4 * f.t - f.j); }

Partition with_threes(const Partition& rho, long n) {
  Partition full{rho.parts, 3};
  full.parts.insert(full.parts.end(), static_cast<std::size_t>((n - rho.total()) / 3), 3);
  return full;
}

// Blocks of size 3i+j built from parts >= 4; 3 itself is the lone block {3}.
std::vector<Partition> blocks(long m) {
  if (m == 3) return {Partition{{}, 4}};
  return partitions(m, 4);
}

void collect(std::map<ExactValue, std::vector<Partition>, std::greater<>>& found, const ExactValue& value,
             Partition provenance) {
  auto& list = found[value];
  if (std::find(list.begin(), list.end(), provenance) == list.end()) list.push_back(std::move(provenance));
}

RankedMagnitudes finish(const Frame& f, UpperKind kind,
                        const std::map<ExactValue, std::vector<Partition>, std::greater<>>& found) {
  RankedMagnitudes out;
  out.kind = kind;
  out.n = f.n;
  out.t = f.t;
  out.j = f.j;
  out.floor = f.floor;
  for (const auto& [value, prov] : found) out.values.push_back({value, value / f.unit, prov});
  return out;
}

}  // namespace

RankedMagnitudes upper_symmetric(long n, long t) {
  const Frame f = frame(n, t);
  std::map<ExactValue, std::vector<Partition>, std::greater<>> found;
  for (long i = 1; i <= 4 * t + f.j; ++i) {
    const long m = 3 * i + f.j;
    const ExactValue threshold = tau(f, i);
    const ExactValue scale = pow(ExactValue(6), (n - m) / 3);
    for (const auto& rho : blocks(m)) {
      ExactValue y = rho.parts.empty() ? ExactValue(6) : ExactValue(1);
      for (long part : rho.parts) y *= a_seq(part);
      if (y < threshold) continue;
      collect(found, y * scale, with_threes(rho, n));
    }
  }
  return finish(f, UpperKind::Symmetric, found);
}

std::optional<ExactValue> mu1_bound(long s, const SmallSpectra& small_spectra) {
  std::map<long, std::optional<ExactValue>> memo;
  std::function<std::optional<ExactValue>(long)> bound = [&](long k) -> std::optional<ExactValue> {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    std::optional<ExactValue> best;
    if (auto it = small_spectra.find(k); it != small_spectra.end() && !it->second.empty()) {
      best = it->second.max();
    } else if (k == 3) {
      best = ExactValue(6);
    } else {
      for (long s1 = 3; s1 + 3 <= k && s1 <= k - s1; ++s1) {
        auto b1 = bound(s1), b2 = bound(k - s1);
        if (!b1 || !b2) continue;
        ExactValue v = *b1 * *b2;
        if (!best || v < *best) best = v;
      }
    }
    memo[k] = best;
    return best;
  };
  return bound(s);
}

RankedMagnitudes upper_general(long n, long t, const SmallSpectra& small_spectra, MissingPolicy policy) {
  const Frame f = frame(n, t);
  std::map<ExactValue, std::vector<Partition>, std::greater<>> found;
  std::optional<ExactValue> ceiling;
  std::vector<long> missing;

  for (long i = 1; i <= 4 * t + f.j; ++i) {
    const long m = 3 * i + f.j;
    const ExactValue threshold = tau(f, i);
    const ExactValue scale = pow(ExactValue(6), (n - m) / 3);
    for (const auto& rho : blocks(m)) {
      Partition full = with_threes(rho, n);
      if (rho.parts.empty()) {
        if (6 >= threshold) collect(found, 6 * scale, std::move(full));
        continue;
      }
      // descending value lists per part, or the bound when the spectrum is absent
      std::vector<std::vector<ExactValue>> lists;
      std::vector<long> absent;
      ExactValue bound = 1;
      for (long part : rho.parts) {
        auto it = small_spectra.find(part);
        if (it == small_spectra.end() || it->second.empty()) {
          auto b = mu1_bound(part, small_spectra);
          if (!b)
            throw Error(Errc::missing_spectrum,
                        "missing spectrum for size " + std::to_string(part) + " and no bound available");
          absent.push_back(part);
          bound *= *b;
          continue;
        }
        lists.emplace_back(it->second.values().rbegin(), it->second.values().rend());
        bound *= lists.back().front();
      }
      if (bound < threshold) continue;
      if (!absent.empty()) {
        const ExactValue reach = bound * scale;
        if (!ceiling || reach > *ceiling) ceiling = reach;
        for (long s : absent)
          if (std::find(missing.begin(), missing.end(), s) == missing.end()) missing.push_back(s);
        continue;
      }
      // products over the per-part lists, pruned against the threshold
      std::vector<ExactValue> suffix_max(lists.size() + 1, ExactValue(1));
      for (std::size_t k = lists.size(); k-- > 0;) suffix_max[k] = suffix_max[k + 1] * lists[k].front();
      std::function<void(std::size_t, const ExactValue&)> walk = [&](std::size_t k, const ExactValue& acc) {
        if (k == lists.size()) {
          collect(found, acc * scale, full);
          return;
        }
        for (const auto& x : lists[k]) {
          ExactValue next = acc * x;
          if (next * suffix_max[k + 1] < threshold) break;
          walk(k + 1, next);
        }
      };
      walk(0, ExactValue(1));
    }
  }

  std::sort(missing.begin(), missing.end());
  if (ceiling && policy == MissingPolicy::Strict) {
    std::string sizes;
    for (long s : missing) sizes += (sizes.empty() ? "" : ", ") + std::to_string(s);
    throw Error(Errc::missing_spectrum, "missing spectrum for sizes " + sizes);
  }
  if (ceiling) {
    for (auto it = found.begin(); it != found.end();) {
      if (it->first < *ceiling)
        it = found.erase(it);
      else
        ++it;
    }
  }
  auto out = finish(f, UpperKind::General, found);
  out.conditional_on_mci = true;
  out.unknown_ceiling = ceiling;
  out.missing_sizes = std::move(missing);
  return out;
}

namespace {

const std::vector<ExactValue>& table(UpperKind kind, long j) {
  static const std::vector<std::vector<ExactValue>> symmetric{
      {exact(1), exact(9, 16), exact(5, 9), exact(13, 24), exact(13, 36), exact(49, 144), exact(31, 96),
       exact(81, 256), exact(5, 16), exact(403, 1296)},
      {exact(3, 2), exact(31, 36), exact(27, 32), exact(5, 6), exact(13, 16), exact(169, 216), exact(125, 216),
       exact(13, 24), exact(637, 1296), exact(31, 64)},
      {exact(9, 4), exact(13, 6), exact(49, 36), exact(31, 24), exact(81, 64), exact(5, 4), exact(39, 32),
       exact(65, 54), exact(169, 144), exact(67, 72)},
  };
  static const std::vector<std::vector<ExactValue>> general{
      {exact(1), exact(9, 16), exact(5, 9), exact(13, 24)},
      {exact(3, 2), exact(8, 9), exact(31, 36), exact(27, 32), exact(5, 6), exact(13, 15), exact(169, 216)},
      {exact(9, 4), exact(13, 6), exact(2), exact(13, 9), exact(49, 36), exact(4, 3), exact(31, 24), exact(81, 64),
       exact(5, 4), exact(11, 9), exact(39, 32)},
  };
  if (j < 0 || j > 2) throw Error(Errc::invalid_argument, "residue must be 0, 1 or 2");
  return kind == UpperKind::Symmetric ? symmetric[j] : general[j];
}

}  // namespace

long table_depth(UpperKind kind, long j) { return static_cast<long>(table(kind, j).size()); }

ExactValue table_fixture(UpperKind kind, long j, long rank) {
  const auto& t = table(kind, j);
  if (rank < 1 || rank > static_cast<long>(t.size()))
    throw Error(Errc::invalid_argument, "rank out of range: published ranks are 1.." + std::to_string(t.size()));
  return t[rank - 1];
}

std::vector<TableErratum> table_errata() {
  return {
      {UpperKind::General, 1, 6, exact(13, 15), exact(13, 16),
       "printed 13/15 is above the rank-5 value 5/6, out of order; the block product a(4)^2 a(5) gives 13/16"},
      {UpperKind::General, 2, 11, exact(39, 32), exact(39, 32),
       "printed against 6^((n-1)/3); the residue-2 unit 6^((n-2)/3) is meant"},
  };
}

ExactValue table_coefficient(UpperKind kind, long j, long rank) {
  ExactValue v = table_fixture(kind, j, rank);
  for (const auto& e : table_errata())
    if (e.kind == kind && e.j == j && e.rank == rank) v = e.corrected;
  return v;
}

std::vector<TableOmission> table_omissions() {
  return {
      {UpperKind::Symmetric, 1, 8, exact(49, 96), {8, 4, 4},
       "a(8) a(4)^2 a(3)^((n-16)/3) lies between the printed ranks 8 (13/24) and 9 (637/1296)"},
  };
}

std::vector<ExactValue> corrected_table(UpperKind kind, long j) {
  std::vector<ExactValue> out;
  const long depth = table_depth(kind, j);
  auto omitted_after = [&](long rank) {
    for (const auto& o : table_omissions())
      if (o.kind == kind && o.j == j && o.after_rank == rank) out.push_back(o.value);
  };
  omitted_after(0);
  for (long rank = 1; rank <= depth; ++rank) {
    out.push_back(table_coefficient(kind, j, rank));
    omitted_after(rank);
  }
  return out;
}

}  // namespace permspec
