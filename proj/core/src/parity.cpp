#include "permspec/parity.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace permspec {

bool upsilon(const BinaryMatrix& a, std::uint64_t removed) {
  for (std::uint64_t row : a.rows())
    if (std::popcount(row & ~removed) % 2 == 0) return false;
  return true;
}

bool parity_det_oracle(const BinaryMatrix& a) {
  std::vector<std::uint64_t> rows(a.rows().begin(), a.rows().end());
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = col;
    while (pivot < n && !(rows[pivot] & bit)) ++pivot;
    if (pivot == n) return false;
    std::swap(rows[pivot], rows[col]);
    for (std::size_t r = col + 1; r < n; ++r)
      if (rows[r] & bit) rows[r] ^= rows[col];
  }
  return true;
}

std::vector<long> testing_sequence(long n) {
  if (n < 3) throw Error(Errc::invalid_argument, "testing sequence needs n >= 3");
  std::vector<long> out;
  for (long r = 4; r <= 2 * (n / 3); r += 2) out.push_back(r);
  return out;
}

void for_each_upsilon_hit(const BinaryMatrix& a, long r,
                          const std::function<void(std::uint64_t, const std::vector<int>&)>& visit) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = a.column(j);
  std::vector<int> sums(n);
  for (std::size_t i = 0; i < n; ++i) sums[i] = a.row_sum(i);

  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::pair<std::uint64_t, std::vector<int>>> hits;
  std::function<void(std::size_t, long, std::uint64_t)> walk = [&](std::size_t j, long left, std::uint64_t removed) {
    // a row with no undecided support left must already be odd
    const std::uint64_t open = j >= n ? 0 : all & (~std::uint64_t{0} << j);
    for (std::size_t i = 0; i < n; ++i)
      if ((a.row(i) & open) == 0 && sums[i] % 2 == 0) return;
    if (left == 0) {
      for (std::size_t i = 0; i < n; ++i)
        if (sums[i] % 2 == 0) return;
      hits.emplace_back(removed, sums);
      return;
    }
    if (static_cast<long>(n - j) < left) return;
    // remove column j
    for (std::size_t i = 0; i < n; ++i)
      if ((cols[j] >> i) & 1u) --sums[i];
    walk(j + 1, left - 1, removed | (std::uint64_t{1} << j));
    for (std::size_t i = 0; i < n; ++i)
      if ((cols[j] >> i) & 1u) ++sums[i];
    // keep column j
    walk(j + 1, left, removed);
  };
  if (r < 0 || r > static_cast<long>(n)) return;
  walk(0, r, 0);
  std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [mask, s] : hits) visit(mask, s);
}

ParityReport parity_ryser(const BinaryMatrix& a, std::string id) {
  if (!is_class_member(a, ClassSpec::binary(ClassKind::Lambda3)))
    throw Error(Errc::not_in_class, "matrix is not in the three-per-line class");
  ParityReport report;
  report.id = std::move(id);
  const long n = static_cast<long>(a.size());
  report.testing_sequence = testing_sequence(n);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y)
      if (a.column(x) == a.column(y)) report.distinct_columns = false;
  if (!report.distinct_columns) {
    report.odd = false;
    return report;
  }
  // the empty removal always contributes: every row sum is 3
  std::uint64_t total = 1;
  report.contributing_subsets[0] = 1;
  for (long r : report.testing_sequence) {
    std::uint64_t count = 0;
    for_each_upsilon_hit(a, r, [&count](std::uint64_t, const std::vector<int>&) { ++count; });
    report.contributing_subsets[r] = count;
    total += count;
  }
  report.odd = total % 2 == 1;
  return report;
}

ParityCensus parity_census(long n, unsigned workers) {
  if (n < 3) throw Error(Errc::invalid_argument, "census needs n >= 3");
  ParityCensus census;
  census.n = n;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      for (long k = j + 1; k < n; ++k) census.entries.push_back({{n, {i, j, k}}, false, false});
  workers = std::max(1u, workers);
  auto work = [&](unsigned w) {
    for (std::size_t e = w; e < census.entries.size(); e += workers) {
      auto& entry = census.entries[e];
      const BinaryMatrix m = circulant_matrix(entry.offsets);
      entry.odd_ryser = parity_ryser(m).odd;
      entry.odd_det = parity_det_oracle(m);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : census.entries) {
    (e.odd_ryser ? census.odd : census.even) += 1;
    if (e.odd_ryser == e.odd_det) ++census.agreements;
  }
  return census;
}

}  // namespace permspec
