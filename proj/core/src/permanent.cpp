#include "permspec/permanent.hpp"

#include <bit>
#include <unordered_map>
#include <vector>

namespace permspec {

namespace {

constexpr std::size_t ryser_limit = 40;

// Ryser over a row-major integer matrix; each Gray step adds or removes one column.
BigInt ryser_integer(std::size_t n, const std::vector<BigInt>& entries) {
  std::vector<BigInt> rowsum(n, 0);
  BigInt total = 0, prod;
  std::uint64_t subset = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const auto j = static_cast<std::size_t>(std::countr_zero(k));
    subset ^= std::uint64_t{1} << j;
    const bool added = (subset >> j) & 1u;
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt& a = entries[i * n + j];
      if (a == 0) continue;
      if (added)
        rowsum[i] += a;
      else
        rowsum[i] -= a;
    }
    prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
    if (prod == 0) continue;
    if (std::popcount(subset) % 2 == 1)
      total -= prod;
    else
      total += prod;
  }
  return n % 2 == 1 ? BigInt(-total) : total;
}

}  // namespace

ExactValue permanent_ryser(const WeightedMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::empty_matrix, "empty matrix");
  if (n > ryser_limit) throw Error(Errc::invalid_argument, "matrix too large for exact Ryser evaluation");

  // Clear denominators: per(M) = per(L*M) / L^n.
  BigInt lcm = 1;
  for (const auto& e : m.entries()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den_mpz_t());
  std::vector<BigInt> scaled(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const ExactValue& e = m.entries()[k];
    scaled[k] = e.get_num() * (lcm / e.get_den());
  }
  ExactValue result(ryser_integer(n, scaled), pow(lcm, n));
  result.canonicalize();
  return result;
}

ExactValue permanent_expansion(const WeightedMatrix& m, std::size_t limit) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::empty_matrix, "empty matrix");
  if (n > limit) throw Error(Errc::oracle_limit, "oracle limit");

  std::unordered_map<std::uint64_t, ExactValue> memo;
  // Expands row `popcount(used)` over the columns not yet used.
  auto expand = [&](auto&& self, std::uint64_t used) -> ExactValue {
    const auto row = static_cast<std::size_t>(std::popcount(used));
    if (row == n) return 1;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    ExactValue acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if ((used >> j) & 1u) continue;
      const ExactValue& a = m(row, j);
      if (a == 0) continue;
      acc += a * self(self, used | (std::uint64_t{1} << j));
    }
    memo.emplace(used, acc);
    return acc;
  };
  return expand(expand, 0);
}

std::uint64_t permanent_u64(std::span<const std::uint64_t> rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(Errc::empty_matrix, "empty matrix");
  if (n > 20) throw Error(Errc::invalid_argument, "64-bit permanent limited to n <= 20");
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t used = 0; used < full; ++used) {
    const std::uint64_t w = ways[used];
    if (!w) continue;
    const std::uint64_t free = rows[static_cast<std::size_t>(std::popcount(used))] & ~used;
    for (std::uint64_t bits = free; bits; bits &= bits - 1) ways[used | (bits & -bits)] += w;
  }
  return ways[full];
}

BigInt permanent(const BinaryMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::empty_matrix, "empty matrix");
  if (n <= 20) {
    BigInt r;
    const std::uint64_t v = permanent_u64(m.rows());
    mpz_import(r.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return r;
  }
  if (n > ryser_limit) throw Error(Errc::invalid_argument, "matrix too large for exact Ryser evaluation");
  std::vector<BigInt> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = m.get(i, j) ? 1 : 0;
  return ryser_integer(n, entries);
}

}  // namespace permspec
