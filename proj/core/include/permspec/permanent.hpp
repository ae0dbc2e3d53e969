#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "permspec/exact.hpp"
#include "permspec/matrix.hpp"

namespace permspec {

// Ryser's inclusion-exclusion formula. Column subsets are visited in Gray-code
// order so that each step updates the row sums by a single column.
ExactValue permanent_ryser(const WeightedMatrix& m);

inline constexpr std::size_t default_expansion_limit = 12;

// First-row expansion with minors memoized by their column set. Serves as an
// oracle for permanent_ryser; throws Errc::oracle_limit above `limit`.
ExactValue permanent_expansion(const WeightedMatrix& m, std::size_t limit = default_expansion_limit);

// Exact permanent of a (0,1) matrix: subset DP for n <= 20, integer Ryser beyond.
BigInt permanent(const BinaryMatrix& m);

// Subset DP on bit-packed rows; n <= 20 so that the count fits in 64 bits.
std::uint64_t permanent_u64(std::span<const std::uint64_t> rows);

}  // namespace permspec
