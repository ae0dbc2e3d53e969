#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "permspec/exact.hpp"
#include "permspec/matrix.hpp"
#include "permspec/partitions.hpp"

namespace permspec {

// A set of permanent values, ascending and without repeats.
class Spectrum {
 public:
  Spectrum() = default;
  // Sorts and deduplicates.
  explicit Spectrum(std::vector<ExactValue> values);

  const std::vector<ExactValue>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  bool contains(const ExactValue& v) const;
  const ExactValue& min() const;
  const ExactValue& max() const;

  // Set union.
  Spectrum merged(const Spectrum& other) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<ExactValue> values_;
};

struct SpectrumReport {
  long n = 0;
  std::optional<Weights> weights;
  Spectrum spectrum;
  std::map<ExactValue, std::vector<Partition>> attaining;  // value -> partitions giving it
};

// Products of a(n_i) over the partitions of n into parts >= 3.
Spectrum spectrum_symmetric(long n);
SpectrumReport spectrum_symmetric_report(long n);

// Same with a(alpha, beta, gamma; n_i); weights must be nonzero.
Spectrum spectrum_weighted(long n, const Weights& w);
SpectrumReport spectrum_weighted_report(long n, const Weights& w);

// alpha S^-1 + beta I + gamma S for the permutation S (row i has its one in
// column perm[i]). Throws Errc::cycle_too_short for cycles of length 1 or 2.
WeightedMatrix matrix_from_permutation(std::span<const std::size_t> perm, const Weights& w);

// Cycle lengths of perm, non-increasing.
std::vector<long> cycle_type(std::span<const std::size_t> perm);

// A permutation whose cycles are consecutive blocks of the given lengths, each
// block i -> i+1 -> ... -> first; then matrix_from_permutation.
WeightedMatrix build_cycle_type_matrix(const std::vector<long>& cycle_lengths, const Weights& w);
WeightedMatrix build_cycle_type_matrix(const Partition& cycle_lengths, const Weights& w);

// The (-1, 1, 1) spectrum against its printed closed form.
struct ClaimCheck {
  long n = 0;
  Spectrum computed;
  Spectrum claimed;
  bool agrees = false;
  std::vector<ExactValue> claimed_only;
  std::vector<ExactValue> computed_only;
};
ClaimCheck alternating_weights_claim(long n);

}  // namespace permspec
