#pragma once

#include <optional>
#include <vector>

#include "permspec/exact.hpp"
#include "permspec/matrix.hpp"
#include "permspec/spectrum.hpp"

namespace permspec {

struct CirculantOffsets {
  long n = 0;
  std::vector<long> offsets;  // sorted, distinct, in [0, n)

  friend bool operator==(const CirculantOffsets&, const CirculantOffsets&) = default;
  friend auto operator<=>(const CirculantOffsets&, const CirculantOffsets&) = default;
};

// Sum of P^o over the offsets.
BinaryMatrix circulant_matrix(const CirculantOffsets& c);

// Lexicographically least offset set among all rotations and reflections.
CirculantOffsets canonical_form(const CirculantOffsets& c);

// One representative (the canonical form) per dihedral orbit of k-subsets of Z_n, ascending.
std::vector<CirculantOffsets> canonical_classes(long n, long k);

// Closed-form orbit count with h_k = k mod 2.
ExactValue reis_count(long n, long k);

// Orbits of offset triples carrying weight labels: `distinct_labels` counts ordered
// triples (alpha, beta, gamma pairwise distinct), otherwise one label repeats twice.
long labeled_class_count(long n, bool distinct_labels);

struct CirculantClass {
  CirculantOffsets offsets;
  BigInt permanent;
};

struct CirculantReport {
  long n = 0;
  std::vector<CirculantClass> classes;
  Spectrum spectrum;
  long bound = 0;  // floor((n^2 + 3) / 12)
};

CirculantReport circulant_report(long n, unsigned workers = 1);

// Distinct permanents over the three-offset circulants of order n.
Spectrum circulant_spectrum(long n);

long circulant_spectrum_bound(long n);

}  // namespace permspec
