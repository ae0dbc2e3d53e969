#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "permspec/exact.hpp"
#include "permspec/matrix.hpp"
#include "permspec/spectrum.hpp"

namespace permspec {

// Prefixes (the first two rows) are numbered in search order; shard i of N owns
// the prefixes whose number is i mod N.
struct Shard {
  std::size_t count = 1;
  std::size_t index = 0;
};

struct EnumerationTask {
  ClassSpec spec = ClassSpec::binary(ClassKind::Lambda3Diag);
  long n = 3;
  bool indecomposable_only = false;
  std::optional<Shard> shard;
  bool allow_large = false;
  bool with_permanents = true;  // scan() only
  unsigned workers = 1;         // scan() only
};

// Largest n accepted for the kind, with or without allow_large.
long enumeration_limit(ClassKind kind, bool allow_large);

// Rough class size used in over-limit errors.
double estimated_class_size(ClassKind kind, long n);

// Visits every member of a (0,1) class once, rows in increasing bit-pattern order.
// Runs on the calling thread; `workers` is ignored.
void for_each_binary(const EnumerationTask& task,
                     const std::function<void(std::span<const std::uint64_t> rows, std::uint64_t permanent)>& visit);

// Visits every member of a weighted class once (weights distinct; repeated
// weights revisit equal matrices).
void for_each_weighted(const EnumerationTask& task, const std::function<void(const WeightedMatrix&)>& visit);

std::vector<BinaryMatrix> enumerate_binary(const EnumerationTask& task);
std::vector<WeightedMatrix> enumerate_weighted(const EnumerationTask& task);

struct ScanResult {
  BigInt count = 0;
  Spectrum spectrum;
  Spectrum indecomposable;  // members with a connected support graph
};

// Count and spectra over the task, split across `workers` threads.
ScanResult scan(const EnumerationTask& task);

struct BruteOptions {
  unsigned workers = 1;
  bool allow_large = false;
  bool via_diagonal = true;  // spectra of the full classes are read off their diagonal subclasses
};

Spectrum brute_spectrum(const ClassSpec& spec, long n, const BruteOptions& options = {});

// Weighted kinds need pairwise distinct weights.
BigInt brute_count(const ClassSpec& spec, long n, const BruteOptions& options = {});

struct IndecomposableSpectrum {
  Spectrum spectrum;
  ExactValue mu1;
};

IndecomposableSpectrum indecomposable_spectrum(long n, const BruteOptions& options = {});

struct MciPair {
  long n1 = 0;
  long n2 = 0;
  ExactValue lhs;  // mu_1(n1 + n2)
  ExactValue rhs;  // mu_1(n1) mu_1(n2)
  bool holds = false;
};

struct MuBound {
  long n = 0;
  ExactValue mu1;
  bool holds = false;  // mu_1(n)^2 <= 3^n
};

struct MciReport {
  long n_max = 0;
  std::map<long, ExactValue> mu1;
  std::vector<MciPair> pairs;
  std::vector<MciPair> violations;
  std::vector<MuBound> bounds;

  bool ok() const;
};

MciReport mci_check(long n_max, const BruteOptions& options = {});

// Same from precomputed indecomposable spectra, which must cover 3..n_max.
MciReport mci_check(long n_max, const std::map<long, Spectrum>& indecomposable);

}  // namespace permspec
