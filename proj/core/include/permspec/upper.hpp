#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permspec/exact.hpp"
#include "permspec/partitions.hpp"
#include "permspec/spectrum.hpp"

namespace permspec {

enum class UpperKind { Symmetric, General };

std::string to_string(UpperKind kind);

struct RankedEntry {
  ExactValue value;
  ExactValue coefficient;              // value / 6^((n-j)/3)
  std::vector<Partition> provenance;   // block sizes of the direct sums attaining it
};

struct RankedMagnitudes {
  UpperKind kind = UpperKind::Symmetric;
  long n = 0;
  long t = 0;
  long j = 0;
  ExactValue floor;                   // 9^(3t+j) 6^((n-4j)/3 - 4t)
  std::vector<RankedEntry> values;    // strictly decreasing, all certified
  bool conditional_on_mci = false;
  // Largest value an unsupplied block size could still reach; values below it are withheld.
  std::optional<ExactValue> unknown_ceiling;
  std::vector<long> missing_sizes;
};

// Ranked top of the symmetric spectrum for n >= 4(3t+j).
RankedMagnitudes upper_symmetric(long n, long t);

// Indecomposable spectra by block size.
using SmallSpectra = std::map<long, Spectrum>;

enum class MissingPolicy { Partial, Strict };

// Ranked top of the full spectrum from indecomposable spectra of small sizes.
// Sizes without a spectrum are bounded through submultiplicativity of mu_1;
// under MissingPolicy::Strict any such size that could matter raises
// Errc::missing_spectrum.
RankedMagnitudes upper_general(long n, long t, const SmallSpectra& small_spectra,
                               MissingPolicy policy = MissingPolicy::Partial);

// Upper bound for mu_1(s): the supplied maximum if known, else the best split.
std::optional<ExactValue> mu1_bound(long s, const SmallSpectra& small_spectra);

// Published coefficients of 6^((n-j)/3), ranks from 1.
ExactValue table_fixture(UpperKind kind, long j, long rank);
long table_depth(UpperKind kind, long j);

struct TableErratum {
  UpperKind kind;
  long j;
  long rank;
  ExactValue printed;
  ExactValue corrected;
  std::string note;
};

std::vector<TableErratum> table_errata();

// table_fixture with the errata applied.
ExactValue table_coefficient(UpperKind kind, long j, long rank);

// A value missing from a published list altogether.
struct TableOmission {
  UpperKind kind;
  long j;
  long after_rank;            // sits between this printed rank and the next
  ExactValue value;
  std::vector<long> blocks;   // the non-3 block sizes giving it
  std::string note;
};
std::vector<TableOmission> table_omissions();

// The published list with errata applied and omissions inserted.
std::vector<ExactValue> corrected_table(UpperKind kind, long j);

}  // namespace permspec
