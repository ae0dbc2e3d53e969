#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "permspec/circulant.hpp"
#include "permspec/matrix.hpp"

namespace permspec {

// 1 iff every row sum is odd once the columns in `removed` (bit j = column j) are zeroed.
bool upsilon(const BinaryMatrix& a, std::uint64_t removed);

// Determinant over GF(2).
bool parity_det_oracle(const BinaryMatrix& a);

// 4, 6, ..., 2 floor(n/3).
std::vector<long> testing_sequence(long n);

struct ParityReport {
  std::string id;
  bool odd = false;
  bool distinct_columns = true;
  std::vector<long> testing_sequence;
  std::map<long, std::uint64_t> contributing_subsets;  // removal size -> subsets with upsilon = 1
};

// Parity of per A for A in Lambda_n^3 from the upsilon-restricted Ryser sum.
// Throws Errc::not_in_class otherwise.
ParityReport parity_ryser(const BinaryMatrix& a, std::string id = {});

// Calls `visit` for each r-subset of columns with upsilon = 1, in increasing
// mask order, with the row sums after removal.
void for_each_upsilon_hit(const BinaryMatrix& a, long r,
                          const std::function<void(std::uint64_t removed, const std::vector<int>& row_sums)>& visit);

struct CensusEntry {
  CirculantOffsets offsets;
  bool odd_ryser = false;
  bool odd_det = false;
};

struct ParityCensus {
  long n = 0;
  std::vector<CensusEntry> entries;  // every offset triple 0 <= i < j < k < n
  long odd = 0;
  long even = 0;
  long agreements = 0;  // entries where both methods agree
};

ParityCensus parity_census(long n, unsigned workers = 1);

}  // namespace permspec
