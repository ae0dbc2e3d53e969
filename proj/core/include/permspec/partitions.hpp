#pragma once

#include <string>
#include <vector>

namespace permspec {

// Parts in non-increasing order, each at least min_part.
struct Partition {
  std::vector<long> parts;
  long min_part = 1;

  long total() const;
  long count(long part) const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// "8+3+..." in the stored order; "0" for the empty partition.
std::string to_string(const Partition& p);

// Partitions of n with every part >= nu, in decreasing lexicographic order of
// their part lists. n = 0 yields the single empty partition.
std::vector<Partition> partitions(long n, long nu);

}  // namespace permspec
