#include "permspec/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "permspec/exact.hpp"

namespace permspec {

long Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

long Partition::count(long part) const { return std::count(parts.begin(), parts.end(), part); }

std::string to_string(const Partition& p) {
  if (p.parts.empty()) return "0";
  std::string out;
  for (long part : p.parts) {
    if (!out.empty()) out += '+';
    out += std::to_string(part);
  }
  return out;
}

namespace {

void extend(long remaining, long largest, long nu, std::vector<long>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back({prefix, nu});
    return;
  }
  for (long part = std::min(remaining, largest); part >= nu; --part) {
    const long rest = remaining - part;
    if (rest != 0 && rest < nu) continue;
    prefix.push_back(part);
    extend(rest, part, nu, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(long n, long nu) {
  if (n < 0 || nu < 1) throw Error(Errc::invalid_argument, "partitions needs n >= 0 and nu >= 1");
  std::vector<Partition> out;
  std::vector<long> prefix;
  extend(n, n, nu, prefix, out);
  return out;
}

}  // namespace permspec
