#include "permspec/spectrum.hpp"

#include <algorithm>
#include <iterator>

#include "permspec/sequences.hpp"

namespace permspec {

Spectrum::Spectrum(std::vector<ExactValue> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool Spectrum::contains(const ExactValue& v) const { return std::binary_search(values_.begin(), values_.end(), v); }

const ExactValue& Spectrum::min() const {
  if (values_.empty()) throw Error(Errc::invalid_argument, "empty spectrum");
  return values_.front();
}

const ExactValue& Spectrum::max() const {
  if (values_.empty()) throw Error(Errc::invalid_argument, "empty spectrum");
  return values_.back();
}

Spectrum Spectrum::merged(const Spectrum& other) const {
  std::vector<ExactValue> out;
  out.reserve(values_.size() + other.values_.size());
  std::set_union(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(), std::back_inserter(out));
  Spectrum s;
  s.values_ = std::move(out);
  return s;
}

namespace {

template <typename A>
SpectrumReport partition_products(long n, A a) {
  SpectrumReport report;
  report.n = n;
  std::vector<ExactValue> values;
  for (auto& p : partitions(n, 3)) {
    ExactValue product = 1;
    for (long part : p.parts) product *= a(part);
    values.push_back(product);
    report.attaining[product].push_back(std::move(p));
  }
  report.spectrum = Spectrum(std::move(values));
  return report;
}

}  // namespace

SpectrumReport spectrum_symmetric_report(long n) {
  if (n < 3) throw Error(Errc::invalid_argument, "spectrum needs n >= 3");
  return partition_products(n, a_seq);
}

Spectrum spectrum_symmetric(long n) { return spectrum_symmetric_report(n).spectrum; }

SpectrumReport spectrum_weighted_report(long n, const Weights& w) {
  if (n < 3) throw Error(Errc::invalid_argument, "spectrum needs n >= 3");
  if (!w.all_nonzero()) throw Error(Errc::invalid_argument, "weights must be nonzero");
  auto report = partition_products(n, [&w](long m) { return a_general(w, m); });
  report.weights = w;
  return report;
}

Spectrum spectrum_weighted(long n, const Weights& w) { return spectrum_weighted_report(n, w).spectrum; }

std::vector<long> cycle_type(std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  std::vector<long> lengths;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    long len = 0;
    for (std::size_t i = start; !seen[i]; i = perm[i]) {
      if (perm[i] >= n) throw Error(Errc::invalid_argument, "not a permutation");
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

WeightedMatrix matrix_from_permutation(std::span<const std::size_t> perm, const Weights& w) {
  const std::size_t n = perm.size();
  if (n == 0) throw Error(Errc::empty_matrix, "empty matrix");
  std::vector<bool> hit(n, false);
  for (std::size_t v : perm) {
    if (v >= n || hit[v]) throw Error(Errc::invalid_argument, "not a permutation");
    hit[v] = true;
  }
  for (long len : cycle_type(perm))
    if (len < 3) throw Error(Errc::cycle_too_short, "cycle too short: length " + std::to_string(len));
  WeightedMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = w.beta;
    m(i, perm[i]) = w.gamma;
    m(perm[i], i) = w.alpha;
  }
  return m;
}

WeightedMatrix build_cycle_type_matrix(const std::vector<long>& cycle_lengths, const Weights& w) {
  std::vector<std::size_t> perm;
  for (long len : cycle_lengths) {
    if (len < 3) throw Error(Errc::cycle_too_short, "cycle too short: length " + std::to_string(len));
    const std::size_t first = perm.size();
    for (long k = 0; k < len; ++k) perm.push_back(first + static_cast<std::size_t>((k + 1) % len));
  }
  return matrix_from_permutation(perm, w);
}

WeightedMatrix build_cycle_type_matrix(const Partition& cycle_lengths, const Weights& w) {
  return build_cycle_type_matrix(cycle_lengths.parts, w);
}

ClaimCheck alternating_weights_claim(long n) {
  if (n < 3) throw Error(Errc::invalid_argument, "spectrum needs n >= 3");
  ClaimCheck check;
  check.n = n;
  check.computed = spectrum_weighted(n, {-1, 1, 1});
  std::vector<ExactValue> claimed;
  const long top = n % 3 == 0 ? (n - 6) / 3 : (n - 3) / 3;
  for (long k = 0; k <= top; ++k) claimed.push_back(pow(ExactValue(-2), k));
  if (n % 3 == 0) claimed.push_back(pow(ExactValue(-2), n / 3));
  check.claimed = Spectrum(std::move(claimed));
  const auto& a = check.claimed.values();
  const auto& b = check.computed.values();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(check.claimed_only));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(check.computed_only));
  check.agrees = check.claimed_only.empty() && check.computed_only.empty();
  return check;
}

}  // namespace permspec
