#include "permspec/circulant.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "permspec/permanent.hpp"

namespace permspec {

BinaryMatrix circulant_matrix(const CirculantOffsets& c) {
  if (c.n < 1) throw Error(Errc::empty_matrix, "empty matrix");
  BinaryMatrix m(static_cast<std::size_t>(c.n));
  for (long o : c.offsets) m = m | power_matrix(static_cast<std::size_t>(c.n), o);
  return m;
}

CirculantOffsets canonical_form(const CirculantOffsets& c) {
  const long n = c.n;
  CirculantOffsets best = c;
  std::sort(best.offsets.begin(), best.offsets.end());
  std::vector<long> image(c.offsets.size());
  for (long shift = 0; shift < n; ++shift) {
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (std::size_t i = 0; i < c.offsets.size(); ++i) {
        const long x = reflect ? -c.offsets[i] : c.offsets[i];
        image[i] = ((x + shift) % n + n) % n;
      }
      std::sort(image.begin(), image.end());
      if (image < best.offsets) best.offsets = image;
    }
  }
  return best;
}

std::vector<CirculantOffsets> canonical_classes(long n, long k) {
  if (n < 1 || k < 1 || k > n) throw Error(Errc::invalid_argument, "need 1 <= k <= n");
  if (n > 62) throw Error(Errc::invalid_argument, "n too large for subset enumeration");
  std::set<CirculantOffsets> seen;
  // k-subsets of Z_n as bitmasks, via Gosper's hack
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    CirculantOffsets c{n, {}};
    for (long b = 0; b < n; ++b)
      if ((mask >> b) & 1u) c.offsets.push_back(b);
    if (c.offsets.front() == 0) seen.insert(canonical_form(c));  // every orbit meets 0
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return {seen.begin(), seen.end()};
}

ExactValue reis_count(long n, long k) {
  if (n < 1 || k < 1 || k > n) throw Error(Errc::invalid_argument, "need 1 <= k <= n");
  const long h = k % 2;
  auto phi = [](long d) {
    long result = d;
    for (long p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      while (d % p == 0) d /= p;
      result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
  };
  ExactValue rotations = 0;
  const long g = std::gcd(n, k);
  for (long d = 1; d <= g; ++d)
    if (g % d == 0) rotations += ExactValue(phi(d) * binomial(n / d - 1, k / d - 1));
  rotations /= k;
  return (ExactValue(binomial((n - h) / 2, k / 2)) + rotations) / 2;
}

long labeled_class_count(long n, bool distinct_labels) {
  if (n < 3) throw Error(Errc::invalid_argument, "need n >= 3");
  // a labeling is (x, y, z); in the repeated case x and y carry the same label
  std::set<std::vector<long>> orbits;
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y)
      for (long z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (!distinct_labels && x > y) continue;
        std::vector<long> best;
        for (long shift = 0; shift < n; ++shift)
          for (int reflect = 0; reflect < 2; ++reflect) {
            auto map = [&](long v) { return (((reflect ? -v : v) + shift) % n + n) % n; };
            std::vector<long> image{map(x), map(y), map(z)};
            if (!distinct_labels && image[0] > image[1]) std::swap(image[0], image[1]);
            if (best.empty() || image < best) best = image;
          }
        orbits.insert(best);
      }
  return static_cast<long>(orbits.size());
}

long circulant_spectrum_bound(long n) { return (n * n + 3) / 12; }

CirculantReport circulant_report(long n, unsigned workers) {
  if (n < 3) throw Error(Errc::invalid_argument, "circulant spectrum needs n >= 3");
  CirculantReport report;
  report.n = n;
  report.bound = circulant_spectrum_bound(n);
  const auto classes = canonical_classes(n, 3);
  report.classes.resize(classes.size());
  workers = std::max(1u, workers);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < classes.size(); i += workers)
      report.classes[i] = {classes[i], permanent(circulant_matrix(classes[i]))};
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<ExactValue> values;
  for (const auto& c : report.classes) values.emplace_back(c.permanent);
  report.spectrum = Spectrum(std::move(values));
  return report;
}

Spectrum circulant_spectrum(long n) { return circulant_report(n).spectrum; }

}  // namespace permspec
