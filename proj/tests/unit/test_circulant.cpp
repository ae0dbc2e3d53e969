#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permspec/circulant.hpp"
#include "permspec/permanent.hpp"

using namespace permspec;

namespace {

Spectrum S(std::initializer_list<long> v) {
  std::vector<ExactValue> out;
  for (long x : v) out.emplace_back(x);
  return Spectrum(out);
}

// Burnside: rotations fix nothing, a reflection fixes only configurations built from its fixed points
long burnside_labeled(long n, bool distinct) {
  const long objects = distinct ? n * (n - 1) * (n - 2) : n * (n - 1) * (n - 2) / 2;
  long fixed = 0;
  if (!distinct) fixed = n % 2 ? n * (n - 1) / 2 : (n / 2) * (n - 2);
  return (objects + fixed) / (2 * n);
}

}  // namespace

TEST(CirculantMatrix, Examples) {
  EXPECT_EQ(circulant_matrix({5, {0, 1, 2}}),
            BinaryMatrix::identity(5) | power_matrix(5, 1) | power_matrix(5, 2));
  EXPECT_EQ(circulant_matrix({6, {0, 2, 4}}),
            BinaryMatrix::identity(6) | power_matrix(6, 2) | power_matrix(6, 4));
  EXPECT_EQ(circulant_matrix({3, {0, 1, 2}}), BinaryMatrix::ones(3));
}

TEST(CirculantPermanents, ExamplesFiveAndSix) {
  EXPECT_EQ(permanent(circulant_matrix({5, {0, 1, 2}})), 13);
  EXPECT_EQ(permanent(circulant_matrix({5, {0, 1, 3}})), 13);
  EXPECT_EQ(permanent(circulant_matrix({6, {0, 1, 2}})), 20);
  EXPECT_EQ(permanent(circulant_matrix({6, {0, 1, 3}})), 17);
  EXPECT_EQ(permanent(circulant_matrix({6, {0, 2, 4}})), 36);
}

TEST(CanonicalClasses, Examples) {
  EXPECT_EQ(canonical_classes(5, 3).size(), 2u);
  EXPECT_EQ(canonical_classes(6, 3).size(), 3u);
  EXPECT_EQ(canonical_classes(7, 3).size(), 4u);
  for (const auto& c : canonical_classes(9, 3)) EXPECT_EQ(canonical_form(c), c);
  EXPECT_EQ(canonical_form({6, {1, 3, 5}}), (CirculantOffsets{6, {0, 2, 4}}));
  EXPECT_EQ(canonical_form({7, {2, 5, 6}}), canonical_form({7, {0, 1, 4}}));
}

TEST(ReisCount, Examples) {
  EXPECT_EQ(reis_count(5, 3), 2);
  EXPECT_EQ(reis_count(6, 3), 3);
  EXPECT_EQ(reis_count(12, 3), 12);
  EXPECT_EQ(reis_count(4, 2), 2);
}

TEST(ReisCountProperty, MatchesDihedralOrbitsUpTo18) {
  for (long n = 1; n <= 18; ++n)
    for (long k = 1; k <= n; ++k) {
      const long orbits = oracle::dihedral_orbits(n, k);
      EXPECT_EQ(reis_count(n, k), orbits) << n << "," << k;
      if (n >= 3) EXPECT_EQ(static_cast<long>(canonical_classes(n, k).size()), orbits) << n << "," << k;
    }
}

TEST(ReisCountProperty, CaseFormulaForTriangles) {
  for (long n = 3; n <= 30; ++n) {
    const long shift[] = {0, -1, -4, 3, -4, -1};
    EXPECT_EQ(reis_count(n, 3), exact(n * n + shift[n % 6], 12)) << n;
  }
}

TEST(CirculantSpectrum, Examples) {
  EXPECT_EQ(circulant_spectrum(3), S({6}));
  EXPECT_EQ(circulant_spectrum(5), S({13}));
  EXPECT_EQ(circulant_spectrum(6), S({17, 20, 36}));
  const auto r = circulant_report(6);
  EXPECT_EQ(r.bound, 3);
  EXPECT_EQ(r.classes.size(), 3u);
}

TEST(CirculantSpectrumProperty, BoundUpTo14) {
  for (long n = 3; n <= 14; ++n) {
    const auto r = circulant_report(n);
    EXPECT_LE(static_cast<long>(r.spectrum.size()), (n * n + 3) / 12) << n;
    EXPECT_EQ(r.bound, (n * n + 3) / 12);
  }
}

TEST(CirculantSpectrumProperty, PermanentIsAClassInvariant) {
  for (long n = 3; n <= 10; ++n) {
    const auto r = circulant_report(n);
    for (long a = 0; a < n; ++a)
      for (long b = a + 1; b < n; ++b)
        for (long c = b + 1; c < n; ++c) {
          const CirculantOffsets o{n, {a, b, c}};
          const auto canon = canonical_form(o);
          const auto it = std::find_if(r.classes.begin(), r.classes.end(),
                                       [&](const CirculantClass& k) { return k.offsets == canon; });
          ASSERT_NE(it, r.classes.end()) << n;
          EXPECT_EQ(permanent(circulant_matrix(o)), it->permanent) << n << ": " << a << b << c;
        }
  }
}

TEST(CirculantSpectrumProperty, WorkersDoNotChangeTheReport) {
  const auto a = circulant_report(13, 1), b = circulant_report(13, 3);
  EXPECT_EQ(a.spectrum, b.spectrum);
  ASSERT_EQ(a.classes.size(), b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    EXPECT_EQ(a.classes[i].offsets, b.classes[i].offsets);
    EXPECT_EQ(a.classes[i].permanent, b.classes[i].permanent);
  }
}

TEST(LabeledClasses, BurnsideAndScaledBound) {
  for (long n = 3; n <= 10; ++n) {
    EXPECT_EQ(labeled_class_count(n, true), burnside_labeled(n, true)) << n;
    EXPECT_EQ(labeled_class_count(n, false), burnside_labeled(n, false)) << n;
    EXPECT_LE(labeled_class_count(n, true), (n * n + 3) / 2) << n;
  }
}
