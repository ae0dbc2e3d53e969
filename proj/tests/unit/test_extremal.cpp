#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permspec/enumerator.hpp"
#include "permspec/extremal.hpp"
#include "permspec/sequences.hpp"
#include "permspec/spectrum.hpp"

using namespace permspec;

namespace {

bool all_hold(const std::vector<Condition>& cs) {
  for (const auto& c : cs)
    if (!c.holds) return false;
  return true;
}

bool holds(const ExtremalReport& r, const std::string& name) {
  for (const auto& c : r.conditions_checked)
    if (c.name == name) return c.holds;
  ADD_FAILURE() << "no condition " << name;
  return false;
}

}  // namespace

TEST(Merriell, Examples) {
  EXPECT_EQ(merriell_max(6), 36);
  EXPECT_EQ(merriell_max(7), 54);
  EXPECT_EQ(merriell_max(8), 81);
  EXPECT_EQ(merriell_max(5), 13);
  EXPECT_THROW(merriell_max(2), Error);
  // the h = 1, 2 coefficients of the symmetric tables
  for (long n = 9; n <= 40; ++n) {
    const long h = n % 3;
    const ExactValue coeff = h == 0 ? exact(1) : h == 1 ? exact(3, 2) : exact(9, 4);
    EXPECT_EQ(merriell_max(n), coeff * pow(ExactValue(6), (n - h) / 3)) << n;
  }
}

TEST(Merriell, MatchesBruteForce) {
  for (long n = 5; n <= 7; ++n)
    EXPECT_EQ(merriell_max(n), brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), n).max()) << n;
}

TEST(Bolshakov, Examples) {
  EXPECT_EQ(bolshakov_second(6), 20);
  EXPECT_EQ(bolshakov_second(9), 120);
  EXPECT_EQ(bolshakov_second(12), 729);
  try {
    bolshakov_second(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::undefined_case);
  }
  const auto values = brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), 6).values();
  ASSERT_GE(values.size(), 2u);
  EXPECT_EQ(bolshakov_second(6), values[values.size() - 2]);
}

TEST(Voorhoeve, Examples) {
  EXPECT_EQ(voorhoeve_bound(3), 6);
  EXPECT_EQ(voorhoeve_bound(5), exact(32, 3));
  for (long n = 3; n <= 7; ++n)
    EXPECT_GE(brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), n).min(), voorhoeve_bound(n)) << n;
}

TEST(CubeConditions, Examples) {
  EXPECT_TRUE(all_hold(check_theorem4_conditions({1, 1, 1})));
  const auto c = check_theorem4_conditions({1, 1, 3});
  ASSERT_EQ(c.size(), 4u);
  EXPECT_TRUE(c[0].holds);
  EXPECT_FALSE(c[1].holds);
  EXPECT_TRUE(check_theorem4_conditions({exact(1, 2), exact(1, 2), 1})[2].holds);
}

TEST(CubeRoot, SignIsExact) {
  // x = 2
  EXPECT_EQ(sign_at_cube_root(8, 2, 0), 0);
  EXPECT_EQ(sign_at_cube_root(8, 1, 1), 1);
  EXPECT_EQ(sign_at_cube_root(8, 1, 3), -1);
  // x = 6^(1/3): x^2 - x - 1 > 0 since x > golden ratio
  EXPECT_EQ(sign_at_cube_root(6, 1, 1), 1);
  EXPECT_EQ(sign_at_cube_root(6, 0, 0), 1);
}

TEST(Theta, ComparisonIsExact) {
  EXPECT_EQ(compare_with_theta(1, 2), -1);
  EXPECT_EQ(compare_with_theta(4, 5), 1);
  EXPECT_EQ(compare_with_theta(0, 1), -1);
  // theta ~ 0.71402
  EXPECT_EQ(compare_with_theta(71401, 100000), -1);
  EXPECT_EQ(compare_with_theta(71403, 100000), 1);
  EXPECT_THROW(compare_with_theta(1, 0), Error);
}

TEST(MaxWeighted, Examples) {
  const auto r1 = max_weighted_symmetric(6, {1, 1, 1});
  EXPECT_EQ(r1.max_value, 36);
  ASSERT_EQ(r1.attaining_partitions.size(), 1u);
  EXPECT_EQ(to_string(r1.attaining_partitions[0]), "3+3");
  EXPECT_EQ(r1.closed_form, ClosedForm::CubeBlocks);

  const auto r2 = max_weighted_symmetric(6, {1, 1, 2});
  EXPECT_EQ(r2.max_value, 256);
  EXPECT_EQ(to_string(r2.attaining_partitions.at(0)), "3+3");
  EXPECT_EQ(r2.closed_form, ClosedForm::TwoWeightCubeBlocks);
  EXPECT_EQ(r2.closed_form_value, ExactValue(256));

  const auto r3 = max_weighted_symmetric(8, {exact(4, 5), exact(1, 5), 1});
  EXPECT_EQ(r3.max_value, pow(exact(1762, 625), 2));
  EXPECT_EQ(to_string(r3.attaining_partitions.at(0)), "4+4");
  EXPECT_EQ(r3.closed_form, ClosedForm::TwoWeightQuarticBlocks);
  EXPECT_EQ(r3.closed_form_value, r3.max_value);
}

TEST(MaxWeightedProperty, ClosedFormsAgreeWithSearch) {
  std::mt19937_64 rng(71);
  int cube = 0, lemma = 0;
  for (int k = 0; k < 100; ++k) {
    Weights w;
    if (k % 3 == 0) {
      w = {oracle::random_rational(rng, 4), oracle::random_rational(rng, 4), oracle::random_rational(rng, 4)};
    } else if (k % 3 == 1) {
      // near (1, 1, 1), where the cube conditions hold
      auto near_one = [&]() -> ExactValue { return 1 + oracle::random_rational(rng, 4) / 16; };
      w = {near_one(), near_one(), near_one()};
    } else {
      // on the line beta = gamma - alpha
      ExactValue al = abs(oracle::random_rational(rng, 5)), ga = abs(oracle::random_rational(rng, 5));
      if (al == ga) ga += 1;
      w = {al, ga - al, ga};
    }
    for (long n : {6L, 8L, 12L}) {
      const auto r = max_weighted_symmetric(n, w);
      EXPECT_EQ(r.max_value, spectrum_weighted(n, w).max());
      if (r.closed_form == ClosedForm::None) {
        EXPECT_FALSE(r.closed_form_value.has_value());
        continue;
      }
      ASSERT_TRUE(r.closed_form_value.has_value());
      EXPECT_EQ(*r.closed_form_value, r.max_value)
          << to_string(r.closed_form) << " n=" << n << " w=" << to_string(w.alpha) << "," << to_string(w.beta)
          << "," << to_string(w.gamma);
      if (r.closed_form == ClosedForm::CubeBlocks) {
        EXPECT_TRUE(all_hold(check_theorem4_conditions(w)));
        ++cube;
      } else {
        EXPECT_TRUE(holds(r, "beta = gamma - alpha, 0 <= alpha, 0 < gamma"));
        ++lemma;
      }
    }
  }
  EXPECT_GT(cube, 0);
  EXPECT_GT(lemma, 0);
}

TEST(Boundary, MaximizerPartitions) {
  const auto ps = boundary_maximizer_partitions(24);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(to_string(ps[0]), "3+3+3+3+3+3+3+3");
  EXPECT_EQ(to_string(ps[2]), "4+4+4+4+4+4");
  EXPECT_THROW(boundary_maximizer_partitions(10), Error);
  // at the exact threshold every listed partition gives the same value, so a rational
  // ratio close to theta puts them within a small relative band
  const ExactValue ratio = exact(714020, 1000000);
  const Weights w{ratio, 1 - ratio, 1};
  const double reference = to_double(pow(a_general(w, 3), 4));
  for (const auto& p : boundary_maximizer_partitions(12)) {
    ExactValue v = 1;
    for (long part : p.parts) v *= a_general(w, part);
    EXPECT_NEAR(to_double(v) / reference, 1.0, 1e-4) << to_string(p);
  }
}

TEST(Boundary, RelativeGapAtTheta) {
  const double theta = std::pow(std::cbrt(2.0) - 1.0, 0.25);
  EXPECT_LT(boundary_relative_gap(12, theta + 1e-6), 1e-4);
  EXPECT_LT(boundary_relative_gap(12, theta - 1e-6), 1e-4);
  EXPECT_GT(boundary_relative_gap(12, 0.5), 1e-2);
}
