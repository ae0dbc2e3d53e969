#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permspec/enumerator.hpp"
#include "permspec/matrix.hpp"
#include "permspec/permanent.hpp"

using namespace permspec;

namespace {

WeightedMatrix W(const BinaryMatrix& b) { return WeightedMatrix(b); }

BinaryMatrix circ(std::size_t n, std::initializer_list<long> offsets) {
  BinaryMatrix m(n);
  for (long o : offsets) m = m | power_matrix(n, o);
  return m;
}

WeightedMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  WeightedMatrix m(n);
  std::uniform_int_distribution<int> zero(0, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = zero(rng) == 0 ? ExactValue(0) : oracle::random_rational(rng, 5);
  return m;
}

}  // namespace

TEST(Permanent, SmallExamples) {
  EXPECT_EQ(permanent_ryser(WeightedMatrix::identity(3)), 1);
  EXPECT_EQ(permanent_ryser(W(BinaryMatrix::ones(3))), 6);
  EXPECT_EQ(permanent_ryser(W(circ(5, {0, 1, 2}))), 13);
  EXPECT_EQ(permanent_expansion(WeightedMatrix::identity(4)), 1);
  EXPECT_EQ(permanent_expansion(W(BinaryMatrix::ones(4))), 24);
  EXPECT_EQ(permanent_expansion(W(circ(6, {0, 2, 4}))), 36);
}

TEST(Permanent, EmptyAndOversize) {
  try {
    permanent_ryser(WeightedMatrix(0));
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_matrix);
  }
  try {
    permanent_expansion(WeightedMatrix::identity(13));
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::oracle_limit);
  }
  EXPECT_EQ(permanent_expansion(WeightedMatrix::identity(13), 13), 1);
}

TEST(Permanent, BinaryKernelsAgree) {
  std::mt19937_64 rng(11);
  for (long n = 3; n <= 9; ++n)
    for (int k = 0; k < 20; ++k) {
      const auto a = oracle::random_three_regular(n, rng);
      const auto expected = oracle::permanent(a);
      EXPECT_EQ(permanent(a), BigInt(static_cast<unsigned long>(expected)));
      EXPECT_EQ(permanent_u64(a.rows()), expected);
      EXPECT_EQ(permanent_ryser(W(a)), ExactValue(static_cast<unsigned long>(expected)));
    }
}

TEST(Permanent, LargeBinaryUsesIntegerRyser) {
  // 22 x 22 direct sum of J3 blocks and I4+P+P^2 blocks: 6^6 * 9
  BinaryMatrix m = BinaryMatrix::ones(3);
  for (int k = 0; k < 5; ++k) m = direct_sum(m, BinaryMatrix::ones(3));
  m = direct_sum(m, circ(4, {0, 1, 2}));
  ASSERT_EQ(m.size(), 22u);
  EXPECT_EQ(permanent(m), BigInt(46656 * 9));
}

TEST(PermanentProperty, RyserMatchesExpansionOn500RandomMatrices) {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int k = 0; k < 500; ++k) {
    const auto m = random_matrix(rng, dim(rng));
    ASSERT_EQ(permanent_ryser(m), permanent_expansion(m)) << format_matrix(m);
  }
}

TEST(PermanentProperty, RyserMatchesPermutationSum) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 7; ++n)
    for (int k = 0; k < 10; ++k) {
      const auto m = random_matrix(rng, n);
      EXPECT_EQ(permanent_ryser(m), oracle::permanent(m));
    }
}

TEST(PermanentProperty, TransposeInvariance) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const auto m = random_matrix(rng, 1 + k % 7);
    EXPECT_EQ(permanent_ryser(m), permanent_ryser(m.transpose()));
  }
}

TEST(PermanentProperty, CyclicShiftInvariance) {
  std::mt19937_64 rng(9);
  for (long n = 3; n <= 8; ++n)
    for (int k = 0; k < 10; ++k) {
      const auto a = oracle::random_three_regular(n, rng);
      const auto per = permanent(a);
      for (long l = -n; l <= n; ++l) EXPECT_EQ(permanent(power_matrix(static_cast<std::size_t>(n), l) * a), per);
    }
}

TEST(PermanentProperty, DirectSumMultiplies) {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 50; ++k) {
    const auto a = random_matrix(rng, 1 + k % 4);
    const auto b = random_matrix(rng, 1 + (k / 4) % 4);
    EXPECT_EQ(permanent_ryser(direct_sum(a, b)), permanent_ryser(a) * permanent_ryser(b));
  }
}

TEST(PowerMatrix, Examples) {
  EXPECT_EQ(power_matrix(3, 0), BinaryMatrix::identity(3));
  const auto p = power_matrix(3, 1);
  EXPECT_TRUE(p.get(0, 1) && p.get(1, 2) && p.get(2, 0));
  EXPECT_EQ(p.row_sum(0) + p.row_sum(1) + p.row_sum(2), 3);
  EXPECT_EQ(power_matrix(5, 7), power_matrix(5, 2));
  EXPECT_EQ(power_matrix(5, -1), power_matrix(5, 1).transpose());
  EXPECT_EQ(power_matrix(5, 1) * power_matrix(5, -1), BinaryMatrix::identity(5));
}

TEST(DirectSum, Examples) {
  const auto j3 = W(BinaryMatrix::ones(3));
  const auto js = direct_sum(j3, j3);
  EXPECT_EQ(js.size(), 6u);
  EXPECT_EQ(permanent_ryser(js), 36);
  EXPECT_EQ(direct_sum(WeightedMatrix::identity(2), WeightedMatrix::identity(3)), WeightedMatrix::identity(5));
  EXPECT_EQ(permanent_ryser(direct_sum(W(circ(5, {0, 1, 2})), j3)), 78);
}

TEST(ClassMembership, Examples) {
  EXPECT_TRUE(is_class_member(W(BinaryMatrix::ones(3)), ClassSpec::binary(ClassKind::Lambda3)));
  EXPECT_TRUE(is_class_member(W(circ(4, {0, 1, 2})), ClassSpec::binary(ClassKind::Lambda3Diag)));
  EXPECT_FALSE(is_class_member(W(circ(4, {1, 2, 3})), ClassSpec::binary(ClassKind::Lambda3Diag)));
  EXPECT_TRUE(is_class_member(W(circ(5, {0, 1, 4})), ClassSpec::binary(ClassKind::Lambda3Sym)));
  EXPECT_FALSE(is_class_member(W(circ(5, {0, 1, 2})), ClassSpec::binary(ClassKind::Lambda3Sym)));

  // 2 P^-1 + 3 I - P is alpha S^-1 + beta I + gamma S with S = P^-1
  const Weights w{-1, 3, 2};
  const auto m = ExactValue(2) * W(power_matrix(5, -1)) + ExactValue(3) * WeightedMatrix::identity(5) -
                 W(power_matrix(5, 1));
  EXPECT_TRUE(is_class_member(m, ClassSpec::weighted(ClassKind::LambdaABGSym, w)));
  EXPECT_TRUE(is_class_member(m, ClassSpec::weighted(ClassKind::LambdaABGDiag, w)));
  EXPECT_TRUE(is_class_member(m, ClassSpec::weighted(ClassKind::LambdaABG, w)));
  EXPECT_FALSE(is_class_member(m, ClassSpec::weighted(ClassKind::LambdaABGSym, Weights{-1, 2, 3})));
  // a circulant Latin square with constant diagonal
  WeightedMatrix latin(3);
  const ExactValue rows[3][3] = {{3, 2, -1}, {-1, 3, 2}, {2, -1, 3}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) latin(i, j) = rows[i][j];
  EXPECT_TRUE(is_class_member(latin, ClassSpec::weighted(ClassKind::LambdaABGSym, w)));
  // gamma at (i, i+1), alpha at (i, i+2): diagonal class but alpha sits opposite a zero
  WeightedMatrix skew(4);
  for (std::size_t i = 0; i < 4; ++i) {
    skew(i, i) = 3;
    skew(i, (i + 1) % 4) = 2;
    skew(i, (i + 2) % 4) = -1;
  }
  EXPECT_TRUE(is_class_member(skew, ClassSpec::weighted(ClassKind::LambdaABGDiag, w)));
  EXPECT_FALSE(is_class_member(skew, ClassSpec::weighted(ClassKind::LambdaABGSym, w)));
  EXPECT_FALSE(is_class_member(skew, ClassSpec::weighted(ClassKind::LambdaABG, Weights{-1, 3, 5})));
}

TEST(ClassSpec, WeightsRules) {
  EXPECT_THROW(ClassSpec::weighted(ClassKind::LambdaABG, Weights{0, 1, 2}), Error);
  EXPECT_THROW(ClassSpec::weighted(ClassKind::Lambda3, Weights{1, 1, 2}), Error);
  EXPECT_FALSE(ClassSpec::binary(ClassKind::Lambda3).weights().has_value());
  EXPECT_THROW(ClassSpec::binary(ClassKind::LambdaABG), Error);
  for (auto kind : {ClassKind::Lambda3, ClassKind::Lambda3Diag, ClassKind::Lambda3Sym, ClassKind::LambdaABG,
                    ClassKind::LambdaABGDiag, ClassKind::LambdaABGSym})
    EXPECT_EQ(parse_class_kind(to_string(kind)), kind);
  EXPECT_FALSE(parse_class_kind("lambda4").has_value());
}

TEST(Decompose, Examples) {
  const auto parts = decompose_components(W(circ(6, {0, 2, 4})));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].size(), 3u);
  EXPECT_EQ(parts[1].size(), 3u);
  EXPECT_EQ(decompose_components(W(BinaryMatrix::ones(3))).size(), 1u);
  const auto mixed = decompose_components(direct_sum(W(BinaryMatrix::ones(3)), W(circ(4, {0, 1, 2}))));
  ASSERT_EQ(mixed.size(), 2u);
  EXPECT_EQ(mixed[0].size(), 3u);
  EXPECT_EQ(mixed[1].size(), 4u);
}

TEST(DecomposeProperty, BlocksMultiplyBackToThePermanent) {
  // every member of Lambda_n^3 for n <= 5, every diagonal member for n = 6
  auto check = [](const BinaryMatrix& a) {
    const auto parts = decompose_components(W(a));
    std::size_t total = 0;
    ExactValue product = 1;
    for (const auto& p : parts) {
      total += p.size();
      product *= permanent_ryser(p);
      EXPECT_EQ(decompose_components(p).size(), 1u);
    }
    EXPECT_EQ(total, a.size());
    EXPECT_EQ(product, ExactValue(permanent(a)));
    EXPECT_EQ(static_cast<long>(parts.size()), oracle::support_block_count(a));
    EXPECT_EQ(is_connected_support(a.rows()), parts.size() == 1);
  };
  for (long n = 3; n <= 5; ++n) oracle::for_each_three_regular(n, false, check);
  oracle::for_each_three_regular(6, true, check);
}

TEST(DecomposeProperty, RandomSevens) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    const auto a = oracle::random_three_regular(7, rng);
    const auto parts = decompose_components(W(a));
    ExactValue product = 1;
    for (const auto& p : parts) product *= permanent_ryser(p);
    EXPECT_EQ(product, ExactValue(permanent(a)));
  }
}

TEST(MatrixText, RoundTripAndShorthand) {
  std::istringstream in("3\n1 1/2 0\n-2/4 1 0\n0 0 3\n");
  const auto m = read_matrix(in);
  EXPECT_EQ(m(0, 1), exact(1, 2));
  EXPECT_EQ(m(1, 0), exact(-1, 2));
  std::ostringstream out;
  write_matrix(out, m);
  std::istringstream again(out.str());
  EXPECT_EQ(read_matrix(again), m);
  std::istringstream bin("2\n1 0\n0 1\n");
  const auto b = read_matrix(bin).as_binary();
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(*b, BinaryMatrix::identity(2));
}

TEST(MatrixText, Errors) {
  std::istringstream short_row("2\n1 0\n1\n");
  EXPECT_THROW(read_matrix(short_row), Error);
  std::istringstream bad("2\n1 x\n0 1\n");
  EXPECT_THROW(read_matrix(bad), Error);
  std::istringstream zero_den("1\n1/0\n");
  EXPECT_THROW(read_matrix(zero_den), Error);
  EXPECT_THROW(read_matrix_file("/nonexistent/matrix.txt"), Error);
}

TEST(Exact, ParseAndFormat) {
  EXPECT_EQ(parse_exact("6/4"), exact(3, 2));
  EXPECT_EQ(parse_exact("-7"), -7);
  EXPECT_EQ(parse_exact("+3/9"), exact(1, 3));
  EXPECT_EQ(to_string(exact(-4, 6)), "-2/3");
  EXPECT_EQ(to_string(exact(12)), "12");
  EXPECT_THROW(parse_exact(""), Error);
  EXPECT_THROW(parse_exact("1/"), Error);
  EXPECT_THROW(parse_exact("0.5"), Error);
  EXPECT_EQ(pow(exact(2, 3), -2), exact(9, 4));
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(10), 3628800);
}
