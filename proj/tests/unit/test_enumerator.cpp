#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permspec/enumerator.hpp"
#include "permspec/permanent.hpp"
#include "permspec/sequences.hpp"
#include "permspec/spectrum.hpp"

using namespace permspec;

namespace {

Spectrum S(std::initializer_list<long> v) {
  std::vector<ExactValue> out;
  for (long x : v) out.emplace_back(x);
  return Spectrum(out);
}

EnumerationTask task_for(ClassKind kind, long n) {
  EnumerationTask t;
  t.spec = ClassSpec::binary(kind);
  t.n = n;
  return t;
}

std::vector<std::vector<std::uint64_t>> rows_of(const EnumerationTask& task) {
  std::vector<std::vector<std::uint64_t>> out;
  for_each_binary(task, [&](std::span<const std::uint64_t> rows, std::uint64_t) { out.emplace_back(rows.begin(), rows.end()); });
  return out;
}

}  // namespace

TEST(Enumerate, Examples) {
  const auto three = enumerate_binary(task_for(ClassKind::Lambda3Diag, 3));
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0], BinaryMatrix::ones(3));
  EXPECT_EQ(enumerate_binary(task_for(ClassKind::Lambda3Diag, 4)).size(), 9u);
  EXPECT_EQ(ExactValue(static_cast<unsigned long>(enumerate_binary(task_for(ClassKind::Lambda3Diag, 5)).size())),
            count_lambda3_diag(5));
}

TEST(Enumerate, MembersAreValidDistinctAndOrdered) {
  for (auto kind : {ClassKind::Lambda3, ClassKind::Lambda3Diag, ClassKind::Lambda3Sym}) {
    const auto all = rows_of(task_for(kind, 5));
    for (std::size_t i = 0; i < all.size(); ++i) {
      const BinaryMatrix m(5, all[i]);
      EXPECT_TRUE(is_class_member(m, ClassSpec::binary(kind)));
      if (i) EXPECT_LT(all[i - 1], all[i]);
    }
  }
}

TEST(Enumerate, PermanentsPassedToVisitorAreCorrect) {
  for_each_binary(task_for(ClassKind::Lambda3Diag, 6), [](std::span<const std::uint64_t> rows, std::uint64_t per) {
    ASSERT_EQ(per, oracle::permanent(BinaryMatrix(6, {rows.begin(), rows.end()})));
  });
}

TEST(Enumerate, MatchesOracleEnumeration) {
  for (bool diagonal : {false, true})
    for (long n = 3; n <= 5; ++n) {
      std::set<std::vector<std::uint64_t>> expected;
      oracle::for_each_three_regular(n, diagonal, [&](const BinaryMatrix& m) {
        expected.emplace(m.rows().begin(), m.rows().end());
      });
      const auto got = rows_of(task_for(diagonal ? ClassKind::Lambda3Diag : ClassKind::Lambda3, n));
      EXPECT_EQ(std::set<std::vector<std::uint64_t>>(got.begin(), got.end()), expected) << n;
      EXPECT_EQ(got.size(), expected.size());
    }
}

TEST(Enumerate, WeightedMembers) {
  const Weights w{-1, 3, 2};
  EnumerationTask t;
  t.spec = ClassSpec::weighted(ClassKind::LambdaABGDiag, w);
  t.n = 4;
  const auto all = enumerate_weighted(t);
  EXPECT_EQ(all.size(), 24u);
  for (const auto& m : all) EXPECT_TRUE(is_class_member(m, t.spec));
  t.spec = ClassSpec::weighted(ClassKind::LambdaABGSym, w);
  t.n = 7;
  for (const auto& m : enumerate_weighted(t)) EXPECT_TRUE(is_class_member(m, t.spec));
}

TEST(Enumerate, Limits) {
  auto t = task_for(ClassKind::Lambda3, 7);
  try {
    enumerate_binary(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::enumeration_limit);
    EXPECT_NE(std::string(e.what()).find("allow_large"), std::string::npos);
  }
  EXPECT_THROW(enumerate_binary(task_for(ClassKind::Lambda3Diag, 10)), Error);
  EXPECT_THROW(enumerate_binary(task_for(ClassKind::Lambda3Diag, 2)), Error);
  auto bad = task_for(ClassKind::Lambda3Diag, 5);
  bad.shard = Shard{2, 2};
  EXPECT_THROW(scan(bad), Error);
  EXPECT_GT(estimated_class_size(ClassKind::Lambda3Diag, 10), 1e9);
}

TEST(Shards, UnionIsTheWholeAndDisjoint) {
  for (long n = 5; n <= 7; ++n) {
    const auto whole = rows_of(task_for(ClassKind::Lambda3Diag, n));
    for (std::size_t count : {2u, 3u, 7u}) {
      std::vector<std::vector<std::uint64_t>> merged;
      for (std::size_t i = 0; i < count; ++i) {
        auto t = task_for(ClassKind::Lambda3Diag, n);
        t.shard = Shard{count, i};
        const auto part = rows_of(t);
        merged.insert(merged.end(), part.begin(), part.end());
      }
      std::sort(merged.begin(), merged.end());
      EXPECT_EQ(std::adjacent_find(merged.begin(), merged.end()), merged.end());
      EXPECT_EQ(merged, whole) << n << " / " << count;
    }
  }
}

TEST(Scan, WorkersAndShardsAgree) {
  auto t = task_for(ClassKind::Lambda3Diag, 7);
  const auto one = scan(t);
  t.workers = 3;
  const auto three = scan(t);
  EXPECT_EQ(one.count, three.count);
  EXPECT_EQ(one.spectrum, three.spectrum);
  EXPECT_EQ(one.indecomposable, three.indecomposable);
  EXPECT_EQ(one.count, 357435);
  EXPECT_EQ(one.spectrum, S({24, 25, 26, 27, 30, 31, 32, 54}));
  EXPECT_EQ(one.indecomposable, S({24, 25, 26, 27, 30, 31, 32}));

  BigInt count = 0;
  Spectrum merged;
  for (std::size_t i = 0; i < 4; ++i) {
    auto s = task_for(ClassKind::Lambda3Diag, 7);
    s.shard = Shard{4, i};
    const auto r = scan(s);
    count += r.count;
    merged = merged.merged(r.spectrum);
  }
  EXPECT_EQ(count, one.count);
  EXPECT_EQ(merged, one.spectrum);
}

TEST(BruteSpectrum, PublishedSmallSpectra) {
  EXPECT_EQ(brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), 3), S({6}));
  EXPECT_EQ(brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), 4), S({9}));
  EXPECT_EQ(brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), 5), S({12, 13}));
  EXPECT_EQ(brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), 6), S({17, 18, 20, 36}));
  EXPECT_EQ(brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), 7), S({24, 25, 26, 27, 30, 31, 32, 54}));
}

TEST(BruteSpectrum, DirectEnumerationOfTheFullClass) {
  BruteOptions direct;
  direct.via_diagonal = false;
  for (long n = 3; n <= 6; ++n) {
    std::set<ExactValue> expected;
    if (n <= 5)
      oracle::for_each_three_regular(n, false, [&](const BinaryMatrix& m) {
        expected.insert(ExactValue(static_cast<unsigned long>(oracle::permanent(m))));
      });
    const auto got = brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), n, direct);
    if (n <= 5) EXPECT_EQ(got, Spectrum({expected.begin(), expected.end()})) << n;
    EXPECT_EQ(got, brute_spectrum(ClassSpec::binary(ClassKind::Lambda3), n)) << n;
  }
}

TEST(BruteCount, Examples) {
  const Weights w{-1, 3, 2};
  EXPECT_EQ(brute_count(ClassSpec::weighted(ClassKind::LambdaABGDiag, w), 4), 24);
  EXPECT_EQ(brute_count(ClassSpec::weighted(ClassKind::LambdaABG, w), 3), 12);
  EXPECT_EQ(brute_count(ClassSpec::binary(ClassKind::Lambda3Diag), 4), 9);
  EXPECT_THROW(brute_count(ClassSpec::weighted(ClassKind::LambdaABG, {1, 1, 2}), 3), Error);
}

TEST(BruteCount, MatchesSequences) {
  for (long n = 3; n <= 7; ++n)
    EXPECT_EQ(ExactValue(brute_count(ClassSpec::binary(ClassKind::Lambda3Diag), n)), count_lambda3_diag(n)) << n;
  for (long n = 3; n <= 5; ++n)
    EXPECT_EQ(ExactValue(brute_count(ClassSpec::binary(ClassKind::Lambda3), n)), count_lambda3(n)) << n;
}

TEST(Indecomposable, SmallMu) {
  EXPECT_EQ(indecomposable_spectrum(3).mu1, 6);
  EXPECT_EQ(indecomposable_spectrum(4).mu1, 9);
  EXPECT_EQ(indecomposable_spectrum(5).mu1, 13);
  const auto six = indecomposable_spectrum(6);
  EXPECT_LE(six.mu1, 36);
  EXPECT_FALSE(six.spectrum.contains(36));
}

TEST(Indecomposable, ConnectivityAgreesWithFloodFill) {
  auto t = task_for(ClassKind::Lambda3Diag, 6);
  std::set<ExactValue> connected;
  for_each_binary(t, [&](std::span<const std::uint64_t> rows, std::uint64_t per) {
    const BinaryMatrix m(6, {rows.begin(), rows.end()});
    const bool one_block = oracle::support_block_count(m) == 1;
    ASSERT_EQ(is_connected_support(rows), one_block);
    if (one_block) connected.insert(ExactValue(static_cast<unsigned long>(per)));
  });
  EXPECT_EQ(indecomposable_spectrum(6).spectrum, Spectrum({connected.begin(), connected.end()}));
}

TEST(Mci, UpToSeven) {
  const auto r = mci_check(7);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.violations.empty());
  // pairs (3,3) and (3,4)
  ASSERT_EQ(r.pairs.size(), 2u);
  EXPECT_EQ(r.pairs[0].rhs, 36);
  EXPECT_EQ(r.pairs[1].rhs, 54);
  for (const auto& b : r.bounds) EXPECT_TRUE(b.holds) << b.n;
  EXPECT_EQ(r.bounds.size(), 4u);
}

TEST(Mci, ReportsViolationsFromSuppliedSpectra) {
  std::map<long, Spectrum> fake{{3, S({6})}, {4, S({9})}, {5, S({13})}, {6, S({40})}};
  const auto r = mci_check(6, fake);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].lhs, 40);
  EXPECT_FALSE(r.ok());
  fake.erase(5);
  EXPECT_THROW(mci_check(6, fake), Error);
}
