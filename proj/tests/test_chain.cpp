#include "arithproj/chain.hpp"
#include "arithproj/constructions.hpp"
#include "arithproj/proof.hpp"
#include "arithproj/random.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace arithproj;

namespace {

ChainProblem constant_pair() { return ChainProblem{2, {Labeling{1, {0, 0}}}}; }

ChainProblem example_one_v_problem() { return v_problem(build_example_one(1, 7)); }

}  // namespace

TEST(ChainCount, DepthZeroIsSizeOfX) {
  const ChainProblem p{7, {}};
  EXPECT_EQ(chain_count_naive(p), 7);
  EXPECT_EQ(chain_count_dp(p), 7);
  EXPECT_EQ(chain_lower_bound(p), Rational(7));
}

TEST(ChainCount, ConstantLabeling) {
  EXPECT_EQ(chain_count_naive(constant_pair()), 4);
  EXPECT_EQ(chain_count_dp(constant_pair()), 4);
}

TEST(ChainCount, ExampleOneProjectionToA) {
  const auto p = example_one_v_problem();
  EXPECT_EQ(p.items, 6u);
  EXPECT_EQ(p.labelings[0].label_count, 3u);
  EXPECT_EQ(chain_count_naive(p), 12);
  EXPECT_EQ(chain_count_dp(p), 12);
  EXPECT_EQ(chain_lower_bound(p), Rational(12));
}

TEST(ChainCount, ExampleTwoTripleProblem) {
  const auto inst = build_example_two(1, 9);
  const auto p = t_problem(inst, build_V(inst));
  EXPECT_EQ(chain_count_dp(p), chain_count_naive(p));
  EXPECT_EQ(chain_count_dp(p), 30);
}

TEST(ChainCount, NaiveRespectsCap) {
  const ChainProblem p{100, {Labeling{1, std::vector<std::uint64_t>(100, 0)}}};
  try {
    (void)chain_count_naive(p, 9'999);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EnumerationCapExceeded);
  }
  EXPECT_EQ(chain_count_naive(p, 10'000), 10'000);
}

TEST(ChainCount, NaiveWorkersAgree) {
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_chain_problem(rng, {20, 3, 5});
    EXPECT_EQ(chain_count_naive(p, kDefaultEnumerationCap, 3), chain_count_naive(p));
  }
}

TEST(ChainCount, RejectsPartialLabeling) {
  const ChainProblem p{3, {Labeling{2, {0, 1}}}};
  EXPECT_THROW((void)chain_count_dp(p), Error);
  const ChainProblem q{2, {Labeling{2, {0, 2}}}};
  EXPECT_THROW((void)chain_count_dp(q), Error);
}

TEST(LowerBound, Values) {
  EXPECT_EQ(chain_lower_bound(ChainProblem{6, {Labeling{3, {0, 0, 1, 1, 2, 2}}}}), Rational(12));
  ChainProblem p{12, {}};
  for (int i = 0; i < 3; ++i) p.labelings.push_back(Labeling{9, std::vector<std::uint64_t>(12, 0)});
  EXPECT_EQ(chain_lower_bound(p), Rational(20736, 729));
}

TEST(LowerBound, EmptyLabelSet) {
  try {
    (void)chain_lower_bound(ChainProblem{2, {Labeling{0, {}}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyLabelSet);
  }
}

TEST(Popular, InjectiveKeepsEverything) {
  const Labeling f{4, {0, 1, 2, 3}};
  EXPECT_EQ(popular_filter(4, f), (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Popular, BoundaryFiberIsKept) {
  // fibers 3 and 1, threshold 4 / (2*2) = 1
  const Labeling f{2, {0, 0, 0, 1}};
  EXPECT_EQ(popular_filter(4, f).size(), 4u);
}

TEST(Popular, SmallFiberDropped) {
  // fibers 7 and 1, threshold 8 / 4 = 2
  const Labeling f{2, {0, 0, 0, 0, 0, 0, 0, 1}};
  EXPECT_EQ(popular_filter(8, f), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(Tensor, PowerOneIsIdentity) {
  const auto p = example_one_v_problem();
  EXPECT_EQ(tensor_power(p, 1), p);
}

TEST(Tensor, SquareOfExampleOne) {
  const auto p = example_one_v_problem();
  const auto sq = tensor_power(p, 2);
  EXPECT_EQ(sq.items, 36u);
  EXPECT_EQ(sq.labelings[0].label_count, 9u);
  EXPECT_EQ(chain_count_dp(sq), 144);
  EXPECT_EQ(chain_lower_bound(sq), chain_lower_bound(p) * chain_lower_bound(p));
}

TEST(Tensor, Cap) { EXPECT_THROW((void)tensor_power(ChainProblem{100, {}}, 4, 1000), Error); }

// ---------------------------------------------------------------- properties

TEST(ChainProperties, LemmaInequality) {
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_chain_problem(rng);
    const auto c = count_chains(p);
    ASSERT_TRUE(c.holds()) << "count " << c.count << " bound " << to_string(c.lower_bound);
  }
}

TEST(ChainProperties, DpMatchesEnumeration) {
  Rng rng(99);
  int checked = 0;
  for (int i = 0; i < 600; ++i) {
    const auto p = random_chain_problem(rng, {30, 4, 6});
    if (ipow(BigInt(p.items), p.depth() + 1) > 1'000'000) continue;
    ++checked;
    const auto dp = chain_count_dp(p);
    ASSERT_EQ(dp, chain_count_naive(p));
    ASSERT_EQ(dp, oracle::chain_count(p));
  }
  EXPECT_GT(checked, 300);
}

TEST(ChainProperties, PopularRetainsHalf) {
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_chain_problem(rng, {60, 1, 20});
    if (p.depth() == 0) continue;
    const auto kept = popular_filter(p.items, p.labelings[0]);
    ASSERT_GE(2 * kept.size(), p.items);
  }
}

TEST(ChainProperties, TensorMultiplicativity) {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const auto p = random_chain_problem(rng, {6, 3, 4});
    const auto base = chain_count_dp(p);
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto t = tensor_power(p, m);
      ASSERT_EQ(chain_count_dp(t), ipow(base, m));
      ASSERT_EQ(chain_lower_bound(t), rpow(chain_lower_bound(p), m));
    }
  }
}

TEST(ChainProperties, IdentityLabelingIsSharp) {
  for (std::size_t k = 1; k <= 20; ++k) {
    ChainProblem p{k, {Labeling{k, {}}}};
    for (std::size_t x = 0; x < k; ++x) p.labelings[0].labels.push_back(x);
    EXPECT_EQ(chain_count_dp(p), k);
    EXPECT_EQ(chain_lower_bound(p), Rational(k));
  }
}
