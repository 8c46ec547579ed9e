#include "arithproj/io.hpp"
#include "arithproj/random.hpp"
#include "arithproj/search.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace arithproj;

namespace {

SearchSpec spec_for(std::int64_t k, bool d, SearchSpec::Mode mode = SearchSpec::Mode::Exhaustive) {
  SearchSpec s;
  s.K = k;
  s.constrain_d = d;
  s.mode = mode;
  return s;
}

void expect_same(const SearchResult& a, const SearchResult& b, bool nodes_too) {
  EXPECT_EQ(a.best.num, b.best.num);
  EXPECT_EQ(a.best.den, b.best.den);
  EXPECT_EQ(a.best_exponent, b.best_exponent);
  EXPECT_EQ(a.witnesses, b.witnesses);
  EXPECT_EQ(a.exhaustive, b.exhaustive);
  if (nodes_too) EXPECT_EQ(a.nodes, b.nodes);
}

}  // namespace

TEST(Canonicalize, Translation) {
  const auto c = canonicalize(DigitPattern::make({{1, 1}}, false), 3);
  EXPECT_EQ(c.pairs, (std::vector<DigitPair>{{0, 0}}));
}

TEST(Canonicalize, Idempotent) {
  const auto once = canonicalize(example_one_pattern(), 3);
  EXPECT_EQ(canonicalize(once, 3), once);
}

TEST(Canonicalize, RejectsDigitsAboveK) { EXPECT_THROW((void)canonicalize(example_two_pattern(), 3), Error); }

TEST(Canonicalize, OrbitInvariance) {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t k = 5;
    std::vector<DigitPair> pairs;
    const auto n = uniform(rng, 1, 6);
    for (std::uint64_t j = 0; j < n; ++j)
      pairs.push_back({static_cast<std::int64_t>(uniform(rng, 0, 3)), static_cast<std::int64_t>(uniform(rng, 0, 3))});
    const auto p = DigitPattern::make(pairs, uniform(rng, 0, 1) == 1);
    const auto dx = static_cast<std::int64_t>(uniform(rng, 0, 2)), dy = static_cast<std::int64_t>(uniform(rng, 0, 2));
    std::vector<DigitPair> moved, reflected;
    for (const auto& q : p.pairs) {
      moved.push_back({q.x + dx, q.y + dy});
      reflected.push_back({k - q.x, k - q.y});
    }
    const auto c = canonicalize(p, k);
    EXPECT_EQ(canonicalize(DigitPattern::make(moved, p.constrain_d), k), c);
    EXPECT_EQ(canonicalize(DigitPattern::make(reflected, p.constrain_d), k), c);
    const auto s1 = pattern_stats(p), s2 = pattern_stats(c);
    EXPECT_EQ(s1.size_a, s2.size_a);
    EXPECT_EQ(s1.size_b, s2.size_b);
    EXPECT_EQ(s1.size_c, s2.size_c);
    EXPECT_EQ(s1.size_d, s2.size_d);
    EXPECT_EQ(s1.size_delta, s2.size_delta);
  }
}

TEST(CompareScores, ExactTies) {
  EXPECT_EQ(compare_scores({6, 3}, {36, 9}), std::strong_ordering::equal);
  EXPECT_EQ(compare_scores({4, 2}, {9, 3}), std::strong_ordering::equal);
  EXPECT_EQ(compare_scores({8, 4}, {2, 2}), std::strong_ordering::greater);
  EXPECT_EQ(compare_scores({1, 3}, {1, 7}), std::strong_ordering::equal);
}

TEST(CompareScores, Order) {
  EXPECT_EQ(compare_scores({7, 3}, {6, 3}), std::strong_ordering::greater);
  EXPECT_EQ(compare_scores({8, 4}, {6, 3}), std::strong_ordering::less);
  EXPECT_EQ(compare_scores({10, 4}, {6, 3}), std::strong_ordering::greater);
  EXPECT_EQ(compare_scores({6, 3}, {0, 0}), std::strong_ordering::greater);
}

TEST(CompareScores, DistinctValuesAreWellSeparated) {
  // every exponent the searches can produce (numerators and slices up to 25)
  double min_gap = 1.0;
  for (std::uint64_t a = 1; a <= 25; ++a)
    for (std::uint64_t b = 2; b <= 25; ++b)
      for (std::uint64_t c = 1; c <= 25; ++c)
        for (std::uint64_t d = 2; d <= 25; ++d) {
          const Score s{a, b}, t{c, d};
          if (compare_scores(s, t) != std::strong_ordering::equal) min_gap = std::min(min_gap, std::fabs(s.value() - t.value()));
        }
  EXPECT_GT(min_gap, 1e-9);
}

TEST(Search, ThreeDigitAlphabet) {
  const auto spec = spec_for(3, false);
  const auto r = search(spec);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(compare_scores(r.best, {6, 3}) >= 0);
  EXPECT_NEAR(r.best_exponent, 1.630930, 1e-6);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), canonicalize(example_one_pattern(), 3)),
            r.witnesses.end());
  EXPECT_TRUE(certify(r, spec).ok);
}

TEST(Search, FourDigitAlphabetWithD) {
  const auto spec = spec_for(4, true);
  const auto r = search(spec);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(compare_scores(r.best, {8, 4}) >= 0);
  EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), canonicalize(example_two_pattern(), 4)),
            r.witnesses.end());
  EXPECT_TRUE(certify(r, spec).ok);
}

TEST(Search, Degenerate) {
  const auto spec = spec_for(0, false);
  const auto r = search(spec);
  EXPECT_EQ(r.best_exponent, 0.0);
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(certify(r, spec).ok);
}

TEST(Search, ExhaustivePrecondition) { EXPECT_THROW((void)search(spec_for(5, false)), Error); }

TEST(Search, BudgetIsFlaggedNotThrown) {
  auto spec = spec_for(4, false, SearchSpec::Mode::BranchBound);
  spec.node_limit = 50;
  const auto r = search(spec);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_LE(r.nodes, 50u);
}

TEST(Search, Deterministic) {
  for (auto mode : {SearchSpec::Mode::Exhaustive, SearchSpec::Mode::BranchBound}) {
    const auto spec = spec_for(4, false, mode);
    expect_same(search(spec), search(spec), true);
  }
}

TEST(Search, WorkersDoNotChangeResult) {
  for (bool d : {false, true}) {
    auto spec = spec_for(4, d, SearchSpec::Mode::BranchBound);
    const auto one = search(spec);
    spec.workers = 4;
    expect_same(search(spec), one, false);
  }
}

TEST(Search, PruningIsSafe) {
  for (std::int64_t k = 0; k <= 4; ++k)
    for (bool d : {false, true})
      for (bool inj : {true, false}) {
        if (!inj && k > 3) continue;
        auto ex = spec_for(k, d);
        ex.require_difference_injective = inj;
        auto bb = ex;
        bb.mode = SearchSpec::Mode::BranchBound;
        const auto a = search(ex), b = search(bb);
        EXPECT_EQ(a.best.num, b.best.num) << k << d << inj;
        EXPECT_EQ(a.best.den, b.best.den) << k << d << inj;
        EXPECT_EQ(a.witnesses, b.witnesses) << k << d << inj;
        EXPECT_LE(b.nodes, a.nodes);
      }
}

TEST(Search, TheoremCeilings) {
  for (std::int64_t k = 1; k <= 6; ++k)
    for (bool d : {false, true}) {
      const auto spec = spec_for(k, d, SearchSpec::Mode::BranchBound);
      const auto r = search(spec);
      ASSERT_TRUE(r.exhaustive);
      for (const auto& w : r.witnesses) {
        const auto st = pattern_stats(w);
        if (d)
          EXPECT_LE(ipow(BigInt(st.pairs), 4), ipow(BigInt(st.slice_max), 7));
        else
          EXPECT_LE(ipow(BigInt(st.pairs), 6), ipow(BigInt(st.slice_max), 11));
      }
      EXPECT_TRUE(certify(r, spec).ok) << "K=" << k << " d=" << d;
    }
}

TEST(Search, NonInjectiveScoresDifferences) {
  auto spec = spec_for(2, false);
  spec.require_difference_injective = false;
  const auto r = search(spec);
  EXPECT_TRUE(r.exhaustive);
  for (const auto& w : r.witnesses) {
    const auto st = pattern_stats(w);
    EXPECT_EQ(st.size_delta, r.best.num);
    EXPECT_EQ(st.slice_max, r.best.den);
  }
  EXPECT_TRUE(certify(r, spec).ok);
}

TEST(Certify, CorruptedWitness) {
  const auto spec = spec_for(3, false);
  auto r = search(spec);
  ASSERT_FALSE(r.witnesses.empty());
  r.witnesses[0].pairs.pop_back();
  const auto c = certify(r, spec);
  EXPECT_FALSE(c.ok);
  bool mismatch = false;
  for (const auto& d : c.diagnostics) mismatch |= d.find("exponent mismatch") != std::string::npos;
  EXPECT_TRUE(mismatch);
}

TEST(Certify, EmptyIsVacuous) {
  SearchResult r;
  r.exhaustive = true;
  EXPECT_TRUE(certify(r, spec_for(2, false)).ok);
}

// The exact optima of the two reference spaces, as recorded by the first runs.
TEST(SearchRegression, Fixtures) {
  struct Case {
    const char* file;
    std::int64_t k;
    bool d;
  };
  for (const auto& c : {Case{"search_k3.json", 3, false}, Case{"search_k4_d.json", 4, true}}) {
    const auto expected = search_result_from_json(read_json_file(std::string(ARITHPROJ_FIXTURE_DIR) + "/" + c.file));
    const auto got = search(spec_for(c.k, c.d));
    expect_same(got, expected, true);
  }
}
