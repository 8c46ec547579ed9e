#include "arithproj/kakeya.hpp"

#include <gtest/gtest.h>

using namespace arithproj;

TEST(Dimension, NineIsFirstMinkowskiWin) {
  const auto r = dimension_report(9);
  EXPECT_EQ(r.minkowski, Rational(39, 7));
  EXPECT_EQ(r.wolff, Rational(11, 2));
  EXPECT_EQ(r.best_minkowski, Winner::New);
}

TEST(Dimension, EightIsTie) {
  const auto r = dimension_report(8);
  EXPECT_EQ(r.minkowski, Rational(5));
  EXPECT_EQ(r.wolff, Rational(5));
  EXPECT_EQ(r.best_minkowski, Winner::Equal);
}

TEST(Dimension, ThirteenHausdorff) {
  const auto r = dimension_report(13);
  EXPECT_EQ(r.hausdorff, Rational(83, 11));
  EXPECT_EQ(r.wolff, Rational(15, 2));
  EXPECT_EQ(r.best_hausdorff, Winner::New);
}

TEST(Dimension, TwoLoses) {
  const auto r = dimension_report(2);
  EXPECT_EQ(r.minkowski, Rational(11, 7));
  EXPECT_EQ(r.wolff, Rational(2));
  EXPECT_EQ(r.best_minkowski, Winner::Wolff);
}

TEST(Dimension, InvalidDimension) {
  try {
    (void)dimension_report(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidDimension);
  }
}

TEST(Threshold, Values) {
  const auto m = novelty_threshold(DimensionKind::Minkowski);
  const auto h = novelty_threshold(DimensionKind::Hausdorff);
  EXPECT_EQ(m, 9);
  EXPECT_EQ(h, 13);
  EXPECT_NE(dimension_report(m - 1).best_minkowski, Winner::New);
  EXPECT_NE(dimension_report(h - 1).best_hausdorff, Winner::New);
}

TEST(Dimension, MonotoneAndOrdered) {
  for (std::int64_t n = 2; n <= 100; ++n) {
    const auto r = dimension_report(n);
    EXPECT_GT(r.minkowski, r.hausdorff) << n;
    if (n > 2) {
      const auto prev = dimension_report(n - 1);
      EXPECT_GT(r.minkowski, prev.minkowski);
      EXPECT_GT(r.hausdorff, prev.hausdorff);
    }
  }
}
