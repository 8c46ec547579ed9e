#pragma once

#include "arithproj/error.hpp"
#include "arithproj/exact.hpp"

#include <cstdint>
#include <string>

namespace arithproj {

enum class DimensionKind { Minkowski, Hausdorff };

/// Lower bounds for the dimension of a Besicovitch set in R^n.
inline Rational minkowski_bound(std::int64_t n) { return Rational(4 * n + 3, 7); }
inline Rational hausdorff_bound(std::int64_t n) { return Rational(6 * n + 5, 11); }
inline Rational wolff_bound(std::int64_t n) { return Rational(n + 2, 2); }

enum class Winner { New, Wolff, Equal };

inline std::string to_string(Winner w) {
  switch (w) {
    case Winner::New: return "new";
    case Winner::Wolff: return "wolff";
    case Winner::Equal: return "equal";
  }
  return "?";
}

inline Winner compare_to_wolff(const Rational& bound, const Rational& wolff) {
  if (bound > wolff) return Winner::New;
  if (bound < wolff) return Winner::Wolff;
  return Winner::Equal;
}

struct DimensionReport {
  std::int64_t n = 0;
  Rational minkowski;
  Rational hausdorff;
  Rational wolff;
  Winner best_minkowski = Winner::Equal;
  Winner best_hausdorff = Winner::Equal;
};

inline DimensionReport dimension_report(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 2, got " + std::to_string(n));
  DimensionReport r{n, minkowski_bound(n), hausdorff_bound(n), wolff_bound(n)};
  r.best_minkowski = compare_to_wolff(r.minkowski, r.wolff);
  r.best_hausdorff = compare_to_wolff(r.hausdorff, r.wolff);
  return r;
}

/// Least n >= 2 at which the bound strictly exceeds (n+2)/2, by scanning.
inline std::int64_t novelty_threshold(DimensionKind kind, std::int64_t scan_limit = 1'000'000) {
  for (std::int64_t n = 2; n <= scan_limit; ++n) {
    const auto r = dimension_report(n);
    if ((kind == DimensionKind::Minkowski ? r.best_minkowski : r.best_hausdorff) == Winner::New) return n;
  }
  throw Error(ErrorKind::InvalidArgument, "no threshold below scan limit");
}

}  // namespace arithproj
