#pragma once

#include "arithproj/error.hpp"
#include "arithproj/exact.hpp"
#include "arithproj/group.hpp"
#include "arithproj/instance.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arithproj {

struct DigitPair {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const DigitPair&, const DigitPair&) = default;
};

/// A single-digit relation P; its n-fold carry-free tensoring in base M is
/// an instance whose G consists of the pairs with every digit pair in P.
struct DigitPattern {
  std::vector<DigitPair> pairs;  // sorted, unique
  bool constrain_d = false;

  static DigitPattern make(std::vector<DigitPair> pairs, bool constrain_d) {
    if (pairs.empty()) throw Error(ErrorKind::InvalidArgument, "digit pattern must be nonempty");
    for (const auto& p : pairs)
      if (p.x < 0 || p.y < 0) throw Error(ErrorKind::InvalidArgument, "digits must be nonnegative");
    sort_unique(pairs);
    return DigitPattern{std::move(pairs), constrain_d};
  }

  template <typename Fn>
  std::vector<std::int64_t> image(Fn&& fn) const {
    std::vector<std::int64_t> out;
    for (const auto& p : pairs) out.push_back(fn(p));
    sort_unique(out);
    return out;
  }

  std::vector<std::int64_t> a_digits() const { return image([](DigitPair p) { return p.x; }); }
  std::vector<std::int64_t> b_digits() const { return image([](DigitPair p) { return p.y; }); }
  std::vector<std::int64_t> c_digits() const { return image([](DigitPair p) { return p.x + p.y; }); }
  std::vector<std::int64_t> d_digits() const { return image([](DigitPair p) { return p.x + 2 * p.y; }); }
  std::vector<std::int64_t> delta_digits() const { return image([](DigitPair p) { return p.x - p.y; }); }

  friend bool operator==(const DigitPattern&, const DigitPattern&) = default;
};

/// {(x,y) in {0,1,3}^2 : x != y}.
inline DigitPattern example_one_pattern() {
  std::vector<DigitPair> pairs;
  for (std::int64_t x : {0, 1, 3})
    for (std::int64_t y : {0, 1, 3})
      if (x != y) pairs.push_back({x, y});
  return DigitPattern::make(std::move(pairs), false);
}

inline DigitPattern example_two_pattern() {
  return DigitPattern::make({{4, 0}, {2, 1}, {3, 1}, {4, 1}, {0, 2}, {2, 2}, {0, 3}, {2, 3}}, true);
}

struct PatternStats {
  std::size_t pairs = 0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::size_t size_c = 0;
  std::size_t size_d = 0;
  std::size_t size_delta = 0;
  bool difference_injective = false;
  std::size_t slice_max = 0;  // max(#A1, #B1, #C1) and #D1 when constrain_d
  std::int64_t min_base = 2;
  std::optional<double> exponent;        // ln #pairs / ln slice_max; injective patterns only
  std::optional<double> delta_exponent;  // ln #Delta1 / ln slice_max
};

inline PatternStats pattern_stats(const DigitPattern& p) {
  if (p.pairs.empty()) throw Error(ErrorKind::InvalidArgument, "digit pattern must be nonempty");
  PatternStats s;
  const auto delta = p.delta_digits();
  s.pairs = p.pairs.size();
  s.size_a = p.a_digits().size();
  s.size_b = p.b_digits().size();
  s.size_c = p.c_digits().size();
  s.size_d = p.d_digits().size();
  s.size_delta = delta.size();
  s.difference_injective = s.size_delta == s.pairs;
  s.slice_max = std::max({s.size_a, s.size_b, s.size_c});
  if (p.constrain_d) s.slice_max = std::max(s.slice_max, s.size_d);

  std::int64_t widest = delta.back() - delta.front();
  widest = std::max(widest, p.c_digits().back());
  if (p.constrain_d) widest = std::max(widest, p.d_digits().back());
  s.min_base = std::max<std::int64_t>(2, widest + 1);

  if (s.slice_max >= 2) {
    const double den = std::log(static_cast<double>(s.slice_max));
    s.delta_exponent = std::log(static_cast<double>(s.size_delta)) / den;
    if (s.difference_injective) s.exponent = s.delta_exponent;
  }
  return s;
}

/// Slice sizes of the n-fold tensoring, from the per-digit sizes alone.
struct TensorSizes {
  BigInt A, B, C, D, G, differences;
};

inline TensorSizes tensor_sizes(const DigitPattern& p, std::size_t n) {
  const auto s = pattern_stats(p);
  const BigInt diffs = s.difference_injective ? ipow(BigInt(s.pairs), n) : BigInt(-1);  // unknown otherwise
  return {ipow(BigInt(s.size_a), n), ipow(BigInt(s.size_b), n), ipow(BigInt(s.size_c), n),
          ipow(BigInt(s.size_d), n), ipow(BigInt(s.pairs), n), diffs};
}

inline constexpr std::uint64_t kDefaultConstructionCap = 1'000'000;

/// Materializes the n-digit instance over Z in base M (min_base when unset).
inline Instance tensor_pattern(const DigitPattern& p, std::size_t n, std::optional<std::int64_t> base = std::nullopt,
                               std::uint64_t cap = kDefaultConstructionCap) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "digit count n must be >= 1");
  const auto stats = pattern_stats(p);
  const std::int64_t m = base.value_or(stats.min_base);
  if (m < stats.min_base)
    throw Error(ErrorKind::InvalidBase,
                "base " + std::to_string(m) + " below admissible minimum " + std::to_string(stats.min_base));
  if (ipow(BigInt(p.pairs.size()), n) > BigInt(cap))
    throw Error(ErrorKind::InstanceTooLarge, "#pairs^n exceeds construction cap " + std::to_string(cap));
  // largest element built is below 3 M^n (from a + 2b); keep everything in 64 bits
  if (BigInt(3) * ipow(BigInt(m), n) >= BigInt(INT64_MAX))
    throw Error(ErrorKind::InstanceTooLarge, "base^n does not fit in 64 bits");

  std::vector<Pair> g;
  std::vector<std::size_t> odometer(n, 0);
  DigitVector da{m, std::vector<std::int64_t>(n)}, db{m, std::vector<std::int64_t>(n)};
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      da.digits[i] = p.pairs[odometer[i]].x;
      db.digits[i] = p.pairs[odometer[i]].y;
    }
    g.push_back({digits_to_elem(da), digits_to_elem(db)});
    std::size_t i = 0;
    while (i < n && ++odometer[i] == p.pairs.size()) odometer[i++] = 0;
    if (i == n) break;
  }
  std::vector<Elem> a, b;
  for (const auto& pr : g) {
    a.push_back(pr.a);
    b.push_back(pr.b);
  }
  return Instance::make(AmbientGroup::integers(), std::move(a), std::move(b), std::move(g));
}

inline Instance build_example_one(std::size_t n, std::int64_t base, std::uint64_t cap = kDefaultConstructionCap) {
  if (base < 7) throw Error(ErrorKind::InvalidBase, "first construction needs M >= 7");
  return tensor_pattern(example_one_pattern(), n, base, cap);
}

inline Instance build_example_two(std::size_t n, std::int64_t base, std::uint64_t cap = kDefaultConstructionCap) {
  if (base < 9) throw Error(ErrorKind::InvalidBase, "second construction needs M > 8");
  return tensor_pattern(example_two_pattern(), n, base, cap);
}

}  // namespace arithproj
