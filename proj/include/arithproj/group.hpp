#pragma once

#include "arithproj/error.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace arithproj {

/// An element of an ambient group. For Z/m the value is the canonical
/// representative in [0, m); for Z it is the integer itself.
struct Elem {
  std::int64_t value = 0;

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

/// The integers, or the integers modulo m (m >= 2).
class AmbientGroup {
 public:
  enum class Kind { Integers, IntegersMod };

  static AmbientGroup integers() { return AmbientGroup(Kind::Integers, 0); }

  static AmbientGroup integers_mod(std::int64_t m) {
    if (m < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 2, got " + std::to_string(m));
    return AmbientGroup(Kind::IntegersMod, m);
  }

  Kind kind() const noexcept { return kind_; }
  bool is_integers() const noexcept { return kind_ == Kind::Integers; }
  std::int64_t modulus() const noexcept { return modulus_; }

  /// Maps an arbitrary integer to its canonical representative.
  Elem canonical(std::int64_t v) const noexcept {
    if (is_integers()) return Elem{v};
    std::int64_t r = v % modulus_;
    if (r < 0) r += modulus_;
    return Elem{r};
  }

  bool is_canonical(Elem x) const noexcept {
    return is_integers() || (x.value >= 0 && x.value < modulus_);
  }

  Elem add(Elem x, Elem y) const {
    if (is_integers()) {
      std::int64_t out = 0;
      if (__builtin_add_overflow(x.value, y.value, &out))
        throw Error(ErrorKind::InstanceTooLarge, "integer addition overflow");
      return Elem{out};
    }
    const __int128 s = static_cast<__int128>(x.value) + y.value;
    return Elem{static_cast<std::int64_t>(s % modulus_)};
  }

  Elem negate(Elem x) const {
    if (is_integers()) {
      if (x.value == INT64_MIN) throw Error(ErrorKind::InstanceTooLarge, "integer negation overflow");
      return Elem{-x.value};
    }
    return Elem{x.value == 0 ? 0 : modulus_ - x.value};
  }

  Elem sub(Elem x, Elem y) const { return add(x, negate(y)); }

  /// k * x with repeated-addition semantics (negative k negates).
  Elem scale(std::int64_t k, Elem x) const {
    if (is_integers()) {
      std::int64_t out = 0;
      if (__builtin_mul_overflow(k, x.value, &out))
        throw Error(ErrorKind::InstanceTooLarge, "integer scaling overflow");
      return Elem{out};
    }
    __int128 p = static_cast<__int128>(k % modulus_) * x.value % modulus_;
    if (p < 0) p += modulus_;
    return Elem{static_cast<std::int64_t>(p)};
  }

  friend bool operator==(const AmbientGroup&, const AmbientGroup&) = default;

  std::string name() const {
    return is_integers() ? std::string("Z") : "Z/" + std::to_string(modulus_);
  }

 private:
  AmbientGroup(Kind kind, std::int64_t m) : kind_(kind), modulus_(m) {}

  Kind kind_;
  std::int64_t modulus_;
};

inline Elem add(const AmbientGroup& g, Elem x, Elem y) { return g.add(x, y); }
inline Elem scale(const AmbientGroup& g, std::int64_t k, Elem x) { return g.scale(k, x); }

/// Base-M digits d_0..d_{n-1}, least significant first. Digits may be
/// negative when the vector encodes a difference.
struct DigitVector {
  std::int64_t base = 2;
  std::vector<std::int64_t> digits;

  bool is_set_element() const noexcept {
    for (auto d : digits)
      if (d < 0 || d >= base) return false;
    return true;
  }

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

inline Elem digits_to_elem(const DigitVector& v) {
  if (v.base < 2) throw Error(ErrorKind::InvalidBase, "base must be >= 2");
  if (v.digits.empty()) throw Error(ErrorKind::InvalidArgument, "digit vector must be nonempty");
  std::int64_t acc = 0;
  for (auto it = v.digits.rbegin(); it != v.digits.rend(); ++it) {
    if (__builtin_mul_overflow(acc, v.base, &acc) || __builtin_add_overflow(acc, *it, &acc))
      throw Error(ErrorKind::InstanceTooLarge, "digit vector does not fit in 64 bits");
  }
  return Elem{acc};
}

inline DigitVector elem_to_digits(Elem x, std::int64_t base, std::size_t n) {
  if (base < 2) throw Error(ErrorKind::InvalidBase, "base must be >= 2");
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "digit count must be >= 1");
  if (x.value < 0) throw Error(ErrorKind::OutOfRange, "negative element has no digit expansion");
  DigitVector out{base, std::vector<std::int64_t>(n, 0)};
  std::int64_t rest = x.value;
  for (std::size_t i = 0; i < n; ++i) {
    out.digits[i] = rest % base;
    rest /= base;
  }
  if (rest != 0)
    throw Error(ErrorKind::OutOfRange, std::to_string(x.value) + " >= base^" + std::to_string(n));
  return out;
}

}  // namespace arithproj
