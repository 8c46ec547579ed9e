#pragma once

// Executable forms of the two injective-map arguments: the triple set V,
// the chain sets S (three slices) and T (four slices), the maps g and h
// with explicit inverses, and the exact inequality chains bounding #G by
// N^(11/6) and N^(7/4).

#include "arithproj/chain.hpp"
#include "arithproj/error.hpp"
#include "arithproj/exact.hpp"
#include "arithproj/instance.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arithproj {

/// (a, b, b') with (a, b) and (a, b') both in G.
struct Triple {
  Elem a;
  Elem b;
  Elem b_prime;

  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

inline constexpr std::uint64_t kDefaultVCap = 10'000'000;

/// #V = sum over a of deg(a)^2, without materializing V.
inline BigInt v_size_from_degrees(const Instance& inst) {
  std::map<Elem, std::uint64_t> degree;
  for (const auto& p : inst.G()) ++degree[p.a];
  BigInt total = 0;
  for (const auto& [a, d] : degree) total += BigInt(d) * d;
  return total;
}

inline std::vector<Triple> build_V(const Instance& inst, std::uint64_t cap = kDefaultVCap) {
  if (v_size_from_degrees(inst) > BigInt(cap))
    throw Error(ErrorKind::EnumerationCapExceeded, "#V exceeds cap " + std::to_string(cap));
  std::vector<Triple> v;
  const auto& g = inst.G();
  // G is sorted by a, so each a owns a contiguous run.
  for (std::size_t lo = 0; lo < g.size();) {
    std::size_t hi = lo;
    while (hi < g.size() && g[hi].a == g[lo].a) ++hi;
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = lo; j < hi; ++j) v.push_back({g[lo].a, g[i].b, g[j].b});
    lo = hi;
  }
  return v;
}

namespace detail {

inline std::uint64_t pair_label(const std::vector<Elem>& first, Elem x, const std::vector<Elem>& second, Elem y) {
  const auto i = index_in(first, x);
  const auto j = index_in(second, y);
  if (!i || !j) throw Error(ErrorKind::InvalidArgument, "label outside its slice");
  return *i * second.size() + *j;
}

}  // namespace detail

/// X = G with the single labeling (a, b) -> a into A.
inline ChainProblem v_problem(const Instance& inst) {
  ChainProblem p{inst.G().size(), {}};
  Labeling f{inst.A().size(), {}};
  for (const auto& pr : inst.G()) f.labels.push_back(*index_in(inst.A(), pr.a));
  p.labelings.push_back(std::move(f));
  return p;
}

/// X = V with f1 = (a+b, a+b') in CxC, f2 = (b, b') in BxB, f3 = (a+b, b') in CxB.
inline ChainProblem s_problem(const Instance& inst, const std::vector<Triple>& v) {
  const auto& g = inst.group();
  const auto c = project(inst, LinearForm::sum());
  const auto& b = inst.B();
  Labeling f1{c.size() * c.size(), {}}, f2{b.size() * b.size(), {}}, f3{c.size() * b.size(), {}};
  for (const auto& t : v) {
    const Elem s = g.add(t.a, t.b);
    f1.labels.push_back(detail::pair_label(c, s, c, g.add(t.a, t.b_prime)));
    f2.labels.push_back(detail::pair_label(b, t.b, b, t.b_prime));
    f3.labels.push_back(detail::pair_label(c, s, b, t.b_prime));
  }
  return ChainProblem{v.size(), {std::move(f1), std::move(f2), std::move(f3)}};
}

/// X = V with f4 = (a+2b, b') in DxB.
inline ChainProblem t_problem(const Instance& inst, const std::vector<Triple>& v) {
  const auto& g = inst.group();
  const auto d = project(inst, LinearForm::sum_double());
  const auto& b = inst.B();
  Labeling f4{d.size() * b.size(), {}};
  for (const auto& t : v) f4.labels.push_back(detail::pair_label(d, g.add(t.a, g.scale(2, t.b)), b, t.b_prime));
  return ChainProblem{v.size(), {std::move(f4)}};
}

inline BigInt count_S(const Instance& inst, std::uint64_t cap = kDefaultVCap) {
  return chain_count_dp(s_problem(inst, build_V(inst, cap)));
}

inline BigInt count_T(const Instance& inst, std::uint64_t cap = kDefaultVCap) {
  return chain_count_dp(t_problem(inst, build_V(inst, cap)));
}

using SChain = std::array<Triple, 4>;
using TChain = std::array<Triple, 2>;

struct GImage {
  Triple v0;
  Elem a2;
  Elem b3;

  friend constexpr auto operator<=>(const GImage&, const GImage&) = default;
};

struct HImage {
  Elem c1;
  Elem c2;
  Elem b1;

  friend constexpr auto operator<=>(const HImage&, const HImage&) = default;
};

inline GImage map_g(const SChain& s) { return {s[0], s[2].a, s[3].b}; }

inline HImage map_h(const AmbientGroup& g, const TChain& t) {
  return {g.add(t[0].a, t[0].b), g.add(t[0].a, t[0].b_prime), t[1].b};
}

/// Read-only lookup from a difference a-b to its unique pair in G. Only
/// constructible for difference-injective instances.
class DifferenceIndex {
 public:
  explicit DifferenceIndex(const Instance& inst) : inst_(&inst) {
    for (const auto& p : inst.G()) {
      if (!by_difference_.try_emplace(inst.group().sub(p.a, p.b), p).second)
        throw Error(ErrorKind::NotDifferenceInjective,
                    "difference " + std::to_string(inst.group().sub(p.a, p.b).value) + " is repeated");
    }
  }

  std::optional<Pair> lookup(Elem delta) const {
    auto it = by_difference_.find(delta);
    if (it == by_difference_.end()) return std::nullopt;
    return it->second;
  }

  bool in_G(Elem a, Elem b) const { return contains(inst_->G(), Pair{a, b}); }
  bool in_V(const Triple& t) const { return in_G(t.a, t.b) && in_G(t.a, t.b_prime); }
  const Instance& instance() const noexcept { return *inst_; }
  const AmbientGroup& group() const noexcept { return inst_->group(); }

 private:
  const Instance* inst_;
  std::map<Elem, Pair> by_difference_;
};

/// Inverts g: recovers (v0, v1, v2, v3) from (v0, a2, b3), or nullopt when
/// the triple is not in the image of g.
inline std::optional<SChain> reconstruct_from_g(const DifferenceIndex& idx, const Triple& v0, Elem a2, Elem b3) {
  const auto& g = idx.group();
  // a3 - b3' = a2 - b3 + b0 - b0'
  const Elem delta = g.add(g.sub(a2, b3), g.sub(v0.b, v0.b_prime));
  const auto p3 = idx.lookup(delta);
  if (!p3) return std::nullopt;
  const Triple v3{p3->a, b3, p3->b};
  // a2 + b2 = a3 + b3, b2' = b3'
  const Triple v2{a2, g.sub(g.add(v3.a, b3), a2), v3.b_prime};
  // (b1, b1') = (b2, b2'), a1 + b1 = a0 + b0
  const Elem a1 = g.sub(g.add(v0.a, v0.b), v2.b);
  const Triple v1{a1, v2.b, v2.b_prime};
  if (g.add(v0.a, v0.b_prime) != g.add(v1.a, v1.b_prime)) return std::nullopt;
  if (!idx.in_V(v0) || !idx.in_V(v1) || !idx.in_V(v2) || !idx.in_V(v3)) return std::nullopt;
  return SChain{v0, v1, v2, v3};
}

/// Inverts h: recovers (v0, v1) from (a0+b0, a0+b0', b1), or nullopt.
inline std::optional<TChain> reconstruct_from_h(const DifferenceIndex& idx, Elem c1, Elem c2, Elem b1) {
  const auto& g = idx.group();
  // a1 - b1' = 2 c1 - 2 b1 - c2
  const Elem delta = g.sub(g.sub(g.scale(2, c1), g.scale(2, b1)), c2);
  const auto p1 = idx.lookup(delta);
  if (!p1) return std::nullopt;
  const Triple v1{p1->a, b1, p1->b};
  // a0 + 2 b0 = a1 + 2 b1 together with a0 + b0 = c1; b0' = b1'
  const Elem a0 = g.sub(g.scale(2, c1), g.add(v1.a, g.scale(2, b1)));
  const Triple v0{a0, g.sub(c1, a0), v1.b_prime};
  if (g.add(v0.a, v0.b_prime) != c2) return std::nullopt;
  if (!idx.in_V(v0) || !idx.in_V(v1)) return std::nullopt;
  return TChain{v0, v1};
}

struct InequalityRecord {
  std::string name;
  std::string relation;  // human-readable form, e.g. "#S <= N^2 #V"
  Rational lhs;
  Rational rhs;
  bool holds = false;

  Rational slack() const { return rhs - lhs; }
};

inline InequalityRecord make_record(std::string name, std::string relation, Rational lhs, Rational rhs) {
  const bool holds = lhs <= rhs;
  return {std::move(name), std::move(relation), std::move(lhs), std::move(rhs), holds};
}

struct ChainReport {
  std::string chain;  // "6" or "4"
  std::int64_t N = 0;
  std::map<std::string, BigInt> cardinalities;
  std::vector<InequalityRecord> inequalities;

  bool all_hold() const {
    for (const auto& r : inequalities)
      if (!r.holds) return false;
    return true;
  }
};

namespace detail {

inline Instance reduced_checked(const Instance& inst, std::int64_t n, bool with_d) {
  Instance reduced = reduce_to_difference_injective(inst);
  const auto hyp = check_hypotheses(reduced, n, with_d);
  if (!hyp.all()) {
    std::string failed;
    for (const auto& [name, ok] : hyp.satisfied)
      if (!ok) failed += (failed.empty() ? "" : ", ") + name;
    throw Error(ErrorKind::HypothesisViolated, failed + " fails at N=" + std::to_string(n));
  }
  return reduced;
}

// An empty G leaves C and D empty, and V with them.
inline Rational ratio_or_zero(const BigInt& num, const BigInt& den) {
  return den == 0 ? Rational(0) : Rational(num, den);
}

}  // namespace detail

/// #G <= N^(11/6) through #V >= #G^2/N, #S >= #V^4/N^6, #S <= N^2 #V.
inline ChainReport verify_chain_6(const Instance& inst, std::int64_t n, std::uint64_t cap = kDefaultVCap) {
  const Instance red = detail::reduced_checked(inst, n, false);
  const auto v = build_V(red, cap);
  const BigInt nG = red.G().size();
  const BigInt nV = v.size();
  const BigInt nS = chain_count_dp(s_problem(red, v));
  const BigInt nB = red.B().size();
  const BigInt nC = project(red, LinearForm::sum()).size();
  const BigInt N = n;

  ChainReport r;
  r.chain = "6";
  r.N = n;
  r.cardinalities = {{"A", BigInt(red.A().size())}, {"B", nB}, {"C", nC}, {"G", nG}, {"V", nV}, {"S", nS}};
  r.inequalities.push_back(make_record("V_lower", "#G^2/N <= #V", Rational(nG * nG, N), Rational(nV)));
  r.inequalities.push_back(make_record("S_lower", "#V^4/N^6 <= #S", Rational(ipow(nV, 4), ipow(N, 6)), Rational(nS)));
  r.inequalities.push_back(
      make_record("S_lower_actual", "#V^4/(#C^3 #B^3) <= #S", detail::ratio_or_zero(ipow(nV, 4), ipow(nC * nB, 3)),
                  Rational(nS)));
  r.inequalities.push_back(make_record("S_upper", "#S <= N^2 #V", Rational(nS), Rational(N * N * nV)));
  r.inequalities.push_back(make_record("V_upper", "#V^3 <= N^8", Rational(ipow(nV, 3)), Rational(ipow(N, 8))));
  r.inequalities.push_back(make_record("G_upper", "#G^6 <= N^11", Rational(ipow(nG, 6)), Rational(ipow(N, 11))));
  return r;
}

/// #G <= N^(7/4) through #V >= #G^2/N, #T >= #V^2/N^2, #T <= N^3.
inline ChainReport verify_chain_4(const Instance& inst, std::int64_t n, std::uint64_t cap = kDefaultVCap) {
  const Instance red = detail::reduced_checked(inst, n, true);
  const auto v = build_V(red, cap);
  const BigInt nG = red.G().size();
  const BigInt nV = v.size();
  const BigInt nT = chain_count_dp(t_problem(red, v));
  const BigInt nB = red.B().size();
  const BigInt nC = project(red, LinearForm::sum()).size();
  const BigInt nD = project(red, LinearForm::sum_double()).size();
  const BigInt N = n;

  ChainReport r;
  r.chain = "4";
  r.N = n;
  r.cardinalities = {{"A", BigInt(red.A().size())}, {"B", nB}, {"C", nC}, {"D", nD},
                     {"G", nG}, {"V", nV}, {"T", nT}};
  r.inequalities.push_back(make_record("V_lower", "#G^2/N <= #V", Rational(nG * nG, N), Rational(nV)));
  r.inequalities.push_back(make_record("T_lower", "#V^2/N^2 <= #T", Rational(nV * nV, N * N), Rational(nT)));
  r.inequalities.push_back(
      make_record("T_lower_actual", "#V^2/(#D #B) <= #T", detail::ratio_or_zero(nV * nV, nD * nB), Rational(nT)));
  r.inequalities.push_back(make_record("T_upper", "#T <= N^3", Rational(nT), Rational(ipow(N, 3))));
  r.inequalities.push_back(make_record("V_upper", "#V^2 <= N^5", Rational(nV * nV), Rational(ipow(N, 5))));
  r.inequalities.push_back(make_record("G_upper", "#G^4 <= N^7", Rational(ipow(nG, 4)), Rational(ipow(N, 7))));
  return r;
}

}  // namespace arithproj
