#pragma once

#include "arithproj/error.hpp"
#include "arithproj/group.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arithproj {

/// The integer linear form (a, b) -> alpha*a + beta*b.
struct LinearForm {
  std::int64_t alpha = 1;
  std::int64_t beta = 1;

  static constexpr LinearForm sum() { return {1, 1}; }
  static constexpr LinearForm difference() { return {1, -1}; }
  static constexpr LinearForm sum_double() { return {1, 2}; }

  friend constexpr bool operator==(const LinearForm&, const LinearForm&) = default;
};

inline void validate(const LinearForm& f) {
  if (f.alpha == 0 && f.beta == 0) throw Error(ErrorKind::InvalidArgument, "linear form (0, 0)");
}

struct Pair {
  Elem a;
  Elem b;

  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

inline Elem apply(const AmbientGroup& g, const LinearForm& f, Pair p) {
  return g.add(g.scale(f.alpha, p.a), g.scale(f.beta, p.b));
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Position of x in a sorted vector, if present.
template <typename T>
std::optional<std::size_t> index_in(const std::vector<T>& sorted, const T& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

template <typename T>
bool contains(const std::vector<T>& sorted, const T& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

/// (group, A, B, G) with G a subset of A x B. All three sets are kept
/// sorted and duplicate-free; the object is immutable once built.
class Instance {
 public:
  static Instance make(AmbientGroup group, std::vector<Elem> a, std::vector<Elem> b, std::vector<Pair> g) {
    auto canon = [&](Elem& x) {
      if (!group.is_canonical(x))
        throw Error(ErrorKind::MalformedInstance, "element " + std::to_string(x.value) + " not canonical in " + group.name());
    };
    for (auto& x : a) canon(x);
    for (auto& x : b) canon(x);
    for (auto& p : g) {
      canon(p.a);
      canon(p.b);
    }
    sort_unique(a);
    sort_unique(b);
    sort_unique(g);
    if (a.empty() || b.empty()) throw Error(ErrorKind::MalformedInstance, "A and B must be nonempty");
    for (const auto& p : g) {
      if (!contains(a, p.a) || !contains(b, p.b))
        throw Error(ErrorKind::MalformedInstance,
                    "pair (" + std::to_string(p.a.value) + "," + std::to_string(p.b.value) + ") not in A x B");
    }
    return Instance(group, std::move(a), std::move(b), std::move(g));
  }

  const AmbientGroup& group() const noexcept { return group_; }
  const std::vector<Elem>& A() const noexcept { return a_; }
  const std::vector<Elem>& B() const noexcept { return b_; }
  const std::vector<Pair>& G() const noexcept { return g_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance(AmbientGroup group, std::vector<Elem> a, std::vector<Elem> b, std::vector<Pair> g)
      : group_(group), a_(std::move(a)), b_(std::move(b)), g_(std::move(g)) {}

  AmbientGroup group_;
  std::vector<Elem> a_;
  std::vector<Elem> b_;
  std::vector<Pair> g_;
};

/// { alpha*a + beta*b : (a,b) in G }, sorted.
inline std::vector<Elem> project(const Instance& inst, const LinearForm& f) {
  validate(f);
  std::vector<Elem> out;
  out.reserve(inst.G().size());
  for (const auto& p : inst.G()) out.push_back(apply(inst.group(), f, p));
  sort_unique(out);
  return out;
}

struct HypothesisReport {
  std::int64_t N = 0;
  std::map<std::string, std::size_t> sizes;  // A, B, C and optionally D
  std::map<std::string, bool> satisfied;     // ab-card, c-card, d-card

  bool all() const {
    return std::all_of(satisfied.begin(), satisfied.end(), [](const auto& kv) { return kv.second; });
  }
};

inline HypothesisReport check_hypotheses(const Instance& inst, std::int64_t n, bool with_d) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "N must be >= 1");
  HypothesisReport r;
  r.N = n;
  const auto budget = static_cast<std::size_t>(n);
  r.sizes["A"] = inst.A().size();
  r.sizes["B"] = inst.B().size();
  r.sizes["C"] = project(inst, LinearForm::sum()).size();
  r.satisfied["ab-card"] = r.sizes["A"] <= budget && r.sizes["B"] <= budget;
  r.satisfied["c-card"] = r.sizes["C"] <= budget;
  if (with_d) {
    r.sizes["D"] = project(inst, LinearForm::sum_double()).size();
    r.satisfied["d-card"] = r.sizes["D"] <= budget;
  }
  return r;
}

/// max(#A, #B, #C), and #D when with_d: the smallest N meeting the hypotheses.
/// Used for N=auto.
inline std::int64_t natural_budget(const Instance& inst, bool with_d) {
  std::size_t n = std::max({inst.A().size(), inst.B().size(), project(inst, LinearForm::sum()).size()});
  if (with_d) n = std::max(n, project(inst, LinearForm::sum_double()).size());
  return static_cast<std::int64_t>(std::max<std::size_t>(n, 1));
}

inline bool is_difference_injective(const Instance& inst) {
  return project(inst, LinearForm::difference()).size() == inst.G().size();
}

/// Keeps, for every realized difference a-b, the lexicographically smallest
/// pair with that difference. A and B are left as they are.
inline Instance reduce_to_difference_injective(const Instance& inst) {
  const auto& g = inst.group();
  std::map<Elem, Pair> keep;
  for (const auto& p : inst.G()) {  // G is sorted, so the first hit is the smallest
    keep.try_emplace(g.sub(p.a, p.b), p);
  }
  std::vector<Pair> reduced;
  reduced.reserve(keep.size());
  for (const auto& [d, p] : keep) reduced.push_back(p);
  return Instance::make(g, inst.A(), inst.B(), std::move(reduced));
}

}  // namespace arithproj
