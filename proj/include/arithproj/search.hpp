#pragma once

// Search over single-digit patterns P in {0..K}^2 for the largest extremal
// exponent ln #Delta(P) / ln max(#A1, #B1, #C1[, #D1]). Exhaustive DFS for
// small alphabets, branch-and-bound with a monotone upper bound otherwise.
// Patterns are deduplicated up to translation and joint reflection.

#include "arithproj/constructions.hpp"
#include "arithproj/error.hpp"
#include "arithproj/instance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace arithproj {

/// Translate the pattern so that min x = min y = 0.
inline DigitPattern translate_to_origin(const DigitPattern& p) {
  std::int64_t mx = p.pairs.front().x, my = p.pairs.front().y;
  for (const auto& q : p.pairs) {
    mx = std::min(mx, q.x);
    my = std::min(my, q.y);
  }
  std::vector<DigitPair> out;
  out.reserve(p.pairs.size());
  for (const auto& q : p.pairs) out.push_back({q.x - mx, q.y - my});
  return DigitPattern::make(std::move(out), p.constrain_d);
}

/// Lexicographically least pattern in the orbit under translations of
/// either coordinate and the joint reflection (x, y) -> (K-x, K-y).
inline DigitPattern canonicalize(const DigitPattern& p, std::int64_t k) {
  for (const auto& q : p.pairs)
    if (q.x > k || q.y > k) throw Error(ErrorKind::InvalidArgument, "pattern digit exceeds alphabet bound K");
  std::vector<DigitPair> reflected;
  reflected.reserve(p.pairs.size());
  for (const auto& q : p.pairs) reflected.push_back({k - q.x, k - q.y});
  DigitPattern a = translate_to_origin(p);
  DigitPattern b = translate_to_origin(DigitPattern::make(std::move(reflected), p.constrain_d));
  return b.pairs < a.pairs ? b : a;
}

/// An exponent ln(num)/ln(den) kept as its integer data.
struct Score {
  std::uint64_t num = 0;
  std::uint64_t den = 0;

  bool defined() const noexcept { return den >= 2 && num >= 1; }
  double value() const { return defined() ? std::log(double(num)) / std::log(double(den)) : 0.0; }
};

namespace detail {

inline std::map<std::uint64_t, int> factorize(std::uint64_t x) {
  std::map<std::uint64_t, int> f;
  for (std::uint64_t p = 2; p * p <= x; ++p)
    while (x % p == 0) {
      ++f[p];
      x /= p;
    }
  if (x > 1) ++f[x];
  return f;
}

// ln(u) ln(v) expanded over prime logs as a symmetric polynomial.
inline std::map<std::pair<std::uint64_t, std::uint64_t>, long> log_product(std::uint64_t u, std::uint64_t v) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, long> poly;
  for (const auto& [p, e] : factorize(u))
    for (const auto& [q, f] : factorize(v)) poly[{std::min(p, q), std::max(p, q)}] += long(e) * f;
  return poly;
}

}  // namespace detail

/// Orders two scores. Equality is certified by the identity
/// ln a * ln d = ln c * ln b over prime logarithms; otherwise the
/// floating-point order is used, and a near-tie without such a certificate
/// throws instead of guessing.
inline std::strong_ordering compare_scores(const Score& s, const Score& t) {
  if (!s.defined() || !t.defined()) return s.defined() <=> t.defined();
  if (s.den == t.den) return s.num <=> t.num;
  if (s.num == t.num) return s.num == 1 ? std::strong_ordering::equal : t.den <=> s.den;
  if (detail::log_product(s.num, t.den) == detail::log_product(t.num, s.den)) return std::strong_ordering::equal;
  const long double lhs = std::log((long double)s.num) * std::log((long double)t.den);
  const long double rhs = std::log((long double)t.num) * std::log((long double)s.den);
  if (std::fabs(lhs - rhs) < 1e-12L) throw std::logic_error("exponent comparison undecided at working precision");
  return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
}

struct SearchSpec {
  enum class Mode { Exhaustive, BranchBound };

  std::int64_t K = 3;
  bool constrain_d = false;
  Mode mode = Mode::BranchBound;
  std::uint64_t node_limit = 1'000'000'000;
  double time_limit_seconds = 600.0;
  bool require_difference_injective = true;
  std::size_t witness_cap = 64;
  unsigned workers = 1;
};

inline void validate(const SearchSpec& spec) {
  if (spec.K < 0) throw Error(ErrorKind::InvalidArgument, "K must be >= 0");
  if (spec.K > 15) throw Error(ErrorKind::InvalidArgument, "K above 15 is not supported");
  if (spec.node_limit == 0 || !(spec.time_limit_seconds > 0))
    throw Error(ErrorKind::InvalidArgument, "search budgets must be positive");
  if (spec.mode == SearchSpec::Mode::Exhaustive && (spec.K + 1) * (spec.K + 1) > 25)
    throw Error(ErrorKind::InvalidArgument, "exhaustive mode requires (K+1)^2 <= 25");
}

struct SearchResult {
  double best_exponent = 0.0;
  Score best;  // undefined when no pattern has a defined exponent
  std::vector<DigitPattern> witnesses;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
};

/// Scoring numerator: #pairs for difference-injective patterns, #Delta1 otherwise.
inline Score score_pattern(const DigitPattern& p) {
  const auto s = pattern_stats(p);
  return {s.size_delta, s.slice_max};
}

namespace detail {

class PatternSearch {
 public:
  explicit PatternSearch(const SearchSpec& spec) : spec_(spec), k_(spec.K) {
    // Decision groups: one per diagonal x - y = d (choose at most one pair)
    // when difference-injectivity is required, else one per pair.
    if (spec.require_difference_injective) {
      for (std::int64_t d = -k_; d <= k_; ++d) {
        std::vector<DigitPair> g;
        for (std::int64_t x = 0; x <= k_; ++x)
          if (x - d >= 0 && x - d <= k_) g.push_back({x, x - d});
        groups_.push_back(std::move(g));
      }
    } else {
      for (std::int64_t x = 0; x <= k_; ++x)
        for (std::int64_t y = 0; y <= k_; ++y) groups_.push_back({{x, y}});
    }
    // distinct differences still reachable from group i onward
    suffix_diffs_.assign(groups_.size() + 1, {});
    for (std::size_t i = groups_.size(); i-- > 0;) {
      suffix_diffs_[i] = suffix_diffs_[i + 1];
      for (const auto& q : groups_[i]) suffix_diffs_[i].insert(q.x - q.y);
    }
  }

  SearchResult run() {
    validate(spec_);
    start_ = std::chrono::steady_clock::now();
    // Partition the tree on the options of the first two groups.
    std::vector<std::vector<int>> prefixes;
    const std::size_t split = std::min<std::size_t>(2, groups_.size());
    std::vector<int> cur;
    std::function<void(std::size_t)> gen = [&](std::size_t i) {
      if (i == split) {
        prefixes.push_back(cur);
        return;
      }
      for (int o = -1; o < int(groups_[i].size()); ++o) {
        cur.push_back(o);
        gen(i + 1);
        cur.pop_back();
      }
    };
    gen(0);

    const unsigned workers = std::max(1u, spec_.workers);
    std::vector<Worker> states(workers, Worker(*this));
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned w) {
      for (std::size_t t = next++; t < prefixes.size(); t = next++) states[w].run_prefix(prefixes[t], split);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    SearchResult r;
    for (const auto& s : states) {
      r.nodes += s.nodes;
      if (compare_scores(s.best, r.best) > 0) r.best = s.best;
    }
    std::set<std::vector<DigitPair>> merged;
    for (const auto& s : states)
      if (r.best.defined() && compare_scores(s.best, r.best) == 0) merged.insert(s.ties.begin(), s.ties.end());
    std::vector<std::vector<DigitPair>> ordered(merged.begin(), merged.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (auto& pairs : ordered) {
      if (r.witnesses.size() >= spec_.witness_cap) break;
      r.witnesses.push_back(DigitPattern{std::move(pairs), spec_.constrain_d});
    }
    r.best_exponent = r.best.value();
    r.exhaustive = !budget_hit_.load();
    return r;
  }

 private:
  struct Worker {
    explicit Worker(PatternSearch& s)
        : search(&s),
          count_a(s.k_ + 1, 0),
          count_b(s.k_ + 1, 0),
          count_c(2 * s.k_ + 1, 0),
          count_d(3 * s.k_ + 1, 0),
          count_delta(2 * s.k_ + 1, 0) {}

    PatternSearch* search;
    std::vector<DigitPair> chosen;
    std::vector<int> count_a, count_b, count_c, count_d, count_delta;
    std::size_t distinct_a = 0, distinct_b = 0, distinct_c = 0, distinct_d = 0, distinct_delta = 0;
    std::uint64_t nodes = 0;
    Score best;
    std::set<std::vector<DigitPair>> ties;

    static void bump(std::vector<int>& c, std::size_t i, std::size_t& distinct, int by) {
      if (by > 0 && c[i]++ == 0) ++distinct;
      if (by < 0 && --c[i] == 0) --distinct;
    }

    void push(DigitPair q, int by) {
      const auto k = search->k_;
      bump(count_a, q.x, distinct_a, by);
      bump(count_b, q.y, distinct_b, by);
      bump(count_c, q.x + q.y, distinct_c, by);
      bump(count_d, q.x + 2 * q.y, distinct_d, by);
      bump(count_delta, q.x - q.y + k, distinct_delta, by);
    }

    std::size_t slice_max() const {
      std::size_t s = std::max({distinct_a, distinct_b, distinct_c});
      return search->spec_.constrain_d ? std::max(s, distinct_d) : s;
    }

    // Largest exponent any completion of the current node can reach.
    double upper_bound(std::size_t depth) const {
      std::size_t reachable = distinct_delta;
      for (auto d : search->suffix_diffs_[depth])
        if (count_delta[d + search->k_] == 0) ++reachable;
      const std::size_t floor_slice = std::max<std::size_t>(slice_max(), 2);
      double ub = 0.0;
      for (std::size_t q = std::max<std::size_t>(distinct_delta, 1); q <= reachable; ++q) {
        const auto root = static_cast<std::size_t>(std::ceil(std::sqrt(double(q)) - 1e-9));
        const std::size_t s = std::max(floor_slice, root);
        ub = std::max(ub, std::log(double(q)) / std::log(double(s)));
      }
      return ub;
    }

    bool budget_exhausted() {
      auto& s = *search;
      if (s.budget_hit_.load(std::memory_order_relaxed)) return true;
      if (s.nodes_total_.fetch_add(1, std::memory_order_relaxed) + 1 > s.spec_.node_limit) {
        s.budget_hit_ = true;
        return true;
      }
      if ((nodes & 0xFFF) == 0) {
        const std::chrono::duration<double> el = std::chrono::steady_clock::now() - s.start_;
        if (el.count() > s.spec_.time_limit_seconds) {
          s.budget_hit_ = true;
          return true;
        }
      }
      return false;
    }

    void leaf() {
      if (chosen.empty()) return;
      bool at_origin_x = false, at_origin_y = false;
      for (const auto& q : chosen) {
        at_origin_x |= q.x == 0;
        at_origin_y |= q.y == 0;
      }
      if (!at_origin_x || !at_origin_y) return;  // a translate of another leaf
      const Score sc{distinct_delta, slice_max()};
      if (!sc.defined()) return;
      const auto cmp = compare_scores(sc, best);
      if (cmp < 0) return;
      if (cmp > 0) {
        best = sc;
        ties.clear();
        auto& shared = search->incumbent_;
        double seen = shared.load();
        while (sc.value() > seen && !shared.compare_exchange_weak(seen, sc.value())) {
        }
      }
      ties.insert(canonicalize(DigitPattern::make(chosen, search->spec_.constrain_d), search->k_).pairs);
    }

    void dfs(std::size_t depth) {
      if (budget_exhausted()) return;
      ++nodes;
      auto& s = *search;
      if (depth == s.groups_.size()) {
        leaf();
        return;
      }
      if (s.spec_.mode == SearchSpec::Mode::BranchBound && !chosen.empty() &&
          upper_bound(depth) < s.incumbent_.load(std::memory_order_relaxed) - 1e-12)
        return;
      dfs(depth + 1);  // take nothing from this group
      for (const auto& q : s.groups_[depth]) {
        chosen.push_back(q);
        push(q, +1);
        dfs(depth + 1);
        push(q, -1);
        chosen.pop_back();
      }
    }

    void run_prefix(const std::vector<int>& prefix, std::size_t split) {
      for (std::size_t i = 0; i < split; ++i)
        if (prefix[i] >= 0) {
          chosen.push_back(search->groups_[i][prefix[i]]);
          push(chosen.back(), +1);
        }
      dfs(split);
      while (!chosen.empty()) {
        push(chosen.back(), -1);
        chosen.pop_back();
      }
    }
  };

  SearchSpec spec_;
  std::int64_t k_;
  std::vector<std::vector<DigitPair>> groups_;
  std::vector<std::set<std::int64_t>> suffix_diffs_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<double> incumbent_{0.0};
  std::atomic<std::uint64_t> nodes_total_{0};
  std::atomic<bool> budget_hit_{false};
};

}  // namespace detail

/// Deterministic for a fixed spec with one worker. With several workers
/// the best score and witness list are unchanged; the node count may vary.
inline SearchResult search(const SearchSpec& spec) {
  validate(spec);
  return detail::PatternSearch(spec).run();
}

struct Certificate {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Re-derives every witness independently of the search: stats, the
/// theorem ceilings, and the exponent realized by the n=2 tensoring.
inline Certificate certify(const SearchResult& result, const SearchSpec& spec) {
  Certificate c;
  auto fail = [&](std::size_t i, const std::string& why) {
    c.ok = false;
    c.diagnostics.push_back("witness " + std::to_string(i) + ": " + why);
  };
  if (result.witnesses.empty()) {
    if (result.best.defined()) {
      c.ok = false;
      c.diagnostics.push_back("defined best score without witnesses");
    }
    return c;
  }
  for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
    const DigitPattern w{result.witnesses[i].pairs, spec.constrain_d};
    bool in_alphabet = true;
    for (const auto& q : w.pairs) in_alphabet &= q.x >= 0 && q.y >= 0 && q.x <= spec.K && q.y <= spec.K;
    if (!in_alphabet) {
      fail(i, "digit outside alphabet");
      continue;
    }
    const auto st = pattern_stats(w);
    if (spec.require_difference_injective && !st.difference_injective) fail(i, "not difference-injective");
    const std::uint64_t num = spec.require_difference_injective ? st.pairs : st.size_delta;
    const Score sc{num, st.slice_max};
    if (!sc.defined()) {
      fail(i, "exponent undefined");
      continue;
    }
    if (std::fabs(sc.value() - result.best_exponent) > 1e-9 || compare_scores(sc, result.best) != 0)
      fail(i, "exponent mismatch");
    const auto cap6 = ipow(BigInt(sc.num), 6) <= ipow(BigInt(sc.den), 11);
    const auto cap4 = ipow(BigInt(sc.num), 4) <= ipow(BigInt(sc.den), 7);
    if (!(spec.constrain_d ? cap4 : cap6)) fail(i, "exceeds theorem ceiling");
    if (canonicalize(w, spec.K).pairs != w.pairs) fail(i, "not in canonical form");

    const Instance two = tensor_pattern(w, 2);  // at min_base
    const auto diffs = project(two, LinearForm::difference()).size();
    std::size_t slice = std::max({two.A().size(), two.B().size(), project(two, LinearForm::sum()).size()});
    if (spec.constrain_d) slice = std::max(slice, project(two, LinearForm::sum_double()).size());
    if (diffs != sc.num * sc.num || slice != sc.den * sc.den) fail(i, "tensored cardinalities do not realize exponent");
  }
  return c;
}

}  // namespace arithproj
