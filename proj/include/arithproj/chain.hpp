#pragma once

#include "arithproj/error.hpp"
#include "arithproj/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace arithproj {

/// A total map from the items {0..items-1} of X into the label set
/// {0..label_count-1}. label_count is the size of the ambient label set,
/// which may exceed the size of the image.
struct Labeling {
  std::uint64_t label_count = 0;
  std::vector<std::uint64_t> labels;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// A finite set X (items are opaque indices) and labelings f_1..f_n.
struct ChainProblem {
  std::size_t items = 0;
  std::vector<Labeling> labelings;

  std::size_t depth() const noexcept { return labelings.size(); }

  friend bool operator==(const ChainProblem&, const ChainProblem&) = default;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

inline void validate(const ChainProblem& p) {
  for (std::size_t i = 0; i < p.labelings.size(); ++i) {
    const auto& f = p.labelings[i];
    if (f.labels.size() != p.items)
      throw Error(ErrorKind::InvalidArgument, "labeling " + std::to_string(i + 1) + " is not total on X");
    for (auto l : f.labels)
      if (l >= f.label_count)
        throw Error(ErrorKind::InvalidArgument, "labeling " + std::to_string(i + 1) + " leaves its label set");
  }
}

/// Builds a labeling from arbitrary keys; labels are numbered in key order
/// over `universe`, which must contain every key.
template <typename Key, typename KeyFn>
Labeling make_labeling(std::size_t items, const std::vector<Key>& universe, KeyFn&& key_of) {
  std::map<Key, std::uint64_t> index;
  for (const auto& k : universe) index.try_emplace(k, index.size());
  Labeling f{index.size(), {}};
  f.labels.reserve(items);
  for (std::size_t x = 0; x < items; ++x) {
    auto it = index.find(key_of(x));
    if (it == index.end()) throw Error(ErrorKind::InvalidArgument, "label outside its label set");
    f.labels.push_back(it->second);
  }
  return f;
}

namespace detail {

inline void check_enumeration_cap(std::size_t items, std::size_t exponent, std::uint64_t cap) {
  if (ipow(BigInt(items), exponent) > BigInt(cap))
    throw Error(ErrorKind::EnumerationCapExceeded,
                std::to_string(items) + "^" + std::to_string(exponent) + " exceeds cap " + std::to_string(cap));
}

inline std::uint64_t count_extensions(const ChainProblem& p, std::size_t depth, std::size_t prev) {
  if (depth > p.depth()) return 1;
  const auto& f = p.labelings[depth - 1];
  std::uint64_t total = 0;
  for (std::size_t x = 0; x < p.items; ++x) {
    if (f.labels[prev] == f.labels[x]) total += count_extensions(p, depth + 1, x);
  }
  return total;
}

}  // namespace detail

/// Direct enumeration of { (x_0..x_n) : f_i(x_{i-1}) = f_i(x_i) }. The
/// outer loop over x_0 is split across `workers` threads.
inline BigInt chain_count_naive(const ChainProblem& p, std::uint64_t cap = kDefaultEnumerationCap,
                                unsigned workers = 1) {
  validate(p);
  detail::check_enumeration_cap(p.items, p.depth() + 1, cap);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(p.items, 1))));
  std::vector<std::uint64_t> partial(workers, 0);
  auto run = [&](unsigned w) {
    for (std::size_t x0 = w; x0 < p.items; x0 += workers) partial[w] += detail::count_extensions(p, 1, x0);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  BigInt total = 0;
  for (auto c : partial) total += c;
  return total;
}

/// Fiber aggregation: W_0 = 1, W_i(x) = sum of W_{i-1} over the f_i-fiber
/// of x; returns the sum of W_n. O(n * #X) big-integer additions.
inline BigInt chain_count_dp(const ChainProblem& p) {
  validate(p);
  std::vector<BigInt> weight(p.items, BigInt(1));
  for (const auto& f : p.labelings) {
    if (f.label_count <= 4 * static_cast<std::uint64_t>(p.items) + 1024) {
      std::vector<BigInt> fiber(f.label_count, BigInt(0));
      for (std::size_t x = 0; x < p.items; ++x) fiber[f.labels[x]] += weight[x];
      for (std::size_t x = 0; x < p.items; ++x) weight[x] = fiber[f.labels[x]];
    } else {
      std::unordered_map<std::uint64_t, BigInt> fiber;
      for (std::size_t x = 0; x < p.items; ++x) fiber[f.labels[x]] += weight[x];
      for (std::size_t x = 0; x < p.items; ++x) weight[x] = fiber[f.labels[x]];
    }
  }
  BigInt total = 0;
  for (const auto& w : weight) total += w;
  return total;
}

/// (#X)^(n+1) / prod #A_i.
inline Rational chain_lower_bound(const ChainProblem& p) {
  BigInt den = 1;
  for (const auto& f : p.labelings) {
    if (f.label_count == 0) {
      if (p.items > 0) throw Error(ErrorKind::EmptyLabelSet, "empty label set on nonempty X");
      return Rational(0);
    }
    den *= f.label_count;
  }
  return Rational(ipow(BigInt(p.items), p.depth() + 1), den);
}

/// Items whose label is popular: fiber size >= #X / (2 #A), compared exactly.
inline std::vector<std::size_t> popular_filter(std::size_t items, const Labeling& f) {
  if (f.labels.size() != items) throw Error(ErrorKind::InvalidArgument, "labeling is not total on X");
  std::unordered_map<std::uint64_t, std::uint64_t> fiber;
  for (auto l : f.labels) ++fiber[l];
  std::vector<std::size_t> kept;
  for (std::size_t x = 0; x < items; ++x) {
    // fiber >= items / (2 * label_count)  <=>  2 * label_count * fiber >= items
    if (BigInt(2) * f.label_count * fiber[f.labels[x]] >= BigInt(items)) kept.push_back(x);
  }
  return kept;
}

/// Restriction of a problem to a subset of its items (in the given order).
inline ChainProblem restrict_items(const ChainProblem& p, const std::vector<std::size_t>& subset) {
  ChainProblem out{subset.size(), {}};
  for (const auto& f : p.labelings) {
    Labeling g{f.label_count, {}};
    g.labels.reserve(subset.size());
    for (auto x : subset) g.labels.push_back(f.labels.at(x));
    out.labelings.push_back(std::move(g));
  }
  return out;
}

inline constexpr std::uint64_t kDefaultTensorCap = 10'000'000;

/// The problem over X^M with coordinate-wise labelings into A_i^M. Tuple
/// (x^1..x^M) is item sum x^j * #X^(j-1); labels are encoded the same way.
inline ChainProblem tensor_power(const ChainProblem& p, std::size_t m, std::uint64_t cap = kDefaultTensorCap) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "tensor power must be >= 1");
  validate(p);
  detail::check_enumeration_cap(p.items, m, cap);
  const auto items = static_cast<std::size_t>(ipow(BigInt(p.items), m));
  ChainProblem out{items, {}};
  for (const auto& f : p.labelings) {
    const BigInt count = ipow(BigInt(f.label_count), m);
    if (count > BigInt(UINT64_MAX)) throw Error(ErrorKind::InstanceTooLarge, "tensored label set exceeds 64 bits");
    Labeling g{static_cast<std::uint64_t>(count), std::vector<std::uint64_t>(items)};
    for (std::size_t t = 0; t < items; ++t) {
      std::size_t rest = t;
      std::uint64_t label = 0;
      std::uint64_t place = 1;
      for (std::size_t j = 0; j < m; ++j) {
        label += f.labels[rest % p.items] * place;
        rest /= p.items;
        place *= f.label_count;
      }
      g.labels[t] = label;
    }
    out.labelings.push_back(std::move(g));
  }
  return out;
}

/// Exact count together with the lower bound it must dominate.
struct ChainCount {
  BigInt count;
  Rational lower_bound;

  bool holds() const { return Rational(count) >= lower_bound; }
};

inline ChainCount count_chains(const ChainProblem& p) { return {chain_count_dp(p), chain_lower_bound(p)}; }

}  // namespace arithproj
