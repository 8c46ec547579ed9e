#pragma once

// Seeded generators for property runs: random chain problems and random
// (A, B, G) instances. Reproducible for a fixed seed on one platform.

#include "arithproj/chain.hpp"
#include "arithproj/group.hpp"
#include "arithproj/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace arithproj {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

struct ChainProblemShape {
  std::size_t max_items = 50;
  std::size_t max_depth = 4;
  std::uint64_t max_labels = 12;
};

/// Label sets may be larger than the image, so unused labels occur.
inline ChainProblem random_chain_problem(Rng& rng, const ChainProblemShape& shape = {}) {
  ChainProblem p{static_cast<std::size_t>(uniform(rng, 1, shape.max_items)), {}};
  const auto depth = uniform(rng, 0, shape.max_depth);
  for (std::uint64_t i = 0; i < depth; ++i) {
    const auto count = uniform(rng, 1, shape.max_labels);
    const auto used = uniform(rng, 1, count);
    Labeling f{count, {}};
    for (std::size_t x = 0; x < p.items; ++x) f.labels.push_back(uniform(rng, 0, used - 1));
    p.labelings.push_back(std::move(f));
  }
  return p;
}

struct InstanceShape {
  std::size_t max_set = 12;
};

/// Mixes plain random relations with relations cut out by a small sum set,
/// so that instances with #C comparable to #A occur often.
inline Instance random_instance(Rng& rng, const InstanceShape& shape = {}) {
  const bool modular = uniform(rng, 0, 3) == 0;
  const AmbientGroup group = modular ? AmbientGroup::integers_mod(static_cast<std::int64_t>(uniform(rng, 2, 40)))
                                     : AmbientGroup::integers();
  auto random_set = [&](std::size_t size) {
    std::vector<Elem> s;
    const auto style = uniform(rng, 0, 2);
    const auto start = static_cast<std::int64_t>(uniform(rng, 0, 20)) - 10;
    const auto step = static_cast<std::int64_t>(uniform(rng, 1, 3));
    const auto spread = static_cast<std::int64_t>(uniform(rng, size, 3 * size + 2));
    for (std::size_t i = 0; i < size; ++i) {
      const std::int64_t v = style == 0 ? start + step * static_cast<std::int64_t>(i)
                                        : start + static_cast<std::int64_t>(uniform(rng, 0, spread));
      s.push_back(group.canonical(v));
    }
    sort_unique(s);
    return s;
  };
  const auto a = random_set(uniform(rng, 1, shape.max_set));
  const auto b = random_set(uniform(rng, 1, shape.max_set));

  std::vector<Pair> g;
  if (uniform(rng, 0, 1) == 0) {
    const auto density = uniform(rng, 1, 10);
    for (auto x : a)
      for (auto y : b)
        if (uniform(rng, 1, 10) <= density) g.push_back({x, y});
  } else {
    std::vector<Elem> sums;
    for (auto x : a)
      for (auto y : b) sums.push_back(group.add(x, y));
    sort_unique(sums);
    std::shuffle(sums.begin(), sums.end(), rng);
    sums.resize(std::min<std::size_t>(sums.size(), uniform(rng, 1, std::max(a.size(), b.size()))));
    sort_unique(sums);
    for (auto x : a)
      for (auto y : b)
        if (contains(sums, group.add(x, y))) g.push_back({x, y});
  }
  return Instance::make(group, a, b, std::move(g));
}

}  // namespace arithproj
