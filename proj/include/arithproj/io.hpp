#pragma once

// JSON encodings for instances, patterns, chain problems and reports.
// Integers that fit in 64 bits are written as JSON numbers and wider ones
// as decimal strings; rationals are {"num": n, "den": d}.

#include "arithproj/chain.hpp"
#include "arithproj/constructions.hpp"
#include "arithproj/error.hpp"
#include "arithproj/exact.hpp"
#include "arithproj/instance.hpp"
#include "arithproj/kakeya.hpp"
#include "arithproj/proof.hpp"
#include "arithproj/search.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace arithproj {

using json = nlohmann::ordered_json;

inline json to_json(const BigInt& x) {
  if (x >= BigInt(INT64_MIN) && x <= BigInt(INT64_MAX)) return json(x.convert_to<std::int64_t>());
  return json(x.str());
}

inline json to_json(const Rational& r) {
  return json{{"num", to_json(BigInt(boost::multiprecision::numerator(r)))},
              {"den", to_json(BigInt(boost::multiprecision::denominator(r)))}};
}

inline double round6(double x) { return std::round(x * 1e6) / 1e6; }

// ---------------------------------------------------------------- instances

inline json to_json(const Instance& inst) {
  json j;
  if (inst.group().is_integers())
    j["group"] = "Z";
  else
    j["group"] = json{{"mod", inst.group().modulus()}};
  auto values = [](const std::vector<Elem>& s) {
    json arr = json::array();
    for (auto x : s) arr.push_back(x.value);
    return arr;
  };
  j["A"] = values(inst.A());
  j["B"] = values(inst.B());
  j["G"] = json::array();
  for (const auto& p : inst.G()) j["G"].push_back(json::array({p.a.value, p.b.value}));
  return j;
}

/// Parses the instance schema. Values are reduced to canonical
/// representatives for Z/m; pairs outside A x B are rejected.
inline Instance instance_from_json(const json& j) {
  try {
    AmbientGroup group = AmbientGroup::integers();
    const auto& gj = j.at("group");
    if (gj.is_string()) {
      if (gj.get<std::string>() != "Z") throw Error(ErrorKind::MalformedInstance, "unknown group " + gj.dump());
    } else {
      group = AmbientGroup::integers_mod(gj.at("mod").get<std::int64_t>());
    }
    auto elems = [&](const json& arr) {
      std::vector<Elem> out;
      for (const auto& v : arr) out.push_back(group.canonical(v.get<std::int64_t>()));
      return out;
    };
    std::vector<Pair> g;
    for (const auto& p : j.at("G")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::MalformedInstance, "pair must be [a, b]");
      g.push_back({group.canonical(p[0].get<std::int64_t>()), group.canonical(p[1].get<std::int64_t>())});
    }
    return Instance::make(group, elems(j.at("A")), elems(j.at("B")), std::move(g));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedInstance) throw;
    throw Error(ErrorKind::MalformedInstance, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInstance, e.what());
  }
}

// ----------------------------------------------------------------- patterns

inline json to_json(const DigitPattern& p) {
  json pairs = json::array();
  for (const auto& q : p.pairs) pairs.push_back(json::array({q.x, q.y}));
  return json{{"pairs", pairs}, {"constrain_d", p.constrain_d}};
}

inline DigitPattern pattern_from_json(const json& j) {
  try {
    std::vector<DigitPair> pairs;
    for (const auto& q : j.at("pairs")) pairs.push_back({q.at(0).get<std::int64_t>(), q.at(1).get<std::int64_t>()});
    return DigitPattern::make(std::move(pairs), j.value("constrain_d", false));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed pattern: ") + e.what());
  }
}

inline json to_json(const PatternStats& s) {
  json j{{"pairs", s.pairs},       {"A", s.size_a},           {"B", s.size_b},
         {"C", s.size_c},          {"D", s.size_d},           {"differences", s.size_delta},
         {"difference_injective", s.difference_injective},   {"slice_max", s.slice_max},
         {"min_base", s.min_base}};
  j["exponent"] = s.exponent ? json(round6(*s.exponent)) : json(nullptr);
  return j;
}

// ----------------------------------------------------------- chain problems

/// {"X": [item...], "labelings": [{"labels": [label...], "f": [label per item]}]}
inline ChainProblem chain_problem_from_json(const json& j) {
  try {
    const auto& xs = j.at("X");
    ChainProblem p{xs.size(), {}};
    for (const auto& lj : j.at("labelings")) {
      std::map<std::string, std::uint64_t> index;
      for (const auto& l : lj.at("labels")) index.try_emplace(l.dump(), index.size());
      const auto& f = lj.at("f");
      if (f.size() != xs.size()) throw Error(ErrorKind::InvalidArgument, "labeling is not total on X");
      Labeling lab{lj.at("labels").size(), {}};
      for (const auto& v : f) {
        auto it = index.find(v.dump());
        if (it == index.end()) throw Error(ErrorKind::InvalidArgument, "label " + v.dump() + " not in its label set");
        lab.labels.push_back(it->second);
      }
      if (index.size() != lab.label_count) throw Error(ErrorKind::InvalidArgument, "duplicate labels in label set");
      p.labelings.push_back(std::move(lab));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed chain problem: ") + e.what());
  }
}

inline json to_json(const ChainProblem& p) {
  json j{{"X", json::array()}, {"labelings", json::array()}};
  for (std::size_t x = 0; x < p.items; ++x) j["X"].push_back(x);
  for (const auto& f : p.labelings) {
    json labels = json::array();
    for (std::uint64_t l = 0; l < f.label_count; ++l) labels.push_back(l);
    j["labelings"].push_back(json{{"labels", labels}, {"f", f.labels}});
  }
  return j;
}

// ------------------------------------------------------------------ reports

inline json to_json(const InequalityRecord& r) {
  return json{{"name", r.name}, {"relation", r.relation}, {"lhs", to_json(r.lhs)},
              {"rhs", to_json(r.rhs)}, {"holds", r.holds},  {"slack", to_json(r.slack())}};
}

inline json to_json(const ChainReport& r) {
  json card = json::object();
  for (const auto& [k, v] : r.cardinalities) card[k] = to_json(v);
  json ineq = json::array();
  for (const auto& rec : r.inequalities) ineq.push_back(to_json(rec));
  return json{{"chain", r.chain}, {"N", r.N}, {"cardinalities", card}, {"inequalities", ineq},
              {"all_hold", r.all_hold()}};
}

inline json to_json(const SearchResult& r) {
  json w = json::array();
  for (const auto& p : r.witnesses) w.push_back(to_json(p));
  return json{{"best_exponent", r.best_exponent}, {"witnesses", w}, {"exhaustive", r.exhaustive},
              {"nodes", r.nodes}, {"best_numerator", r.best.num}, {"best_slice", r.best.den}};
}

inline SearchResult search_result_from_json(const json& j) {
  SearchResult r;
  r.best_exponent = j.at("best_exponent").get<double>();
  for (const auto& p : j.at("witnesses")) r.witnesses.push_back(pattern_from_json(p));
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.best = {j.value("best_numerator", std::uint64_t{0}), j.value("best_slice", std::uint64_t{0})};
  return r;
}

inline json to_json(const DimensionReport& r) {
  return json{{"n", r.n},
              {"minkowski", to_json(r.minkowski)},
              {"hausdorff", to_json(r.hausdorff)},
              {"wolff", to_json(r.wolff)},
              {"best_minkowski", to_string(r.best_minkowski)},
              {"best_hausdorff", to_string(r.best_hausdorff)}};
}

// -------------------------------------------------------------------- files

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace arithproj
