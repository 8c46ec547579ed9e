// arithproj: command-line front end.
//
//   arithproj construct example1|example2|pattern --n N [--M auto|INT] [--pattern FILE] [--out FILE]
//   arithproj verify FILE [--N auto|INT] [--chain 6|4|both]
//   arithproj lemma [FILE] [--random COUNT] [--from-instance FILE]
//   arithproj search --K K [--constrain-d] [--mode exhaustive|branch_bound] [--budget NODES] [--out FILE]
//   arithproj dimensions [--n-min A] [--n-max B]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 hypothesis violated, 4 budget or cap exceeded.

#include "arithproj/arithproj.hpp"
#include "arithproj/io.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace arithproj;

enum Exit : int { kOk = 0, kFail = 1, kUsage = 2, kHypothesis = 3, kBudget = 4 };

enum class Format { Text, Json, Csv };

struct Globals {
  Format output = Format::Text;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> cap;
  unsigned workers = 1;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::HypothesisViolated: return kHypothesis;
    case ErrorKind::EnumerationCapExceeded:
    case ErrorKind::InstanceTooLarge: return kBudget;
    default: return kUsage;
  }
}

/// "auto" or a positive integer.
std::optional<std::int64_t> parse_auto(const std::string& text, const std::string& flag) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoll(text, &used);
    if (used != text.size() || v < 1) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, flag + " expects 'auto' or a positive integer, got '" + text + "'");
  }
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
  return out;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string which;
  std::size_t n = 1;
  std::string base = "auto";
  std::string pattern_file;
  std::string out = "instance.json";
};

int run_construct(const ConstructArgs& args, const Globals& g) {
  DigitPattern pattern;
  if (args.which == "example1") {
    pattern = example_one_pattern();
  } else if (args.which == "example2") {
    pattern = example_two_pattern();
  } else {
    if (args.pattern_file.empty()) throw Error(ErrorKind::InvalidArgument, "pattern construction needs --pattern FILE");
    pattern = pattern_from_json(read_json_file(args.pattern_file));
  }
  const auto stats = pattern_stats(pattern);
  const std::int64_t base = parse_auto(args.base, "--M").value_or(stats.min_base);
  const std::uint64_t cap = g.cap.value_or(kDefaultConstructionCap);
  const Instance inst = args.which == "example1"   ? build_example_one(args.n, base, cap)
                        : args.which == "example2" ? build_example_two(args.n, base, cap)
                                                   : tensor_pattern(pattern, args.n, base, cap);
  write_json_file(args.out, to_json(inst));

  const std::vector<std::pair<std::string, std::size_t>> sizes = {
      {"A", inst.A().size()},
      {"B", inst.B().size()},
      {"C", project(inst, LinearForm::sum()).size()},
      {"D", project(inst, LinearForm::sum_double()).size()},
      {"G", inst.G().size()},
      {"differences", project(inst, LinearForm::difference()).size()}};
  switch (g.output) {
    case Format::Json: {
      json j{{"file", args.out}, {"n", args.n}, {"M", base}, {"pattern", to_json(pattern)},
             {"pattern_stats", to_json(stats)}};
      for (const auto& [k, v] : sizes) j["sizes"][k] = v;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "quantity,value\n";
      std::cout << "n," << args.n << "\nM," << base << '\n';
      for (const auto& [k, v] : sizes) std::cout << k << ',' << v << '\n';
      std::cout << "exponent," << (stats.exponent ? std::to_string(round6(*stats.exponent)) : "") << '\n';
      break;
    case Format::Text:
      std::cout << "wrote " << args.out << " (n=" << args.n << ", M=" << base << ")\n";
      for (const auto& [k, v] : sizes) std::cout << "  #" << k << " = " << v << '\n';
      std::cout << "  exponent = "
                << (stats.exponent ? (std::ostringstream() << std::fixed << std::setprecision(6) << *stats.exponent).str()
                                   : std::string("undefined"))
                << '\n';
      break;
  }
  return kOk;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string file;
  std::string budget = "auto";
  std::string chain = "6";
};

void print_report(const ChainReport& r, bool n_auto, Format f) {
  if (f == Format::Csv) {
    for (const auto& rec : r.inequalities)
      std::cout << csv_row({r.chain, std::to_string(r.N), rec.name, '"' + rec.relation + '"', to_string(rec.lhs),
                            to_string(rec.rhs), rec.holds ? "PASS" : "FAIL"})
                << '\n';
    return;
  }
  std::cout << "chain " << r.chain << "  N=" << r.N << (n_auto ? " (auto)" : "") << '\n';
  std::cout << " ";
  for (const auto& [k, v] : r.cardinalities) std::cout << " #" << k << "=" << v;
  std::cout << '\n';
  for (const auto& rec : r.inequalities) {
    std::cout << "  " << (rec.holds ? "PASS" : "FAIL") << "  " << std::left << std::setw(15) << rec.name << std::setw(24)
              << rec.relation << to_string(rec.lhs) << " <= " << to_string(rec.rhs) << "  (slack " << to_string(rec.slack())
              << ")\n";
  }
}

int run_verify(const VerifyArgs& args, const Globals& g) {
  const Instance inst = instance_from_json(read_json_file(args.file));
  if (args.chain != "6" && args.chain != "4" && args.chain != "both")
    throw Error(ErrorKind::InvalidArgument, "--chain must be 6, 4 or both");
  const bool want6 = args.chain != "4", want4 = args.chain != "6";
  const auto given = parse_auto(args.budget, "--N");
  const std::int64_t n = given.value_or(natural_budget(inst, want4));
  const std::uint64_t cap = g.cap.value_or(kDefaultVCap);

  std::vector<ChainReport> reports;
  if (want6) reports.push_back(verify_chain_6(inst, n, cap));
  if (want4) reports.push_back(verify_chain_4(inst, n, cap));

  bool all = true;
  for (const auto& r : reports) all &= r.all_hold();
  if (g.output == Format::Json) {
    json j{{"N", n}, {"N_auto", !given.has_value()}, {"reports", json::array()}, {"all_hold", all}};
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    std::cout << j.dump(2) << '\n';
  } else {
    if (g.output == Format::Csv) std::cout << "chain,N,name,relation,lhs,rhs,verdict\n";
    for (const auto& r : reports) print_report(r, !given.has_value(), g.output);
  }
  return all ? kOk : kFail;
}

// -------------------------------------------------------------------- lemma

struct LemmaArgs {
  std::string file;
  std::string from_instance;
  std::size_t random = 0;
};

json lemma_row(const ChainProblem& p, std::uint64_t cap, unsigned workers) {
  const auto c = count_chains(p);
  json j{{"items", p.items}, {"depth", p.depth()}, {"count", to_json(c.count)}};
  try {
    const auto naive = chain_count_naive(p, cap, workers);
    j["naive"] = to_json(naive);
    j["naive_agrees"] = naive == c.count;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EnumerationCapExceeded) throw;
    j["naive"] = "skipped";
    j["naive_agrees"] = true;
  }
  j["lower_bound"] = to_json(c.lower_bound);
  j["slack"] = to_json(Rational(c.count) - c.lower_bound);
  j["holds"] = c.holds();
  return j;
}

bool row_passes(const json& row) { return row["holds"].get<bool>() && row["naive_agrees"].get<bool>(); }

std::string rational_text(const json& r) {
  if (!r.is_object()) return r.is_string() ? r.get<std::string>() : r.dump();
  const auto part = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  return r["den"] == 1 ? part(r["num"]) : part(r["num"]) + "/" + part(r["den"]);
}

int run_lemma(const LemmaArgs& args, const Globals& g) {
  const int sources = !args.file.empty() + !args.from_instance.empty() + (args.random > 0);
  if (sources != 1) throw Error(ErrorKind::InvalidArgument, "give exactly one of FILE, --from-instance, --random");
  const std::uint64_t cap = g.cap.value_or(kDefaultEnumerationCap);

  std::vector<json> rows;
  if (args.random > 0) {
    Rng rng(g.seed);
    for (std::size_t i = 0; i < args.random; ++i) rows.push_back(lemma_row(random_chain_problem(rng), cap, g.workers));
  } else if (!args.from_instance.empty()) {
    rows.push_back(lemma_row(v_problem(instance_from_json(read_json_file(args.from_instance))), cap, g.workers));
  } else {
    rows.push_back(lemma_row(chain_problem_from_json(read_json_file(args.file)), cap, g.workers));
  }

  std::size_t passed = 0;
  for (const auto& r : rows) passed += row_passes(r);
  const bool all = passed == rows.size();

  switch (g.output) {
    case Format::Json:
      std::cout << json{{"problems", rows}, {"passed", passed}, {"total", rows.size()}, {"all_hold", all}}.dump(2)
                << '\n';
      break;
    case Format::Csv:
      std::cout << "index,items,depth,count,naive,lower_bound,verdict\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        std::cout << csv_row({std::to_string(i), r["items"].dump(), r["depth"].dump(), rational_text(r["count"]),
                              rational_text(r["naive"]), rational_text(r["lower_bound"]),
                              row_passes(r) ? "PASS" : "FAIL"})
                  << '\n';
      }
      break;
    case Format::Text:
      if (rows.size() == 1) {
        const auto& r = rows[0];
        std::cout << "#X = " << r["items"] << ", n = " << r["depth"] << '\n';
        std::cout << "  count (dp)    = " << rational_text(r["count"]) << '\n';
        std::cout << "  count (naive) = " << rational_text(r["naive"]) << '\n';
        std::cout << "  lower bound   = " << rational_text(r["lower_bound"]) << '\n';
        std::cout << "  slack         = " << rational_text(r["slack"]) << '\n';
        std::cout << (all ? "PASS" : "FAIL") << '\n';
      } else {
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (!row_passes(rows[i])) std::cout << "FAIL problem " << i << ": " << rows[i].dump() << '\n';
        std::cout << passed << "/" << rows.size() << " PASS (seed " << g.seed << ")\n";
      }
      break;
  }
  return all ? kOk : kFail;
}

// ------------------------------------------------------------------- search

struct SearchArgs {
  std::int64_t k = 3;
  bool constrain_d = false;
  std::string mode = "branch_bound";
  std::uint64_t budget = 1'000'000'000;
  double time_limit = 600.0;
  bool allow_non_injective = false;
  std::size_t witness_cap = 64;
  std::string out;
};

int run_search(const SearchArgs& args, const Globals& g) {
  SearchSpec spec;
  spec.K = args.k;
  spec.constrain_d = args.constrain_d;
  if (args.mode == "exhaustive")
    spec.mode = SearchSpec::Mode::Exhaustive;
  else if (args.mode == "branch_bound")
    spec.mode = SearchSpec::Mode::BranchBound;
  else
    throw Error(ErrorKind::InvalidArgument, "--mode must be exhaustive or branch_bound");
  spec.node_limit = args.budget;
  spec.time_limit_seconds = args.time_limit;
  spec.require_difference_injective = !args.allow_non_injective;
  spec.witness_cap = args.witness_cap;
  spec.workers = g.workers;

  const auto result = search(spec);
  const auto cert = certify(result, spec);
  const json j = to_json(result);
  if (!args.out.empty()) write_json_file(args.out, j);

  switch (g.output) {
    case Format::Json: {
      json full = j;
      full["certified"] = cert.ok;
      std::cout << full.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "K,constrain_d,best_exponent,numerator,slice,witnesses,exhaustive,nodes,certified\n";
      std::cout << csv_row({std::to_string(spec.K), spec.constrain_d ? "true" : "false",
                            (std::ostringstream() << std::fixed << std::setprecision(6) << result.best_exponent).str(),
                            std::to_string(result.best.num), std::to_string(result.best.den),
                            std::to_string(result.witnesses.size()), result.exhaustive ? "true" : "false",
                            std::to_string(result.nodes), cert.ok ? "true" : "false"})
                << '\n';
      break;
    case Format::Text:
      std::cout << "K=" << spec.K << (spec.constrain_d ? " with a+2b slice" : "") << ", mode " << args.mode << '\n';
      std::cout << "  best exponent = " << std::fixed << std::setprecision(6) << result.best_exponent;
      if (result.best.defined()) std::cout << "  (ln " << result.best.num << " / ln " << result.best.den << ")";
      std::cout << "\n  witnesses     = " << result.witnesses.size() << '\n';
      for (const auto& w : result.witnesses) std::cout << "    " << to_json(w)["pairs"].dump() << '\n';
      std::cout << "  exhaustive    = " << (result.exhaustive ? "true" : "false") << '\n';
      std::cout << "  nodes         = " << result.nodes << '\n';
      std::cout << "  certified     = " << (cert.ok ? "true" : "false") << '\n';
      break;
  }
  for (const auto& d : cert.diagnostics) std::cerr << "certify: " << d << '\n';
  if (!cert.ok) return kFail;
  return result.exhaustive ? kOk : kBudget;
}

// --------------------------------------------------------------- dimensions

int run_dimensions(std::int64_t n_min, std::int64_t n_max, const Globals& g) {
  if (n_max < n_min) throw Error(ErrorKind::InvalidArgument, "--n-max must be >= --n-min");
  std::vector<DimensionReport> rows;
  for (std::int64_t n = n_min; n <= n_max; ++n) rows.push_back(dimension_report(n));
  switch (g.output) {
    case Format::Json: {
      json j{{"rows", json::array()},
             {"minkowski_threshold", novelty_threshold(DimensionKind::Minkowski)},
             {"hausdorff_threshold", novelty_threshold(DimensionKind::Hausdorff)}};
      for (const auto& r : rows) j["rows"].push_back(to_json(r));
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "n,minkowski,hausdorff,wolff,best_minkowski,best_hausdorff\n";
      for (const auto& r : rows)
        std::cout << csv_row({std::to_string(r.n), to_string(r.minkowski), to_string(r.hausdorff), to_string(r.wolff),
                              to_string(r.best_minkowski), to_string(r.best_hausdorff)})
                  << '\n';
      break;
    case Format::Text:
      std::cout << std::left << std::setw(5) << "n" << std::setw(18) << "minkowski" << std::setw(18) << "hausdorff"
                << std::setw(14) << "wolff" << std::setw(10) << "mink." << "haus.\n";
      for (const auto& r : rows) {
        auto cell = [](const Rational& q) {
          return (std::ostringstream() << to_string(q) << " (" << std::fixed << std::setprecision(3) << to_double(q) << ")")
              .str();
        };
        std::cout << std::setw(5) << r.n << std::setw(18) << cell(r.minkowski) << std::setw(18) << cell(r.hausdorff)
                  << std::setw(14) << cell(r.wolff) << std::setw(10) << to_string(r.best_minkowski)
                  << to_string(r.best_hausdorff) << '\n';
      }
      std::cout << "Minkowski bound first beats (n+2)/2 at n = " << novelty_threshold(DimensionKind::Minkowski)
                << "; Hausdorff at n = " << novelty_threshold(DimensionKind::Hausdorff) << '\n';
      break;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic-projection bounds, digit constructions, and pattern search"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  std::string output = "text";
  std::uint64_t cap = 0;
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", globals.seed, "Seed for randomized runs");
  auto* cap_opt = app.add_option("--cap", cap, "Enumeration cap (overrides per-command defaults)")->check(CLI::PositiveNumber);
  app.add_option("--workers", globals.workers, "Worker threads")->check(CLI::Range(1u, 256u));

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a digit-construction instance");
  c->add_option("which", construct.which, "example1, example2 or pattern")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "pattern", "pattern-file"}));
  c->add_option("--n", construct.n, "Number of digits")->check(CLI::PositiveNumber);
  c->add_option("--M", construct.base, "Base, or auto for the smallest admissible one");
  c->add_option("--pattern", construct.pattern_file, "Pattern JSON file");
  c->add_option("--out,-o", construct.out, "Instance JSON to write");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check the inequality chains on an instance");
  v->add_option("file", verify.file, "Instance JSON")->required();
  v->add_option("--N", verify.budget, "Cardinality budget, or auto");
  v->add_option("--chain", verify.chain, "6, 4 or both");

  LemmaArgs lemma;
  auto* l = app.add_subcommand("lemma", "Count label chains and compare with the lower bound");
  l->add_option("file", lemma.file, "Chain problem JSON");
  l->add_option("--from-instance", lemma.from_instance, "Use X = G with the projection to A");
  l->add_option("--random", lemma.random, "Number of random problems (uses --seed)");

  SearchArgs sargs;
  auto* s = app.add_subcommand("search", "Search digit patterns for large extremal exponents");
  s->add_option("--K", sargs.k, "Digits range over 0..K")->required();
  s->add_flag("--constrain-d", sargs.constrain_d, "Include the a+2b slice");
  s->add_option("--mode", sargs.mode, "exhaustive or branch_bound");
  s->add_option("--budget", sargs.budget, "Node limit")->check(CLI::PositiveNumber);
  s->add_option("--time-limit", sargs.time_limit, "Wall-time limit in seconds")->check(CLI::PositiveNumber);
  s->add_flag("--allow-non-injective", sargs.allow_non_injective, "Score patterns by #differences");
  s->add_option("--witness-cap", sargs.witness_cap, "Maximum witnesses reported");
  s->add_option("--out,-o", sargs.out, "SearchResult JSON to write");

  std::int64_t n_min = 2, n_max = 13;
  auto* d = app.add_subcommand("dimensions", "Tabulate the dimension bounds");
  d->add_option("--n-min", n_min, "First dimension");
  d->add_option("--n-max", n_max, "Last dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  globals.output = output == "json" ? Format::Json : output == "csv" ? Format::Csv : Format::Text;
  if (*cap_opt) globals.cap = cap;

  try {
    if (*c) return run_construct(construct, globals);
    if (*v) return run_verify(verify, globals);
    if (*l) return run_lemma(lemma, globals);
    if (*s) return run_search(sargs, globals);
    if (*d) return run_dimensions(n_min, n_max, globals);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}
