/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * Command-line front end.
 *
 *   tres prove <file> [--validity|--sat] [--trace] [--snf-only] [--oracle]
 *                     [--emit-graph <f>] [--max-loop-width N]
 *                     [--max-oracle-props N] [--max-entail-props N]
 *
 * The input is a formula file or an SNF clause file; clause files are
 * recognized by the `=>` arrow, which does not occur in the formula
 * grammar.  Exit codes: 0 satisfiable or valid, 1 unsatisfiable or not
 * valid, 2 input error, 3 resource cap exceeded, 4 oracle disagreement
 * under --oracle.
 */

#include "CLI11.hpp"

#include "tres/clause.hpp"
#include "tres/formula.hpp"
#include "tres/graph.hpp"
#include "tres/limits.hpp"
#include "tres/prover.hpp"
#include "tres/resolution.hpp"
#include "tres/temporal.hpp"
#include "tres/translator.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitSatisfiable = 0;
constexpr int kExitUnsatisfiable = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitOracleDisagreement = 4;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// True when the text, comments stripped, contains the clause arrow.
bool looks_like_clause_file(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    if (line.find("=>") != std::string::npos)
      return true;
  }
  return false;
}

struct Options {
  std::string file;
  bool validity = false;
  bool sat = false;
  bool trace = false;
  bool snf_only = false;
  bool oracle = false;
  std::string graph_file;
  std::size_t loop_width = tres::kDefaultLoopWidthCap;
  std::size_t oracle_props = tres::kDefaultOracleCap;
  std::size_t entail_props = tres::kDefaultEntailmentCap;
};

void emit_graph(const tres::ClauseSet& augmented, const Options& opt) {
  const tres::BehaviourGraph g =
      tres::build_graph(augmented, opt.oracle_props);
  std::ofstream out(opt.graph_file, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + opt.graph_file);
  out << tres::to_dot(g);
}

void print_stats(const tres::ProverStats& st) {
  std::cerr << "steps=" << st.clauses_recorded
            << " loop-searches=" << st.loop_searches
            << " temporal-resolvents=" << st.temporal_resolvents
            << " wall-seconds=" << st.wall_seconds << "\n";
}

int report(const tres::Verdict& v, const Options& opt) {
  if (opt.trace) {
    std::cout << tres::print_trace(v.trace);
    print_stats(v.stats);
  }
  std::cout << tres::status_label(v.status) << "\n";
  const bool good = v.status == tres::ProverStatus::Satisfiable ||
                    v.status == tres::ProverStatus::Valid;
  return good ? kExitSatisfiable : kExitUnsatisfiable;
}

int report_oracle(int rc, bool prover_sat, bool oracle_sat) {
  std::cout << "oracle: "
            << (oracle_sat ? "satisfiable" : "unsatisfiable") << "\n";
  if (prover_sat == oracle_sat) {
    std::cout << "agreement: yes\n";
    return rc;
  }
  std::cout << "agreement: no\n";
  return kExitOracleDisagreement;
}

int run_clause_file(const std::string& text, const Options& opt) {
  if (opt.validity) {
    std::cerr << "error: validity mode requires a formula input\n";
    return kExitInputError;
  }
  const tres::ClauseSet cs = tres::parse_clause_set(text);
  if (opt.snf_only) {
    std::cout << tres::print_clause_set(cs);
    return kExitSatisfiable;
  }
  const tres::AugmentedClauseSet aug = tres::augment(cs);
  if (!opt.graph_file.empty())
    emit_graph(aug.base, opt);
  const tres::ProverLimits limits{opt.loop_width, opt.entail_props,
                                  opt.oracle_props};
  const tres::Verdict v = tres::prove_clause_set(cs, limits);
  const int rc = report(v, opt);
  if (!opt.oracle)
    return rc;
  const bool oracle_sat = tres::is_satisfiable(aug.base, opt.oracle_props);
  return report_oracle(rc, v.status == tres::ProverStatus::Satisfiable,
                       oracle_sat);
}

int run_formula_file(const std::string& text, const Options& opt) {
  const tres::FormulaPtr f = tres::parse_formula(text);
  const tres::ProveMode mode = opt.validity
                                   ? tres::ProveMode::Validity
                                   : tres::ProveMode::Satisfiability;
  const tres::FormulaPtr w = mode == tres::ProveMode::Validity
                                 ? tres::push_negations(tres::negate(f))
                                 : f;
  if (opt.snf_only) {
    std::cout << tres::print_clause_set(tres::tau0(w).clauses);
    return kExitSatisfiable;
  }
  if (!opt.graph_file.empty())
    emit_graph(tres::augment(tres::tau0(w).clauses).base, opt);
  const tres::ProverLimits limits{opt.loop_width, opt.entail_props,
                                  opt.oracle_props};
  if (!opt.oracle)
    return report(tres::prove(f, mode, limits), opt);
  const tres::CrossCheckReport cc = tres::cross_check(f, mode, limits);
  const int rc = report(cc.prover, opt);
  const bool prover_sat =
      cc.prover.status == tres::ProverStatus::Satisfiable ||
      cc.prover.status == tres::ProverStatus::NotValid;
  return report_oracle(rc, prover_sat, cc.oracle_satisfiable);
}

int run_prove(const Options& opt) {
  const std::optional<std::string> text = read_file(opt.file);
  if (!text) {
    std::cerr << "error: cannot read " << opt.file << "\n";
    return kExitInputError;
  }
  try {
    if (looks_like_clause_file(*text))
      return run_clause_file(*text, opt);
    return run_formula_file(*text, opt);
  } catch (const tres::ParseError& e) {
    std::cerr << "error: " << opt.file << ": offset " << e.position << ": "
              << e.what() << "\n";
    return kExitInputError;
  } catch (const tres::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"clausal temporal resolution prover for propositional "
               "linear-time temporal logic"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* prove =
      app.add_subcommand("prove", "decide a formula or SNF clause file");
  prove->add_option("file", opt.file, "formula or clause file")->required();
  CLI::Option* validity = prove->add_flag(
      "--validity", opt.validity, "prove validity (refute the negation)");
  CLI::Option* sat = prove->add_flag(
      "--sat", opt.sat, "decide satisfiability (the default)");
  validity->excludes(sat);
  prove->add_flag("--trace", opt.trace, "print the proof trace");
  prove->add_flag("--snf-only", opt.snf_only,
                  "print the normal-form clause set and stop");
  prove->add_flag("--oracle", opt.oracle,
                  "cross-check the verdict against the behaviour graph");
  prove->add_option("--emit-graph", opt.graph_file,
                    "write the behaviour graph of the augmented clause set "
                    "as DOT");
  prove->add_option("--max-loop-width", opt.loop_width,
                    "step-clause cap for one loop search");
  prove->add_option("--max-oracle-props", opt.oracle_props,
                    "symbol cap for the behaviour graph");
  prove->add_option("--max-entail-props", opt.entail_props,
                    "symbol cap for propositional entailment checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }
  return run_prove(opt);
}
