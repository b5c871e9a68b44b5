// Command-line surface for the finite-topology library: construction,
// operators, enumeration, verification, and counterexample search.
//
// Exit codes (stable contract):
//   0  success / all checks passed / no counterexample
//   1  counterexample or check failure found (reports emitted)
//   2  usage, parse, validation, or capacity error

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "topo/enumeration.hpp"
#include "topo/error.hpp"
#include "topo/harness.hpp"
#include "topo/operators.hpp"
#include "topo/pred_expr.hpp"
#include "topo/space_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw topo::Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Subset literal in label space: comma/space separated labels, "{}" for the
// empty set.
topo::PointSet parse_subset(const topo::Space& s, const std::string& literal) {
  topo::PointSet out(s.size());
  std::string cleaned = literal;
  if (cleaned == "{}") return out;
  for (char& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    const auto idx = s.index_of_label(token);
    if (!idx) throw topo::Error("no point labeled \"" + token + "\" in this space");
    out = out.with(*idx);
  }
  return out;
}

std::string subset_in_labels(const topo::Space& s, const topo::PointSet& a) {
  if (a.empty()) return "{}";
  std::string out;
  for (int x : a) {
    if (!out.empty()) out += ' ';
    out += s.label_of(x);
  }
  return out;
}

topo::PredExpr parse_expr_or_report(const std::string& text) {
  try {
    return topo::PredExpr::parse(text);
  } catch (const topo::SyntaxError& err) {
    std::cerr << "error: " << err.what() << "\n  " << text << "\n  "
              << std::string(err.position, ' ') << "^\n";
    std::exit(kExitUsage);
  }
}

int cmd_validate(const std::string& path, bool show_opens, std::size_t cap_opens) {
  const topo::Space s = topo::parse_space(read_file(path));
  std::cout << topo::serialize_space(s);
  if (show_opens) std::cout << "opens: " << topo::open_sets(s, cap_opens).count() << "\n";
  return kExitPass;
}

int cmd_op(const std::string& path, const std::string& op_name, const std::string& subset) {
  if (op_name != "screen" && subset.empty()) {
    std::cerr << "error: operator \"" << op_name
              << "\" needs a subset argument (\"{}\" for the empty set)\n";
    return kExitUsage;
  }
  const topo::Space s = topo::parse_space(read_file(path));
  const topo::PointSet a =
      op_name == "screen" ? s.universe() : parse_subset(s, subset);
  const topo::OperatorResult result = topo::apply_operator(s, op_name, a);
  std::cout << subset_in_labels(s, result.output) << "\n";
  return kExitPass;
}

int cmd_khalimsky(long a, long b) {
  std::cout << topo::serialize_space(topo::khalimsky_window(a, b));
  return kExitPass;
}

int cmd_product(const std::string& path_a, const std::string& path_b) {
  const topo::Space a = topo::parse_space(read_file(path_a));
  const topo::Space b = topo::parse_space(read_file(path_b));
  std::cout << topo::serialize_space(topo::product(a, b));
  return kExitPass;
}

int cmd_enumerate(int n, const std::string& filter, bool canonical, bool compact, bool count) {
  if (count) {
    const bool with_canonical = n <= 6;
    const topo::TopologyCounts counts = topo::count_topologies(n, with_canonical);
    std::cout << "labeled: " << counts.labeled;
    if (counts.canonical) std::cout << "  canonical: " << *counts.canonical;
    std::cout << "\n";
    return kExitPass;
  }

  std::optional<topo::PredExpr> expr;
  if (!filter.empty()) {
    expr = parse_expr_or_report(filter);
    if (!expr->space_level_only()) {
      std::cerr << "error: enumerate --filter accepts space-level predicates only "
                   "(prefix names with \"space:\")\n";
      return kExitUsage;
    }
  }

  std::unordered_set<std::string> seen;
  topo::TopologyEnumerator stream(n);
  bool first = true;
  while (auto s = stream.next()) {
    if (expr && !expr->eval(*s, s->universe())) continue;
    if (canonical && !seen.insert(topo::canonical_form(*s).key()).second) continue;
    if (compact) {
      std::cout << s->size();
      for (int x = 0; x < s->size(); ++x) std::cout << ' ' << s->min_nbhd(x).bits();
      std::cout << "\n";
    } else {
      if (!first) std::cout << "\n";
      std::cout << topo::serialize_space(*s);
      first = false;
    }
  }
  return kExitPass;
}

int cmd_verify(const std::string& suite_name, const topo::RunConfig& cfg) {
  const auto suite = topo::suite_from_name(suite_name);
  if (!suite) {
    std::cerr << "error: unknown suite \"" << suite_name
              << "\" (expected prop1|thm1|witness|obs2|ideal|lemmas|all)\n";
    return kExitUsage;
  }
  const topo::VerifyOutput out = topo::run_verify(*suite, cfg);
  if (cfg.format == topo::RunConfig::Format::Csv) {
    std::cout << topo::to_csv(out);
  } else {
    std::cout << topo::to_text(out);
  }
  return out.any_failures() ? kExitCounterexample : kExitPass;
}

int cmd_search(const std::string& antecedent_text, const std::string& consequent_text,
               int max_n, const std::string& quantifier_name, bool canonical) {
  const topo::PredExpr antecedent = parse_expr_or_report(antecedent_text);
  const topo::PredExpr consequent = parse_expr_or_report(consequent_text);
  topo::SubsetQuantifier quantifier;
  if (quantifier_name == "exists") {
    quantifier = topo::SubsetQuantifier::Exists;
  } else if (quantifier_name == "forall") {
    quantifier = topo::SubsetQuantifier::ForAllSubsets;
  } else {
    std::cerr << "error: --quantifier must be exists or forall\n";
    return kExitUsage;
  }

  const topo::SearchResult result =
      topo::search_implication(max_n, antecedent, consequent, quantifier, canonical);
  for (const topo::SearchWitness& wit : result.witnesses) {
    std::cout << topo::serialize_space(wit.space);
    if (wit.subset) std::cout << "subset: " << subset_in_labels(wit.space, *wit.subset) << "\n";
    std::cout << "\n";
  }
  if (result.witnesses.empty()) {
    std::cout << "no counterexample up to n=" << max_n << " (spaces=" << result.spaces_scanned
              << " substantive=" << result.substantive << " vacuous=" << result.vacuous
              << ")\n";
    return kExitPass;
  }
  std::cout << "witnesses: " << result.witnesses.size() << " (failing instances="
            << result.failing << " substantive=" << result.substantive
            << " vacuous=" << result.vacuous << " spaces=" << result.spaces_scanned << ")\n";
  return kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-topology toolkit: digital-line windows, topological operators, "
               "exhaustive verification suites, and counterexample search"};
  app.require_subcommand(1);

  // validate
  std::string validate_path;
  bool show_opens = false;
  std::size_t cap_opens = topo::kDefaultOpenCap;
  auto* validate = app.add_subcommand("validate", "parse and validate a .topo file");
  validate->add_option("file", validate_path)->required();
  validate->add_flag("--show-opens", show_opens, "also print the number of open sets");
  validate->add_option("--cap-opens", cap_opens, "cap for the open-set enumeration");

  // op
  std::string op_path, op_name, op_subset;
  auto* op = app.add_subcommand("op", "apply a topological operator to a subset");
  op->add_option("file", op_path)->required();
  op->add_option("operator", op_name, "closure|interior|consolidation|derived|isolated|screen")
      ->required();
  op->add_option("subset", op_subset, "subset in label space, e.g. \"0 1\" or \"{}\"");

  // khalimsky
  long win_a = 0, win_b = 0;
  auto* khalimsky = app.add_subcommand("khalimsky", "emit a digital-line window as .topo");
  khalimsky->add_option("a", win_a)->required();
  khalimsky->add_option("b", win_b)->required();

  // product
  std::string prod_a, prod_b;
  auto* prod = app.add_subcommand("product", "emit the product of two .topo spaces");
  prod->add_option("fileA", prod_a)->required();
  prod->add_option("fileB", prod_b)->required();

  // enumerate
  int enum_n = 0;
  std::string enum_filter;
  bool enum_canonical = false, enum_compact = false, enum_count = false;
  auto* enumerate = app.add_subcommand("enumerate", "stream every topology on n labeled points");
  enumerate->add_option("n", enum_n)->required();
  enumerate->add_option("--filter", enum_filter, "space-level predicate expression");
  enumerate->add_flag("--canonical", enum_canonical, "deduplicate up to homeomorphism");
  enumerate->add_flag("--compact", enum_compact, "one line per space: n followed by row masks");
  enumerate->add_flag("--count", enum_count, "print counts instead of spaces");

  // verify
  std::string verify_suite;
  topo::RunConfig cfg;
  std::string format_name = "text";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_suite, "prop1|thm1|witness|obs2|ideal|lemmas|all")
      ->required();
  verify->add_option("--max-n", cfg.max_n, "exhaustive enumeration bound (default 5, cap 6)");
  verify->add_option("--workers", cfg.workers, "worker threads");
  verify->add_option("--format", format_name, "text|csv");
  verify->add_option("--seed", cfg.seed, "seed for the sampled lemma scopes");
  verify->add_option("--cap-opens", cfg.cap_opens, "cap for open-set oracles");

  // search
  std::string search_ante, search_cons, quantifier_name = "exists";
  int search_max_n = 4;
  bool search_canonical = false;
  auto* search = app.add_subcommand("search",
                                    "hunt for counterexamples to antecedent => consequent");
  search->add_option("antecedent", search_ante)->required();
  search->add_option("consequent", search_cons)->required();
  search->add_option("--max-n", search_max_n, "enumeration bound (cap 6)");
  search->add_option("--quantifier", quantifier_name,
                     "exists: first failing subset per space; forall: every failing subset");
  search->add_flag("--canonical", search_canonical, "one witness per homeomorphism class");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(validate_path, show_opens, cap_opens);
    if (*op) return cmd_op(op_path, op_name, op_subset);
    if (*khalimsky) return cmd_khalimsky(win_a, win_b);
    if (*prod) return cmd_product(prod_a, prod_b);
    if (*enumerate) return cmd_enumerate(enum_n, enum_filter, enum_canonical, enum_compact,
                                         enum_count);
    if (*verify) {
      if (format_name == "csv") {
        cfg.format = topo::RunConfig::Format::Csv;
      } else if (format_name != "text") {
        std::cerr << "error: --format must be text or csv\n";
        return kExitUsage;
      }
      return cmd_verify(verify_suite, cfg);
    }
    if (*search) {
      return cmd_search(search_ante, search_cons, search_max_n, quantifier_name,
                        search_canonical);
    }
  } catch (const topo::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
