#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordforge/bachmann.hpp"
#include "ordforge/denotation.hpp"
#include "ordforge/dilator_checks.hpp"
#include "ordforge/harness.hpp"
#include "ordforge/omega_tower.hpp"
#include "ordforge/parser.hpp"
#include "ordforge/searchtree.hpp"

namespace {

using namespace ordforge;

constexpr int kExitParseFailure = 3;
constexpr int kExitCheckFailure = 4;

int default_bound() {
  if (const char* env = std::getenv("ORDFORGE_DEFAULT_BOUND")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 4;
}

struct Options {
  std::string system = "eps";
  std::string base = "fin:0";
  int bound = default_bound();
  unsigned long seed = 0;
  std::string format = "text";
};

TermPtr parse_for(const SystemInfo& sys, const BaseOrder& base,
                  const std::string& text) {
  TermPtr raw = parse_term(text);
  TermPtr t = sys.normalize ? sys.normalize(base, raw) : raw;
  sys.validate(base, t);
  return t;
}

std::shared_ptr<Functor> functor_by_id(const std::string& id) {
  if (id == "id") return identity_functor();
  if (id == "const2") return constant_functor(2);
  if (id == "exp2") return exp2_functor();
  if (id == "eps") return eps_functor();
  if (id == "phi") return phi_functor();
  throw ValidationError("unknown functor '" + id +
                        "'; known: id const2 exp2 eps phi");
}

void print_reports(const std::vector<CheckReport>& reports,
                   const std::string& format) {
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(nlohmann::json::parse(r.to_json()));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.to_text() << "\n";
  }
}

int run_checks(const std::vector<CheckReport>& reports,
               const std::string& format) {
  print_reports(reports, format);
  for (const auto& r : reports)
    if (!r.pass) return kExitCheckFailure;
  return 0;
}

int cmd_parse(const Options& opt, const std::string& input) {
  const SystemInfo& sys = find_system(opt.system);
  BaseOrder base = BaseOrder::parse(opt.base);
  TermPtr t = parse_for(sys, base, input);
  if (opt.format == "json") {
    nlohmann::json j;
    j["system"] = sys.id;
    j["term"] = print_term(t);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << print_term(t) << "\n";
  }
  return 0;
}

int cmd_cmp(const Options& opt, const std::string& lhs,
            const std::string& rhs) {
  const SystemInfo& sys = find_system(opt.system);
  BaseOrder base = BaseOrder::parse(opt.base);
  TermPtr s = parse_for(sys, base, lhs);
  TermPtr t = parse_for(sys, base, rhs);
  Ord r = sys.compare(base, s, t);
  if (opt.format == "json") {
    nlohmann::json j;
    j["lhs"] = print_term(s);
    j["rhs"] = print_term(t);
    j["ord"] = to_string(r);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(r) << "\n";
  }
  switch (r) {
    case Ord::Less: return 0;
    case Ord::Equal: return 1;
    default: return 2;
  }
}

int cmd_enumerate(const Options& opt) {
  const SystemInfo& sys = find_system(opt.system);
  BaseOrder base = BaseOrder::parse(opt.base);
  Fragment frag = build_fragment(sys, base, opt.bound);
  if (opt.format == "json") {
    nlohmann::json j;
    j["system"] = frag.system;
    j["base"] = frag.base;
    j["bound"] = frag.bound;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : frag.terms) j["terms"].push_back(print_term(t));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& t : frag.terms) std::cout << print_term(t) << "\n";
  }
  return 0;
}

int cmd_check(const Options& opt, const std::string& suite) {
  std::vector<const SystemInfo*> systems;
  if (suite == "all") {
    for (const auto& s : system_registry()) systems.push_back(&s);
  } else {
    systems.push_back(&find_system(suite));
  }
  std::vector<CheckReport> reports;
  for (const auto* sys : systems) {
    BaseOrder base = sys->uses_base ? BaseOrder::parse(opt.base)
                                    : BaseOrder::finite(0);
    Fragment frag = build_fragment(*sys, base, opt.bound);
    auto cmp = [sys, base](const TermPtr& a, const TermPtr& b) {
      return sys->compare(base, a, b);
    };
    reports.push_back(check_order_axioms(frag, cmp, opt.seed));
    reports.push_back(descent_fuzz(frag, cmp, 200, opt.seed));
  }
  return run_checks(reports, opt.format);
}

int cmd_dilcheck(const Options& opt, const std::string& functor_id) {
  auto F = functor_by_id(functor_id);
  int max_order = std::min(opt.bound, 3);
  std::vector<CheckReport> reports;
  reports.push_back(check_functor_laws(*F, max_order, opt.bound));

  CheckReport nat;
  nat.check = "supp-naturality";
  nat.system = F->name();
  nat.bound = max_order;
  nat.pass = true;
  for (int m = 0; m <= max_order && nat.pass; ++m)
    for (int n = m; n <= max_order && nat.pass; ++n)
      for (const auto& f : all_morphisms(m, n)) {
        std::string witness;
        if (!check_supp_naturality(*F, f, opt.bound, &witness)) {
          nat.pass = false;
          nat.witnesses.push_back(witness);
          break;
        }
      }
  reports.push_back(nat);

  CheckReport range;
  range.check = "range-condition";
  range.system = F->name();
  range.bound = max_order;
  range.pass = true;
  for (int n = 0; n <= max_order && range.pass; ++n)
    for (int a = 0; a <= n && range.pass; ++a)
      for (int b = 0; b <= n && range.pass; ++b)
        for (const auto& f : all_morphisms(a, n)) {
          for (const auto& g : all_morphisms(b, n)) {
            auto [d, h] = pullback(f, g);
            std::string witness;
            if (!check_range_condition(*F, f, g, h, opt.bound, &witness)) {
              range.pass = false;
              range.witnesses.push_back(witness);
              break;
            }
          }
          if (!range.pass) break;
        }
  reports.push_back(range);

  return run_checks(reports, opt.format);
}

int cmd_fuzz(const Options& opt, int trials) {
  const SystemInfo& sys = find_system(opt.system);
  BaseOrder base = sys.uses_base ? BaseOrder::parse(opt.base)
                                 : BaseOrder::finite(0);
  Fragment frag = build_fragment(sys, base, opt.bound);
  auto cmp = [&sys, &base](const TermPtr& a, const TermPtr& b) {
    return sys.compare(base, a, b);
  };
  return run_checks({descent_fuzz(frag, cmp, trials, opt.seed)}, opt.format);
}

int cmd_tree(const std::string& goal, const std::string& tmpl, int depth,
             int witness_bound) {
  Sequent root;
  if (!goal.empty()) root.push_back(parse_formula(goal));
  FormulaPtr C = parse_formula(tmpl);
  ChainTree tree = build_tree(root, C, depth, witness_bound);
  std::cout << tree.to_json() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal notation workbench"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--system", opt.system, "notation system id");
  app.add_option("--base", opt.base, "base order: fin:N, omega, list:[a,b,c]");
  app.add_option("--bound", opt.bound, "size bound")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string input, lhs, rhs, suite = "all", functor_id = "eps";
  std::string goal, tmpl = "eq(0,0)";
  int trials = 1000, depth = 6, witness_bound = 2;

  auto* parse_cmd = app.add_subcommand("parse", "parse and print canonically");
  parse_cmd->add_option("term", input)->required();

  auto* cmp_cmd = app.add_subcommand("cmp", "compare two terms");
  cmp_cmd->add_option("lhs", lhs)->required();
  cmp_cmd->add_option("rhs", rhs)->required();

  auto* norm_cmd = app.add_subcommand("normalize", "normalize a term");
  norm_cmd->add_option("term", input)->required();

  app.add_subcommand("enumerate", "list the fragment ascending");

  auto* check_cmd = app.add_subcommand("check", "run property suites");
  check_cmd->add_option("suite", suite, "system id or 'all'");

  auto* dil_cmd = app.add_subcommand("dilcheck", "verify dilator conditions");
  dil_cmd->add_option("functor", functor_id, "functor id");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded descent fuzzing");
  fuzz_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);

  auto* tree_cmd = app.add_subcommand("tree", "build a deduction-chain tree");
  tree_cmd->add_option("--goal", goal, "root formula (empty for empty root)");
  tree_cmd->add_option("--template", tmpl, "axiom template C(X)");
  tree_cmd->add_option("--depth", depth)->check(CLI::PositiveNumber);
  tree_cmd->add_option("--witness-bound", witness_bound)
      ->check(CLI::PositiveNumber);

  // global flags may follow the subcommand, per the documented usage
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) return cmd_parse(opt, input);
    if (cmp_cmd->parsed()) return cmd_cmp(opt, lhs, rhs);
    if (norm_cmd->parsed()) return cmd_parse(opt, input);
    if (app.got_subcommand("enumerate")) return cmd_enumerate(opt);
    if (check_cmd->parsed()) return cmd_check(opt, suite);
    if (dil_cmd->parsed()) return cmd_dilcheck(opt, functor_id);
    if (fuzz_cmd->parsed()) return cmd_fuzz(opt, trials);
    if (tree_cmd->parsed()) return cmd_tree(goal, tmpl, depth, witness_bound);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseFailure;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseFailure;
  }
  return 0;
}
