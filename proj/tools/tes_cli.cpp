// tes: exact computer algebra for tree-expanded series.
//
// Subcommands operate on planar binary trees (bitstring codec or the o/v
// expression grammar) and on truncated series documents in JSON. Exit codes:
// 0 ok, 1 verification/membership failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tes/hopf.hpp"
#include "tes/json_io.hpp"
#include "tes/series.hpp"
#include "tes/tree.hpp"
#include "tes/verify.hpp"

namespace {

using nlohmann::json;
using namespace tes;

struct CliError {
  std::string message;
  int exit_code;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{"cannot open '" + path + "'", 2};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A series argument is a path unless it looks like inline JSON.
GradedSeries load_series(const std::string& arg) {
  std::string text = !arg.empty() && arg.front() == '{' ? arg : slurp(arg);
  try {
    return series_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw CliError{std::string("series JSON: ") + e.what(), 2};
  } catch (const std::invalid_argument& e) {
    throw CliError{e.what(), 2};
  }
}

TreeId load_tree(const std::string& arg) {
  try {
    return parse_tree(arg);
  } catch (const TreeParseError& e) {
    throw CliError{"tree '" + arg + "': " + e.message + " at column " +
                       std::to_string(e.column),
                   2};
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw CliError{"cannot write '" + out_path + "'", 2};
    out << text;
  }
}

void emit_series(const GradedSeries& s, const std::string& format, const std::string& out_path) {
  emit(out_path, format == "json" ? series_to_json(s).dump(2) : s.str());
}

std::string tensor_text(const Tensor2& t) { return t.str(); }

struct AlgebraChoice {
  std::string name;  // inv-over, inv-under, dif, rho, alpha
};

Tensor2 algebra_coproduct(const std::string& algebra, TreeId t) {
  if (algebra == "inv-over") return coprod_inv(t, CombSide::Left);
  if (algebra == "inv-under") return coprod_inv(t, CombSide::Right);
  if (algebra == "dif") return coprod_dif(t);
  if (algebra == "rho") return coprod_rho(t);
  if (algebra == "alpha") {
    if (t != kLeaf && tree_left(t) != kLeaf)
      throw CliError{"alpha generators are the trees V(t); expected a leaf left child", 2};
    return coprod_alpha(t == kLeaf ? kLeaf : tree_right(t));
  }
  throw CliError{"unknown algebra '" + algebra + "'", 2};
}

AlgebraKind algebra_kind(const std::string& algebra) {
  if (algebra == "inv-over") return {HopfFamily::InvOver, false};
  if (algebra == "inv-under") return {HopfFamily::InvUnder, false};
  if (algebra == "dif") return {HopfFamily::DifY, false};
  if (algebra == "rho") return {HopfFamily::RhoY, false};
  if (algebra == "alpha") return {HopfFamily::AlphaY, false};
  throw CliError{"unknown algebra '" + algebra + "'", 2};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for tree-expanded series"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/-o may follow the subcommand

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", out_path, "output path (default stdout)");

  // trees
  auto* cmd_trees = app.add_subcommand("trees", "enumerate trees of a given order");
  int trees_order = 0;
  cmd_trees->add_option("--order", trees_order, "tree order")->required();

  // binary series operations
  std::string lhs, rhs, input;
  int max_order = -1;
  auto add_binary = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--lhs", lhs, "left operand (path or inline JSON)")->required();
    c->add_option("--rhs", rhs, "right operand (path or inline JSON)")->required();
    c->add_option("-N,--max-order", max_order, "output truncation override");
    return c;
  };
  auto* cmd_compose = add_binary("compose", "compose two operad-expanded series");
  auto* cmd_multiply = add_binary("multiply", "multiply two monoid-expanded series");
  auto* cmd_act = add_binary("act", "right action: lhs monoid series acted on by rhs");

  auto add_unary = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--input", input, "input series (path or inline JSON)")->required();
    c->add_option("-N,--max-order", max_order, "output truncation override");
    return c;
  };
  auto* cmd_invert = add_unary("invert", "invert an invertible-form monoid series");
  auto* cmd_comp_invert = add_unary("comp-invert", "compositional inverse of a diffeomorphism");
  auto* cmd_project = add_unary("project", "order projection onto series over the integers");
  auto* cmd_factor =
      add_unary("factor", "factor a tree diffeomorphism as (under comb) o (rho series)");

  // alpha
  auto* cmd_alpha = app.add_subcommand("alpha", "build or test G^alpha series");
  std::string alpha_member;
  cmd_alpha->add_option("--input", input, "tree-monoid series f; outputs alpha_f");
  cmd_alpha->add_option("--member", alpha_member, "series to test for membership");
  cmd_alpha->add_option("-N,--max-order", max_order, "output truncation");

  // section
  auto* cmd_section = app.add_subcommand("section", "comb section of an As-expanded series");
  std::string side = "over", kind = "inv";
  cmd_section->add_option("--input", input, "input series")->required();
  cmd_section->add_option("--side", side, "comb side")->check(CLI::IsMember({"over", "under"}));
  cmd_section->add_option("--kind", kind, "series kind")->check(CLI::IsMember({"inv", "dif"}));

  // coproduct / antipode
  std::string algebra = "dif", tree_arg;
  auto* cmd_coproduct = app.add_subcommand("coproduct", "coproduct of a tree generator");
  cmd_coproduct->add_option("--algebra", algebra, "coproduct family")
      ->check(CLI::IsMember({"inv-over", "inv-under", "dif", "rho", "alpha"}));
  cmd_coproduct->add_option("--tree", tree_arg, "generator (bitstring or expression)")
      ->required();
  auto* cmd_antipode = app.add_subcommand("antipode", "antipode of a tree generator");
  cmd_antipode->add_option("--algebra", algebra, "coproduct family")
      ->check(CLI::IsMember({"inv-over", "inv-under", "dif", "rho", "alpha"}));
  cmd_antipode->add_option("--tree", tree_arg, "generator (bitstring or expression)")->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
  std::string suite = "all";
  int verify_n = 4;
  std::uint64_t seed = 42;
  cmd_verify->add_option("--suite", suite, "suite")
      ->check(CLI::IsMember({"trees", "groups", "hopf", "duality", "all"}));
  cmd_verify->add_option("-N,--max-order", verify_n, "truncation / sweep size");
  cmd_verify->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_trees) {
      if (trees_order < 0) throw CliError{"--order must be >= 0", 2};
      const std::vector<TreeId>& ts = trees_of_order(trees_order);
      if (format == "json") {
        json arr = json::array();
        for (TreeId t : ts) arr.push_back(tree_code(t));
        emit(out_path, arr.dump(2));
      } else {
        std::string text;
        for (TreeId t : ts) text += tree_code(t) + "\n";
        emit(out_path, text);
      }
      return 0;
    }
    auto truncate_to = [&](GradedSeries s) {
      if (max_order < 0 || max_order >= s.truncation()) return s;
      GradedSeries out(s.carrier(), max_order);
      for (const auto& [k, v] : s.terms())
        if (s.key_grading(k) <= max_order) out.set_coeff(k, v);
      return out;
    };
    if (*cmd_compose || *cmd_multiply || *cmd_act) {
      GradedSeries a = truncate_to(load_series(lhs));
      GradedSeries b = truncate_to(load_series(rhs));
      GradedSeries r = *cmd_compose ? compose(a, b)
                       : *cmd_multiply ? mul_monoid(a, b)
                                       : act(a, b);
      emit_series(truncate_to(std::move(r)), format, out_path);
      return 0;
    }
    if (*cmd_invert || *cmd_comp_invert || *cmd_project) {
      GradedSeries a = truncate_to(load_series(input));
      GradedSeries r = *cmd_invert ? inv_monoid(a)
                       : *cmd_comp_invert ? comp_inverse(a)
                                          : project_order(a);
      emit_series(std::move(r), format, out_path);
      return 0;
    }
    if (*cmd_factor) {
      UnderRhoFactorization fac = factor_under_rho(truncate_to(load_series(input)));
      if (format == "json") {
        json j;
        j["psi"] = series_to_json(fac.psi);
        j["g"] = series_to_json(fac.g);
        emit(out_path, j.dump(2));
      } else {
        emit(out_path, "psi: " + fac.psi.str() + "\ng:   " + fac.g.str());
      }
      return 0;
    }
    if (*cmd_alpha) {
      if (!alpha_member.empty()) {
        bool ok = alpha_membership(load_series(alpha_member));
        emit(out_path, ok ? "member" : "not a member");
        return ok ? 0 : 1;
      }
      if (input.empty()) throw CliError{"alpha needs --input or --member", 2};
      GradedSeries f = load_series(input);
      emit_series(alpha_from(f, max_order), format, out_path);
      return 0;
    }
    if (*cmd_section) {
      GradedSeries s = load_series(input);
      GradedSeries r = section_comb(s, side == "over" ? CombSide::Left : CombSide::Right,
                                    kind == "inv" ? SectionKind::Inv : SectionKind::Dif);
      emit_series(std::move(r), format, out_path);
      return 0;
    }
    if (*cmd_coproduct) {
      Tensor2 t = algebra_coproduct(algebra, load_tree(tree_arg));
      emit(out_path, format == "json" ? tensor_to_json(t).dump(2) : tensor_text(t));
      return 0;
    }
    if (*cmd_antipode) {
      AlgebraKind k = algebra_kind(algebra);
      TreeId t = load_tree(tree_arg);
      if (k.fam == HopfFamily::AlphaY && tree_left(t) != kLeaf)
        throw CliError{"alpha generators are the trees V(t)", 2};
      FreeElement s = antipode(k, t);
      emit(out_path, format == "json" ? free_element_to_json(s).dump(2) : s.str());
      return 0;
    }
    if (*cmd_verify) {
      verify::Options opt;
      opt.n = verify_n;
      opt.seed = seed;
      std::vector<verify::CheckResult> results = verify::run_suite(suite, opt);
      std::sort(results.begin(), results.end(),
                [](const auto& a, const auto& b) { return a.name < b.name; });
      std::ostringstream os;
      os << "suite: " << suite << "  N: " << verify_n << "  seed: " << seed << "\n";
      int failed = 0;
      for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.pass) {
          os << "  (" << r.detail << ")";
          ++failed;
        }
        os << "\n";
      }
      os << (failed == 0 ? "all checks passed"
                         : std::to_string(failed) + " check(s) failed")
         << " (" << results.size() << " total)\n";
      if (format == "json") {
        json j;
        j["suite"] = suite;
        j["n"] = verify_n;
        j["seed"] = seed;
        j["failed"] = failed;
        json arr = json::array();
        for (const auto& r : results)
          arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        j["checks"] = arr;
        emit(out_path, j.dump(2));
      } else {
        emit(out_path, os.str());
      }
      return failed == 0 ? 0 : 1;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const TreeParseError& e) {
    std::cerr << "error: " << e.message << " at column " << e.column << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
