#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cliffsym/expr.hpp"
#include "cliffsym/gamma_rep.hpp"
#include "cliffsym/io.hpp"
#include "cliffsym/lie_sets.hpp"
#include "cliffsym/verify.hpp"

using namespace cliffsym;

namespace {

Signature parse_sig(const std::string& text) {
  int p = 0;
  int q = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%d,%d%c", &p, &q, &extra) != 2)
    throw std::invalid_argument("--sig expects 'p,q', e.g. --sig 1,3");
  return Signature(p, q);
}

CliffordSetKind parse_set(const std::string& name) {
  if (name == "W") return CliffordSetKind::PseudoUnitaryGroup;
  if (name == "SW") return CliffordSetKind::SpecialPseudoUnitaryGroup;
  if (name == "w") return CliffordSetKind::PseudoUnitaryAlgebra;
  if (name == "sw") return CliffordSetKind::SpecialPseudoUnitaryAlgebra;
  if (name == "Sp") return CliffordSetKind::SymplecticGroup;
  if (name == "sp") return CliffordSetKind::SymplecticAlgebra;
  throw std::invalid_argument("--set must be one of W, SW, w, sw, Sp, sp");
}

void emit_multivector(const Multivector& u, bool json) {
  if (json)
    std::cout << to_json(u).dump(2) << "\n";
  else
    std::cout << print_multivector(u) << "\n";
}

void emit_complex(Complex z, bool json) {
  if (json)
    std::cout << Json::array({z.real(), z.imag()}).dump() << "\n";
  else
    std::cout << format_complex(z) << "\n";
}

void emit_matrix(const Eigen::MatrixXcd& m, bool json) {
  if (json)
    std::cout << to_json(m).dump(2) << "\n";
  else
    std::cout << print_matrix(m);
}

void emit_membership(const MembershipReport& report, bool json) {
  if (json) {
    std::cout << to_json(report).dump(2) << "\n";
    return;
  }
  std::cout << "member: " << (report.member ? "true" : "false") << "\n";
  std::cout << "tolerance: " << format_real(report.tolerance) << "\n";
  for (const auto& [name, value] : report.residuals)
    std::cout << name << ": " << format_real(value) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebra calculator: Cl(p,q) arithmetic, conjugations, "
               "the symplectic subsets of Cl(1,3), the 4x4 matrix "
               "representation, and a verification suite for the Sp(4,R) "
               "correspondence"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string sig_text = "1,3";
  bool json = false;
  app.add_option("--sig", sig_text, "algebra signature as p,q")
      ->capture_default_str();
  app.add_flag("--json", json, "emit machine-readable JSON");

  std::string expr_a;
  std::string expr_b;
  std::string set_name;
  std::string matrix_path;
  double exp_tol = 1e-12;
  double member_tol = 1e-9;
  double verify_tol = 1e-9;
  std::uint64_t seed = 42;
  int trials = 200;

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  eval_cmd->add_option("expr", expr_a, "multivector expression")->required();

  CLI::App* dagger_cmd =
      app.add_subcommand("dagger", "Hermitian conjugation U^+");
  dagger_cmd->add_option("expr", expr_a, "multivector expression")->required();

  CLI::App* star_cmd =
      app.add_subcommand("star", "conjugation U* = e0 U^+ e0 (Cl(1,3) only)");
  star_cmd->add_option("expr", expr_a, "multivector expression")->required();

  CLI::App* tr_cmd = app.add_subcommand("tr", "trace (scalar part)");
  tr_cmd->add_option("expr", expr_a, "multivector expression")->required();

  CLI::App* dot_cmd =
      app.add_subcommand("dot", "scalar product (U,V) = Tr(V^+ U)");
  dot_cmd->add_option("expr", expr_a, "left operand")->required();
  dot_cmd->add_option("expr2", expr_b, "right operand")->required();

  CLI::App* exp_cmd = app.add_subcommand("exp", "exponential series");
  exp_cmd->add_option("expr", expr_a, "multivector expression")->required();
  exp_cmd->add_option("--tol", exp_tol, "series truncation tolerance")
      ->capture_default_str();

  CLI::App* member_cmd = app.add_subcommand(
      "member", "membership test; exits 0 for members, 1 otherwise");
  member_cmd->add_option("expr", expr_a, "multivector expression")->required();
  member_cmd->add_option("--set", set_name, "one of W, SW, w, sw, Sp, sp")
      ->required();
  member_cmd->add_option("--tol", member_tol, "residual tolerance")
      ->capture_default_str();

  CLI::App* rep_cmd =
      app.add_subcommand("rep", "4x4 matrix representation (Cl(1,3) only)");
  rep_cmd->add_option("expr", expr_a, "multivector expression")->required();

  CLI::App* invrep_cmd = app.add_subcommand(
      "invrep", "inverse representation of a serialized 4x4 matrix");
  invrep_cmd->add_option("matrix", matrix_path, "path to a matrix JSON file")
      ->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the theorem suite; exits 0 on pass, 1 on fail");
  verify_cmd->add_option("--seed", seed, "suite seed")->capture_default_str();
  verify_cmd->add_option("--trials", trials, "trials per randomized check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--tol", verify_tol, "membership tolerance")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Signature sig = parse_sig(sig_text);
    if (*eval_cmd) {
      emit_multivector(parse_expression(expr_a, sig), json);
    } else if (*dagger_cmd) {
      emit_multivector(dagger(parse_expression(expr_a, sig)), json);
    } else if (*star_cmd) {
      emit_multivector(star(parse_expression(expr_a, sig)), json);
    } else if (*tr_cmd) {
      emit_complex(trace(parse_expression(expr_a, sig)), json);
    } else if (*dot_cmd) {
      emit_complex(scalar_product(parse_expression(expr_a, sig),
                                  parse_expression(expr_b, sig)),
                   json);
    } else if (*exp_cmd) {
      emit_multivector(exp(parse_expression(expr_a, sig), exp_tol), json);
    } else if (*member_cmd) {
      const MembershipReport report =
          is_member(parse_expression(expr_a, sig), parse_set(set_name),
                    member_tol);
      emit_membership(report, json);
      return report.member ? 0 : 1;
    } else if (*rep_cmd) {
      emit_matrix(gamma(parse_expression(expr_a, sig)), json);
    } else if (*invrep_cmd) {
      std::ifstream in(matrix_path);
      if (!in)
        throw std::runtime_error("cannot open '" + matrix_path + "'");
      const Json j = Json::parse(in);
      emit_multivector(gamma_inverse(matrix_from_json(j)), json);
    } else if (*verify_cmd) {
      SuiteOptions options;
      options.seed = seed;
      options.tolerance = verify_tol;
      options.trials = trials;
      const VerificationReport report = run_theorem_suite(options);
      if (json)
        std::cout << to_json(report).dump(2) << "\n";
      else
        std::cout << report_text(report);
      return report.all_passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
