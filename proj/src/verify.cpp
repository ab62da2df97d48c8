#include "cliffsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "cliffsym/rng.hpp"

namespace cliffsym {

namespace {

const Signature kSig13{1, 3};
constexpr Complex kI{0.0, 1.0};
constexpr double kFloatTol = 1e-12; // for identities mixing float products

struct CheckOutcome {
  bool passed = false;
  double max_residual = 0.0;
  int trials_run = 0;
};

std::uint64_t check_seed(const SuiteOptions& opt, int check_index) {
  return opt.seed + 1000003ull * static_cast<std::uint64_t>(check_index);
}

double closure_residual(const Multivector& u) {
  // Real-span decomposition against the orthonormal 10-element basis.
  Multivector remainder = u;
  for (const Multivector& b : sp_clifford_basis())
    remainder = remainder - scalar_product(u, b).real() * b;
  return norm(remainder);
}

} // namespace

bool VerificationReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

Matrix4c sample_sp4_matrix(std::uint64_t seed) {
  SeededRng rng(seed);
  Eigen::Matrix4d s;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) s(i, j) = s(j, i) = rng.symmetric();
  const Eigen::Matrix4d j_real = symplectic_form4().real();
  return (j_real * s).cast<Complex>();
}

VerificationReport run_theorem_suite(const SuiteOptions& options) {
  const GammaTable& table = options.table ? *options.table : gamma_table();
  const Multivector e = Multivector::unit(kSig13);
  const Matrix4c j = symplectic_form4();
  const Matrix4c id = Matrix4c::Identity();

  VerificationReport report;
  report.seed = options.seed;
  report.tolerance = options.tolerance;
  report.trials = options.trials;

  auto run = [&](CheckSpec spec, auto&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    const CheckOutcome outcome = body();
    const auto t1 = std::chrono::steady_clock::now();
    CheckResult result;
    result.spec = std::move(spec);
    result.passed = outcome.passed;
    result.max_residual = outcome.max_residual;
    result.trials_run = outcome.trials_run;
    result.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    report.checks.push_back(std::move(result));
  };

  // 1: generator anticommutation, exact.
  run({"gamma_anticommutation",
       "gamma^a gamma^b + gamma^b gamma^a = 2 eta^{ab} 1 for a,b in 0..3"},
      [&] {
        CheckOutcome out;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) {
            const double eta = a == b ? kSig13.metric(a) : 0.0;
            const double r = (table.generator(a) * table.generator(b) +
                              table.generator(b) * table.generator(a) -
                              2.0 * eta * id)
                                 .norm();
            out.max_residual = std::max(out.max_residual, r);
          }
        out.passed = out.max_residual == 0.0;
        out.trials_run = 16;
        return out;
      });

  // 2: conjugation signs of the generators, exact.
  run({"gamma_hermiticity_signs",
       "gamma^0 is Hermitian and gamma^1, gamma^2, gamma^3 are anti-Hermitian"},
      [&] {
        CheckOutcome out;
        out.max_residual =
            (table.generator(0).adjoint() - table.generator(0)).norm();
        for (int k = 1; k < 4; ++k)
          out.max_residual = std::max(
              out.max_residual,
              (table.generator(k).adjoint() + table.generator(k)).norm());
        out.passed = out.max_residual == 0.0;
        out.trials_run = 4;
        return out;
      });

  // 3: the real form, exact.
  run({"gamma_real_form", "i gamma^a has real entries for a = 0..3"}, [&] {
    CheckOutcome out;
    for (int a = 0; a < 4; ++a)
      out.max_residual = std::max(
          out.max_residual, realness_residual(kI * table.generator(a)));
    out.passed = out.max_residual == 0.0;
    out.trials_run = 4;
    return out;
  });

  // 4: linear independence of the 16 blade matrices, exact.
  run({"blade_basis_gram_identity",
       "the quarter-trace Gram matrix of the 16 blade matrices is the identity"},
      [&] {
        CheckOutcome out;
        Eigen::MatrixXcd gram(16, 16);
        for (std::uint32_t a = 0; a < 16; ++a)
          for (std::uint32_t b = 0; b < 16; ++b)
            gram(a, b) = 0.25 * (table.blade_matrix(Blade{b}).adjoint() *
                                 table.blade_matrix(Blade{a}))
                                    .trace();
        out.max_residual = (gram - Eigen::MatrixXcd::Identity(16, 16)).norm();
        out.passed = out.max_residual == 0.0;
        out.trials_run = 256;
        return out;
      });

  // 5: the symplectic form, exact.
  run({"symplectic_form_identities", "J = i gamma^0, J^2 = -1, J^T = -J"}, [&] {
    CheckOutcome out;
    out.max_residual = (j - kI * table.generator(0)).norm();
    out.max_residual = std::max(out.max_residual, (j * j + id).norm());
    out.max_residual =
        std::max(out.max_residual, (j.transpose() + j).norm());
    out.passed = out.max_residual == 0.0;
    out.trials_run = 3;
    return out;
  });

  // 6: the representation is an algebra homomorphism on a spanning set.
  run({"blade_homomorphism",
       "gamma(e^A e^B) = gamma(e^A) gamma(e^B) for all 256 blade pairs",
       true, 256, 0, kFloatTol},
      [&] {
        CheckOutcome out;
        for (std::uint32_t a = 0; a < 16; ++a)
          for (std::uint32_t b = 0; b < 16; ++b) {
            const BladeProduct p = blade_mul(Blade{a}, Blade{b}, kSig13);
            const double r =
                (table.blade_matrix(Blade{a}) * table.blade_matrix(Blade{b}) -
                 static_cast<double>(p.sign) * table.blade_matrix(p.result))
                    .norm();
            out.max_residual = std::max(out.max_residual, r);
          }
        out.passed = out.max_residual <= kFloatTol;
        out.trials_run = 256;
        return out;
      });

  // 7: the matrix form of star on real-representation elements.
  run({"star_transpose_relation",
       "gamma(A*) = -J gamma(A)^T J for A in Cl^R_even + i Cl^R_odd", false,
       options.trials, check_seed(options, 7), kFloatTol},
      [&] {
        CheckOutcome out;
        const std::uint64_t base = check_seed(options, 7);
        for (int t = 0; t < options.trials; ++t) {
          const Multivector u =
              sample_pattern(kSig13, real_matrix_pattern(), base + t);
          const double r =
              (table.rep(star(u)) - matrix_star_relation(table.rep(u))).norm();
          out.max_residual = std::max(out.max_residual, r);
        }
        out.passed = out.max_residual <= kFloatTol;
        out.trials_run = options.trials;
        return out;
      });

  // 8: algebra direction of the isomorphism.
  run({"sp_algebra_direction",
       "gamma(v) is real and gamma(v)^T J + J gamma(v) = 0 for v in sp(Cl(1,3))",
       false, options.trials, check_seed(options, 8), kFloatTol},
      [&] {
        CheckOutcome out;
        const std::uint64_t base = check_seed(options, 8);
        for (int t = 0; t < options.trials; ++t) {
          const Multivector v =
              sample_pattern(kSig13, sp_algebra_pattern(), base + t);
          const Matrix4c m = table.rep(v);
          out.max_residual = std::max(out.max_residual, realness_residual(m));
          out.max_residual = std::max(out.max_residual, sp_algebra_residual(m));
        }
        out.passed = out.max_residual <= kFloatTol;
        out.trials_run = options.trials;
        return out;
      });

  // 9: group direction of the isomorphism.
  run({"sp_group_direction",
       "A = exp(v) satisfies A*A = e and gamma(A)^T J gamma(A) = J", false,
       options.trials, check_seed(options, 9), options.tolerance},
      [&] {
        CheckOutcome out;
        const std::uint64_t base = check_seed(options, 9);
        for (int t = 0; t < options.trials; ++t) {
          const Multivector v =
              sample_pattern(kSig13, sp_algebra_pattern(), base + t);
          const Multivector a = exp(v, 1e-12);
          out.max_residual =
              std::max(out.max_residual, norm(star(a) * a - e));
          out.max_residual =
              std::max(out.max_residual, symplectic_residual(table.rep(a)));
        }
        out.passed = out.max_residual <= options.tolerance;
        out.trials_run = options.trials;
        return out;
      });

  // 10: Lie closure of the 10-element basis, plus the dimension count.
  run({"sp_basis_commutator_closure",
       "commutators of the 10 sp(Cl(1,3)) basis elements stay in its real span",
       true, 45, 0, kFloatTol},
      [&] {
        CheckOutcome out;
        const auto& basis = sp_clifford_basis();
        for (std::size_t i = 0; i < basis.size(); ++i)
          for (std::size_t k = i + 1; k < basis.size(); ++k)
            out.max_residual =
                std::max(out.max_residual,
                         closure_residual(commutator(basis[i], basis[k])));
        const bool dims_match = basis.size() == 10 && 10 == 4 * 5 / 2;
        out.passed = out.max_residual <= kFloatTol && dims_match;
        out.trials_run = 45;
        return out;
      });

  // 11: reverse direction, sp(4,R) pulls back into i Cl^R_1 + Cl^R_2.
  run({"sp4_inverse_image",
       "gamma^{-1}(J S) lies in i Cl^R_1 + Cl^R_2 for real symmetric S", false,
       options.trials, check_seed(options, 11), kFloatTol},
      [&] {
        CheckOutcome out;
        const std::uint64_t base = check_seed(options, 11);
        for (int t = 0; t < options.trials; ++t) {
          const Multivector u =
              table.rep_inverse(sample_sp4_matrix(base + t));
          out.max_residual =
              std::max(out.max_residual, grade_leak(u, sp_algebra_pattern()));
        }
        out.passed = out.max_residual <= kFloatTol;
        out.trials_run = options.trials;
        return out;
      });

  // 12: the grade characterization of w, both directions. Pattern samples
  // must be star-antisymmetric exactly; star-antisymmetric projections of
  // arbitrary elements must land in the pattern.
  run({"w_grade_characterization",
       "w* = -w iff w in i Cl^R_0 + i Cl^R_1 + Cl^R_2 + Cl^R_3 + i Cl^R_4",
       false, options.trials, check_seed(options, 12), kFloatTol},
      [&] {
        CheckOutcome out;
        const std::uint64_t base = check_seed(options, 12);
        bool exact_ok = true;
        for (int t = 0; t < options.trials; ++t) {
          const Multivector w =
              sample_pattern(kSig13, w_algebra_pattern(), base + t);
          const double star_res = norm(star(w) + w);
          exact_ok = exact_ok && star_res == 0.0;
          const Multivector g = sample_pattern(
              kSig13, RealityPattern::all_complex(4), base + options.trials + t);
          const Multivector anti = 0.5 * (g - star(g));
          const double leak = grade_leak(anti, w_algebra_pattern());
          out.max_residual =
              std::max({out.max_residual, star_res, leak});
        }
        out.passed = exact_ok && out.max_residual <= kFloatTol;
        out.trials_run = options.trials;
        return out;
      });

  return report;
}

} // namespace cliffsym
