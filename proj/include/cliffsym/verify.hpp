#ifndef CLIFFSYM_VERIFY_HPP
#define CLIFFSYM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cliffsym/gamma_rep.hpp"
#include "cliffsym/lie_sets.hpp"

namespace cliffsym {

/// Description of one suite check: a stable name, the identity it tests in
/// plain ASCII math, whether it is exhaustive or randomized, and the
/// tolerance it is held to (0 for checks whose arithmetic is exact).
struct CheckSpec {
  std::string name;
  std::string statement;
  bool exhaustive = true;
  int trials = 1;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
};

struct CheckResult {
  CheckSpec spec;
  bool passed = false;
  double max_residual = 0.0;
  int trials_run = 0;
  double elapsed_seconds = 0.0; // informational; kept out of canonical output
};

/// Aggregated outcome of the full identity suite. Deterministic for a fixed
/// seed (timings aside).
struct VerificationReport {
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  int trials = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  double tolerance = 1e-9; // applied to the exponential-based group checks
  int trials = 200;
  const GammaTable* table = nullptr; // nullptr selects the canonical table
};

/// Runs the whole chain of identities behind the isomorphisms
/// Sp(Cl(1,3)) ~ Sp(4,R) and sp(Cl(1,3)) ~ sp(4,R), in a fixed order:
/// generator anticommutation, conjugation signs, realness of i*gamma^a,
/// blade-basis Gram identity, the symplectic form J, the exhaustive blade
/// homomorphism, the star/transpose relation, both isomorphism directions,
/// basis commutator closure, the inverse image of sp(4,R), and the grade
/// characterization of w. Failures are reported, never thrown.
VerificationReport run_theorem_suite(const SuiteOptions& options = {});

/// Seeded element of sp(4,R): J*S for a random real symmetric S, which
/// satisfies M^T J = -J M identically.
Matrix4c sample_sp4_matrix(std::uint64_t seed);

} // namespace cliffsym

#endif
