#ifndef CLIFFSYM_LIE_SETS_HPP
#define CLIFFSYM_LIE_SETS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cliffsym/multivector.hpp"

namespace cliffsym {

/// Constraint on the coefficients of one grade: absent, real axis, imaginary
/// axis, or the full complex plane.
enum class GradeReality { Zero, Real, Imaginary, Complex };

/// Per-grade reality constraints describing a real-linear subspace of
/// Cl(p,q), e.g. "imaginary grade 1 plus real grade 2". This is the
/// grade-selector-with-reality form used for projections, leak residuals and
/// subspace sampling.
class RealityPattern {
public:
  /// One entry per grade 0..n.
  explicit RealityPattern(std::vector<GradeReality> by_grade);

  static RealityPattern all_complex(int n);

  GradeReality at(int grade) const;
  int max_grade() const { return static_cast<int>(by_grade_.size()) - 1; }

  /// Real dimension of the subspace: 0, C(n,k) or 2*C(n,k) per grade.
  std::int64_t real_dimension() const;

private:
  std::vector<GradeReality> by_grade_;
};

/// Componentwise projection of u onto the subspace described by the pattern.
Multivector project(const Multivector& u, const RealityPattern& pattern);

/// Canonical norm of the part of u outside the pattern subspace. Zero leak
/// means exact membership.
double grade_leak(const Multivector& u, const RealityPattern& pattern);

/// Seeded sample with each allowed real degree of freedom uniform in [-1,1).
/// Same seed, same output.
Multivector sample_pattern(const Signature& sig, const RealityPattern& pattern,
                           std::uint64_t seed);

// The grade/reality shapes of the Cl(1,3) Lie structures.
RealityPattern sp_algebra_pattern();   // i*grade1 + grade2
RealityPattern w_algebra_pattern();    // i*grade0 + i*grade1 + grade2 + grade3 + i*grade4
RealityPattern sw_algebra_pattern();   // w with the scalar part removed
RealityPattern real_matrix_pattern();  // even grades real, odd grades imaginary

/// The six Clifford-algebra subsets: the pseudo-unitary group W = {U : U*U = e}
/// and its algebra w = {U : U* = -U}, their unit-determinant / traceless
/// refinements SW and sw, and the symplectic pair Sp/sp obtained by
/// restricting to the real-matrix subspace. All are tied to Cl(1,3), where
/// the star conjugation is defined.
enum class CliffordSetKind {
  PseudoUnitaryGroup,          // W
  SpecialPseudoUnitaryGroup,   // SW
  PseudoUnitaryAlgebra,        // w
  SpecialPseudoUnitaryAlgebra, // sw
  SymplecticGroup,             // Sp
  SymplecticAlgebra,           // sp
};

/// Outcome of a membership check: named residual magnitudes against the
/// defining conditions, the tolerance used, and the verdict (member iff every
/// residual is within tolerance).
struct MembershipReport {
  bool member = false;
  double tolerance = 0.0;
  std::map<std::string, double> residuals;

  double max_residual() const;
};

/// [u,v] = uv - vu.
Multivector commutator(const Multivector& u, const Multivector& v);

/// Power-series exponential with scaling and squaring: v is halved until its
/// norm is at most 0.5, the series is summed until the term norm drops below
/// tol * max(1, partial sum norm), then the result is squared back up.
/// exp of zero is exactly e.
Multivector exp(const Multivector& v, double tol = 1e-12);

/// Det U = det(gamma(U)) under the fixed Cl(1,3) representation.
Complex det_clifford(const Multivector& u);

/// Evaluates the defining conditions of the given subset on u. Requires
/// signature (1,3).
MembershipReport is_member(const Multivector& u, CliffordSetKind kind,
                           double tol = 1e-9);

/// Seeded sampling of each subset: algebra kinds are drawn uniformly on their
/// defining real subspace, group kinds are exponentials of algebra samples.
Multivector sample(CliffordSetKind kind, std::uint64_t seed);

/// The ordered 10-element basis of sp(Cl(1,3)):
/// i e^0, i e^1, i e^2, i e^3, e^01, e^02, e^03, e^12, e^13, e^23.
const std::vector<Multivector>& sp_clifford_basis();

} // namespace cliffsym

#endif
