#ifndef CLIFFSYM_MULTIVECTOR_HPP
#define CLIFFSYM_MULTIVECTOR_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>

#include <Eigen/Dense>

#include "cliffsym/blade.hpp"
#include "cliffsym/signature.hpp"

namespace cliffsym {

using Complex = std::complex<double>;

/// Selects a set of grades 0..n: a single grade, the even or odd part, or an
/// explicit subset. Explicitly named grades are validated against the algebra
/// dimension when the selector is applied.
class GradeSelector {
public:
  static GradeSelector single(int k);
  static GradeSelector even();
  static GradeSelector odd();
  static GradeSelector subset(std::initializer_list<int> grades);

  bool selects(int grade) const { return (bits_ >> grade) & 1u; }

  /// Throws if an explicitly named grade exceeds n.
  void validate(int n) const;

private:
  GradeSelector(std::uint16_t bits, bool explicit_grades)
      : bits_(bits), explicit_grades_(explicit_grades) {}

  std::uint16_t bits_;
  bool explicit_grades_;
};

/// Element of the complex Clifford algebra Cl(p,q): a dense vector of 2^n
/// complex coefficients, entry m being the coefficient of the basis blade
/// with bitmask m. Values are immutable after construction; all operations
/// below are pure and return new values.
class Multivector {
public:
  /// The zero element of Cl(p,q).
  explicit Multivector(const Signature& sig)
      : sig_(sig), coeffs_(Eigen::VectorXcd::Zero(sig.blade_count())) {}

  /// Wraps a full coefficient vector. Throws unless it has exactly 2^n
  /// finite entries.
  Multivector(const Signature& sig, Eigen::VectorXcd coeffs);

  /// The identity element e.
  static Multivector unit(const Signature& sig);

  /// c times a single basis blade.
  static Multivector basis(const Signature& sig, Blade b, Complex c = 1.0);

  const Signature& sig() const { return sig_; }
  int dim() const { return sig_.blade_count(); }
  Complex coeff(Blade b) const { return coeffs_[b.mask]; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }

private:
  Signature sig_;
  Eigen::VectorXcd coeffs_;
};

// Vector-space structure. Mixed-signature operands throw.
Multivector operator+(const Multivector& u, const Multivector& v);
Multivector operator-(const Multivector& u, const Multivector& v);
Multivector operator-(const Multivector& u);
Multivector operator*(Complex lambda, const Multivector& u);
Multivector operator*(const Multivector& u, Complex lambda);

/// Clifford product: bilinear extension of blade_mul over all coefficient
/// pairs. Signs are exact; only coefficient arithmetic rounds.
Multivector operator*(const Multivector& u, const Multivector& v);

/// Exact coefficientwise equality (and equal signature).
bool operator==(const Multivector& u, const Multivector& v);
inline bool operator!=(const Multivector& u, const Multivector& v) {
  return !(u == v);
}

/// Zeroes every coefficient whose blade grade is not selected. Idempotent.
Multivector grade_project(const Multivector& u, const GradeSelector& sel);

/// dim Cl_k(p,q) = C(n,k).
std::int64_t dim_grade(const Signature& sig, int k);

/// Sum of C(n,k) over the selected grades.
std::int64_t dim_grade(const Signature& sig, const GradeSelector& sel);

/// Projection onto the scalar part: the coefficient of the identity blade.
Complex trace(const Multivector& u);

/// Hermitian conjugation: e^{i_1...i_k} -> e_{i_k}...e_{i_1} (an exact per-
/// blade sign) with complex-conjugated coefficients. Antilinear involution
/// with (UV)^dagger = V^dagger U^dagger.
Multivector dagger(const Multivector& u);

/// Pseudo-Hermitian conjugation on Cl(1,3): U* = e^0 U^dagger e^0. Defined
/// only for signature (1,3); other signatures throw.
Multivector star(const Multivector& u);

/// Hermitian scalar product (U,V) = Tr(V^dagger U). The basis blades are
/// orthonormal with respect to it.
Complex scalar_product(const Multivector& u, const Multivector& v);

/// Canonical norm: sqrt of the sum of squared coefficient moduli. Equals
/// sqrt((U,U)) up to roundoff and is positive definite.
double norm(const Multivector& u);

} // namespace cliffsym

#endif
