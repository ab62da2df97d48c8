#ifndef CLIFFSYM_GAMMA_REP_HPP
#define CLIFFSYM_GAMMA_REP_HPP

#include <array>

#include <Eigen/Dense>

#include "cliffsym/multivector.hpp"

namespace cliffsym {

using Matrix4c = Eigen::Matrix4cd;

/// The fixed faithful representation gamma : Cl(1,3) -> Mat(4,C).
///
/// The four generator matrices are a Majorana-type choice in which every
/// i*gamma^a is real, so the subspace of even-grade real plus odd-grade
/// imaginary elements maps exactly onto Mat(4,R). The 16 blade matrices
/// gamma(e^A) are the ascending-order generator products; all their entries
/// lie in {0, +-1, +-i}.
///
/// A table constructed from custom generators performs no validation, which
/// lets the verification suite run against deliberately corrupted inputs.
class GammaTable {
public:
  /// The canonical generator matrices.
  GammaTable();

  /// Derives the 16 blade matrices from arbitrary generator candidates.
  explicit GammaTable(const std::array<Matrix4c, 4>& generators);

  const Matrix4c& generator(int a) const;

  /// gamma(e^A) for the blade with the given mask (0..15).
  const Matrix4c& blade_matrix(Blade b) const;

  /// Linear extension: gamma(u) = sum_A u_A gamma(e^A). Requires sig (1,3).
  Matrix4c rep(const Multivector& u) const;

  /// Inverse map via trace projection: u_A = (1/4) tr(gamma((e^A)^dagger) M).
  /// Throws unless M is 4x4.
  Multivector rep_inverse(const Eigen::MatrixXcd& m) const;

private:
  std::array<Matrix4c, 16> blades_;
};

/// The canonical table, built once.
const GammaTable& gamma_table();

/// gamma(u) under the canonical table.
Matrix4c gamma(const Multivector& u);

/// gamma^{-1}(M) under the canonical table.
Multivector gamma_inverse(const Eigen::MatrixXcd& m);

/// The symplectic form J = ((0, -I_m), (I_m, 0)) of even dimension, with
/// J^2 = -1 and J^T = -J. For dim 4 it equals i*gamma(e^0).
Eigen::MatrixXcd symplectic_form(int dim);
Matrix4c symplectic_form4();

/// The matrix side of pseudo-Hermitian conjugation: M -> -J M^T J. For every
/// u whose representation is real, gamma(star(u)) equals this applied to
/// gamma(u).
Matrix4c matrix_star_relation(const Eigen::MatrixXcd& m);

/// Frobenius norm of the imaginary part.
double realness_residual(const Eigen::MatrixXcd& m);

/// ||M^T J M - J||_F. Throws on odd dimension.
double symplectic_residual(const Eigen::MatrixXcd& m);

/// ||M^T J + J M||_F. Throws on odd dimension.
double sp_algebra_residual(const Eigen::MatrixXcd& m);

/// Sp(dim,R) membership: real entries and M^T J M = J, both within tol.
bool is_symplectic(const Eigen::MatrixXcd& m, double tol);

/// sp(dim,R) membership: real entries and M^T J = -J M, both within tol.
bool is_sp_algebra(const Eigen::MatrixXcd& m, double tol);

/// Diagonal pseudo-unitary metric beta = diag(+1 x r, -1 x s).
struct PseudoUnitaryMetric {
  int r;
  int s;
  Eigen::MatrixXcd matrix() const;
};

/// ||M^dagger B M - B||_F for an arbitrary metric matrix B (diagonal beta or
/// a twisted metric such as gamma^0). Throws on dimension mismatch.
double pseudo_unitarity_residual(const Eigen::MatrixXcd& m,
                                 const Eigen::MatrixXcd& metric);

/// U(r,s) membership: M^dagger beta M = beta within tol.
bool is_pseudounitary(const Eigen::MatrixXcd& m, const PseudoUnitaryMetric& beta,
                      double tol);

/// SU(r,s) membership: additionally |det M - 1| <= tol.
bool is_special_pseudounitary(const Eigen::MatrixXcd& m,
                              const PseudoUnitaryMetric& beta, double tol);

/// Determinant via LU with partial pivoting.
Complex matrix_det(const Eigen::MatrixXcd& m);

} // namespace cliffsym

#endif
