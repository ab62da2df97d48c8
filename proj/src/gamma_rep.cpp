#include "cliffsym/gamma_rep.hpp"

#include <stdexcept>

namespace cliffsym {

namespace {

const Signature kSig13{1, 3};
constexpr Complex kI{0.0, 1.0};

std::array<Matrix4c, 4> canonical_generators() {
  std::array<Matrix4c, 4> g;
  g[0] << 0, 0, kI, 0,
          0, 0, 0, kI,
          -kI, 0, 0, 0,
          0, -kI, 0, 0;
  g[1] << 0, -kI, 0, 0,
          -kI, 0, 0, 0,
          0, 0, 0, kI,
          0, 0, kI, 0;
  g[2] << 0, 0, kI, 0,
          0, 0, 0, kI,
          kI, 0, 0, 0,
          0, kI, 0, 0;
  g[3] << -kI, 0, 0, 0,
          0, kI, 0, 0,
          0, 0, kI, 0,
          0, 0, 0, -kI;
  return g;
}

void check_square(const Eigen::MatrixXcd& m, const char* who) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

void check_even(const Eigen::MatrixXcd& m, const char* who) {
  check_square(m, who);
  if (m.rows() % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": dimension must be even");
}

} // namespace

GammaTable::GammaTable() : GammaTable(canonical_generators()) {}

GammaTable::GammaTable(const std::array<Matrix4c, 4>& generators) {
  blades_[0] = Matrix4c::Identity();
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    // gamma(e^{a_1...a_k}) with ascending labels: the lowest label is the
    // leftmost factor.
    const int lo = std::countr_zero(mask);
    blades_[mask] = generators[lo] * blades_[mask & (mask - 1)];
  }
}

const Matrix4c& GammaTable::generator(int a) const {
  if (a < 0 || a > 3)
    throw std::out_of_range("GammaTable::generator: label must be 0..3");
  return blades_[1u << a];
}

const Matrix4c& GammaTable::blade_matrix(Blade b) const {
  check_blade(b, kSig13, "GammaTable::blade_matrix");
  return blades_[b.mask];
}

Matrix4c GammaTable::rep(const Multivector& u) const {
  if (u.sig() != kSig13)
    throw std::invalid_argument("GammaTable::rep: representation is defined only for Cl(1,3)");
  Matrix4c m = Matrix4c::Zero();
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    const Complex c = u.coeffs()[mask];
    if (c != 0.0) m += c * blades_[mask];
  }
  return m;
}

Multivector GammaTable::rep_inverse(const Eigen::MatrixXcd& m) const {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("GammaTable::rep_inverse: matrix must be 4x4");
  Eigen::VectorXcd coeffs(16);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    // (1/4) tr(gamma((e^A)^dagger) M); the dagger of a blade is an exact sign
    // times the blade itself.
    const double sign = dagger_sign(Blade{mask}, kSig13);
    coeffs[mask] = 0.25 * sign * (blades_[mask] * m).trace();
  }
  return {kSig13, std::move(coeffs)};
}

const GammaTable& gamma_table() {
  static const GammaTable table;
  return table;
}

Matrix4c gamma(const Multivector& u) { return gamma_table().rep(u); }

Multivector gamma_inverse(const Eigen::MatrixXcd& m) {
  return gamma_table().rep_inverse(m);
}

Eigen::MatrixXcd symplectic_form(int dim) {
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("symplectic_form: dimension must be even and positive");
  const int half = dim / 2;
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(dim, dim);
  j.topRightCorner(half, half) = -Eigen::MatrixXcd::Identity(half, half);
  j.bottomLeftCorner(half, half) = Eigen::MatrixXcd::Identity(half, half);
  return j;
}

Matrix4c symplectic_form4() {
  static const Matrix4c j = symplectic_form(4);
  return j;
}

Matrix4c matrix_star_relation(const Eigen::MatrixXcd& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("matrix_star_relation: matrix must be 4x4");
  const Matrix4c j = symplectic_form4();
  return -j * m.transpose() * j;
}

double realness_residual(const Eigen::MatrixXcd& m) {
  return m.imag().norm();
}

double symplectic_residual(const Eigen::MatrixXcd& m) {
  check_even(m, "symplectic_residual");
  const Eigen::MatrixXcd j = symplectic_form(static_cast<int>(m.rows()));
  return (m.transpose() * j * m - j).norm();
}

double sp_algebra_residual(const Eigen::MatrixXcd& m) {
  check_even(m, "sp_algebra_residual");
  const Eigen::MatrixXcd j = symplectic_form(static_cast<int>(m.rows()));
  return (m.transpose() * j + j * m).norm();
}

bool is_symplectic(const Eigen::MatrixXcd& m, double tol) {
  return symplectic_residual(m) <= tol && realness_residual(m) <= tol;
}

bool is_sp_algebra(const Eigen::MatrixXcd& m, double tol) {
  return sp_algebra_residual(m) <= tol && realness_residual(m) <= tol;
}

Eigen::MatrixXcd PseudoUnitaryMetric::matrix() const {
  if (r < 0 || s < 0 || r + s < 1)
    throw std::invalid_argument("PseudoUnitaryMetric: need r,s >= 0 and r+s >= 1");
  Eigen::VectorXcd diag(r + s);
  for (int i = 0; i < r + s; ++i) diag[i] = i < r ? 1.0 : -1.0;
  return diag.asDiagonal();
}

double pseudo_unitarity_residual(const Eigen::MatrixXcd& m,
                                 const Eigen::MatrixXcd& metric) {
  check_square(m, "pseudo_unitarity_residual");
  if (metric.rows() != m.rows() || metric.cols() != m.cols())
    throw std::invalid_argument("pseudo_unitarity_residual: metric dimension mismatch");
  return (m.adjoint() * metric * m - metric).norm();
}

bool is_pseudounitary(const Eigen::MatrixXcd& m, const PseudoUnitaryMetric& beta,
                      double tol) {
  return pseudo_unitarity_residual(m, beta.matrix()) <= tol;
}

bool is_special_pseudounitary(const Eigen::MatrixXcd& m,
                              const PseudoUnitaryMetric& beta, double tol) {
  return is_pseudounitary(m, beta, tol) &&
         std::abs(matrix_det(m) - Complex{1.0, 0.0}) <= tol;
}

Complex matrix_det(const Eigen::MatrixXcd& m) {
  check_square(m, "matrix_det");
  return m.partialPivLu().determinant();
}

} // namespace cliffsym
