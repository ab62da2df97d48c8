#include "cliffsym/multivector.hpp"

#include <stdexcept>

namespace cliffsym {

namespace {

void require_same_signature(const Multivector& u, const Multivector& v,
                            const char* who) {
  if (u.sig() != v.sig())
    throw std::invalid_argument(std::string(who) + ": signature mismatch (" +
                                u.sig().str() + " vs " + v.sig().str() + ")");
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

GradeSelector GradeSelector::single(int k) {
  if (k < 0 || k > Signature::kMaxGenerators)
    throw std::invalid_argument("GradeSelector::single: grade out of range");
  return {static_cast<std::uint16_t>(1u << k), true};
}

GradeSelector GradeSelector::even() {
  std::uint16_t bits = 0;
  for (int k = 0; k <= Signature::kMaxGenerators; k += 2) bits |= 1u << k;
  return {bits, false};
}

GradeSelector GradeSelector::odd() {
  std::uint16_t bits = 0;
  for (int k = 1; k <= Signature::kMaxGenerators; k += 2) bits |= 1u << k;
  return {bits, false};
}

GradeSelector GradeSelector::subset(std::initializer_list<int> grades) {
  std::uint16_t bits = 0;
  for (int k : grades) {
    if (k < 0 || k > Signature::kMaxGenerators)
      throw std::invalid_argument("GradeSelector::subset: grade out of range");
    bits |= 1u << k;
  }
  return {bits, true};
}

void GradeSelector::validate(int n) const {
  if (explicit_grades_ && (bits_ >> (n + 1)) != 0)
    throw std::invalid_argument(
        "GradeSelector: selected grade exceeds the algebra dimension");
}

Multivector::Multivector(const Signature& sig, Eigen::VectorXcd coeffs)
    : sig_(sig), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != sig.blade_count())
    throw std::invalid_argument("Multivector: coefficient vector must have 2^n entries");
  if (!coeffs_.allFinite())
    throw std::invalid_argument("Multivector: coefficients must be finite");
}

Multivector Multivector::unit(const Signature& sig) {
  return basis(sig, Blade{0});
}

Multivector Multivector::basis(const Signature& sig, Blade b, Complex c) {
  check_blade(b, sig, "Multivector::basis");
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(sig.blade_count());
  coeffs[b.mask] = c;
  return {sig, std::move(coeffs)};
}

Multivector operator+(const Multivector& u, const Multivector& v) {
  require_same_signature(u, v, "operator+");
  return {u.sig(), u.coeffs() + v.coeffs()};
}

Multivector operator-(const Multivector& u, const Multivector& v) {
  require_same_signature(u, v, "operator-");
  return {u.sig(), u.coeffs() - v.coeffs()};
}

Multivector operator-(const Multivector& u) { return {u.sig(), -u.coeffs()}; }

Multivector operator*(Complex lambda, const Multivector& u) {
  return {u.sig(), lambda * u.coeffs()};
}

Multivector operator*(const Multivector& u, Complex lambda) {
  return lambda * u;
}

Multivector operator*(const Multivector& u, const Multivector& v) {
  require_same_signature(u, v, "operator*");
  const Eigen::Index n = u.dim();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex ui = u.coeffs()[i];
    if (ui == 0.0) continue;
    const Blade a{static_cast<std::uint32_t>(i)};
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex vj = v.coeffs()[j];
      if (vj == 0.0) continue;
      const BladeProduct p =
          blade_mul(a, Blade{static_cast<std::uint32_t>(j)}, u.sig());
      out[p.result.mask] += static_cast<double>(p.sign) * ui * vj;
    }
  }
  return {u.sig(), std::move(out)};
}

bool operator==(const Multivector& u, const Multivector& v) {
  return u.sig() == v.sig() && u.coeffs() == v.coeffs();
}

Multivector grade_project(const Multivector& u, const GradeSelector& sel) {
  sel.validate(u.sig().n());
  Eigen::VectorXcd out = u.coeffs();
  for (Eigen::Index m = 0; m < out.size(); ++m)
    if (!sel.selects(Blade{static_cast<std::uint32_t>(m)}.grade())) out[m] = 0.0;
  return {u.sig(), std::move(out)};
}

std::int64_t dim_grade(const Signature& sig, int k) {
  if (k < 0 || k > sig.n())
    throw std::invalid_argument("dim_grade: grade out of range for " + sig.str());
  return binomial(sig.n(), k);
}

std::int64_t dim_grade(const Signature& sig, const GradeSelector& sel) {
  sel.validate(sig.n());
  std::int64_t total = 0;
  for (int k = 0; k <= sig.n(); ++k)
    if (sel.selects(k)) total += binomial(sig.n(), k);
  return total;
}

Complex trace(const Multivector& u) { return u.coeffs()[0]; }

Multivector dagger(const Multivector& u) {
  Eigen::VectorXcd out(u.dim());
  for (Eigen::Index m = 0; m < out.size(); ++m) {
    const Blade b{static_cast<std::uint32_t>(m)};
    out[m] = static_cast<double>(dagger_sign(b, u.sig())) *
             std::conj(u.coeffs()[m]);
  }
  return {u.sig(), std::move(out)};
}

Multivector star(const Multivector& u) {
  if (u.sig() != Signature(1, 3))
    throw std::invalid_argument(
        "star: pseudo-Hermitian conjugation is defined only for Cl(1,3)");
  const Multivector e0 = Multivector::basis(u.sig(), Blade{1});
  return e0 * dagger(u) * e0;
}

Complex scalar_product(const Multivector& u, const Multivector& v) {
  require_same_signature(u, v, "scalar_product");
  return trace(dagger(v) * u);
}

double norm(const Multivector& u) { return u.coeffs().norm(); }

} // namespace cliffsym
