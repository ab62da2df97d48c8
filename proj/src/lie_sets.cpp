#include "cliffsym/lie_sets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cliffsym/gamma_rep.hpp"
#include "cliffsym/rng.hpp"

namespace cliffsym {

namespace {

const Signature kSig13{1, 3};
constexpr Complex kI{0.0, 1.0};

void require_sig13(const Multivector& u, const char* who) {
  if (u.sig() != kSig13)
    throw std::invalid_argument(std::string(who) + ": defined only for Cl(1,3)");
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

RealityPattern::RealityPattern(std::vector<GradeReality> by_grade)
    : by_grade_(std::move(by_grade)) {
  if (by_grade_.empty() ||
      by_grade_.size() > static_cast<std::size_t>(Signature::kMaxGenerators) + 1)
    throw std::invalid_argument("RealityPattern: need one entry per grade 0..n");
}

RealityPattern RealityPattern::all_complex(int n) {
  return RealityPattern(std::vector<GradeReality>(n + 1, GradeReality::Complex));
}

GradeReality RealityPattern::at(int grade) const {
  if (grade < 0 || grade >= static_cast<int>(by_grade_.size()))
    throw std::out_of_range("RealityPattern: grade out of range");
  return by_grade_[grade];
}

std::int64_t RealityPattern::real_dimension() const {
  const int n = max_grade();
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    switch (by_grade_[k]) {
      case GradeReality::Zero: break;
      case GradeReality::Real:
      case GradeReality::Imaginary: total += binomial(n, k); break;
      case GradeReality::Complex: total += 2 * binomial(n, k); break;
    }
  }
  return total;
}

Multivector project(const Multivector& u, const RealityPattern& pattern) {
  if (pattern.max_grade() != u.sig().n())
    throw std::invalid_argument("project: pattern grade count does not match the signature");
  Eigen::VectorXcd out = u.coeffs();
  for (Eigen::Index m = 0; m < out.size(); ++m) {
    switch (pattern.at(Blade{static_cast<std::uint32_t>(m)}.grade())) {
      case GradeReality::Zero: out[m] = 0.0; break;
      case GradeReality::Real: out[m] = Complex{out[m].real(), 0.0}; break;
      case GradeReality::Imaginary: out[m] = Complex{0.0, out[m].imag()}; break;
      case GradeReality::Complex: break;
    }
  }
  return {u.sig(), std::move(out)};
}

double grade_leak(const Multivector& u, const RealityPattern& pattern) {
  return norm(u - project(u, pattern));
}

Multivector sample_pattern(const Signature& sig, const RealityPattern& pattern,
                           std::uint64_t seed) {
  if (pattern.max_grade() != sig.n())
    throw std::invalid_argument("sample_pattern: pattern grade count does not match the signature");
  SeededRng rng(seed);
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(sig.blade_count());
  for (Eigen::Index m = 0; m < coeffs.size(); ++m) {
    switch (pattern.at(Blade{static_cast<std::uint32_t>(m)}.grade())) {
      case GradeReality::Zero: break;
      case GradeReality::Real: coeffs[m] = Complex{rng.symmetric(), 0.0}; break;
      case GradeReality::Imaginary: coeffs[m] = Complex{0.0, rng.symmetric()}; break;
      case GradeReality::Complex: {
        const double re = rng.symmetric();
        const double im = rng.symmetric();
        coeffs[m] = Complex{re, im};
        break;
      }
    }
  }
  return {sig, std::move(coeffs)};
}

RealityPattern sp_algebra_pattern() {
  using R = GradeReality;
  return RealityPattern({R::Zero, R::Imaginary, R::Real, R::Zero, R::Zero});
}

RealityPattern w_algebra_pattern() {
  using R = GradeReality;
  return RealityPattern({R::Imaginary, R::Imaginary, R::Real, R::Real, R::Imaginary});
}

RealityPattern sw_algebra_pattern() {
  using R = GradeReality;
  return RealityPattern({R::Zero, R::Imaginary, R::Real, R::Real, R::Imaginary});
}

RealityPattern real_matrix_pattern() {
  using R = GradeReality;
  return RealityPattern({R::Real, R::Imaginary, R::Real, R::Imaginary, R::Real});
}

double MembershipReport::max_residual() const {
  double worst = 0.0;
  for (const auto& [name, value] : residuals) worst = std::max(worst, value);
  return worst;
}

Multivector commutator(const Multivector& u, const Multivector& v) {
  return u * v - v * u;
}

Multivector exp(const Multivector& v, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("exp: tolerance must be positive");
  if (!v.coeffs().allFinite()) throw std::invalid_argument("exp: non-finite input");

  int squarings = 0;
  double scaled_norm = norm(v);
  while (scaled_norm > 0.5) {
    scaled_norm *= 0.5;
    ++squarings;
  }
  const Multivector x = std::ldexp(1.0, -squarings) * v;

  Multivector sum = Multivector::unit(v.sig());
  Multivector term = sum;
  for (int k = 1;; ++k) {
    term = (1.0 / k) * (term * x);
    sum = sum + term;
    if (norm(term) <= tol * std::max(1.0, norm(sum))) break;
    if (k > 1000) throw std::runtime_error("exp: series failed to converge");
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

Complex det_clifford(const Multivector& u) {
  require_sig13(u, "det_clifford");
  return matrix_det(gamma(u));
}

MembershipReport is_member(const Multivector& u, CliffordSetKind kind,
                           double tol) {
  require_sig13(u, "is_member");
  if (tol < 0.0) throw std::invalid_argument("is_member: tolerance must be nonnegative");

  const Multivector e = Multivector::unit(u.sig());
  MembershipReport report;
  report.tolerance = tol;

  switch (kind) {
    case CliffordSetKind::PseudoUnitaryGroup:
      report.residuals["star_unitarity"] = norm(star(u) * u - e);
      break;
    case CliffordSetKind::SpecialPseudoUnitaryGroup:
      report.residuals["star_unitarity"] = norm(star(u) * u - e);
      report.residuals["det_deviation"] =
          std::abs(det_clifford(u) - Complex{1.0, 0.0});
      break;
    case CliffordSetKind::PseudoUnitaryAlgebra:
      report.residuals["star_antisymmetry"] = norm(star(u) + u);
      break;
    case CliffordSetKind::SpecialPseudoUnitaryAlgebra:
      report.residuals["star_antisymmetry"] = norm(star(u) + u);
      report.residuals["trace_magnitude"] = std::abs(trace(u));
      break;
    case CliffordSetKind::SymplecticGroup:
      report.residuals["star_unitarity"] = norm(star(u) * u - e);
      report.residuals["grade_leak"] = grade_leak(u, real_matrix_pattern());
      break;
    case CliffordSetKind::SymplecticAlgebra:
      // Landing in i*grade1 + grade2 already forces star-antisymmetry.
      report.residuals["grade_leak"] = grade_leak(u, sp_algebra_pattern());
      break;
  }

  report.member = report.max_residual() <= tol;
  return report;
}

Multivector sample(CliffordSetKind kind, std::uint64_t seed) {
  constexpr double kSeriesTol = 1e-12;
  switch (kind) {
    case CliffordSetKind::PseudoUnitaryAlgebra:
      return sample_pattern(kSig13, w_algebra_pattern(), seed);
    case CliffordSetKind::SpecialPseudoUnitaryAlgebra:
      return sample_pattern(kSig13, sw_algebra_pattern(), seed);
    case CliffordSetKind::SymplecticAlgebra:
      return sample_pattern(kSig13, sp_algebra_pattern(), seed);
    case CliffordSetKind::PseudoUnitaryGroup:
      return exp(sample(CliffordSetKind::PseudoUnitaryAlgebra, seed), kSeriesTol);
    case CliffordSetKind::SpecialPseudoUnitaryGroup:
      return exp(sample(CliffordSetKind::SpecialPseudoUnitaryAlgebra, seed), kSeriesTol);
    case CliffordSetKind::SymplecticGroup:
      return exp(sample(CliffordSetKind::SymplecticAlgebra, seed), kSeriesTol);
  }
  throw std::invalid_argument("sample: unknown set kind");
}

const std::vector<Multivector>& sp_clifford_basis() {
  static const std::vector<Multivector> basis = [] {
    std::vector<Multivector> b;
    for (int a = 0; a < 4; ++a)
      b.push_back(Multivector::basis(kSig13, Blade{1u << a}, kI));
    const std::uint32_t masks2[] = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
    for (std::uint32_t m : masks2)
      b.push_back(Multivector::basis(kSig13, Blade{m}));
    return b;
  }();
  return basis;
}

} // namespace cliffsym
