#ifndef CLIFFSYM_SIGNATURE_HPP
#define CLIFFSYM_SIGNATURE_HPP

#include <stdexcept>
#include <string>

namespace cliffsym {

/// Metric signature (p,q) of a Clifford algebra Cl(p,q).
///
/// Generator labels are 0..n-1 with the +1 generators first, so the diagonal
/// metric is eta = diag(+1 x p, -1 x q) and metric(a) = +1 iff a < p.
/// Signatures are capped at n = p+q <= 12 (dense storage is 2^n coefficients).
class Signature {
public:
  static constexpr int kMaxGenerators = 12;

  Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0)
      throw std::invalid_argument("Signature: p and q must be nonnegative");
    const int n = p + q;
    if (n < 1)
      throw std::invalid_argument("Signature: p+q must be at least 1");
    if (n > kMaxGenerators)
      throw std::invalid_argument("Signature: p+q must not exceed " +
                                  std::to_string(kMaxGenerators));
  }

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }

  /// eta^{aa} for generator label a (0-based).
  int metric(int a) const {
    if (a < 0 || a >= n())
      throw std::out_of_range("Signature::metric: generator label out of range");
    return a < p_ ? +1 : -1;
  }

  /// Number of basis blades, 2^n.
  int blade_count() const { return 1 << n(); }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Signature& a, const Signature& b) {
    return !(a == b);
  }

  std::string str() const {
    return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  }

private:
  int p_;
  int q_;
};

} // namespace cliffsym

#endif
