#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cliffsym/multivector.hpp"
#include "cliffsym/rng.hpp"
#include "oracles.hpp"

using namespace cliffsym;

namespace {

const Signature kSig13{1, 3};
constexpr Complex kI{0.0, 1.0};

Multivector random_mv(const Signature& sig, std::uint64_t seed) {
  SeededRng rng(seed);
  Eigen::VectorXcd c(sig.blade_count());
  for (int i = 0; i < sig.blade_count(); ++i)
    c[i] = Complex{rng.symmetric(), rng.symmetric()};
  return Multivector(sig, std::move(c));
}

} // namespace

TEST_CASE("signature validation and metric") {
  CHECK_THROWS_AS(Signature(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Signature(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Signature(7, 6), std::invalid_argument);
  CHECK_NOTHROW(Signature(12, 0));

  CHECK(kSig13.n() == 4);
  CHECK(kSig13.blade_count() == 16);
  CHECK(kSig13.metric(0) == 1);
  CHECK(kSig13.metric(1) == -1);
  CHECK(kSig13.metric(3) == -1);
  CHECK_THROWS_AS(kSig13.metric(4), std::out_of_range);
  CHECK(kSig13.str() == "Cl(1,3)");
  CHECK(Signature(2, 2) != kSig13);
}

TEST_CASE("blade basics") {
  CHECK(Blade{0}.grade() == 0);
  CHECK(Blade{0b1011}.grade() == 3);
  CHECK(blade_name(Blade{0}) == "e");
  CHECK(blade_name(Blade{0b0110}) == "e12");
  CHECK(blade_key(Blade{0b0110}) == "12");
  CHECK(blade_key(Blade{0}) == "");
  // labels above 9 have no single-digit text form
  CHECK_THROWS_AS(blade_name(Blade{1u << 10}), std::domain_error);
}

TEST_CASE("blade product against hand-worked cases") {
  auto mul = [](std::uint32_t a, std::uint32_t b) {
    return blade_mul(Blade{a}, Blade{b}, kSig13);
  };
  // e0 e1 = e01
  CHECK(mul(0b0001, 0b0010).sign == 1);
  CHECK(mul(0b0001, 0b0010).result.mask == 0b0011);
  // e1 e1 = -e
  CHECK(mul(0b0010, 0b0010).sign == -1);
  CHECK(mul(0b0010, 0b0010).result.mask == 0);
  // e1 e0 = -e01
  CHECK(mul(0b0010, 0b0001).sign == -1);
  CHECK(mul(0b0010, 0b0001).result.mask == 0b0011);
  // e0 e0 = e
  CHECK(mul(0b0001, 0b0001).sign == 1);
  // e01 e02 = -e12
  CHECK(mul(0b0011, 0b0101).sign == -1);
  CHECK(mul(0b0011, 0b0101).result.mask == 0b0110);
  // identity blade is neutral
  CHECK(mul(0, 0b1101).sign == 1);
  CHECK(mul(0, 0b1101).result.mask == 0b1101);

  CHECK_THROWS_AS(blade_mul(Blade{1u << 4}, Blade{0}, kSig13),
                  std::invalid_argument);
}

TEST_CASE("blade product matches the list-rewriting oracle exhaustively") {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      const Signature sig(p, n - p);
      const auto count = static_cast<std::uint32_t>(sig.blade_count());
      for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = 0; b < count; ++b) {
          const BladeProduct got = blade_mul(Blade{a}, Blade{b}, sig);
          const auto [sign, mask] = oracles::naive_blade_mul(a, b, sig);
          CHECK(got.sign == sign);
          CHECK(got.result.mask == mask);
        }
    }
  }
}

TEST_CASE("dagger sign matches the literal-reversal oracle exhaustively") {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      const Signature sig(p, n - p);
      for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(sig.blade_count()); ++a)
        CHECK(dagger_sign(Blade{a}, sig) == oracles::naive_dagger_sign(a, sig));
    }
  }
}

TEST_CASE("generator anticommutation holds in every small signature") {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      const Signature sig(p, n - p);
      const Multivector e = Multivector::unit(sig);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const Multivector ea = Multivector::basis(sig, Blade{1u << a});
          const Multivector eb = Multivector::basis(sig, Blade{1u << b});
          const double eta = a == b ? sig.metric(a) : 0.0;
          CHECK(ea * eb + eb * ea == Complex{2.0 * eta} * e);
        }
    }
  }
}

TEST_CASE("multivector construction and validation") {
  CHECK_THROWS_AS(Multivector(kSig13, Eigen::VectorXcd::Zero(8)),
                  std::invalid_argument);
  Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(16);
  bad[3] = Complex{std::nan(""), 0.0};
  CHECK_THROWS_AS(Multivector(kSig13, bad), std::invalid_argument);

  const Multivector e = Multivector::unit(kSig13);
  CHECK(e.coeff(Blade{0}) == Complex{1.0});
  CHECK(trace(e) == Complex{1.0});

  const Multivector b = Multivector::basis(kSig13, Blade{0b0110}, kI);
  CHECK(b.coeff(Blade{0b0110}) == kI);
  CHECK(norm(b) == 1.0);
}

TEST_CASE("vector space operations") {
  const Multivector e0 = Multivector::basis(kSig13, Blade{1});
  const Multivector e1 = Multivector::basis(kSig13, Blade{2});
  const Multivector u = e0 + e1;
  CHECK(u.coeff(Blade{1}) == Complex{1.0});
  CHECK((u - e1) == e0);
  CHECK((-u).coeff(Blade{2}) == Complex{-1.0});
  CHECK((2.0 * u) == (u * 2.0));
  CHECK((kI * e0).coeff(Blade{1}) == kI);

  const Multivector other = Multivector::unit(Signature(2, 2));
  CHECK_THROWS_AS(u + other, std::invalid_argument);
  CHECK_THROWS_AS(u * other, std::invalid_argument);
}

TEST_CASE("clifford product on hand-worked multivectors") {
  const Multivector e = Multivector::unit(kSig13);
  const Multivector e0 = Multivector::basis(kSig13, Blade{1});
  const Multivector e1 = Multivector::basis(kSig13, Blade{2});
  const Multivector e01 = Multivector::basis(kSig13, Blade{3});

  // (e0 + e1)(e0 - e1) = e0^2 - e1^2 - e0 e1 + e1 e0 = 2e - 2e01
  CHECK((e0 + e1) * (e0 - e1) == Complex{2.0} * e - Complex{2.0} * e01);
  CHECK(e0 * e1 == e01);
  CHECK(e01 * e01 == e);
  CHECK(e * e == e);
}

TEST_CASE("product associativity on random triples") {
  for (const Signature sig : {Signature(1, 3), Signature(2, 2), Signature(0, 5)}) {
    for (std::uint64_t t = 0; t < 160; ++t) {
      const Multivector u = random_mv(sig, 900 + 3 * t);
      const Multivector v = random_mv(sig, 901 + 3 * t);
      const Multivector w = random_mv(sig, 902 + 3 * t);
      const Multivector lhs = (u * v) * w;
      const Multivector rhs = u * (v * w);
      const double scale = norm(u) * norm(v) * norm(w);
      CHECK(norm(lhs - rhs) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("grade projection and grade dimensions") {
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    const Multivector b = Multivector::basis(kSig13, Blade{mask});
    const int k = Blade{mask}.grade();
    CHECK(grade_project(b, GradeSelector::single(k)) == b);
    for (int other = 0; other <= 4; ++other)
      if (other != k)
        CHECK(norm(grade_project(b, GradeSelector::single(other))) == 0.0);
  }

  CHECK(dim_grade(kSig13, 0) == 1);
  CHECK(dim_grade(kSig13, 2) == 6);
  CHECK(dim_grade(kSig13, 4) == 1);
  CHECK(dim_grade(kSig13, GradeSelector::even()) == 8);
  CHECK(dim_grade(kSig13, GradeSelector::odd()) == 8);
  CHECK(dim_grade(kSig13, GradeSelector::subset({1, 2})) == 10);
  CHECK_THROWS_AS(dim_grade(kSig13, 5), std::invalid_argument);
  CHECK_THROWS_AS(dim_grade(kSig13, GradeSelector::subset({7})),
                  std::invalid_argument);

  const Multivector u = random_mv(kSig13, 77);
  const Multivector even = grade_project(u, GradeSelector::even());
  const Multivector odd = grade_project(u, GradeSelector::odd());
  CHECK(even + odd == u);
  CHECK(grade_project(even, GradeSelector::even()) == even);
}

TEST_CASE("trace is the scalar coefficient and kills commutators") {
  const Multivector e01 = Multivector::basis(kSig13, Blade{3});
  CHECK(trace(e01) == Complex{0.0});
  CHECK(trace(Complex{3.0} * Multivector::unit(kSig13) + e01) == Complex{3.0});

  for (std::uint64_t t = 0; t < 200; ++t) {
    const Multivector u = random_mv(kSig13, 5000 + 2 * t);
    const Multivector v = random_mv(kSig13, 5001 + 2 * t);
    const double scale = norm(u) * norm(v);
    // cyclicity and Tr[U,V] = 0
    CHECK(std::abs(trace(u * v) - trace(v * u)) <= 1e-12 * scale);
    CHECK(std::abs(trace(u * v - v * u)) <= 1e-12 * scale);
  }
}

TEST_CASE("dagger on hand-worked cases") {
  const Multivector e0 = Multivector::basis(kSig13, Blade{1});
  const Multivector e1 = Multivector::basis(kSig13, Blade{2});
  const Multivector e01 = Multivector::basis(kSig13, Blade{3});

  CHECK(dagger(e0) == e0);        // eta^{00} = +1
  CHECK(dagger(e1) == -e1);       // eta^{11} = -1
  CHECK(dagger(e01) == e01);      // (e01)^+ = e1^+ e0^+ = -e1 e0 = e01
  CHECK(dagger(kI * e0) == -kI * e0); // antilinear
}

TEST_CASE("dagger is an antilinear antihomomorphism and involution") {
  for (const Signature sig : {Signature(1, 3), Signature(3, 1), Signature(2, 2)}) {
    for (std::uint64_t t = 0; t < 150; ++t) {
      const Multivector u = random_mv(sig, 31000 + 2 * t);
      const Multivector v = random_mv(sig, 31001 + 2 * t);
      CHECK(dagger(dagger(u)) == u);
      CHECK(dagger(u + v) == dagger(u) + dagger(v));
      CHECK(dagger(kI * u) == -kI * dagger(u));
      const double scale = norm(u) * norm(v);
      CHECK(norm(dagger(u * v) - dagger(v) * dagger(u)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("star on hand-worked cases") {
  const Multivector e0 = Multivector::basis(kSig13, Blade{1});
  const Multivector e1 = Multivector::basis(kSig13, Blade{2});
  const Multivector e01 = Multivector::basis(kSig13, Blade{3});

  CHECK(star(e0) == e0);
  CHECK(star(kI * e1) == -kI * e1);
  CHECK(star(e01) == -e01);
  CHECK(star(Multivector::unit(kSig13)) == Multivector::unit(kSig13));
}

TEST_CASE("star is only defined on Cl(1,3)") {
  CHECK_THROWS_AS(star(Multivector::unit(Signature(2, 2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(star(Multivector::unit(Signature(3, 1))),
                  std::invalid_argument);
}

TEST_CASE("star is an antilinear antihomomorphism and involution") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    const Multivector u = random_mv(kSig13, 40000 + 2 * t);
    const Multivector v = random_mv(kSig13, 40001 + 2 * t);
    CHECK(star(star(u)) == u);
    CHECK(star(kI * u) == -kI * star(u));
    const double scale = norm(u) * norm(v);
    CHECK(norm(star(u * v) - star(v) * star(u)) <= 1e-12 * scale);
  }
}

TEST_CASE("scalar product: blade orthonormality and positivity") {
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      const Complex got =
          scalar_product(Multivector::basis(kSig13, Blade{a}),
                         Multivector::basis(kSig13, Blade{b}));
      CHECK(got == (a == b ? Complex{1.0} : Complex{0.0}));
    }

  const Multivector u =
      Complex{2.0} * Multivector::unit(kSig13) +
      Multivector::basis(kSig13, Blade{0b0100}, kI);
  CHECK(scalar_product(u, u) == Complex{5.0});
  CHECK(norm(u) == std::sqrt(5.0));

  for (std::uint64_t t = 0; t < 200; ++t) {
    const Multivector v = random_mv(kSig13, 60000 + t);
    const double n2 = norm(v) * norm(v);
    CHECK(n2 > 0.0);
    CHECK(std::abs(scalar_product(v, v).real() - n2) <= 1e-12 * n2);
    CHECK(std::abs(scalar_product(v, v).imag()) <= 1e-12 * n2);
  }
}

TEST_CASE("scalar product is hermitian and sesquilinear") {
  for (std::uint64_t t = 0; t < 100; ++t) {
    const Multivector u = random_mv(kSig13, 70000 + 2 * t);
    const Multivector v = random_mv(kSig13, 70001 + 2 * t);
    const double scale = norm(u) * norm(v);
    CHECK(std::abs(scalar_product(u, v) - std::conj(scalar_product(v, u))) <=
          1e-12 * scale);
    CHECK(std::abs(scalar_product(kI * u, v) - kI * scalar_product(u, v)) <=
          1e-12 * scale);
    CHECK(std::abs(scalar_product(u, kI * v) + kI * scalar_product(u, v)) <=
          1e-12 * scale);
  }
}
