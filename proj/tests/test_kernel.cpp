#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cases.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "symdisc/error.hpp"
#include "symdisc/kernel.hpp"
#include "symdisc/random.hpp"

using namespace symdisc;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Parse;
}

std::vector<Complex> random_distinct(std::mt19937_64& rng, std::size_t n, double radius) {
  return random_disc_points(rng, n, radius);
}

}  // namespace

TEST_CASE("Delta_2 at (0, 1/2)") {
  const auto p = PolyPoint::in_domain({0.0, 0.5});
  CHECK(std::abs(delta_n(p, p) - 7.0 / 9.0) < 1e-15);
  CHECK(std::abs(oracle::delta_leibniz({0.0, 0.5}, {0.0, 0.5}) - 7.0 / 9.0) < 1e-15);
  CHECK(std::abs(kernel_gn(p, p).value - 28.0 / (9.0 * kPi * kPi)) < 1e-15);
}

TEST_CASE("Delta_n vanishes when mu is the zero tuple") {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Complex> l(n);
    for (std::size_t j = 0; j < n; ++j) l[j] = 0.1 * static_cast<double>(j);
    CHECK(std::abs(delta_n(PolyPoint::in_domain(l), PolyPoint::in_domain(std::vector<Complex>(n)))) < 1e-15);
  }
}

TEST_CASE("Delta_n agrees with the permutation expansion") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto l = random_distinct(rng, n, 0.95);
      const auto m = random_distinct(rng, n, 0.95);
      const Complex lu = delta_n(PolyPoint::in_domain(l), PolyPoint::in_domain(m));
      const Complex ref = oracle::delta_leibniz(l, m);
      const double scale = delta_scaled(PolyPoint::in_domain(l), PolyPoint::in_domain(m)).scale;
      CHECK(std::abs(lu - ref) / scale < 1e-13);
    }
  }
}

TEST_CASE("kernel at the origin equals n!/pi^n") {
  double factorial = 1.0;
  for (std::size_t n = 1; n <= 5; ++n) {
    factorial *= static_cast<double>(n);
    const auto zero = PolyPoint::in_domain(std::vector<Complex>(n));
    const Complex k = kernel_confluent(zero, zero).value;
    CHECK(std::abs(k - factorial / pi_power(n)) < 1e-13 * factorial / pi_power(n));
    const Complex ks = kernel_gn_stable(SymPoint(std::vector<Complex>(n)), SymPoint(std::vector<Complex>(n))).value;
    CHECK(oracle::rel_gap(ks, k) < 1e-12);
  }
  CHECK(oracle::rel_gap(oracle::kernel_perturbation_limit({0.0, 0.0}, {0.0, 0.0}), 2.0 / (kPi * kPi)) < 1e-9);
}

TEST_CASE("kernel is Hermitian") {
  std::mt19937_64 rng(22);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto l = PolyPoint::in_domain(random_distinct(rng, n, 0.99));
      const auto m = PolyPoint::in_domain(random_distinct(rng, n, 0.99));
      CHECK(oracle::rel_gap(kernel_gn(m, l).value, std::conj(kernel_gn(l, m).value)) < 1e-12);
    }
  }
}

TEST_CASE("kernel is invariant under permutations of either tuple") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      auto l = random_distinct(rng, n, 0.99);
      auto m = random_distinct(rng, n, 0.99);
      const Complex base = kernel_gn(PolyPoint::in_domain(l), PolyPoint::in_domain(m)).value;
      std::shuffle(l.begin(), l.end(), rng);
      std::shuffle(m.begin(), m.end(), rng);
      CHECK(oracle::rel_gap(kernel_gn(PolyPoint::in_domain(l), PolyPoint::in_domain(m)).value, base) < 1e-12);
    }
  }
}

TEST_CASE("kernel is positive on the diagonal") {
  std::mt19937_64 rng(24);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto l = PolyPoint::in_domain(random_distinct(rng, n, 0.99));
      const Complex k = kernel_gn(l, l).value;
      CHECK(k.real() > 0.0);
      CHECK(std::abs(k.imag()) <= 1e-12 * k.real());
    }
  }
}

TEST_CASE("direct kernel agrees with the long double oracle") {
  std::mt19937_64 rng(25);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto l = random_distinct(rng, n, 0.9);
      const auto m = random_distinct(rng, n, 0.9);
      const Complex ref = oracle::kernel_perturbation_limit(l, m, 0.0, 1);
      CHECK(oracle::rel_gap(kernel_gn(PolyPoint::in_domain(l), PolyPoint::in_domain(m)).value, ref) < 1e-10);
    }
  }
}

TEST_CASE("confluent kernel agrees with the perturbation limit") {
  for (const auto& c : cases::confluent_pairs(26, 60)) {
    const Complex ref = oracle::kernel_perturbation_limit(c.lambda, c.mu);
    const Complex conf = kernel_confluent(PolyPoint::in_domain(c.lambda), PolyPoint::in_domain(c.mu)).value;
    const Complex stable = kernel_gn_stable(elem_sym(c.lambda), elem_sym(c.mu)).value;
    INFO("n = " << c.lambda.size());
    CHECK(oracle::rel_gap(conf, ref) < 1e-8);
    CHECK(oracle::rel_gap(stable, ref) < 1e-6);
  }
}

TEST_CASE("kernel_gn_stable agrees with kernel_gn at distinct preimages") {
  std::mt19937_64 rng(27);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto l = random_distinct(rng, n, 0.95);
      const auto m = random_distinct(rng, n, 0.95);
      const Complex direct = kernel_gn(PolyPoint::in_domain(l), PolyPoint::in_domain(m)).value;
      CHECK(oracle::rel_gap(kernel_gn_stable(elem_sym(l), elem_sym(m)).value, direct) < 1e-8);
    }
  }
}

TEST_CASE("closed form with mu_3 = 0 matches the direct kernel") {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto l = random_distinct(rng, 3, 0.95);
    const Complex m1 = random_disc_point(rng, 0.95), m2 = random_disc_point(rng, 0.95);
    const std::array<Complex, 3> la{l[0], l[1], l[2]};
    const std::array<Complex, 2> ma{m1, m2};
    const Complex closed = kernel_g3_mu3zero(la, ma);
    const Complex direct = kernel_gn(PolyPoint::in_domain(l), PolyPoint::in_domain({m1, m2, 0.0})).value;
    CHECK(oracle::rel_gap(closed, direct) < 1e-9);
  }
}

TEST_CASE("closed form with mu_2 = mu_3 = 0 matches the confluent kernel") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const auto l = random_distinct(rng, 3, 0.9);
    const Complex m1 = random_disc_point(rng, 0.9);
    const std::array<Complex, 3> la{l[0], l[1], l[2]};
    const std::array<Complex, 2> ma{m1, 0.0};
    const Complex closed = kernel_g3_mu3zero(la, ma);
    const std::vector<Complex> mu{m1, 0.0, 0.0};
    CHECK(oracle::rel_gap(closed, kernel_confluent(PolyPoint::in_domain(l), PolyPoint::in_domain(mu)).value) < 1e-9);
    CHECK(oracle::rel_gap(closed, oracle::kernel_perturbation_limit(l, mu)) < 1e-7);
  }
}

TEST_CASE("quadratic coefficients at the base point") {
  const double s3 = std::sqrt(3.0);
  const std::array<Complex, 3> nu{std::polar(1.0, kPi / 6), std::polar(1.0, kPi / 3), std::polar(1.0, -kPi / 6)};
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  const QuadraticData q = abc_coeffs(nu);
  CHECK(std::abs(q.a - std::polar(3 * s3 - 5, kPi / 3)) < 1e-14);
  CHECK(std::abs(q.b - std::polar(6 * s2 - 3 * s6, kPi / 12)) < 1e-14);
  CHECK(std::abs(q.c - std::polar(2 * s3 - 3, -kPi / 6)) < 1e-14);
}

TEST_CASE("quadratic coefficients at nu = 0 and under permutation") {
  const std::array<Complex, 3> zero{0.0, 0.0, 0.0};
  const QuadraticData q0 = abc_coeffs(zero);
  CHECK(std::abs(q0.c - 3.0) < 1e-15);
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_disc_points(rng, 3, 1.0);
    const QuadraticData q = abc_coeffs(std::array<Complex, 3>{v[0], v[1], v[2]});
    const QuadraticData p = abc_coeffs(std::array<Complex, 3>{v[2], v[0], v[1]});
    CHECK(std::abs(q.a - p.a) < 1e-14);
    CHECK(std::abs(q.b - p.b) < 1e-14);
    CHECK(std::abs(q.c - p.c) < 1e-14);
  }
}

TEST_CASE("bracket coefficients are (nu2 - nu1) times (a, b, c)") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = random_disc_points(rng, 3, 1.0);
    const std::array<Complex, 3> nu{v[0], v[1], v[2]};
    const BracketCoeffs abc = bracket_coeffs_ABC(nu);
    const QuadraticData q = abc_coeffs(nu);
    const Complex d = nu[1] - nu[0];
    CHECK(std::abs(abc.A - d * q.a) < 1e-12);
    CHECK(std::abs(abc.B - d * q.b) < 1e-12);
    CHECK(std::abs(abc.C - d * q.c) < 1e-12);
    const auto p = bracket_polynomial(nu);
    const Complex z = random_disc_point(rng, 1.0);
    const Complex lhs = p[0] + z * (p[1] + z * (p[2] + z * p[3]));
    const Complex rhs = (z - 1.0) * (abc.A * z * z - abc.B * z + 2.0 * abc.C);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("bracket vanishes identically when nu1 = nu2") {
  const std::array<Complex, 3> nu{Complex(0.3, 0.2), Complex(0.3, 0.2), Complex(-0.4, 0.1)};
  for (const Complex& c : bracket_polynomial(nu)) CHECK(c == Complex(0.0, 0.0));
}

TEST_CASE("error kinds") {
  CHECK(kind_of([] { kernel_gn(PolyPoint::raw({0.0, 1.0}), PolyPoint::raw({0.0, 0.5})); }) == ErrorKind::NotInDomain);
  CHECK(kind_of([] { kernel_gn(PolyPoint::in_domain({0.2, 0.2}), PolyPoint::in_domain({0.0, 0.5})); }) ==
        ErrorKind::RepeatedCoordinate);
  CHECK(kind_of([] { kernel_gn(PolyPoint::in_domain({0.2}), PolyPoint::in_domain({0.0, 0.5})); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { delta_n(PolyPoint::raw({1.0, 0.5}), PolyPoint::raw({1.0, 0.0})); }) == ErrorKind::SingularEntry);
  CHECK(kind_of([] {
          kernel_g3_mu3zero(std::array<Complex, 3>{0.1, 0.2, 0.3}, std::array<Complex, 2>{0.0, 0.5});
        }) == ErrorKind::MuOneZero);
}

TEST_CASE("kernel metadata") {
  const auto l = PolyPoint::in_domain({0.1, Complex(0.2, 0.3)});
  const auto m = PolyPoint::in_domain({-0.4, Complex(0.0, 0.5)});
  const KernelEval k = kernel_gn(l, m);
  CHECK(k.second_argument_conjugated);
  CHECK(std::abs(k.value - k.numerator / k.denominator) < 1e-15 * std::abs(k.value));
  CHECK(std::abs(k.denominator - pi_power(2) * vandermonde_pair(l, m)) < 1e-14);
  CHECK(k.scale >= std::abs(k.numerator));
}
