#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symdisc/error.hpp"
#include "symdisc/random.hpp"
#include "symdisc/symcore.hpp"

using namespace symdisc;

namespace {

std::vector<Complex> to_vec(const SymPoint& s) { return {s.coords().begin(), s.coords().end()}; }

double max_gap(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("elementary symmetric values of small tuples") {
  CHECK(to_vec(elem_sym(std::vector<Complex>{0.0, 0.0})) == std::vector<Complex>{0.0, 0.0});
  CHECK(to_vec(elem_sym(std::vector<Complex>{2.0, 3.0})) == std::vector<Complex>{5.0, 6.0});
  CHECK(elem_sym(std::vector<Complex>{}).size() == 0);
}

TEST_CASE("elementary symmetric values at the dimension-3 base point") {
  const double s3 = std::sqrt(3.0);
  const std::vector<Complex> nu{std::polar(1.0, std::numbers::pi / 6), std::polar(1.0, std::numbers::pi / 3),
                                std::polar(1.0, -std::numbers::pi / 6)};
  const auto e = to_vec(elem_sym(nu));
  CHECK(std::abs(e[0] - Complex((1 + 2 * s3) / 2, s3 / 2)) < 1e-14);
  CHECK(std::abs(e[1] - Complex((2 + s3) / 2, 1.5)) < 1e-14);
  CHECK(std::abs(e[2] - std::polar(1.0, std::numbers::pi / 3)) < 1e-14);
}

TEST_CASE("elem_sym agrees with subset enumeration") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_disc_points(rng, n, 1.0);
      CHECK(max_gap(to_vec(elem_sym(x)), oracle::elem_sym_bruteforce(x)) < 1e-14);
    }
  }
}

TEST_CASE("elem_sym is invariant under permutations") {
  std::mt19937_64 rng(12);
  for (std::size_t n = 2; n <= 8; ++n) {
    auto x = random_disc_points(rng, n, 1.0);
    const auto base = to_vec(elem_sym(x));
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(x.begin(), x.end(), rng);
      CHECK(max_gap(to_vec(elem_sym(x)), base) < 1e-14);
    }
  }
}

TEST_CASE("roots_from_sym on explicit examples") {
  const auto r = roots_from_sym(SymPoint({5.0, 6.0}));
  REQUIRE(r.size() == 2);
  CHECK(oracle::multiset_gap(r, {2.0, 3.0}) < 1e-12);
  CHECK(oracle::multiset_gap(roots_from_sym(SymPoint({0.0, 0.0, 0.0})), {0.0, 0.0, 0.0}) < 1e-12);
  CHECK(oracle::multiset_gap(roots_from_sym(SymPoint({0.0, -1.0})), {1.0, -1.0}) < 1e-12);
}

TEST_CASE("roots_from_sym inverts elem_sym") {
  std::mt19937_64 rng(13);
  for (std::size_t n = 1; n <= 8; ++n) {
    const double tol = n == 5 ? 1e-10 : 1e-9;
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_disc_points(rng, n, 1.0);
      const auto r = roots_from_sym(elem_sym(x), {static_cast<std::uint64_t>(trial), 2000});
      INFO("n = " << n << " trial " << trial);
      CHECK(oracle::multiset_gap(r, x) < tol);
    }
  }
}

TEST_CASE("roots_from_sym is deterministic for a fixed seed") {
  const SymPoint s({Complex(0.3, 0.1), Complex(-0.2, 0.05), Complex(0.01, 0.02)});
  CHECK(roots_from_sym(s, {7, 2000}) == roots_from_sym(s, {7, 2000}));
}

TEST_CASE("roots_from_sym reports failure past the iteration cap") {
  CHECK_THROWS_AS(roots_from_sym(SymPoint({Complex(0.3, 0.4), Complex(0.1, -0.2), Complex(0.05, 0.0)}), {0, 0}),
                  Error);
  try {
    roots_from_sym(SymPoint({Complex(0.3, 0.4), Complex(0.1, -0.2), Complex(0.05, 0.0)}), {0, 0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SolverFailure);
  }
}

TEST_CASE("vandermonde products") {
  const auto l = PolyPoint::raw({0.0, 0.5});
  const auto m = PolyPoint::raw({0.0, 0.5});
  CHECK(std::abs(vandermonde_pair(l, m) - 0.25) < 1e-15);
  CHECK(vandermonde_pair(PolyPoint::raw({0.3, 0.3}), m) == Complex(0.0, 0.0));
  CHECK(std::abs(vandermonde(std::vector<Complex>{1.0, 2.0, 4.0}) - Complex(-1.0 * -3.0 * -2.0)) < 1e-15);
  CHECK_THROWS_AS(vandermonde_pair(PolyPoint::raw({0.1}), m), Error);
}

TEST_CASE("vandermonde_pair is invariant under a common permutation") {
  std::mt19937_64 rng(14);
  for (std::size_t n = 2; n <= 7; ++n) {
    auto l = random_disc_points(rng, n, 1.0);
    auto m = random_disc_points(rng, n, 1.0);
    const Complex base = vandermonde_pair(PolyPoint::raw(l), PolyPoint::raw(m));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Complex> lp(n), mp(n);
    for (std::size_t i = 0; i < n; ++i) {
      lp[i] = l[perm[i]];
      mp[i] = m[perm[i]];
    }
    CHECK(oracle::rel_gap(vandermonde_pair(PolyPoint::raw(lp), PolyPoint::raw(mp)), base) < 1e-12);
  }
}

TEST_CASE("membership in the symmetrized polydisc") {
  CHECK(in_gn(SymPoint({0.0, 0.0})));
  CHECK_FALSE(in_gn(SymPoint({5.0, 6.0})));
  CHECK(classify_gn(SymPoint({0.0, -1.0})) == Membership::BoundaryIndeterminate);
  CHECK(classify_gn(SymPoint({2.0, 1.0})) != Membership::Inside);
  CHECK(classify_gn(SymPoint({2.5, 1.0})) == Membership::Outside);
}

TEST_CASE("images of polydisc points near the boundary lie in G_n") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Complex> x(n);
      for (auto& c : x) c = std::polar(1.0 - 1e-6, angle(rng));
      CHECK(in_gn(elem_sym(x)));
    }
  }
}

TEST_CASE("PolyPoint domain checks") {
  CHECK_THROWS_AS(PolyPoint::in_domain({0.0, 1.0}), Error);
  CHECK_NOTHROW(PolyPoint::in_domain({0.0, 0.999}));
  CHECK(PolyPoint::raw({2.0}).size() == 1);
  CHECK_FALSE(PolyPoint::raw({2.0}).inside_polydisc());
  CHECK_FALSE(PolyPoint::raw({0.1, 0.1}).pairwise_distinct());
  CHECK(PolyPoint::raw({0.1, 0.1 + 1e-9}).pairwise_distinct());
  CHECK_FALSE(PolyPoint::raw({0.1, 0.1 + 1e-9}).pairwise_distinct(1e-6));
}
