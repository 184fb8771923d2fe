// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cases.hpp"
#include "oracles.hpp"
#include "symdisc/certificate_io.hpp"
#include "symdisc/cli/commands.hpp"
#include "symdisc/exact/verify.hpp"
#include "symdisc/kernel.hpp"
#include "symdisc/random.hpp"
#include "symdisc/zerofind.hpp"

using namespace symdisc;

namespace {

struct Verdict {
  bool passed;
  std::string detail;
};

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion(int id, const std::string& title, const std::function<Verdict()>& body) {
  Verdict v{false, ""};
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  if (!v.passed) ++failures;
  std::printf("%s criterion %d: %s [%s]\n", v.passed ? "PASS" : "FAIL", id, title.c_str(), v.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

int run_cli(std::vector<std::string> args, std::ostream& out) {
  args.insert(args.begin(), "symdisc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

Verdict exact_identities() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream sink;
  const int code = run_cli({"verify-paper"}, sink);
  const auto reduction = exact::verify_reduction_identities();
  const auto base = exact::verify_base_point_identities();
  const double t = seconds_since(start);
  const bool ok = code == cli::kSuccess && reduction.all_passed() && base.all_passed() && t < 10.0;
  return {ok, std::to_string(reduction.passed_count() + base.passed_count()) + "/" +
                  std::to_string(reduction.checks().size() + base.checks().size()) + " exact checks, " +
                  fmt(t) + " s (limit 10 s)"};
}

Verdict base_root() {
  using Big = boost::multiprecision::cpp_bin_float_50;
  const Big s2 = sqrt(Big(2)), s3 = sqrt(Big(3)), s6 = sqrt(Big(6));
  const Big a = 3 * s3 - 5, b = 3 * s6 - 6 * s2, c = 4 * s3 - 6;
  const Big disc = b * b - 4 * a * c;
  const Big r1 = (-b - sqrt(disc)) / (2 * a), r2 = (-b + sqrt(disc)) / (2 * a);
  const Big x0 = r1 < r2 ? r1 : r2;
  const double x0d = static_cast<double>(x0);
  const Complex z = std::polar(x0d, -std::numbers::pi / 4);
  const auto roots = solve_abc_quadratic(abc_coeffs(base_nu()));
  const double gap = std::abs(roots[0] - z);
  const bool ok = x0 > 0 && x0 < 1 && std::abs(x0d - 0.983345) <= 1e-5 && gap <= 1e-10;
  return {ok, "x0 = " + x0.str(12) + ", |x0 - 0.983345| = " + fmt(std::abs(x0d - 0.983345)) +
                  ", |z - e^{-i pi/4} x0| = " + fmt(gap)};
}

Verdict dim3_zero() {
  const auto path = std::filesystem::temp_directory_path() / "symdisc_acceptance_zero3.json";
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream sink;
  const int code = run_cli({"find-zero", "3", "-o", path.string()}, sink);
  const double t = seconds_since(start);
  if (code != cli::kSuccess) return {false, "find-zero 3 exited with " + std::to_string(code)};
  const ZeroCertificate c = read_certificate(path);
  std::filesystem::remove(path);
  const Recertification r = recertify(c);
  const double threshold = kWitnessFactor * c.tolerance * r.scale;
  const bool witness = c.fn_witness && c.fn_witness->value_abs > threshold;
  const bool ok = c.lambda.inside_polydisc() && c.mu.inside_polydisc() && c.lambda.pairwise_distinct() &&
                  c.mu.pairwise_distinct() && c.residual_rel < 1e-10 && witness && r.ok() && t < 1.0;
  return {ok, "residual " + fmt(c.residual_rel) + ", |f3(x)| = " + fmt(c.fn_witness ? c.fn_witness->value_abs : 0.0) +
                  " > " + fmt(threshold) + ", " + fmt(t) + " s (limit 1 s)"};
}

Verdict lifts() {
  const auto start = std::chrono::steady_clock::now();
  ZeroCertificate c = construct_zero_dim3();
  bool ok = true;
  std::string detail;
  for (std::size_t n = 4; n <= 6; ++n) {
    c = lift_zero(c);
    const Complex t = c.lambda[n - 1];
    const bool appended_ok = t == c.mu[n - 1] && t.imag() == 0.0 && t.real() > 0.0 && t.real() < 1.0;
    ok = ok && c.n == n && c.residual_rel < 1e-8 && appended_ok && recertify(c).ok();
    detail += "n" + std::to_string(n) + " residual " + fmt(c.residual_rel) + "; ";
  }
  const double t = seconds_since(start);
  ok = ok && t < 30.0;
  return {ok, detail + fmt(t) + " s (limit 30 s)"};
}

Verdict closed_form() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto l = random_disc_points(rng, 3, 0.95);
    const Complex m1 = random_disc_point(rng, 0.95), m2 = random_disc_point(rng, 0.95);
    const Complex closed =
        kernel_g3_mu3zero(std::array<Complex, 3>{l[0], l[1], l[2]}, std::array<Complex, 2>{m1, m2});
    const Complex direct = kernel_gn(PolyPoint::in_domain(l), PolyPoint::in_domain({m1, m2, 0.0})).value;
    worst = std::max(worst, oracle::rel_gap(closed, direct));
  }
  return {worst < 1e-9, "1000 points, worst relative gap " + fmt(worst) + " (limit 1e-9)"};
}

Verdict confluent() {
  double worst = 0.0;
  for (const auto& c : cases::confluent_pairs(77, 100)) {
    const Complex stable = kernel_gn_stable(elem_sym(c.lambda), elem_sym(c.mu)).value;
    worst = std::max(worst, oracle::rel_gap(stable, oracle::kernel_perturbation_limit(c.lambda, c.mu)));
  }
  return {worst < 1e-6, "100 cases, worst relative gap " + fmt(worst) + " (limit 1e-6)"};
}

Verdict properties() {
  std::mt19937_64 rng(99);
  double herm = 0.0, perm = 0.0, round_trip = 0.0;
  std::size_t non_positive = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    auto l = random_disc_points(rng, n, 0.99);
    auto m = random_disc_points(rng, n, 0.99);
    const auto lp = PolyPoint::in_domain(l), mp = PolyPoint::in_domain(m);
    const Complex k = kernel_gn(lp, mp).value;
    herm = std::max(herm, oracle::rel_gap(kernel_gn(mp, lp).value, std::conj(k)));
    std::shuffle(l.begin(), l.end(), rng);
    std::shuffle(m.begin(), m.end(), rng);
    perm = std::max(perm, oracle::rel_gap(kernel_gn(PolyPoint::in_domain(l), PolyPoint::in_domain(m)).value, k));
    const Complex d = kernel_gn(lp, lp).value;
    if (!(d.real() > 0.0) || std::abs(d.imag()) > 1e-12 * d.real()) ++non_positive;
  }
  for (std::size_t n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_disc_points(rng, n, 1.0);
      round_trip = std::max(round_trip, oracle::multiset_gap(roots_from_sym(elem_sym(x)), x));
    }
  const bool ok = herm < 1e-12 && perm < 1e-12 && non_positive == 0 && round_trip < 1e-9;
  return {ok, "hermitian " + fmt(herm) + ", permutation " + fmt(perm) + ", non-positive diagonal " +
                  std::to_string(non_positive) + "/10000, round trip " + fmt(round_trip)};
}

Verdict sampling() {
  const auto start = std::chrono::steady_clock::now();
  const NonvanishingReport g2 = sample_nonvanishing(SampleMode::G2Full, 100000, 1);
  const NonvanishingReport g3 = sample_nonvanishing(SampleMode::G3EqualThird, 100000, 1);
  const double t = seconds_since(start);
  const bool ok = g2.min_scaled_delta > 0.0 && g3.min_scaled_delta > 0.0 && g2.certified_zeros == 0 &&
                  g3.certified_zeros == 0 && t < 60.0;
  return {ok, "g2_full min " + fmt(g2.min_scaled_delta) + ", g3_equal_third min " + fmt(g3.min_scaled_delta) +
                  ", no zero found, " + fmt(t) + " s (limit 60 s)"};
}

}  // namespace

int main() {
  criterion(1, "exact reduction and base point identities", exact_identities);
  criterion(2, "base quadratic root x0 and its rotation", base_root);
  criterion(3, "certified zero in dimension 3", dim3_zero);
  criterion(4, "lifted zeros in dimensions 4 to 6", lifts);
  criterion(5, "closed form matches the direct kernel", closed_form);
  criterion(6, "confluent evaluation matches the perturbation limit", confluent);
  criterion(7, "kernel and symmetrization properties", properties);
  criterion(8, "no kernel zeros among G_2 and equal-third G_3 samples", sampling);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
