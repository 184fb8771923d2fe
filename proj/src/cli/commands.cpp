#include "symdisc/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "symdisc/certificate_io.hpp"
#include "symdisc/error.hpp"
#include "symdisc/kernel.hpp"
#include "symdisc/random.hpp"

namespace symdisc::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(Complex c) { return num(c.real()) + (c.imag() < 0 || std::signbit(c.imag()) ? " - " : " + ") +
                                    num(std::abs(c.imag())) + "i"; }

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotInDomain:
    case ErrorKind::InvalidScaling:
      return kUsageError;
    default:
      return kNumericalFailure;
  }
}

// Writes to the configured output file, or to `out` when none is set.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output) {
    std::ofstream file(*cfg.output);
    if (!file) throw Error(ErrorKind::Parse, "cannot open " + cfg.output->string() + " for writing");
    file << text;
  } else {
    out << text;
  }
}

template <typename Fn>
int guarded(std::ostream& out, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    out << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

double relative_gap(Complex x, Complex y) {
  const double denom = std::max(std::abs(x), std::abs(y));
  return denom == 0.0 ? 0.0 : std::abs(x - y) / denom;
}

std::vector<Complex> parse_points(const std::vector<std::string>& tokens) {
  std::vector<Complex> out;
  for (const auto& tok : tokens) {
    std::istringstream parts(tok);
    std::string item;
    while (std::getline(parts, item, ';'))
      if (!item.empty()) out.push_back(parse_complex(item));
  }
  return out;
}

}  // namespace

Format format_from_string(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw Error(ErrorKind::Parse, "unknown format '" + s + "'");
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string re_s = text.substr(0, comma), im_s = text.substr(comma + 1);
    const double re = std::stod(re_s, &used);
    if (used != re_s.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_s, &used);
    if (used != im_s.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "cannot parse complex number '" + text + "' (expected re,im)");
  }
}

exact::VerificationReport numeric_cross_checks(std::uint64_t seed) {
  exact::VerificationReport report("floating-point cross-checks");
  std::mt19937_64 rng(seed);

  double closed_form = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto lambda = random_disc_points(rng, 3, 0.95);
    const auto mu12 = random_disc_points(rng, 2, 0.95);
    const Complex direct =
        kernel_gn(PolyPoint::in_domain(lambda), PolyPoint::in_domain({mu12[0], mu12[1], Complex{0.0, 0.0}})).value;
    const Complex closed = kernel_g3_mu3zero(std::span<const Complex, 3>(lambda.data(), 3),
                                             std::span<const Complex, 2>(mu12.data(), 2));
    closed_form = std::max(closed_form, relative_gap(direct, closed));
  }
  report.add("numeric.closed_form", "dimension-3 quadratic closed form equals the determinant formula (1e3 points)",
             closed_form < 1e-9, "max relative gap " + num(closed_form));

  double chain = 0.0, bracket = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto lambda = random_disc_points(rng, 3, 0.95);
    const auto mu12 = random_disc_points(rng, 2, 0.95);
    const Complex m1 = std::conj(mu12[0]), m2 = std::conj(mu12[1]);
    const Complex z = m2 / m1;
    const std::array<Complex, 3> nu{lambda[0] * m1, lambda[1] * m1, lambda[2] * m1};
    const QuadraticData q = abc_coeffs(nu);
    const Complex diff = nu[1] - nu[0];
    const Complex A = diff * q.a, B = diff * q.b, C = diff * q.c;
    const Complex cubic = (z - 1.0) * (A * z * z - B * z + 2.0 * C);

    const auto poly = bracket_polynomial(nu);
    const Complex bracket_value = poly[0] + z * (poly[1] + z * (poly[2] + z * poly[3]));
    bracket = std::max(bracket, relative_gap(bracket_value, cubic));

    const Complex k = kernel_gn(PolyPoint::in_domain(lambda),
                                PolyPoint::in_domain({mu12[0], mu12[1], Complex{0.0, 0.0}})).value;
    const Complex lhs = pi_power(3) * vandermonde(lambda) * m1 * m2 * (m1 - m2) * k;
    Complex prod{1.0, 0.0};
    for (const auto& l : lambda)
      for (const Complex mb : {m1, m2}) prod *= (1.0 - l * mb) * (1.0 - l * mb);
    const Complex rhs = (nu[0] - nu[2]) * (nu[1] - nu[2]) * z * cubic / prod;
    chain = std::max(chain, relative_gap(lhs, rhs));
  }
  report.add("numeric.bracket", "bracket = (z-1)(nu2-nu1)(a z^2 - b z + 2c) at 100 points", bracket < 1e-10,
             "max relative gap " + num(bracket));
  report.add("numeric.reduction_chain", "scaled kernel equals the factored cubic form at 100 points", chain < 1e-9,
             "max relative gap " + num(chain));

  const QuadraticData q0 = abc_coeffs(base_nu());
  const auto exact_nu = exact::base_point_exact();
  const auto e = exact::elementary_symmetric3(exact_nu[0], exact_nu[1], exact_nu[2]);
  const auto abc = exact::abc_from_symmetric(e[0], e[1], e[2]);
  double abc_gap = 0.0;
  const std::array<Complex, 3> floats{q0.a, q0.b, q0.c};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto ex = abc[k].to_complex();
    abc_gap = std::max(abc_gap, relative_gap(floats[k], Complex(static_cast<double>(ex.real()),
                                                                static_cast<double>(ex.imag()))));
  }
  report.add("numeric.abc_base_point", "floating a, b, c at the base point match the exact values", abc_gap < 1e-14,
             "max relative gap " + num(abc_gap));

  const auto roots = solve_abc_quadratic(q0);
  const double root_gap = std::abs(roots.front() - base_quadratic_root());
  report.add("numeric.base_root", "smaller root of a z^2 - b z + 2c at the base point is e^{-i pi/4} x0",
             root_gap < 1e-10, "|gap| " + num(root_gap));

  const ZeroCertificate cert = construct_zero_dim3();
  const Recertification re = recertify(cert);
  report.add("numeric.dim3_zero", "explicit dimension-3 kernel zero recertifies", re.ok(),
             "residual_rel " + num(re.residual_rel));

  report.note("the f_3 moment argument uses the determinant with row 2 = (1 - lambda2 conj(mu_k))^-2, k = 1..3 "
              "(entry (2,3) is (1 - lambda2 conj(mu3))^-2)");
  return report;
}

int cmd_verify_paper(const RunConfig& cfg, exact::Fault fault, std::ostream& out) {
  return guarded(out, [&] {
    exact::VerificationReport report("verify-paper");
    report.append(exact::verify_reduction_identities());
    report.append(exact::verify_base_point_identities(fault));
    report.append(numeric_cross_checks(cfg.seed));
    const std::string text = cfg.format == Format::Json ? report.to_json().dump(2) + "\n" : report.to_text();
    out << text;
    if (cfg.output) emit(cfg, out, text);
    return report.all_passed() ? kSuccess : kVerificationFailure;
  });
}

namespace {

void print_chain(const ZeroCertificate& cert, std::ostream& out) {
  if (cert.parent) print_chain(*cert.parent, out);
  out << "n=" << cert.n << " construction=" << to_string(cert.construction)
      << " residual_rel=" << num(cert.residual_rel) << " kernel_abs=" << num(cert.kernel_abs) << '\n';
}

}  // namespace

int cmd_find_zero(std::size_t n, const RunConfig& cfg, double rho, double mu1_modulus, const LiftConfig& lift,
                  std::ostream& out) {
  if (n < 3) {
    out << "error: find-zero needs n >= 3 (G_2 has no kernel zeros to find)\n";
    return kUsageError;
  }
  return guarded(out, [&] {
    ZeroCertificate cert = construct_zero_dim3(rho, mu1_modulus, {cfg.tolerance, cfg.seed});
    LiftConfig lc = lift;
    lc.tolerance = cfg.lift_tolerance;
    lc.threads = cfg.threads;
    while (cert.n < n) cert = lift_zero(cert, lc);
    const auto path = cfg.output.value_or("zero-n" + std::to_string(n) + ".json");
    write_certificate(path, cert);
    print_chain(cert, out);
    out << "wrote " << path.string() << '\n';
    return kSuccess;
  });
}

int cmd_lift(const std::filesystem::path& input, const RunConfig& cfg, const LiftConfig& lift, std::ostream& out) {
  return guarded(out, [&] {
    const ZeroCertificate cert = read_certificate(input);
    if (!recertify(cert).ok()) {
      out << "error: input certificate does not recertify\n";
      return kNumericalFailure;
    }
    LiftConfig lc = lift;
    lc.tolerance = cfg.lift_tolerance;
    lc.threads = cfg.threads;
    const LiftResult result = lift_zero_traced(cert, lc);
    const auto path = cfg.output.value_or("zero-n" + std::to_string(result.certificate.n) + ".json");
    write_certificate(path, result.certificate);
    print_chain(result.certificate, out);
    out << "m_estimate=" << num(result.trace.m_estimate) << " appended_modulus=" << num(result.trace.appended_modulus)
        << " rouche_retries=" << result.trace.rouche_retries << " zeros_in_disc=" << result.trace.zeros_in_disc
        << '\n';
    out << "wrote " << path.string() << '\n';
    return kSuccess;
  });
}

int cmd_eval(std::size_t n, const std::vector<std::string>& lambda_s, const std::vector<std::string>& mu_s,
             const RunConfig& cfg, std::ostream& out) {
  return guarded(out, [&] {
    const auto lambda = PolyPoint::in_domain(parse_points(lambda_s));
    const auto mu = PolyPoint::in_domain(parse_points(mu_s));
    if (lambda.size() != n || mu.size() != n)
      throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n) + " points for each of lambda and mu");
    const bool confluent = !lambda.pairwise_distinct() || !mu.pairwise_distinct();
    const KernelEval k = confluent ? kernel_confluent(lambda, mu) : kernel_gn(lambda, mu);
    if (cfg.format == Format::Json) {
      nlohmann::json j{{"n", n},
                       {"kernel", {k.value.real(), k.value.imag()}},
                       {"kernel_abs", std::abs(k.value)},
                       {"delta", {k.numerator.real(), k.numerator.imag()}},
                       {"scale", k.scale},
                       {"residual_rel", std::abs(k.numerator) / k.scale},
                       {"confluent", confluent}};
      emit(cfg, out, j.dump(2) + "\n");
    } else {
      std::ostringstream s;
      s << "K = " << num(k.value) << '\n'
        << "|K| = " << num(std::abs(k.value)) << '\n'
        << "Delta = " << num(k.numerator) << '\n'
        << "scale = " << num(k.scale) << '\n'
        << "residual_rel = " << num(std::abs(k.numerator) / k.scale) << '\n'
        << "confluent = " << (confluent ? "yes" : "no") << '\n';
      emit(cfg, out, s.str());
    }
    return kSuccess;
  });
}

int cmd_sample(const std::string& mode_s, std::size_t count, const RunConfig& cfg, std::ostream& out) {
  return guarded(out, [&] {
    const SampleMode mode = sample_mode_from_string(mode_s);
    const NonvanishingReport r = sample_nonvanishing(mode, count, cfg.seed, cfg.threads);
    auto point_json = [](const PolyPoint& p) {
      auto a = nlohmann::json::array();
      for (const auto& c : p.coords()) a.push_back({c.real(), c.imag()});
      return a;
    };
    if (cfg.format == Format::Json) {
      nlohmann::json j{{"mode", std::string(to_string(mode))},
                       {"samples", r.samples},
                       {"seed", cfg.seed},
                       {"min_scaled_delta", r.min_scaled_delta},
                       {"min_normalized_kernel", r.min_normalized_kernel},
                       {"argmin_lambda", point_json(r.argmin_lambda)},
                       {"argmin_mu", point_json(r.argmin_mu)},
                       {"certified_zeros", r.certified_zeros},
                       {"zero_found", r.certified_zeros > 0}};
      if (mode == SampleMode::Diagonal) {
        j["non_positive_diagonal"] = r.non_positive_diagonal;
        j["max_diagonal_imag_ratio"] = r.max_diagonal_imag_ratio;
      }
      emit(cfg, out, j.dump(2) + "\n");
    } else {
      std::ostringstream s;
      s << "mode = " << to_string(mode) << '\n'
        << "samples = " << r.samples << '\n'
        << "seed = " << cfg.seed << '\n'
        << "min_scaled_delta = " << num(r.min_scaled_delta) << '\n'
        << "min_normalized_kernel = " << num(r.min_normalized_kernel) << '\n'
        << "certified_zeros = " << r.certified_zeros << '\n';
      if (mode == SampleMode::Diagonal)
        s << "non_positive_diagonal = " << r.non_positive_diagonal << '\n'
          << "max_diagonal_imag_ratio = " << num(r.max_diagonal_imag_ratio) << '\n';
      s << (r.certified_zeros == 0 ? "no zero found among the samples\n" : "samples below certification tolerance\n");
      emit(cfg, out, s.str());
    }
    return kSuccess;
  });
}

int cmd_grid(const std::filesystem::path& around, const std::string& axis, std::size_t res, double half_width,
             const RunConfig& cfg, std::ostream& out) {
  return guarded(out, [&] {
    if (res == 0 || !(half_width > 0.0)) throw Error(ErrorKind::InvalidScaling, "need res >= 1 and width > 0");
    if (axis != "z" && axis != "lambda1") throw Error(ErrorKind::Parse, "axis must be 'z' or 'lambda1'");
    const ZeroCertificate cert = read_certificate(around);
    const Complex mu1 = cert.mu[0];
    if (axis == "z" && (cert.n < 2 || mu1 == Complex{0.0, 0.0}))
      throw Error(ErrorKind::InvalidScaling, "axis z needs mu_1 != 0");
    const Complex center = axis == "z" ? std::conj(cert.mu[1]) / std::conj(mu1) : cert.lambda[0];
    const double h = 2.0 * half_width / static_cast<double>(res);
    const auto half = static_cast<long>(res / 2);

    std::ostringstream csv;
    csv << "re,im,abs_k,arg_k\n";
    for (std::size_t i = 0; i < res; ++i) {
      for (std::size_t j = 0; j < res; ++j) {
        const Complex p = center + Complex(h * static_cast<double>(static_cast<long>(j) - half),
                                           h * static_cast<double>(static_cast<long>(i) - half));
        std::vector<Complex> lambda(cert.lambda.coords().begin(), cert.lambda.coords().end());
        std::vector<Complex> mu(cert.mu.coords().begin(), cert.mu.coords().end());
        if (axis == "z") mu[1] = std::conj(p) * mu1;
        else lambda[0] = p;
        double abs_k = std::nan(""), arg_k = std::nan("");
        const auto lp = PolyPoint::raw(lambda), mp = PolyPoint::raw(mu);
        if (lp.inside_polydisc() && mp.inside_polydisc() && lp.pairwise_distinct() && mp.pairwise_distinct()) {
          const Complex k = kernel_gn(lp, mp).value;
          abs_k = std::abs(k);
          arg_k = std::arg(k);
        }
        csv << num(p.real()) << ',' << num(p.imag()) << ',' << num(abs_k) << ',' << num(arg_k) << '\n';
      }
    }
    emit(cfg, out, csv.str());
    return kSuccess;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bergman kernel of the symmetrized polydisc: evaluation, zeros, exact checks", "symdisc"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text", output;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o,--output", output, "output path");
    sub->add_option("--threads", cfg.threads, "parallelism degree")->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tolerance, "dimension-3 certification tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--lift-tol", cfg.lift_tolerance, "lift certification tolerance")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify-paper", "run all exact identity checks and numeric cross-checks");
  common(verify);
  std::string fault = "none";
  verify->add_option("--fault-inject", fault, "inject a fault (p-coeff)")->check(CLI::IsMember({"none", "p-coeff"}));

  LiftConfig lift;
  auto lift_options = [&](CLI::App* sub) {
    sub->add_option("--radius", lift.disc_radius, "radius of the Rouche disc")->check(CLI::PositiveNumber);
    sub->add_option("--step", lift.append_modulus_step, "appended modulus step in (0,1)");
    sub->add_option("--max-retries", lift.max_retries, "retries for the appended modulus");
    sub->add_flag("!--complex-append", lift.real_positive_append, "append a non-real coordinate");
  };

  auto* find = app.add_subcommand("find-zero", "construct a certified kernel zero in dimension n");
  common(find);
  lift_options(find);
  std::size_t n = 3;
  double rho = kDefaultRho, mu1 = kDefaultMu1Modulus;
  find->add_option("n", n, "dimension (>= 3)")->required();
  find->add_option("--rho", rho, "shrink factor for the base point")->capture_default_str();
  find->add_option("--mu1", mu1, "modulus of mu_1")->capture_default_str();

  auto* lift_cmd = app.add_subcommand("lift", "lift a certificate to the next dimension");
  common(lift_cmd);
  lift_options(lift_cmd);
  std::string input;
  lift_cmd->add_option("-i,--input", input, "certificate JSON")->required();

  auto* eval = app.add_subcommand("eval", "evaluate the kernel at a pair of points");
  common(eval);
  std::vector<std::string> lambda_s, mu_s;
  eval->add_option("--n", n, "dimension")->required();
  eval->add_option("--lambda", lambda_s, "coordinates as re,im")->required()->allow_extra_args();
  eval->add_option("--mu", mu_s, "coordinates as re,im")->required()->allow_extra_args();

  auto* sample = app.add_subcommand("sample", "sample families of pairs and report the smallest |Delta|");
  common(sample);
  std::string mode;
  std::size_t count = 100000;
  sample->add_option("mode", mode, "g2_full | g3_equal_third | diagonal")
      ->required()
      ->check(CLI::IsMember({"g2_full", "g3_equal_third", "diagonal"}));
  sample->add_option("--count", count, "number of samples")->capture_default_str();

  auto* grid = app.add_subcommand("grid", "CSV of |K| and arg K on a 2-D slice through a certificate");
  common(grid);
  std::string around, axis = "z";
  std::size_t res = 200;
  double width = 0.01;
  grid->add_option("--around", around, "certificate JSON")->required();
  grid->add_option("--axis", axis, "z | lambda1")->check(CLI::IsMember({"z", "lambda1"}));
  grid->add_option("--res", res, "cells per side")->capture_default_str();
  grid->add_option("--width", width, "half-width of the slice")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  cfg.format = format_from_string(format);
  if (!output.empty()) cfg.output = output;

  if (verify->parsed()) return cmd_verify_paper(cfg, exact::fault_from_string(fault), out);
  if (find->parsed()) return cmd_find_zero(n, cfg, rho, mu1, lift, out);
  if (lift_cmd->parsed()) return cmd_lift(input, cfg, lift, out);
  if (eval->parsed()) return cmd_eval(n, lambda_s, mu_s, cfg, out);
  if (sample->parsed()) return cmd_sample(mode, count, cfg, out);
  if (grid->parsed()) return cmd_grid(around, axis, res, width, cfg, out);
  return kUsageError;
}

}  // namespace symdisc::cli
