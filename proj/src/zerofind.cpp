#include "symdisc/zerofind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include "symdisc/error.hpp"
#include "symdisc/random.hpp"

namespace symdisc {

namespace {

constexpr double kDistinctTol = 1e-12;

double halton(std::size_t index, std::size_t base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Runs body(i) for i in [0, count) over `threads` workers with a static partition.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<Complex> with_first(std::span<const Complex> coords, Complex first) {
  std::vector<Complex> out(coords.begin(), coords.end());
  out[0] = first;
  return out;
}

std::vector<Complex> appended(std::span<const Complex> coords, Complex extra) {
  std::vector<Complex> out(coords.begin(), coords.end());
  out.push_back(extra);
  return out;
}

}  // namespace

std::string_view to_string(Construction c) { return c == Construction::Dim3 ? "dim3" : "lift"; }

Construction construction_from_string(std::string_view s) {
  if (s == "dim3") return Construction::Dim3;
  if (s == "lift") return Construction::Lift;
  throw Error(ErrorKind::Parse, "unknown construction tag '" + std::string(s) + "'");
}

std::vector<Complex> solve_abc_quadratic(const QuadraticData& q) {
  const Complex zero{0.0, 0.0};
  const Complex a = q.a, b = q.b, c2 = 2.0 * q.c;
  std::vector<Complex> roots;
  if (a == zero) {
    if (b == zero) {
      throw Error(ErrorKind::NoSolution, c2 == zero ? "a = b = c = 0: every z is a root"
                                                    : "a = b = 0 with c != 0: no root");
    }
    roots.push_back(c2 / b);
    return roots;
  }
  // a z^2 - b z + 2c: z = (b +- sqrt(b^2 - 8ac)) / 2a, taking the larger |b +- sqrt| first.
  const Complex disc = std::sqrt(b * b - 4.0 * a * c2);
  const Complex plus = b + disc, minus = b - disc;
  const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
  if (big == zero) {
    roots = {zero, zero};
  } else {
    const Complex z1 = big / (2.0 * a);
    const Complex z2 = 2.0 * c2 / big;
    roots = {z1, z2};
  }
  std::sort(roots.begin(), roots.end(),
            [](const Complex& x, const Complex& y) { return std::abs(x) < std::abs(y); });
  return roots;
}

std::array<Complex, 3> base_nu() {
  const double pi = std::numbers::pi;
  return {std::polar(1.0, pi / 6.0), std::polar(1.0, pi / 3.0), std::polar(1.0, -pi / 6.0)};
}

Complex base_quadratic_root() {
  const long double s2 = std::sqrt(2.0L), s3 = std::sqrt(3.0L);
  const long double x0 = (6.0L - 3.0L * s3 - std::sqrt(40.0L * s3 - 69.0L)) / (s2 * (3.0L * s3 - 5.0L));
  return std::polar(static_cast<double>(x0), -std::numbers::pi / 4.0);
}

Complex fn_value(const ZeroCertificate& cert, Complex x) {
  return delta_n(PolyPoint::raw(with_first(cert.lambda.coords(), x)), cert.mu);
}

FnWitness fn_nontrivial(const ZeroCertificate& cert, const WitnessOptions& opts) {
  if (!cert.mu.pairwise_distinct(kDistinctTol))
    throw Error(ErrorKind::WitnessNotFound, "mu coordinates are not pairwise distinct");
  const double scale = delta_scaled(cert.lambda, cert.mu).scale;
  const double threshold = kWitnessFactor * cert.tolerance * scale;
  for (std::size_t i = 1; i <= opts.max_samples; ++i) {
    const double r = 0.999 * std::sqrt(halton(i, 2));
    const Complex x = std::polar(r, 2.0 * std::numbers::pi * halton(i, 3));
    const double value = std::abs(fn_value(cert, x));
    if (value > threshold) return {x, value, i};
  }
  throw Error(ErrorKind::WitnessNotFound,
              "no sample with |f_n| above threshold after " + std::to_string(opts.max_samples) + " samples");
}

Recertification recertify(const ZeroCertificate& cert) {
  Recertification out;
  out.moduli_ok = cert.lambda.size() == cert.n && cert.mu.size() == cert.n &&
                  cert.lambda.inside_polydisc() && cert.mu.inside_polydisc();
  out.distinct_ok = cert.lambda.pairwise_distinct(kDistinctTol) && cert.mu.pairwise_distinct(kDistinctTol);
  if (cert.construction == Construction::Lift && cert.n > 0)
    out.distinct_ok = out.distinct_ok && cert.lambda[cert.n - 1] == cert.mu[cert.n - 1];
  if (!out.moduli_ok) return out;
  const DeltaEval d = delta_scaled(cert.lambda, cert.mu);
  out.scale = d.scale;
  out.residual_rel = d.relative();
  out.residual_ok = out.residual_rel <= cert.tolerance;
  if (out.distinct_ok) out.kernel_abs = std::abs(kernel_gn(cert.lambda, cert.mu).value);
  if (cert.fn_witness) {
    const double value = std::abs(fn_value(cert, cert.fn_witness->point));
    out.witness_ok = std::abs(cert.fn_witness->point) < 1.0 &&
                     value > kWitnessFactor * cert.tolerance * out.scale;
  }
  return out;
}

ZeroCertificate construct_zero_dim3(double rho, double mu1_modulus, const Dim3Options& opts) {
  if (!(rho >= 0.0 && rho < 1.0) || !(mu1_modulus > rho && mu1_modulus < 1.0)) {
    throw Error(ErrorKind::InvalidScaling,
                "need 0 <= rho < mu1_modulus < 1 (rho=" + std::to_string(rho) +
                    ", mu1_modulus=" + std::to_string(mu1_modulus) + ")");
  }
  std::array<Complex, 3> nu = base_nu();
  for (auto& v : nu) v *= rho;
  const QuadraticData q = abc_coeffs(nu);

  std::vector<Complex> roots;
  try {
    roots = solve_abc_quadratic(q);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoSolution) throw;
    throw Error(ErrorKind::NoRootInUnitDisc, e.what());
  }
  const Complex target = base_quadratic_root();
  std::optional<Complex> z;
  for (const auto& r : roots) {
    if (std::abs(r) >= 1.0) continue;
    if (!z || std::abs(r - target) < std::abs(*z - target)) z = r;
  }
  if (!z) throw Error(ErrorKind::NoRootInUnitDisc, "every root of a z^2 - b z + 2c has modulus >= 1");

  const Complex mu1{mu1_modulus, 0.0};
  std::vector<Complex> lambda(3);
  for (std::size_t j = 0; j < 3; ++j) lambda[j] = nu[j] / std::conj(mu1);

  ZeroCertificate cert;
  cert.n = 3;
  cert.lambda = PolyPoint::in_domain(std::move(lambda));
  cert.mu = PolyPoint::in_domain({mu1, std::conj(*z) * mu1, Complex{0.0, 0.0}});
  cert.construction = Construction::Dim3;
  cert.seed = opts.seed;
  cert.tolerance = opts.tolerance;

  if (!cert.lambda.pairwise_distinct(kDistinctTol) || !cert.mu.pairwise_distinct(kDistinctTol))
    throw Error(ErrorKind::NoRootInUnitDisc, "constructed coordinates are not pairwise distinct");
  const DeltaEval d = delta_scaled(cert.lambda, cert.mu);
  cert.residual_rel = d.relative();
  if (cert.residual_rel > cert.tolerance) {
    throw Error(ErrorKind::CertificationFailed,
                "residual " + std::to_string(cert.residual_rel) + " above tolerance");
  }
  cert.kernel_abs = std::abs(kernel_gn(cert.lambda, cert.mu).value);
  cert.fn_witness = fn_nontrivial(cert);
  return cert;
}

WindingCount count_zeros_disc(const AnalyticFn& g, Complex center, double radius, const ContourOptions& opts) {
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidScaling, "contour radius must be positive");
  const double h = 1e-6 * radius;

  // Samples of g'/g * (x - center) at node k of an N-point grid, cached across refinements.
  auto sample = [&](double theta) {
    const Complex x = center + std::polar(radius, theta);
    const Complex value = g(x);
    const Complex deriv = (g(x + h) - g(x - h)) / (2.0 * h);
    if (std::abs(value) == 0.0 || std::abs(value) < opts.min_distance * std::abs(deriv)) {
      throw Error(ErrorKind::ContourTooClose, "zero within " + std::to_string(opts.min_distance) +
                                                  " of the contour");
    }
    return deriv / value * (x - center);
  };

  std::size_t nodes = opts.initial_nodes;
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < nodes; ++k)
    sum += sample(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nodes));
  Complex integral = sum / static_cast<double>(nodes);

  while (nodes < opts.max_nodes) {
    // Doubling adds the midpoints.
    for (std::size_t k = 0; k < nodes; ++k)
      sum += sample(2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(nodes));
    nodes *= 2;
    const Complex refined = sum / static_cast<double>(nodes);
    const bool settled = std::abs(refined - integral) < 1e-8;
    integral = refined;
    if (settled) break;
  }

  WindingCount out;
  out.count = static_cast<int>(std::lround(integral.real()));
  out.gap = std::abs(integral - Complex(out.count, 0.0));
  out.nodes = nodes;
  if (out.gap > opts.max_gap) {
    throw Error(ErrorKind::NonIntegerWinding,
                "winding integral " + std::to_string(integral.real()) + " is not near an integer");
  }
  return out;
}

NewtonResult newton_refine(const AnalyticFn& g, Complex start, double h, int max_iterations, double step_tol) {
  NewtonResult out{start, 0, false};
  Complex x = start;
  for (int it = 1; it <= max_iterations; ++it) {
    const Complex value = g(x);
    const Complex deriv = (g(x + h) - g(x - h)) / (2.0 * h);
    out.iterations = it;
    if (deriv == Complex{0.0, 0.0} || !std::isfinite(std::abs(value))) break;
    const Complex step = value / deriv;
    x -= step;
    if (!std::isfinite(std::abs(x))) break;
    if (std::abs(step) < step_tol) {
      out.converged = true;
      break;
    }
  }
  out.root = x;
  return out;
}

namespace {

struct RoucheData {
  double f_min = std::numeric_limits<double>::infinity();
  double h_max = 0.0;
  std::vector<Complex> boundary;
  std::vector<double> f_abs;  // |f_n| on the boundary samples
};

// Delta_{n+1} with last row/column (t, t) and the corner entry removed.
Complex h_value(const ZeroCertificate& cert, Complex x, Complex t) {
  const PolyPoint lambda = PolyPoint::raw(appended(with_first(cert.lambda.coords(), x), t));
  const PolyPoint mu = PolyPoint::raw(appended(cert.mu.coords(), t));
  const std::size_t n = cert.n;
  ComplexMatrix m(n + 1, n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (j == n && k == n) continue;
      const Complex base = 1.0 - lambda[j] * std::conj(mu[k]);
      m(j, k) = 1.0 / (base * base);
    }
  }
  return determinant(std::move(m));
}

RoucheData estimate_rouche(const ZeroCertificate& cert, double radius, const LiftConfig& config) {
  RoucheData data;
  const Complex center = cert.lambda[0];
  const std::size_t nb = config.boundary_samples;
  data.boundary.resize(nb);
  data.f_abs.resize(nb);
  for (std::size_t k = 0; k < nb; ++k)
    data.boundary[k] = center + std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                                       static_cast<double>(nb));
  parallel_for(nb, config.threads, [&](std::size_t k) { data.f_abs[k] = std::abs(fn_value(cert, data.boundary[k])); });
  data.f_min = *std::min_element(data.f_abs.begin(), data.f_abs.end());

  // grid_samples points on the boundary times grid_samples points of the closed disc
  // (rings at radius i/side, side angles per ring, outer ring on the unit circle).
  const std::size_t g = config.grid_samples;
  const auto side = static_cast<std::size_t>(std::max(1.0, std::floor(std::sqrt(static_cast<double>(g)))));
  std::vector<Complex> disc;
  for (std::size_t i = 1; i <= side; ++i)
    for (std::size_t a = 0; a < side; ++a)
      disc.push_back(std::polar(static_cast<double>(i) / static_cast<double>(side),
                                2.0 * std::numbers::pi * (static_cast<double>(a) + 0.5 * static_cast<double>(i % 2)) /
                                    static_cast<double>(side)));
  std::vector<double> h_abs(g, 0.0);
  parallel_for(g, config.threads, [&](std::size_t b) {
    const Complex x = center + std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(b) /
                                                      static_cast<double>(g));
    double best = 0.0;
    for (const auto& t : disc) best = std::max(best, std::abs(h_value(cert, x, t)));
    h_abs[b] = best;
  });
  data.h_max = *std::max_element(h_abs.begin(), h_abs.end());
  return data;
}

struct Attempt {
  ZeroCertificate cert;
  bool degenerate = false;
};

}  // namespace

LiftResult lift_zero_traced(const ZeroCertificate& cert, const LiftConfig& config) {
  if (!cert.fn_witness) throw Error(ErrorKind::WitnessNotFound, "certificate has no f_n witness");
  if (!(config.append_modulus_step > 0.0 && config.append_modulus_step < 1.0))
    throw Error(ErrorKind::InvalidScaling, "append_modulus_step must lie in (0, 1)");
  if (config.boundary_samples < 64) throw Error(ErrorKind::InvalidScaling, "boundary_samples must be >= 64");
  if (!(config.disc_radius > 0.0)) throw Error(ErrorKind::InvalidScaling, "disc_radius must be positive");

  const std::size_t n = cert.n;
  const Complex center = cert.lambda[0];
  LiftTrace trace;
  double radius = std::min(config.disc_radius, 0.5 * (1.0 - std::abs(center)));

  const AnalyticFn f = [&](Complex x) { return fn_value(cert, x); };
  // Keep lambda_1 the only zero of f_n in the disc.
  for (int shrink = 0; shrink < 8 && count_zeros_disc(f, center, radius).count > 1; ++shrink) radius *= 0.5;

  std::mt19937_64 rng(cert.seed);
  const double phase = config.real_positive_append
                           ? 0.0
                           : 2.0 * std::numbers::pi * std::uniform_real_distribution<double>(0.0, 1.0)(rng);

  for (int degenerate = 0; degenerate <= 3; ++degenerate) {
    trace.effective_radius = radius;
    const RoucheData rd = estimate_rouche(cert, radius, config);
    trace.f_min = rd.f_min;
    trace.h_max = rd.h_max;
    trace.m_estimate = rd.h_max > 0.0 ? rd.f_min / rd.h_max : std::numeric_limits<double>::infinity();
    trace.rouche_retries = 0;

    std::optional<Complex> chosen;
    std::optional<Complex> root;
    double step_power = config.append_modulus_step;
    for (int attempt = 0; attempt <= config.max_retries; ++attempt, step_power *= config.append_modulus_step) {
      const double modulus = 1.0 - step_power;
      if (!(modulus < 1.0)) break;
      const double damp = (1.0 - modulus * modulus) * (1.0 - modulus * modulus);
      const Complex t = std::polar(modulus, phase);
      bool admissible = damp < trace.m_estimate * config.safety;
      // Post-check of the Rouche inequality on the sampled boundary.
      for (std::size_t k = 0; admissible && k < rd.boundary.size(); k += 4)
        admissible = rd.f_abs[k] > damp * std::abs(h_value(cert, rd.boundary[k], t));
      if (admissible) {
        const AnalyticFn g = [&](Complex x) {
          const PolyPoint lambda = PolyPoint::raw(appended(with_first(cert.lambda.coords(), x), t));
          const PolyPoint mu = PolyPoint::raw(appended(cert.mu.coords(), t));
          return damp * delta_n(lambda, mu);
        };
        const WindingCount wc = count_zeros_disc(g, center, radius);
        trace.zeros_in_disc = wc.count;
        if (wc.count >= 1) {
          std::vector<Complex> seeds{center};
          if (wc.count > 1)
            for (int k = 0; k < 8; ++k) seeds.push_back(center + std::polar(0.5 * radius, std::numbers::pi * k / 4.0));
          for (const auto& s : seeds) {
            const NewtonResult nr = newton_refine(g, s, 1e-7 * radius);
            if (!nr.converged || std::abs(nr.root - center) >= radius) continue;
            if (!root || std::abs(nr.root - center) < std::abs(*root - center)) root = nr.root;
          }
          if (root) {
            chosen = t;
            break;
          }
        }
      }
      ++trace.rouche_retries;
    }
    if (!chosen) {
      throw Error(ErrorKind::RoucheBoundViolated,
                  "no admissible appended modulus after " + std::to_string(config.max_retries) +
                      " retries (m ~ " + std::to_string(trace.m_estimate) + ")");
    }
    trace.appended_modulus = std::abs(*chosen);

    ZeroCertificate next;
    next.n = n + 1;
    next.lambda = PolyPoint::raw(appended(with_first(cert.lambda.coords(), *root), *chosen));
    next.mu = PolyPoint::raw(appended(cert.mu.coords(), *chosen));
    if (!next.lambda.pairwise_distinct(kDistinctTol) || !next.mu.pairwise_distinct(kDistinctTol) ||
        !next.lambda.inside_polydisc() || !next.mu.inside_polydisc()) {
      ++trace.degenerate_retries;
      radius *= 0.7;
      continue;
    }
    next.construction = Construction::Lift;
    next.parent = std::make_shared<const ZeroCertificate>(cert);
    next.seed = cert.seed;
    next.tolerance = config.tolerance;
    const DeltaEval d = delta_scaled(next.lambda, next.mu);
    next.residual_rel = d.relative();
    if (next.residual_rel > next.tolerance) {
      throw Error(ErrorKind::CertificationFailed,
                  "lifted residual " + std::to_string(next.residual_rel) + " above tolerance");
    }
    next.kernel_abs = std::abs(kernel_gn(next.lambda, next.mu).value);
    next.fn_witness = fn_nontrivial(next);
    trace.zeros_in_disc = std::max(trace.zeros_in_disc, 1);
    return {std::move(next), trace};
  }
  throw Error(ErrorKind::DegenerateLift, "lifted coordinates collide after repeated radius perturbation");
}

ZeroCertificate lift_zero(const ZeroCertificate& cert, const LiftConfig& config) {
  return lift_zero_traced(cert, config).certificate;
}

ZeroCertificate find_zero(std::size_t n, const LiftConfig& config, const Dim3Options& opts) {
  if (n < 3) throw Error(ErrorKind::InvalidScaling, "zeros exist only for n >= 3");
  ZeroCertificate cert = construct_zero_dim3(kDefaultRho, kDefaultMu1Modulus, opts);
  while (cert.n < n) cert = lift_zero(cert, config);
  return cert;
}

std::string_view to_string(SampleMode mode) {
  switch (mode) {
    case SampleMode::G2Full: return "g2_full";
    case SampleMode::G3EqualThird: return "g3_equal_third";
    case SampleMode::Diagonal: return "diagonal";
  }
  return "unknown";
}

SampleMode sample_mode_from_string(std::string_view s) {
  if (s == "g2_full") return SampleMode::G2Full;
  if (s == "g3_equal_third") return SampleMode::G3EqualThird;
  if (s == "diagonal") return SampleMode::Diagonal;
  throw Error(ErrorKind::Parse, "unknown sampling mode '" + std::string(s) + "'");
}

namespace {

struct SampleOutcome {
  double scaled_delta = std::numeric_limits<double>::infinity();
  double normalized_kernel = std::numeric_limits<double>::infinity();
  bool diagonal_positive = true;
  double imag_ratio = 0.0;
};

std::pair<PolyPoint, PolyPoint> draw_pair(SampleMode mode, std::uint64_t seed, std::size_t index) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  const std::size_t n = mode == SampleMode::G2Full ? 2 : 3;
  std::vector<Complex> lambda(n), mu(n);
  for (auto& v : lambda) v = random_disc_point(rng, 1.0 - kSampleShrink);
  for (auto& v : mu) v = random_disc_point(rng, 1.0 - kSampleShrink);
  if (mode == SampleMode::G3EqualThird) mu[2] = lambda[2];
  if (mode == SampleMode::Diagonal) mu = lambda;
  return {PolyPoint::in_domain(std::move(lambda)), PolyPoint::in_domain(std::move(mu))};
}

}  // namespace

NonvanishingReport sample_nonvanishing(SampleMode mode, std::size_t samples, std::uint64_t seed, unsigned threads) {
  if (samples == 0) throw Error(ErrorKind::InvalidScaling, "samples must be >= 1");
  std::vector<SampleOutcome> outcomes(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    const auto [lambda, mu] = draw_pair(mode, seed, i);
    SampleOutcome& o = outcomes[i];
    o.scaled_delta = delta_scaled(lambda, mu).relative();
    if (!lambda.pairwise_distinct() || !mu.pairwise_distinct()) return;
    const KernelEval k = kernel_gn(lambda, mu);
    const double kl = std::abs(kernel_gn(lambda, lambda).value);
    const double km = std::abs(kernel_gn(mu, mu).value);
    o.normalized_kernel = std::abs(k.value) / std::sqrt(kl * km);
    if (mode == SampleMode::Diagonal) {
      o.diagonal_positive = k.value.real() > 0.0 && k.numerator.real() > 0.0;
      o.imag_ratio = std::abs(k.value.imag()) / std::abs(k.value);
    }
  });

  NonvanishingReport report;
  report.mode = mode;
  report.samples = samples;
  std::size_t argmin = 0;
  report.min_scaled_delta = std::numeric_limits<double>::infinity();
  report.min_normalized_kernel = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const SampleOutcome& o = outcomes[i];
    if (o.scaled_delta < report.min_scaled_delta) {
      report.min_scaled_delta = o.scaled_delta;
      argmin = i;
    }
    report.min_normalized_kernel = std::min(report.min_normalized_kernel, o.normalized_kernel);
    if (o.scaled_delta < kDim3Tolerance) ++report.certified_zeros;
    if (!o.diagonal_positive) ++report.non_positive_diagonal;
    report.max_diagonal_imag_ratio = std::max(report.max_diagonal_imag_ratio, o.imag_ratio);
  }
  auto [lambda, mu] = draw_pair(mode, seed, argmin);
  report.argmin_lambda = std::move(lambda);
  report.argmin_mu = std::move(mu);
  return report;
}

}  // namespace symdisc
