#pragma once

// Construction and certification of zeros of the Bergman kernel of G_n.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "symdisc/kernel.hpp"
#include "symdisc/symcore.hpp"

namespace symdisc {

inline constexpr double kDim3Tolerance = 1e-10;
inline constexpr double kLiftTolerance = 1e-8;
inline constexpr double kWitnessFactor = 1e3;

enum class Construction { Dim3, Lift };

std::string_view to_string(Construction c);
Construction construction_from_string(std::string_view s);

struct FnWitness {
  Complex point;
  double value_abs = 0.0;  // |f_n(point)|
  std::size_t samples = 0;
};

/// A pair (lambda, mu) in D^n x D^n with Delta_n(lambda, mu) = 0 up to
/// residual_rel = |Delta_n| / hadamard_bound.
struct ZeroCertificate {
  std::size_t n = 0;
  PolyPoint lambda;
  PolyPoint mu;
  double residual_rel = 0.0;
  double kernel_abs = 0.0;
  Construction construction = Construction::Dim3;
  std::shared_ptr<const ZeroCertificate> parent;
  std::optional<FnWitness> fn_witness;
  std::uint64_t seed = 0;
  double tolerance = kDim3Tolerance;
};

struct Recertification {
  double residual_rel = 0.0;
  double kernel_abs = 0.0;
  double scale = 0.0;
  bool moduli_ok = false;
  bool distinct_ok = false;
  bool residual_ok = false;
  bool witness_ok = false;

  bool ok() const { return moduli_ok && distinct_ok && residual_ok && witness_ok; }
};

/// Recompute every quantity a certificate claims, independently of how it was built.
Recertification recertify(const ZeroCertificate& cert);

/// Roots of a z^2 - b z + 2c sorted by modulus.
std::vector<Complex> solve_abc_quadratic(const QuadraticData& q);

/// The dimension-3 base point (e^{i pi/6}, e^{i pi/3}, e^{-i pi/6}).
std::array<Complex, 3> base_nu();

/// e^{-i pi/4} x0 with x0 the smaller root of the real quadratic obtained at the base point.
Complex base_quadratic_root();

struct Dim3Options {
  double tolerance = kDim3Tolerance;
  std::uint64_t seed = 0;
};

inline constexpr double kDefaultRho = 0.999;
inline constexpr double kDefaultMu1Modulus = 0.9995;

ZeroCertificate construct_zero_dim3(double rho = kDefaultRho, double mu1_modulus = kDefaultMu1Modulus,
                                    const Dim3Options& opts = {});

/// f_n(x) = Delta_n(x, lambda_2, ..., lambda_n; mu_1, ..., mu_n).
Complex fn_value(const ZeroCertificate& cert, Complex x);

struct WitnessOptions {
  std::size_t max_samples = 4096;
};

/// Searches a Halton sequence in D for x with |f_n(x)| > kWitnessFactor * tol * scale.
FnWitness fn_nontrivial(const ZeroCertificate& cert, const WitnessOptions& opts = {});

struct ContourOptions {
  std::size_t initial_nodes = 64;
  std::size_t max_nodes = 1 << 16;
  double min_distance = 1e-8;
  double max_gap = 0.1;
};

struct WindingCount {
  int count = 0;
  double gap = 0.0;
  std::size_t nodes = 0;
};

using AnalyticFn = std::function<Complex(Complex)>;

/// Argument principle on the circle |x - center| = radius.
WindingCount count_zeros_disc(const AnalyticFn& g, Complex center, double radius,
                              const ContourOptions& opts = {});

struct NewtonResult {
  Complex root;
  int iterations = 0;
  bool converged = false;
};

/// Newton iteration with central-difference derivative of step `h`.
NewtonResult newton_refine(const AnalyticFn& g, Complex start, double h, int max_iterations = 100,
                           double step_tol = 1e-13);

struct LiftConfig {
  double disc_radius = 0.05;
  std::size_t boundary_samples = 256;
  std::size_t grid_samples = 64;
  double append_modulus_step = 0.5;
  int max_retries = 64;
  bool real_positive_append = true;
  double safety = 0.5;
  double tolerance = kLiftTolerance;
  unsigned threads = 1;
};

struct LiftTrace {
  double effective_radius = 0.0;
  double f_min = 0.0;
  double h_max = 0.0;
  double m_estimate = 0.0;
  double appended_modulus = 0.0;
  int rouche_retries = 0;
  int degenerate_retries = 0;
  int zeros_in_disc = 0;
};

struct LiftResult {
  ZeroCertificate certificate;
  LiftTrace trace;
};

LiftResult lift_zero_traced(const ZeroCertificate& cert, const LiftConfig& config = {});
ZeroCertificate lift_zero(const ZeroCertificate& cert, const LiftConfig& config = {});

/// Dimension-3 construction followed by n - 3 lifts.
ZeroCertificate find_zero(std::size_t n, const LiftConfig& config = {}, const Dim3Options& opts = {});

enum class SampleMode { G2Full, G3EqualThird, Diagonal };

std::string_view to_string(SampleMode mode);
SampleMode sample_mode_from_string(std::string_view s);

struct NonvanishingReport {
  SampleMode mode = SampleMode::G2Full;
  std::size_t samples = 0;
  double min_scaled_delta = 0.0;        // min |Delta_n| / hadamard_bound
  double min_normalized_kernel = 0.0;   // min |K(l,m)| / sqrt(K(l,l) K(m,m))
  PolyPoint argmin_lambda;
  PolyPoint argmin_mu;
  std::size_t certified_zeros = 0;      // samples with scaled |Delta| below kDim3Tolerance
  std::size_t non_positive_diagonal = 0;  // diagonal mode only
  double max_diagonal_imag_ratio = 0.0;   // diagonal mode only
};

inline constexpr double kSampleShrink = 1e-3;

/// Draws pairs uniformly from (1 - kSampleShrink) D^n; only reports, never asserts.
NonvanishingReport sample_nonvanishing(SampleMode mode, std::size_t samples, std::uint64_t seed,
                                       unsigned threads = 1);

}  // namespace symdisc
