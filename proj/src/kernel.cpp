#include "symdisc/kernel.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "symdisc/error.hpp"

namespace symdisc {

namespace {

void require_same_size(const PolyPoint& lambda, const PolyPoint& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorKind::DimensionMismatch, "lambda has " + std::to_string(lambda.size()) +
                                                  " coordinates, mu has " + std::to_string(mu.size()));
}

void require_in_domain(const PolyPoint& p, const char* name) {
  if (!p.inside_polydisc()) throw Error(ErrorKind::NotInDomain, std::string(name) + " is not in D^n");
}

Complex cauchy_power(Complex lambda, Complex mu) {
  const Complex base = 1.0 - lambda * std::conj(mu);
  if (base == Complex{0.0, 0.0}) throw Error(ErrorKind::SingularEntry, "1 - lambda_j conj(mu_k) = 0");
  return 1.0 / (base * base);
}

struct Node {
  Complex value;
  std::size_t multiplicity;
};

std::vector<Node> cluster(std::span<const Complex> x, double tol) {
  const std::size_t n = x.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(x[i] - x[j]) <= tol) parent[find(j)] = find(i);

  std::vector<Node> nodes;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    std::size_t slot = 0;
    while (slot < roots.size() && roots[slot] != r) ++slot;
    if (slot == roots.size()) {
      roots.push_back(r);
      nodes.push_back({Complex{0.0, 0.0}, 0});
    }
    nodes[slot].value += x[i];
    ++nodes[slot].multiplicity;
  }
  for (auto& node : nodes) node.value /= static_cast<double>(node.multiplicity);
  return nodes;
}

// Replaces each cluster of m approximate roots by the nearby root of the
// (m-1)-th derivative of x^n - s_1 x^{n-1} + ..., which is simple there.
std::vector<Complex> sharpen_clusters(const std::vector<Complex>& roots, const SymPoint& s, double tol) {
  using LC = std::complex<long double>;
  const std::size_t n = s.size();
  std::vector<LC> coeffs(n + 1);  // coeffs[k] multiplies x^k
  coeffs[n] = 1.0L;
  for (std::size_t k = 1; k <= n; ++k) {
    const LC sk(s[k - 1].real(), s[k - 1].imag());
    coeffs[n - k] = k % 2 ? -sk : sk;
  }
  auto derivative = [](std::vector<LC> c, std::size_t times) {
    for (std::size_t t = 0; t < times && !c.empty(); ++t) {
      for (std::size_t k = 1; k < c.size(); ++k) c[k - 1] = c[k] * static_cast<long double>(k);
      c.pop_back();
    }
    return c;
  };
  auto horner = [](const std::vector<LC>& c, LC x) {
    LC v = 0.0L;
    for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
  };

  std::vector<Complex> out;
  for (const Node& node : cluster(roots, tol)) {
    Complex value = node.value;
    if (node.multiplicity > 1) {
      const auto d = derivative(coeffs, node.multiplicity - 1);
      const auto dd = derivative(d, 1);
      LC x(value.real(), value.imag());
      for (int it = 0; it < 50; ++it) {
        const LC slope = horner(dd, x);
        if (slope == LC(0.0L)) break;
        const LC step = horner(d, x) / slope;
        x -= step;
        if (std::abs(step) <= 1e-19L * (1.0L + std::abs(x))) break;
      }
      const Complex refined(static_cast<double>(x.real()), static_cast<double>(x.imag()));
      if (std::abs(refined - value) <= tol) value = refined;
    }
    out.insert(out.end(), node.multiplicity, value);
  }
  return out;
}

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double b = 1.0;
  for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
  return b;
}

// d^p/du^p d^q/dv^q (1 - u v)^{-2} / (p! q!)
Complex confluent_entry(std::size_t p, std::size_t q, Complex u, Complex v) {
  const Complex w = 1.0 - u * v;
  if (w == Complex{0.0, 0.0}) throw Error(ErrorKind::SingularEntry, "1 - lambda_j conj(mu_k) = 0");
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i <= std::min(p, q); ++i) {
    // rising factorial (p+2)(p+3)...(p+1+q-i)
    double rising = 1.0;
    for (std::size_t k = 0; k < q - i; ++k) rising *= static_cast<double>(p + 2 + k);
    const double coeff = binomial(q, i) * factorial(p) / factorial(p - i) * rising;
    sum += coeff * std::pow(v, static_cast<int>(p - i)) * std::pow(u, static_cast<int>(q - i)) *
           std::pow(w, -static_cast<int>(p + 2 + q - i));
  }
  return sum * (static_cast<double>(p + 1) / factorial(q));
}

// Rows d^p/dx^p (1, x, ..., x^{n-1}) / p! for each node.
ComplexMatrix confluent_vandermonde(const std::vector<Node>& nodes, std::size_t n) {
  ComplexMatrix v(n, n);
  std::size_t row = 0;
  for (const auto& node : nodes) {
    for (std::size_t p = 0; p < node.multiplicity; ++p, ++row) {
      for (std::size_t k = p; k < n; ++k)
        v(row, k) = binomial(k, p) * std::pow(node.value, static_cast<int>(k - p));
    }
  }
  return v;
}

std::vector<Complex> conj_all(std::span<const Complex> x) {
  std::vector<Complex> out(x.begin(), x.end());
  for (auto& c : out) c = std::conj(c);
  return out;
}

}  // namespace

double pi_power(std::size_t n) {
  return static_cast<double>(std::pow(std::numbers::pi_v<long double>, static_cast<long double>(n)));
}

ComplexMatrix cauchy_power_matrix(const PolyPoint& lambda, const PolyPoint& mu) {
  require_same_size(lambda, mu);
  const std::size_t n = lambda.size();
  ComplexMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = cauchy_power(lambda[j], mu[k]);
  return m;
}

Complex delta_n(const PolyPoint& lambda, const PolyPoint& mu) {
  return determinant(cauchy_power_matrix(lambda, mu));
}

DeltaEval delta_scaled(const PolyPoint& lambda, const PolyPoint& mu) {
  const ComplexMatrix m = cauchy_power_matrix(lambda, mu);
  return {determinant(m), hadamard_bound(m)};
}

KernelEval kernel_gn(const PolyPoint& lambda, const PolyPoint& mu) {
  require_same_size(lambda, mu);
  require_in_domain(lambda, "lambda");
  require_in_domain(mu, "mu");
  if (!lambda.pairwise_distinct() || !mu.pairwise_distinct())
    throw Error(ErrorKind::RepeatedCoordinate,
                "repeated coordinate; use kernel_gn_stable or kernel_confluent");
  const ComplexMatrix m = cauchy_power_matrix(lambda, mu);
  KernelEval out;
  out.numerator = determinant(m);
  out.scale = hadamard_bound(m);
  out.denominator = pi_power(lambda.size()) * vandermonde_pair(lambda, mu);
  out.value = out.numerator / out.denominator;
  return out;
}

KernelEval kernel_confluent(const PolyPoint& lambda, const PolyPoint& mu, double cluster_tol) {
  require_same_size(lambda, mu);
  require_in_domain(lambda, "lambda");
  require_in_domain(mu, "mu");
  const std::size_t n = lambda.size();
  const std::vector<Node> rows = cluster(lambda.coords(), cluster_tol);
  const std::vector<Complex> mu_bar = conj_all(mu.coords());
  const std::vector<Node> cols = cluster(mu_bar, cluster_tol);

  if (rows.size() == n && cols.size() == n) return kernel_gn(lambda, mu);

  ComplexMatrix phi(n, n);
  std::size_t r = 0;
  for (const auto& rn : rows) {
    for (std::size_t p = 0; p < rn.multiplicity; ++p, ++r) {
      std::size_t c = 0;
      for (const auto& cn : cols)
        for (std::size_t q = 0; q < cn.multiplicity; ++q, ++c)
          phi(r, c) = confluent_entry(p, q, rn.value, cn.value);
    }
  }

  KernelEval out;
  out.numerator = determinant(phi);
  out.scale = hadamard_bound(phi);
  out.denominator = pi_power(n) * determinant(confluent_vandermonde(rows, n)) *
                    determinant(confluent_vandermonde(cols, n));
  out.value = out.numerator / out.denominator;
  return out;
}

KernelEval kernel_gn_stable(const SymPoint& s, const SymPoint& t, const StableOptions& opts) {
  if (s.size() != t.size()) throw Error(ErrorKind::DimensionMismatch, "s and t differ in dimension");
  if (classify_gn(s, opts.roots) != Membership::Inside)
    throw Error(ErrorKind::NotInDomain, "first argument is not in G_n");
  if (classify_gn(t, opts.roots) != Membership::Inside)
    throw Error(ErrorKind::NotInDomain, "second argument is not in G_n");
  const auto lambda = PolyPoint::in_domain(sharpen_clusters(roots_from_sym(s, opts.roots), s, opts.cluster_tol));
  const auto mu = PolyPoint::in_domain(sharpen_clusters(roots_from_sym(t, opts.roots), t, opts.cluster_tol));
  return kernel_confluent(lambda, mu);
}

QuadraticData abc_coeffs(std::span<const Complex, 3> nu) {
  const SymPoint e = elem_sym(std::span<const Complex>(nu));
  const Complex p1 = e[0], p2 = e[1], p3 = e[2];
  QuadraticData q;
  std::copy(nu.begin(), nu.end(), q.nu.begin());
  q.a = p2 * (2.0 - p1) + p3 * (2.0 * p1 - 3.0);
  q.b = (p1 - 2.0) * (p2 - 2.0 * p1 + 3.0) + 3.0 * (p3 - p1 + 2.0);
  q.c = p2 - 2.0 * p1 + 3.0;
  return q;
}

Complex kernel_g3_mu3zero(std::span<const Complex, 3> lambda, std::span<const Complex, 2> mu12) {
  const Complex mu1 = mu12[0], mu2 = mu12[1];
  if (mu1 == Complex{0.0, 0.0}) throw Error(ErrorKind::MuOneZero, "mu_1 = 0; swap mu_1 and mu_2");
  const Complex z = std::conj(mu2) / std::conj(mu1);
  const std::array<Complex, 3> nu{lambda[0] * std::conj(mu1), lambda[1] * std::conj(mu1),
                                  lambda[2] * std::conj(mu1)};
  const QuadraticData q = abc_coeffs(nu);
  Complex denom = pi_power(3);
  for (const auto& l : lambda) {
    for (const auto& m : mu12) {
      const Complex base = 1.0 - l * std::conj(m);
      if (base == Complex{0.0, 0.0}) throw Error(ErrorKind::SingularEntry, "1 - lambda_j conj(mu_k) = 0");
      denom *= base * base;
    }
  }
  return (q.a * z * z - q.b * z + 2.0 * q.c) / denom;
}

namespace {

using Poly = std::vector<Complex>;  // lowest degree first

Poly mul(const Poly& x, const Poly& y) {
  Poly out(x.size() + y.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

}  // namespace

std::array<Complex, 4> bracket_polynomial(std::span<const Complex, 3> nu) {
  const Complex n1 = nu[0], n2 = nu[1], n3 = nu[2];
  const Poly one_minus_zn1{1.0, -n1};
  const Poly one_minus_zn2{1.0, -n2};
  const Poly first = mul(mul(Poly{(n1 + n3 - 2.0) * (1.0 - n2) * (1.0 - n2)}, Poly{-2.0, n2 + n3}),
                         mul(one_minus_zn1, one_minus_zn1));
  const Poly second = mul(mul(Poly{(n2 + n3 - 2.0) * (1.0 - n1) * (1.0 - n1)}, Poly{-2.0, n1 + n3}),
                          mul(one_minus_zn2, one_minus_zn2));
  std::array<Complex, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = first[k] - second[k];
  return out;
}

BracketCoeffs bracket_coeffs_ABC(std::span<const Complex, 3> nu) {
  const auto poly = bracket_polynomial(nu);
  BracketCoeffs out;
  out.A = poly[3];
  out.C = -poly[0] / 2.0;
  out.B = poly[1] - 2.0 * out.C;
  return out;
}

}  // namespace symdisc
