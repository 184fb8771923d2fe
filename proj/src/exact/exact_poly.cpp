#include "symdisc/exact/exact_poly.hpp"

#include <numeric>
#include <sstream>

#include "symdisc/error.hpp"

namespace symdisc::exact {

namespace {

unsigned degree_of(const ExactPoly::Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u, [](unsigned acc, std::uint8_t e) { return acc + e; });
}

constexpr std::array<const char*, kNumVars> kVarNames{"nu1", "nu2", "nu3", "z"};

}  // namespace

ExactPoly::ExactPoly(const AlgComplex& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ExactPoly ExactPoly::variable(Var v) {
  ExactPoly p;
  Monomial m{};
  m[static_cast<std::size_t>(v)] = 1;
  p.terms_.emplace(m, AlgComplex(1));
  return p;
}

void ExactPoly::add_term(const Monomial& m, const AlgComplex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned ExactPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
  return d;
}

unsigned ExactPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[static_cast<std::size_t>(v)]);
  return d;
}

ExactPoly ExactPoly::coefficient(Var v, unsigned k) const {
  ExactPoly out;
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    if (m[idx] != k) continue;
    Monomial reduced = m;
    reduced[idx] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

ExactPoly ExactPoly::rename(Var from, Var to) const {
  ExactPoly out;
  const auto f = static_cast<std::size_t>(from), t = static_cast<std::size_t>(to);
  for (const auto& [m, c] : terms_) {
    Monomial moved = m;
    if (f != t) {
      moved[t] = static_cast<std::uint8_t>(moved[t] + moved[f]);
      moved[f] = 0;
    }
    out.add_term(moved, c);
  }
  return out;
}

std::complex<long double> ExactPoly::evaluate(const std::array<std::complex<long double>, kNumVars>& at) const {
  std::complex<long double> sum = 0.0L;
  for (const auto& [m, c] : terms_) {
    std::complex<long double> term = c.to_complex();
    for (std::size_t v = 0; v < kNumVars; ++v)
      for (unsigned e = 0; e < m[v]; ++e) term *= at[v];
    sum += term;
  }
  return sum;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ExactPoly::Monomial m{};
      for (std::size_t v = 0; v < kNumVars; ++v) m[v] = static_cast<std::uint8_t>(ma[v] + mb[v]);
      if (degree_of(m) > kMaxTotalDegree)
        throw Error(ErrorKind::DegreeBound, "product exceeds total degree " + std::to_string(kMaxTotalDegree));
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& o) { return *this = *this * o; }

ExactPoly ExactPoly::pow(unsigned k) const {
  ExactPoly out(1);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

std::string ExactPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (m[v] == 0) continue;
      out << "*" << kVarNames[v];
      if (m[v] > 1) out << "^" << static_cast<unsigned>(m[v]);
    }
  }
  return out.str();
}

}  // namespace symdisc::exact
