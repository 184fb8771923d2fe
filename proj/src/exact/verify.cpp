#include "symdisc/exact/verify.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "symdisc/error.hpp"

namespace symdisc::exact {

namespace {

const char* sign_name(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "?";
}

std::string approx(const AlgNum& x) {
  std::ostringstream out;
  out.precision(12);
  out << static_cast<double>(x.to_long_double());
  return out.str();
}

ExactPoly var(Var v) { return ExactPoly::variable(v); }

}  // namespace

std::array<AlgComplex, 3> base_point_exact() { return {exp_i_pi_12(2), exp_i_pi_12(4), exp_i_pi_12(-2)}; }

Fault fault_from_string(std::string_view s) {
  if (s.empty() || s == "none") return Fault::None;
  if (s == "p-coeff") return Fault::PCoeff;
  throw Error(ErrorKind::Parse, "unknown fault '" + std::string(s) + "'");
}

std::array<AlgNum, 3> claimed_real_quadratic(Fault fault) {
  AlgNum linear(0, -6, 0, 3);  // 3 sqrt6 - 6 sqrt2
  if (fault == Fault::PCoeff) linear = -linear;
  return {AlgNum(-6, 0, 4, 0), linear, AlgNum(-5, 0, 3, 0)};
}

ReductionPolys build_reduction_polys() {
  const ExactPoly n1 = var(Var::Nu1), n2 = var(Var::Nu2), n3 = var(Var::Nu3), z = var(Var::Z);
  const ExactPoly one(1), two(2), four(4);
  ReductionPolys r;

  const ExactPoly s13 = n1 + n3 - two, s23 = n2 + n3 - two;
  r.bracket = s13 * (z * n2 + z * n3 - two) * (one - z * n1).pow(2) * (one - n2).pow(2) -
              s23 * (z * n1 + z * n3 - two) * (one - n1).pow(2) * (one - z * n2).pow(2);

  // Rows [(1-nu_j)^{-2}, (1-z nu_j)^{-2}, 1] scaled by (1-nu_j)^2 (1-z nu_j)^2.
  const std::array<ExactPoly, 3> nus{n1, n2, n3};
  std::array<std::array<ExactPoly, 3>, 3> m;
  for (std::size_t j = 0; j < 3; ++j) {
    const ExactPoly u = (one - nus[j]).pow(2), w = (one - z * nus[j]).pow(2);
    m[j] = {w, u, u * w};
  }
  r.det_cleared = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  r.det_rhs = (n1 - n3) * (n2 - n3) * z * r.bracket;

  r.A_claimed = s13 * (n2 + n3) * n1.pow(2) * (one - n2).pow(2) - s23 * (n1 + n3) * n2.pow(2) * (one - n1).pow(2);
  r.minus2C_claimed = two * s23 * (one - n1).pow(2) - two * s13 * (one - n2).pow(2);
  r.BplusC2_claimed = s13 * (n2 + n3 + four * n1) * (one - n2).pow(2) - s23 * (n1 + n3 + four * n2) * (one - n1).pow(2);

  const auto e = elementary_symmetric3(n1, n2, n3);
  const auto abc = abc_from_symmetric(e[0], e[1], e[2]);
  r.a = abc[0];
  r.b = abc[1];
  r.c = abc[2];

  // [z^3] = A, [z^0] = -2C, [z^1] = B + 2C.
  const AlgComplex minus_half = AlgComplex(AlgNum(Rational(-1, 2)));
  r.A = r.bracket.coefficient(Var::Z, 3);
  r.C = ExactPoly(minus_half) * r.bracket.coefficient(Var::Z, 0);
  r.B = r.bracket.coefficient(Var::Z, 1) - two * r.C;
  r.factored = (z - one) * (r.A * z.pow(2) - r.B * z + two * r.C);
  return r;
}

VerificationReport verify_reduction_identities() {
  VerificationReport report("determinant reduction identities (exact)");
  const ReductionPolys r = build_reduction_polys();
  const ExactPoly n1 = var(Var::Nu1), n2 = var(Var::Nu2);
  const ExactPoly diff = n2 - n1;

  report.add("reduction.cubic", "bracket is a cubic in z", r.bracket.degree_in(Var::Z) == 3,
             std::to_string(r.bracket.term_count()) + " terms");
  report.add("reduction.determinant",
             "det[(1-nu_j)^-2, (1-z nu_j)^-2, 1] * prod (1-nu_j)^2 (1-z nu_j)^2 = (nu1-nu3)(nu2-nu3) z * bracket",
             r.det_cleared == r.det_rhs, std::to_string(r.det_cleared.term_count()) + " terms");
  report.add("reduction.z3", "[z^3] bracket = (nu1+nu3-2)(nu2+nu3)nu1^2(1-nu2)^2 - (nu2+nu3-2)(nu1+nu3)nu2^2(1-nu1)^2",
             r.A == r.A_claimed);
  report.add("reduction.z0", "[z^0] bracket = 2(nu2+nu3-2)(1-nu1)^2 - 2(nu1+nu3-2)(1-nu2)^2",
             r.bracket.coefficient(Var::Z, 0) == r.minus2C_claimed);
  report.add("reduction.z1",
             "[z^1] bracket = (nu1+nu3-2)(nu2+nu3+4nu1)(1-nu2)^2 - (nu2+nu3-2)(nu1+nu3+4nu2)(1-nu1)^2",
             r.bracket.coefficient(Var::Z, 1) == r.BplusC2_claimed);
  report.add("reduction.A", "A = (nu2-nu1) a(nu)", r.A_claimed == diff * r.a);
  report.add("reduction.C", "C = (nu2-nu1) c(nu)", r.C == diff * r.c);
  report.add("reduction.B", "B = (nu2-nu1) b(nu)", r.B == diff * r.b);
  report.add("reduction.factor", "bracket = (z-1)(A z^2 - B z + 2C)", r.bracket == r.factored);
  return report;
}

VerificationReport verify_base_point_identities(Fault fault, unsigned sign_bits) {
  VerificationReport report("base point identities (exact)");
  const auto nu = base_point_exact();
  const auto e = elementary_symmetric3(nu[0], nu[1], nu[2]);
  const Rational half(1, 2);

  report.add("base.e1", "pi_{3,1}(nu0) = (1 + 2 sqrt3 + i sqrt3)/2",
             e[0] == AlgComplex(AlgNum(half, 0, 1, 0), AlgNum(0, 0, half, 0)), e[0].to_string());
  report.add("base.e2", "pi_{3,2}(nu0) = (2 + sqrt3 + 3i)/2",
             e[1] == AlgComplex(AlgNum(1, 0, half, 0), AlgNum(Rational(3, 2))), e[1].to_string());
  report.add("base.e3", "pi_{3,3}(nu0) = e^{i pi/3}", e[2] == exp_i_pi_12(4), e[2].to_string());

  const auto abc = abc_from_symmetric(e[0], e[1], e[2]);
  const AlgComplex a = abc[0], b = abc[1], c = abc[2];
  report.add("base.a", "a(nu0) = (3 sqrt3 - 5) e^{i pi/3}", a == AlgComplex(AlgNum(-5, 0, 3, 0)) * exp_i_pi_12(4),
             a.to_string());
  report.add("base.b", "b(nu0) = (6 sqrt2 - 3 sqrt6) e^{i pi/12}",
             b == AlgComplex(AlgNum(0, 6, 0, -3)) * exp_i_pi_12(1), b.to_string());
  report.add("base.c", "c(nu0) = (2 sqrt3 - 3) e^{-i pi/6}", c == AlgComplex(AlgNum(-3, 0, 2, 0)) * exp_i_pi_12(-2),
             c.to_string());

  // e^{i pi/6} (a z^2 - b z + 2c) at z = e^{-i pi/4} x, coefficientwise in x.
  const AlgComplex rot = exp_i_pi_12(2), w = exp_i_pi_12(-3);
  const std::array<AlgComplex, 3> derived{rot * AlgComplex(2) * c, -(rot * b * w), rot * a * w * w};
  const auto claimed = claimed_real_quadratic(fault);
  bool substitution = true;
  for (std::size_t k = 0; k < 3; ++k) substitution = substitution && derived[k] == AlgComplex(claimed[k]);
  report.add("base.substitution",
             "e^{i pi/6}(a z^2 - b z + 2c) at z = e^{-i pi/4} x equals (3 sqrt3-5)x^2 + (3 sqrt6-6 sqrt2)x + 4 sqrt3-6",
             substitution);

  // Remaining checks use the quadratic derived from a, b, c.
  const bool real = derived[0].im().is_zero() && derived[1].im().is_zero() && derived[2].im().is_zero();
  const AlgNum p0 = derived[0].re(), p1 = derived[1].re(), p2 = derived[2].re();
  const AlgNum disc = p1 * p1 - AlgNum(4) * p2 * p0;
  report.add("base.real", "the substituted quadratic has real coefficients", real);
  report.add("base.discriminant", "discriminant of p = 80 sqrt3 - 138", real && disc == AlgNum(-138, 0, 80, 0),
             disc.to_string());

  const SignResult disc_sign = alg_sign(disc, sign_bits);
  report.add("base.discriminant_positive", "80 sqrt3 - 138 > 0", real && disc_sign.sign == Sign::Positive,
             std::string(sign_name(disc_sign.sign)) + ", ~" + approx(disc));

  // (-p1 +- sqrt(disc)) / (2 p2) = (6 - 3 sqrt3 +- sqrt(40 sqrt3 - 69)) / (sqrt2 (3 sqrt3 - 5))
  const AlgNum s2 = AlgNum::sqrt2();
  const bool closed_form = real && -p1 == s2 * AlgNum(6, 0, -3, 0) && disc == AlgNum(2) * AlgNum(-69, 0, 40, 0) &&
                           AlgNum(2) * p2 == s2 * s2 * AlgNum(-5, 0, 3, 0);
  report.add("base.roots", "zeros of p are (6 - 3 sqrt3 +- sqrt(40 sqrt3 - 69)) / (sqrt2 (3 sqrt3 - 5))", closed_form);

  const SignResult lead = alg_sign(p2, sign_bits);
  report.add("base.leading_positive", "3 sqrt3 - 5 > 0", real && lead.sign == Sign::Positive,
             std::string(sign_name(lead.sign)) + ", ~" + approx(p2));
  const SignResult at0 = alg_sign(p0, sign_bits);
  report.add("base.p0_positive", "p(0) = 4 sqrt3 - 6 > 0", real && at0.sign == Sign::Positive,
             std::string(sign_name(at0.sign)) + ", ~" + approx(p0));
  const AlgNum p_at_1 = p0 + p1 + p2;
  const SignResult at1 = alg_sign(p_at_1, sign_bits);
  report.add("base.p1_negative", "p(1) = 7 sqrt3 + 3 sqrt6 - 6 sqrt2 - 11 < 0", real && at1.sign == Sign::Negative,
             std::string(sign_name(at1.sign)) + ", ~" + approx(p_at_1) + ", " + std::to_string(at1.bits) + " bits");

  const long double s3 = std::sqrt(3.0L);
  const long double x0 = (6.0L - 3.0L * s3 - std::sqrt(40.0L * s3 - 69.0L)) / (std::sqrt(2.0L) * (3.0L * s3 - 5.0L));
  std::ostringstream n;
  n.precision(15);
  n << "smaller zero of p (float companion) x0 = " << static_cast<double>(x0)
    << "; lies in (0,1) because p has positive leading coefficient, p(0) > 0 and p(1) < 0";
  report.note(n.str());
  return report;
}

}  // namespace symdisc::exact
