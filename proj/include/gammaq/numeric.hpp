#pragma once

#include <cstddef>
#include <vector>

#include "gammaq/bigfloat.hpp"
#include "gammaq/const_expr.hpp"
#include "gammaq/rational.hpp"

namespace gammaq {

/// Fundamental constants, correct to <= 2 ulp at the requested precision.
BigFloat const_pi(mpfr_prec_t prec);
BigFloat const_gamma(mpfr_prec_t prec);
BigFloat const_ln2(mpfr_prec_t prec);
BigFloat const_zeta(unsigned k, mpfr_prec_t prec); // k >= 2

/// Hurwitz zeta(s, q) for integer s >= 2 and rational q > 0, by
/// Euler-Maclaurin summation with the shift threshold derived from the
/// precision (shift until q + M >= prec * ln2 / (2 pi), Bernoulli terms
/// until below 2^-(prec+16)).
BigFloat hurwitz_zeta(unsigned s, const Rational& q, mpfr_prec_t prec);

/// log Gamma(q) for rational q > 0, by Stirling's series with argument
/// shifting (same threshold rule as hurwitz_zeta).
BigFloat log_gamma(const Rational& q, mpfr_prec_t prec);

/// Gamma(q) for any non-pole rational q; negative arguments are reached
/// through the functional equation.
BigFloat gamma_numeric(const Rational& q, mpfr_prec_t prec);

/// psi^(k)(q) for rational q > 0: Euler-Maclaurin digamma for k = 0,
/// (-1)^{k+1} k! zeta(k+1, q) for k >= 1.
BigFloat polygamma_numeric(const Rational& q, unsigned k, mpfr_prec_t prec);

/// Numeric Taylor coefficients Gamma^(n)(q)/n! at a rational non-pole q.
struct NumericTaylor {
    Rational q;
    mpfr_prec_t prec = 0;
    std::vector<BigFloat> coeffs; // coefficient n = Gamma^(n)(q) / n!
};

NumericTaylor gamma_taylor_numeric(const Rational& q, std::size_t order, mpfr_prec_t prec);

/// Numeric value of a symbolic constant, with internal guard digits.
BigFloat evaluate(const ConstExpr& e, mpfr_prec_t prec);

} // namespace gammaq
