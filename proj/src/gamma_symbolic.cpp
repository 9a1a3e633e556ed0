#include "gammaq/gamma_symbolic.hpp"

#include <stdexcept>

#include "gammaq/errors.hpp"
#include "gammaq/sequences.hpp"

namespace gammaq {

namespace {

void require_non_pole(const HalfInteger& q) {
    if (q.is_nonpositive_integer())
        throw PoleError("Gamma pole at q = " + q.to_string());
}

struct Decomposed {
    HalfInteger xi; // 1 or 1/2
    long m;         // q = xi + m
};

Decomposed decompose(const HalfInteger& q) {
    Decomposed d;
    Integer m;
    if (q.is_integer()) {
        d.xi = HalfInteger(1);
        m = q.as_integer() - 1;
    } else {
        d.xi = HalfInteger::from_twice(Integer(1));
        m = (q.twice() - 1) / 2;
    }
    if (!m.fits_slong_p()) throw std::domain_error("half-integer argument too large");
    d.m = m.get_si();
    return d;
}

} // namespace

ConstExpr gamma_value(const HalfInteger& q) {
    require_non_pole(q);
    const auto [xi, m] = decompose(q);
    if (q.is_integer()) return ConstExpr(Rational(factorial(static_cast<unsigned>(m))));
    // Gamma(1/2 + m) = sqrt(pi) * prod_{i=0}^{m-1} (1/2 + i)   for m >= 0
    //               = sqrt(pi) / prod_{i=m}^{-1} (1/2 + i)      for m < 0
    Rational coeff(1);
    if (m >= 0)
        for (long i = 0; i < m; ++i) coeff *= Rational(2 * i + 1, 2);
    else
        for (long i = m; i < 0; ++i) coeff *= Rational(2, 2 * i + 1);
    return ConstExpr::pi_half_power(1) * coeff;
}

ConstExpr polygamma(const HalfInteger& q, unsigned k) {
    require_non_pole(q);
    const auto [xi, m] = decompose(q);
    ConstExpr anchor;
    if (k == 0) {
        anchor = -ConstExpr::sym_gamma();
        if (xi.is_half_odd()) anchor -= ConstExpr::sym_log2() * Rational(2); // psi(1/2) = -g - 2 ln 2
    } else {
        // psi^(k)(1)   = (-1)^{k+1} k! zeta(k+1)
        // psi^(k)(1/2) = (-1)^{k+1} k! (2^{k+1} - 1) zeta(k+1)
        Rational c(factorial(k));
        if (k % 2 == 0) c = -c;
        if (xi.is_half_odd()) c *= Rational(Integer((Integer(1) << (k + 1)) - 1));
        anchor = from_zeta(static_cast<int>(k) + 1) * c;
    }
    // shift rule steps: +/- (-1)^k k! (xi + i)^-(k+1)
    Rational step_base(factorial(k));
    if (k % 2 == 1) step_base = -step_base;
    const Rational xi_r = xi.to_rational();
    if (m >= 0) {
        for (long i = 0; i < m; ++i)
            anchor += ConstExpr(step_base * (xi_r + Rational(i)).pow_int(-(static_cast<long>(k) + 1)));
    } else {
        for (long i = m; i < 0; ++i)
            anchor -= ConstExpr(step_base * (xi_r + Rational(i)).pow_int(-(static_cast<long>(k) + 1)));
    }
    return anchor;
}

GammaTaylor taylor(const HalfInteger& q, std::size_t order) {
    require_non_pole(q);
    Series<ConstExpr> log_part(order);
    for (std::size_t k = 1; k <= order; ++k)
        log_part.coeff(k) = polygamma(q, static_cast<unsigned>(k) - 1) * Rational(Integer(1), factorial(static_cast<unsigned>(k)));
    Series<ConstExpr> e = exp_series(log_part);
    return GammaTaylor{q, scale(e, gamma_value(q))};
}

GammaTaylor taylor_via_recursion(std::size_t order) {
    std::vector<ConstExpr> g(order + 1); // g[n] = Gamma^(n)(1)
    g[0] = ConstExpr(1);
    const ConstExpr minus_gamma = -ConstExpr::sym_gamma();
    for (std::size_t n = 1; n <= order; ++n) {
        ConstExpr acc = minus_gamma * g[n - 1];
        for (std::size_t k = 1; k + 1 <= n; ++k) {
            Rational c(factorial(static_cast<unsigned>(n) - 1), factorial(static_cast<unsigned>(n - k) - 1));
            if (k % 2 == 0) c = -c;
            acc += from_zeta(static_cast<int>(k) + 1) * c * g[n - k - 1];
        }
        g[n] = acc;
    }
    Series<ConstExpr> s(order);
    for (std::size_t n = 0; n <= order; ++n)
        s.coeff(n) = g[n] * Rational(Integer(1), factorial(static_cast<unsigned>(n)));
    return GammaTaylor{HalfInteger(1), s};
}

ConstExpr derivative(const GammaTaylor& gt, std::size_t n) {
    return gt.series[n] * Rational(factorial(static_cast<unsigned>(n)));
}

} // namespace gammaq
