#include "gammaq/numeric.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "gammaq/errors.hpp"
#include "gammaq/sequences.hpp"

namespace gammaq {

namespace {

constexpr mpfr_prec_t kGuard = 32; // internal working-precision margin

void require_prec(mpfr_prec_t prec) {
    if (prec < 32) throw std::domain_error("precision must be >= 32 bits");
}

// Shift target for Euler-Maclaurin / Stirling: the asymptotic tail can reach
// 2^-wp only once the argument exceeds wp * ln2 / (2 pi); a small margin on
// top keeps the term loop comfortably inside the decreasing regime.
long em_shift_target(mpfr_prec_t wp) {
    const double t = static_cast<double>(wp) * 0.6931471805599453 / (2.0 * 3.141592653589793);
    return std::max(16L, static_cast<long>(std::ceil(t)) + 8);
}

// Number of integer steps to push q up to at least the shift target.
long em_shift_count(const Rational& q, long target) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    if (!fl.fits_slong_p()) throw std::domain_error("argument too large for Euler-Maclaurin shift");
    const long qfloor = fl.get_si();
    return std::max(0L, target - qfloor);
}

// True once the term has sunk bits_below the accumulator's magnitude and can
// no longer move the sum.
bool term_negligible(const BigFloat& term, const BigFloat& acc, mpfr_prec_t wp) {
    if (term.is_zero()) return true;
    if (acc.is_zero()) return false;
    return term.exponent2() < acc.exponent2() - static_cast<mpfr_exp_t>(wp + 16);
}

// zeta(s, q) at working precision wp (no final rounding).
BigFloat hurwitz_impl(unsigned s, const Rational& q, mpfr_prec_t wp) {
    const long M = em_shift_count(q, em_shift_target(wp));
    BigFloat acc(wp);
    for (long n = 0; n < M; ++n)
        acc = acc + BigFloat::from_rational(q + Rational(n), wp).pow_int(-static_cast<long>(s));
    const BigFloat x = BigFloat::from_rational(q + Rational(M), wp);
    // x^{1-s}/(s-1) + x^{-s}/2
    acc = acc + x.pow_int(1 - static_cast<long>(s)).div_long(static_cast<long>(s) - 1);
    acc = acc + x.pow_int(-static_cast<long>(s)).div_long(2);
    // + sum_k B_{2k}/(2k)! * (s)_{2k-1} * x^{-(s+2k-1)}
    const BigFloat xinv2 = x.pow_int(-2);
    BigFloat xpow = x.pow_int(-(static_cast<long>(s) + 1));
    Integer rising(s); // (s)_{2k-1}, updated incrementally
    for (unsigned k = 1;; ++k) {
        if (k > 1) rising *= Integer(s + 2 * k - 3) * Integer(s + 2 * k - 2);
        const Rational c = bernoulli(2 * k) * Rational(rising, factorial(2 * k));
        const BigFloat term = xpow.mul_rational(c);
        acc = acc + term;
        if (term_negligible(term, acc, wp)) break;
        if (k > static_cast<unsigned>(4 * wp))
            throw PrecisionError("hurwitz_zeta: Euler-Maclaurin tail failed to converge; raise precision");
        xpow = xpow * xinv2;
    }
    return acc;
}

// psi(q) at working precision wp.
BigFloat digamma_impl(const Rational& q, mpfr_prec_t wp) {
    const long M = em_shift_count(q, em_shift_target(wp));
    const BigFloat x = BigFloat::from_rational(q + Rational(M), wp);
    // psi(x) ~ ln x - 1/(2x) - sum_k B_{2k}/(2k) x^{-2k}
    BigFloat acc = x.log() - x.pow_int(-1).div_long(2);
    const BigFloat xinv2 = x.pow_int(-2);
    BigFloat xpow = xinv2;
    for (unsigned k = 1;; ++k) {
        const Rational c = bernoulli(2 * k) / Rational(2 * static_cast<long>(k));
        const BigFloat term = xpow.mul_rational(c);
        acc = acc - term;
        if (term_negligible(term, acc, wp)) break;
        if (k > static_cast<unsigned>(4 * wp))
            throw PrecisionError("digamma: Euler-Maclaurin tail failed to converge; raise precision");
        xpow = xpow * xinv2;
    }
    // psi(q) = psi(q + M) - sum_{n<M} 1/(q+n)
    for (long n = 0; n < M; ++n)
        acc = acc - BigFloat::from_rational(q + Rational(n), wp).pow_int(-1);
    return acc;
}

// log Gamma(q) at working precision wp, q > 0.
BigFloat log_gamma_impl(const Rational& q, mpfr_prec_t wp) {
    const long M = em_shift_count(q, em_shift_target(wp));
    const BigFloat x = BigFloat::from_rational(q + Rational(M), wp);
    const BigFloat half = BigFloat::from_rational(Rational(1, 2), wp);
    // (x - 1/2) ln x - x + ln(2 pi)/2
    BigFloat acc = (x - half) * x.log() - x;
    BigFloat pi(wp);
    mpfr_const_pi(pi.raw(), MPFR_RNDN);
    acc = acc + (pi + pi).log().div_long(2);
    // + sum_k B_{2k} / ((2k)(2k-1)) x^{1-2k}
    const BigFloat xinv2 = x.pow_int(-2);
    BigFloat xpow = x.pow_int(-1);
    for (unsigned k = 1;; ++k) {
        const Rational c = bernoulli(2 * k) / Rational(Integer(Integer(2 * k) * Integer(2 * k - 1)));
        const BigFloat term = xpow.mul_rational(c);
        acc = acc + term;
        if (term_negligible(term, acc, wp)) break;
        if (k > static_cast<unsigned>(4 * wp))
            throw PrecisionError("log_gamma: Stirling tail failed to converge; raise precision");
        xpow = xpow * xinv2;
    }
    // downward shift: ln Gamma(q) = ln Gamma(q+M) - sum_{n<M} ln(q+n)
    for (long n = 0; n < M; ++n)
        acc = acc - BigFloat::from_rational(q + Rational(n), wp).log();
    return acc;
}

bool is_nonpositive_integer(const Rational& q) { return q.is_integer() && q.sign() <= 0; }

// Gamma^(n)(q)/n! for q > 0 at working precision wp, via
// Gamma(q) * exp(sum_{k>=1} psi^(k-1)(q) t^k / k!); for k >= 2 the
// coefficient collapses to (-1)^k zeta(k, q) / k.
Series<BigFloat> taylor_positive_impl(const Rational& q, std::size_t order, mpfr_prec_t wp) {
    Series<BigFloat> a(order);
    if (order >= 1) a.coeff(1) = digamma_impl(q, wp);
    for (std::size_t k = 2; k <= order; ++k) {
        BigFloat c = hurwitz_impl(static_cast<unsigned>(k), q, wp).div_long(static_cast<long>(k));
        a.coeff(k) = (k % 2 == 0) ? c : -c;
    }
    Series<BigFloat> e = exp_series(a);
    return scale(e, log_gamma_impl(q, wp).exp());
}

Series<BigFloat> taylor_impl(const Rational& q, std::size_t order, mpfr_prec_t wp) {
    if (q.sign() > 0) return taylor_positive_impl(q, order, wp);
    // shift to q + s >= 1 and divide back by prod_{i<s} (q + i + t)
    Integer ceil_neg;
    mpz_cdiv_q(ceil_neg.get_mpz_t(), Integer(-q.num()).get_mpz_t(), q.den().get_mpz_t());
    if (!ceil_neg.fits_slong_p()) throw std::domain_error("argument too negative");
    const long s = ceil_neg.get_si() + 1;
    Series<BigFloat> shifted = taylor_positive_impl(q + Rational(s), order, wp);
    Series<BigFloat> divisor = Series<BigFloat>::one(order);
    for (long i = 0; i < s; ++i) {
        Series<BigFloat> lin(order);
        lin.coeff(0) = BigFloat::from_rational(q + Rational(i), wp);
        if (order >= 1) lin.coeff(1) = BigFloat::from_long(1, wp);
        divisor = mul(divisor, lin);
    }
    return mul(shifted, reciprocal(divisor));
}

} // namespace

BigFloat const_pi(mpfr_prec_t prec) {
    require_prec(prec);
    BigFloat r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat const_gamma(mpfr_prec_t prec) {
    require_prec(prec);
    BigFloat r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat const_ln2(mpfr_prec_t prec) {
    require_prec(prec);
    BigFloat r(prec);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat const_zeta(unsigned k, mpfr_prec_t prec) {
    require_prec(prec);
    if (k < 2) throw std::domain_error("const_zeta: k must be >= 2");
    BigFloat r(prec);
    mpfr_zeta_ui(r.raw(), k, MPFR_RNDN);
    return r;
}

BigFloat hurwitz_zeta(unsigned s, const Rational& q, mpfr_prec_t prec) {
    require_prec(prec);
    if (s < 2) throw std::domain_error("hurwitz_zeta: s must be >= 2");
    if (q.sign() <= 0) throw std::domain_error("hurwitz_zeta: q must be positive");
    return hurwitz_impl(s, q, prec + kGuard).rounded_to(prec);
}

BigFloat log_gamma(const Rational& q, mpfr_prec_t prec) {
    require_prec(prec);
    if (is_nonpositive_integer(q)) throw PoleError("log_gamma: pole at non-positive integer");
    if (q.sign() <= 0) throw std::domain_error("log_gamma: q must be positive");
    return log_gamma_impl(q, prec + kGuard).rounded_to(prec);
}

BigFloat gamma_numeric(const Rational& q, mpfr_prec_t prec) {
    require_prec(prec);
    if (is_nonpositive_integer(q)) throw PoleError("gamma_numeric: pole at non-positive integer");
    const mpfr_prec_t wp = prec + kGuard;
    if (q.sign() > 0) return log_gamma_impl(q, wp).exp().rounded_to(prec);
    // Gamma(q) = Gamma(q + s) / prod_{i<s} (q + i), with q + s >= 1
    Integer ceil_neg;
    mpz_cdiv_q(ceil_neg.get_mpz_t(), Integer(-q.num()).get_mpz_t(), q.den().get_mpz_t());
    if (!ceil_neg.fits_slong_p()) throw std::domain_error("argument too negative");
    const long s = ceil_neg.get_si() + 1;
    Rational prod(1);
    for (long i = 0; i < s; ++i) prod *= q + Rational(i);
    return (log_gamma_impl(q + Rational(s), wp).exp().mul_rational(prod.inverse())).rounded_to(prec);
}

BigFloat polygamma_numeric(const Rational& q, unsigned k, mpfr_prec_t prec) {
    require_prec(prec);
    if (is_nonpositive_integer(q)) throw PoleError("polygamma_numeric: pole at non-positive integer");
    if (q.sign() <= 0) throw std::domain_error("polygamma_numeric: q must be positive");
    const mpfr_prec_t wp = prec + kGuard;
    if (k == 0) return digamma_impl(q, wp).rounded_to(prec);
    BigFloat z = hurwitz_impl(k + 1, q, wp);
    z = z.mul_rational(Rational(factorial(k)));
    if (k % 2 == 0) z = -z; // (-1)^{k+1} k! zeta(k+1, q)
    return z.rounded_to(prec);
}

NumericTaylor gamma_taylor_numeric(const Rational& q, std::size_t order, mpfr_prec_t prec) {
    require_prec(prec);
    if (is_nonpositive_integer(q)) throw PoleError("gamma_taylor_numeric: pole at non-positive integer");
    const mpfr_prec_t wp = prec + kGuard + 16;
    Series<BigFloat> s = taylor_impl(q, order, wp);
    NumericTaylor out;
    out.q = q;
    out.prec = prec;
    out.coeffs.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) out.coeffs.push_back(s[n].rounded_to(prec));
    return out;
}

BigFloat evaluate(const ConstExpr& e, mpfr_prec_t prec) {
    require_prec(prec);
    const mpfr_prec_t wp = prec + kGuard;
    const BigFloat g = const_gamma(wp);
    const BigFloat l = const_ln2(wp);
    const BigFloat sqrt_pi = const_pi(wp).sqrt();
    std::map<int, BigFloat> zeta_cache;
    BigFloat acc(wp);
    for (const auto& [m, c] : e.terms()) {
        BigFloat t = BigFloat::from_rational(c, wp);
        if (m.gamma_exp > 0) t = t * g.pow_int(m.gamma_exp);
        if (m.log2_exp > 0) t = t * l.pow_int(m.log2_exp);
        if (m.pi_half_exp > 0) t = t * sqrt_pi.pow_int(m.pi_half_exp);
        for (const auto& [k, ex] : m.zeta) {
            auto it = zeta_cache.find(k);
            if (it == zeta_cache.end()) it = zeta_cache.emplace(k, const_zeta(static_cast<unsigned>(k), wp)).first;
            t = t * it->second.pow_int(ex);
        }
        acc = acc + t;
    }
    return acc.rounded_to(prec);
}

} // namespace gammaq
