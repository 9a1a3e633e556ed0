#include "gammaq/verifier.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "gammaq/errors.hpp"
#include "gammaq/gamma_symbolic.hpp"
#include "gammaq/numeric.hpp"
#include "gammaq/sequences.hpp"
#include "gammaq/series.hpp"

namespace gammaq {

namespace {

struct XiDecomp {
    HalfInteger xi;
    long m;
};

XiDecomp decompose(const HalfInteger& q) {
    if (q.is_nonpositive_integer()) throw PoleError("pole at q = " + q.to_string());
    Integer m;
    HalfInteger xi;
    if (q.is_integer()) {
        xi = HalfInteger(1);
        m = q.as_integer() - 1;
    } else {
        xi = HalfInteger::from_twice(Integer(1));
        m = (q.twice() - 1) / 2;
    }
    if (!m.fits_slong_p()) throw std::domain_error("q too large");
    return {xi, m.get_si()};
}

long pi_exp_half_at(const HalfInteger& xi, std::size_t j) {
    // pi exponent 2(j+1-xi), doubled into half units
    return xi.is_integer() ? 4 * static_cast<long>(j) : 4 * static_cast<long>(j) + 2;
}

// prod_{i in [lo, hi)} ((xi+i)^2 - u) as a polynomial in u, truncated.
std::vector<Rational> square_factor_poly(const Rational& xi, long lo, long hi, std::size_t jmax) {
    std::vector<Rational> p{Rational(1)};
    for (long i = lo; i < hi; ++i) {
        const Rational sq = (xi + Rational(i)) * (xi + Rational(i));
        std::vector<Rational> next(std::min(p.size() + 1, jmax + 1), Rational(0));
        for (std::size_t k = 0; k < next.size(); ++k) {
            if (k < p.size()) next[k] += p[k] * sq;
            if (k >= 1 && k - 1 < p.size()) next[k] -= p[k - 1];
        }
        p = std::move(next);
    }
    p.resize(jmax + 1, Rational(0));
    return p;
}

} // namespace

RqSeries rq_coefficients(const HalfInteger& q, std::size_t jmax) {
    const auto [xi, m] = decompose(q);
    RqSeries out;
    out.q = q;
    out.xi = xi;
    out.m = m;
    const Rational xi_r = xi.to_rational();
    if (m >= 0) {
        out.b = square_factor_poly(xi_r, 0, m, jmax);
    } else {
        Series<Rational> denom(jmax, square_factor_poly(xi_r, m, 0, jmax));
        Series<Rational> inv = reciprocal(denom);
        out.b = inv.coeffs();
    }
    return out;
}

std::vector<Rational> sin_ratio_coeffs_bernoulli(std::size_t jmax) {
    // x/sin x = sum_j (-1)^{j+1} B_{2j} (2^{2j} - 2) x^{2j} / (2j)!
    std::vector<Rational> a;
    a.reserve(jmax + 1);
    for (std::size_t j = 0; j <= jmax; ++j) {
        Rational c = bernoulli(2 * static_cast<unsigned>(j)) *
                     Rational((Integer(1) << (2 * j)) - 2, factorial(2 * static_cast<unsigned>(j)));
        if (j % 2 == 0) c = -c;
        a.push_back(c);
    }
    return a;
}

std::vector<Rational> sin_ratio_coeffs_series(std::size_t jmax) {
    // reciprocal of sin x / x = sum_k (-1)^k u^k / (2k+1)!, u = x^2
    Series<Rational> s(jmax);
    for (std::size_t k = 0; k <= jmax; ++k) {
        Rational c(Integer(1), factorial(2 * static_cast<unsigned>(k) + 1));
        s.coeff(k) = (k % 2 == 0) ? c : -c;
    }
    return reciprocal(s).coeffs();
}

std::vector<Rational> sec_coeffs_euler(std::size_t jmax) {
    std::vector<Rational> a;
    a.reserve(jmax + 1);
    for (std::size_t j = 0; j <= jmax; ++j) {
        Integer e = euler_number(2 * static_cast<unsigned>(j));
        mpz_abs(e.get_mpz_t(), e.get_mpz_t());
        a.emplace_back(e, factorial(2 * static_cast<unsigned>(j)));
    }
    return a;
}

std::vector<Rational> sec_coeffs_series(std::size_t jmax) {
    // reciprocal of cos x = sum_k (-1)^k u^k / (2k)!, u = x^2
    Series<Rational> s(jmax);
    for (std::size_t k = 0; k <= jmax; ++k) {
        Rational c(Integer(1), factorial(2 * static_cast<unsigned>(k)));
        s.coeff(k) = (k % 2 == 0) ? c : -c;
    }
    return reciprocal(s).coeffs();
}

std::vector<XiCoefficient> xi_product_coeffs(const HalfInteger& xi, std::size_t jmax) {
    const bool is_one = xi == HalfInteger(1);
    const bool is_half = xi == HalfInteger::from_twice(Integer(1));
    if (!is_one && !is_half) throw std::domain_error("xi_product_coeffs: xi must be 1 or 1/2");
    const std::vector<Rational> a = is_one ? sin_ratio_coeffs_bernoulli(jmax) : sec_coeffs_euler(jmax);
    std::vector<XiCoefficient> out;
    out.reserve(jmax + 1);
    for (std::size_t j = 0; j <= jmax; ++j) out.push_back({a[j], pi_exp_half_at(xi, j)});
    return out;
}

std::vector<PiVector> c_via_pi(const HalfInteger& q, std::size_t jmax) {
    const RqSeries rq = rq_coefficients(q, jmax);
    const std::vector<XiCoefficient> a = xi_product_coeffs(rq.xi, jmax);
    std::vector<PiVector> rows(jmax + 1);
    for (std::size_t j = 0; j <= jmax; ++j)
        for (std::size_t k = 0; k <= j; ++k) {
            if (rq.b[k].is_zero()) continue;
            rows[j].set(a[j - k].pi_exp_half, rq.b[k] * a[j - k].a);
        }
    return rows;
}

std::vector<ConstExpr> c_via_cauchy(const HalfInteger& q, std::size_t jmax, ExecMode mode) {
    const GammaTaylor t = taylor(q, 2 * jmax);
    const Series<ConstExpr> mirrored = compose_scale(t.series, ConstExpr(-1));
    const Series<ConstExpr> prod =
        mode == ExecMode::parallel ? mul_omp(t.series, mirrored) : mul(t.series, mirrored);
    EvenPart<ConstExpr> ep = even_part(prod);
    if (!ep.odd_all_zero)
        throw std::logic_error("Gamma(q+t)Gamma(q-t) produced a non-zero odd coefficient at q = " +
                               q.to_string());
    return std::move(ep.even);
}

CertificateReport verify_theorem1(const HalfInteger& q, std::size_t jmax, ExecMode mode) {
    CertificateReport rep;
    const XiDecomp dec = decompose(q);
    rep.q = q;
    rep.xi = dec.xi;
    rep.m = dec.m;
    rep.jmax = jmax;

    const RqSeries rq = rq_coefficients(q, jmax);
    const std::vector<XiCoefficient> a = xi_product_coeffs(dec.xi, jmax);
    rep.rows = c_via_pi(q, jmax);
    rep.rows_cauchy = c_via_cauchy(q, jmax, mode);

    rep.leading.resize(jmax + 1);
    std::vector<std::optional<RowFailure>> row_failures(jmax + 1);
    std::vector<std::optional<RowFailure>> lead_failures(jmax + 1);

    const std::ptrdiff_t top = static_cast<std::ptrdiff_t>(jmax);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (mode == ExecMode::parallel)
#endif
    for (std::ptrdiff_t sj = 0; sj <= top; ++sj) {
        const std::size_t j = static_cast<std::size_t>(sj);
        const PiVectorResult pv = as_pi_vector(rep.rows_cauchy[j]);
        if (!pv.ok) {
            std::string detail = "non-pi monomials:";
            for (const auto& s : pv.offending) detail += " " + s;
            row_failures[j] = RowFailure{j, "eq6_not_pi_polynomial", detail};
        } else if (pv.vec != rep.rows[j]) {
            row_failures[j] = RowFailure{j, "eq5_eq6_mismatch",
                                         "eq5 = " + rep.rows[j].to_string() +
                                             "; eq6 = " + pv.vec.to_string()};
        }

        LeadingEntry& le = rep.leading[j];
        le.expected_exp_half = pi_exp_half_at(rep.xi, j);
        le.expected = rq.b[0] * a[j].a;
        if (!rep.rows[j].is_zero()) {
            le.pi_exp_half = rep.rows[j].leading_exp_half();
            le.coeff = rep.rows[j].leading_coeff();
        }
        le.exp_matches = !rep.rows[j].is_zero() && le.pi_exp_half == le.expected_exp_half;
        le.nonzero = !le.coeff.is_zero();
        if (!le.exp_matches || !le.nonzero || le.coeff != le.expected)
            lead_failures[j] = RowFailure{j, "leading",
                                          "leading term of row " + std::to_string(j) + " is " +
                                              (rep.rows[j].is_zero() ? std::string("absent")
                                                                     : le.coeff.to_string() + "*p^{" +
                                                                           std::to_string(le.pi_exp_half) + "/2}") +
                                              ", expected " + le.expected.to_string() + "*p^{" +
                                              std::to_string(le.expected_exp_half) + "/2}"};
    }

    rep.rows_equal = true;
    rep.triangular = true;
    rep.all_leading_nonzero = true;
    for (std::size_t j = 0; j <= jmax; ++j) {
        if (row_failures[j]) {
            rep.rows_equal = false;
            rep.failures.push_back(*row_failures[j]);
        }
        if (!rep.leading[j].exp_matches) rep.triangular = false;
        if (!rep.leading[j].nonzero) rep.all_leading_nonzero = false;
        if (lead_failures[j]) rep.failures.push_back(*lead_failures[j]);
    }
    rep.pass = rep.rows_equal && rep.triangular && rep.all_leading_nonzero && rep.failures.empty();
    return rep;
}

namespace {

void require_theorem2_domain(const Rational& q) {
    if (q.den() <= 2)
        throw std::domain_error("q must lie outside (1/2)Z (denominator >= 3); got q = " +
                                q.to_string());
}

// sin(pi(q+t)) as a series in t at working precision.
Series<BigFloat> shifted_sine_series(const Rational& q, std::size_t order, mpfr_prec_t wp) {
    const BigFloat pi = const_pi(wp);
    const BigFloat piq = pi.mul_rational(q);
    const BigFloat sq = piq.sin();
    const BigFloat cq = piq.cos();
    Series<BigFloat> s(order);
    BigFloat pipow = BigFloat::from_long(1, wp);
    for (std::size_t n = 0; n <= order; ++n) {
        // d^n/dt^n sin(pi(q+t)) | 0 = pi^n sin(pi q + n pi/2)
        const BigFloat& trig = (n % 2 == 0) ? sq : cq;
        BigFloat c = pipow.mul_rational(Rational(Integer(1), factorial(static_cast<unsigned>(n)))) * trig;
        if (n % 4 >= 2) c = -c;
        s.coeff(n) = c;
        pipow = pipow * pi;
    }
    return s;
}

std::vector<BigFloat> reflection_impl(const Rational& q, std::size_t jmax, mpfr_prec_t wp) {
    Series<BigFloat> recip = reciprocal(shifted_sine_series(q, jmax, wp));
    const BigFloat pi = const_pi(wp);
    std::vector<BigFloat> out;
    out.reserve(jmax + 1);
    for (std::size_t j = 0; j <= jmax; ++j) out.push_back(pi * recip[j]);
    return out;
}

struct Theorem2Routes {
    std::vector<BigFloat> lhs; // reflection series
    std::vector<BigFloat> rhs; // product of the two Taylor series
};

Theorem2Routes theorem2_routes(const Rational& q, std::size_t jmax, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 32;
    Theorem2Routes r;
    r.lhs = reflection_impl(q, jmax, wp);
    const NumericTaylor tq = gamma_taylor_numeric(q, jmax, wp);
    const NumericTaylor t1q = gamma_taylor_numeric(Rational(1) - q, jmax, wp);
    Series<BigFloat> sq(jmax, tq.coeffs);
    Series<BigFloat> s1q(jmax, t1q.coeffs);
    const Series<BigFloat> prod = mul(sq, compose_scale(s1q, BigFloat::from_long(-1, wp)));
    r.rhs = prod.coeffs();
    for (auto& v : r.lhs) v = v.rounded_to(prec);
    for (auto& v : r.rhs) v = v.rounded_to(prec);
    return r;
}

} // namespace

std::vector<BigFloat> reflection_coeffs_numeric(const Rational& q, std::size_t jmax,
                                                mpfr_prec_t prec) {
    if (prec < 32) throw std::domain_error("precision must be >= 32 bits");
    require_theorem2_domain(q);
    std::vector<BigFloat> out = reflection_impl(q, jmax, prec + 32);
    for (auto& v : out) v = v.rounded_to(prec);
    return out;
}

Theorem2Report verify_theorem2(const Rational& q, std::size_t jmax, mpfr_prec_t prec) {
    if (prec < 32) throw std::domain_error("precision must be >= 32 bits");
    require_theorem2_domain(q);
    Theorem2Report rep;
    rep.q = q;
    rep.jmax = jmax;
    rep.prec = prec;

    const Theorem2Routes base = theorem2_routes(q, jmax, prec);
    const Theorem2Routes check = theorem2_routes(q, jmax, prec + 64);
    for (std::size_t j = 0; j <= jmax; ++j) {
        if (!BigFloat::agree_to_bits(base.lhs[j], check.lhs[j].rounded_to(prec), prec - 8) ||
            !BigFloat::agree_to_bits(base.rhs[j], check.rhs[j].rounded_to(prec), prec - 8))
            throw PrecisionError("verify_theorem2: guard run disagrees at row " + std::to_string(j) +
                                 "; raise precision");
    }

    const BigFloat pi = const_pi(prec + 32);
    rep.rows.reserve(jmax + 1);
    rep.pass = true;
    for (std::size_t j = 0; j <= jmax; ++j) {
        Theorem2Row row;
        row.j = j;
        row.lhs = base.lhs[j];
        row.rhs = base.rhs[j];
        row.agree_bits = BigFloat::agreement_bits(row.lhs, row.rhs, prec);
        row.pass = BigFloat::agree_to_bits(row.lhs, row.rhs, prec - rep.guard);
        const BigFloat d = row.lhs / pi.pow_int(static_cast<long>(j) + 1);
        BigFloat tol(32);
        mpfr_set_ui_2exp(tol.raw(), 1, -static_cast<mpfr_exp_t>(prec / 2), MPFR_RNDN);
        row.d_nonzero = d.abs() > tol;
        if (row.d_nonzero) ++rep.nonzero_count;
        if (!row.pass) rep.pass = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace gammaq
