#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/rational.hpp"

namespace gammaq {

/// Capabilities a coefficient ring must provide besides +, -, *.
/// Specialized for Rational here, for ConstExpr and BigFloat next to
/// their definitions.
template <class C>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return {}; }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational div_int(const Rational& x, long n) { return x / Rational(n); }
    static std::optional<Rational> invert(const Rational& x) {
        if (x.is_zero()) return std::nullopt;
        return x.inverse();
    }
};

/// Truncated formal power series: coefficients of t^0 .. t^order, fixed at
/// construction. Values are immutable in spirit; mutation is limited to the
/// building phase via coeff().
template <class C>
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1, ring_traits<C>::zero()) {}
    Series(std::size_t order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != order + 1)
            throw std::invalid_argument("Series: coefficient count must be order+1");
    }

    static Series constant(std::size_t order, C c0) {
        Series s(order);
        s.coeffs_[0] = std::move(c0);
        return s;
    }
    static Series one(std::size_t order) { return constant(order, ring_traits<C>::one()); }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& operator[](std::size_t n) const { return coeffs_[n]; }
    C& coeff(std::size_t n) { return coeffs_[n]; }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<C> coeffs_;
};

namespace detail {
template <class C>
void check_same_order(const Series<C>& a, const Series<C>& b) {
    if (a.order() != b.order())
        throw OrderMismatch("series order mismatch: " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
}
} // namespace detail

template <class C>
Series<C> add(const Series<C>& a, const Series<C>& b) {
    detail::check_same_order(a, b);
    Series<C> r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) r.coeff(n) = a[n] + b[n];
    return r;
}

template <class C>
Series<C> sub(const Series<C>& a, const Series<C>& b) {
    detail::check_same_order(a, b);
    Series<C> r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) r.coeff(n) = a[n] - b[n];
    return r;
}

template <class C>
Series<C> scale(const Series<C>& a, const C& s) {
    Series<C> r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) r.coeff(n) = a[n] * s;
    return r;
}

/// Cauchy product, serial reference implementation.
template <class C>
Series<C> mul(const Series<C>& a, const Series<C>& b) {
    detail::check_same_order(a, b);
    Series<C> r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        C acc = ring_traits<C>::zero();
        for (std::size_t i = 0; i <= n; ++i) acc = acc + a[i] * b[n - i];
        r.coeff(n) = std::move(acc);
    }
    return r;
}

/// Cauchy product with the output coefficients computed in parallel.
/// Each coefficient keeps the same inner summation order as mul(), so the
/// result is identical to the serial one (bit-for-bit, even for floats).
template <class C>
Series<C> mul_omp(const Series<C>& a, const Series<C>& b) {
    detail::check_same_order(a, b);
    Series<C> r(a.order());
    const std::ptrdiff_t top = static_cast<std::ptrdiff_t>(a.order());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t n = 0; n <= top; ++n) {
        C acc = ring_traits<C>::zero();
        for (std::ptrdiff_t i = 0; i <= n; ++i)
            acc = acc + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(n - i)];
        r.coeff(static_cast<std::size_t>(n)) = std::move(acc);
    }
    return r;
}

/// Multiplicative inverse: mul(a, reciprocal(a)) is the one-series.
/// Requires an invertible constant term.
template <class C>
Series<C> reciprocal(const Series<C>& a) {
    auto inv0 = ring_traits<C>::invert(a[0]);
    if (!inv0) throw std::domain_error("reciprocal: constant term is not invertible");
    Series<C> r(a.order());
    r.coeff(0) = *inv0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        C acc = ring_traits<C>::zero();
        for (std::size_t k = 1; k <= n; ++k) acc = acc + a[k] * r[n - k];
        r.coeff(n) = -(*inv0 * acc);
    }
    return r;
}

/// Formal exponential of a series with zero constant term, over a
/// Q-algebra. Uses the derivative recurrence n f_n = sum k a_k f_{n-k}.
template <class C>
Series<C> exp_series(const Series<C>& a) {
    if (!ring_traits<C>::is_zero(a[0]))
        throw std::domain_error("exp_series: constant term must be zero");
    Series<C> f(a.order());
    f.coeff(0) = ring_traits<C>::one();
    for (std::size_t n = 1; n <= a.order(); ++n) {
        C acc = ring_traits<C>::zero();
        for (std::size_t k = 1; k <= n; ++k)
            acc = acc + ring_traits<C>::from_int(static_cast<long>(k)) * a[k] * f[n - k];
        f.coeff(n) = ring_traits<C>::div_int(acc, static_cast<long>(n));
    }
    return f;
}

/// Substitution t -> factor * t: coefficient n picks up factor^n.
template <class C>
Series<C> compose_scale(const Series<C>& a, const C& factor) {
    Series<C> r(a.order());
    C p = ring_traits<C>::one();
    for (std::size_t n = 0; n <= a.order(); ++n) {
        r.coeff(n) = a[n] * p;
        p = p * factor;
    }
    return r;
}

template <class C>
struct EvenPart {
    std::vector<C> even;                  // coefficients of t^0, t^2, t^4, ...
    bool odd_all_zero = true;
    std::vector<std::size_t> odd_nonzero; // offending odd indices, if any
};

/// Splits off the even-index coefficients and reports whether every
/// odd-index coefficient is exactly zero.
template <class C>
EvenPart<C> even_part(const Series<C>& a) {
    EvenPart<C> out;
    for (std::size_t n = 0; n <= a.order(); ++n) {
        if (n % 2 == 0) {
            out.even.push_back(a[n]);
        } else if (!ring_traits<C>::is_zero(a[n])) {
            out.odd_all_zero = false;
            out.odd_nonzero.push_back(n);
        }
    }
    return out;
}

template <class C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) { return add(a, b); }
template <class C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) { return sub(a, b); }
template <class C>
Series<C> operator*(const Series<C>& a, const Series<C>& b) { return mul(a, b); }

} // namespace gammaq
