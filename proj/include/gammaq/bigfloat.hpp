#pragma once

#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "gammaq/rational.hpp"
#include "gammaq/series.hpp"

namespace gammaq {

/// Arbitrary-precision binary float with an explicit precision, wrapping
/// mpfr_t with value semantics. Binary operations round to nearest at the
/// larger operand precision, so exact small constants (0, 1, small ints)
/// never drag a computation down to their own width.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_long(long n, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from_integer(const Integer& n, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// mpfr exponent: value is in [2^(e-1), 2^e). Only valid for non-zero.
    mpfr_exp_t exponent2() const { return mpfr_get_exp(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(precision());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat exp() const {
        BigFloat r(precision());
        mpfr_exp(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat log() const {
        BigFloat r(precision());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sin() const {
        BigFloat r(precision());
        mpfr_sin(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat cos() const {
        BigFloat r(precision());
        mpfr_cos(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat pow_int(long e) const {
        BigFloat r(precision());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    BigFloat mul_rational(const Rational& q) const {
        BigFloat r(precision());
        mpfr_mul_q(r.v_, v_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    BigFloat div_long(long n) const {
        BigFloat r(precision());
        mpfr_div_si(r.v_, v_, n, MPFR_RNDN);
        return r;
    }
    BigFloat rounded_to(mpfr_prec_t prec) const {
        BigFloat r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    /// Relative agreement to the given number of bits:
    /// |a - b| <= 2^(-bits) * max(|a|, |b|). Exact equality always agrees.
    static bool agree_to_bits(const BigFloat& a, const BigFloat& b, long bits) {
        if (mpfr_equal_p(a.v_, b.v_)) return true;
        BigFloat diff = (a - b).abs();
        BigFloat scale = std::max(a.abs(), b.abs());
        if (scale.is_zero()) return true;
        BigFloat t = diff / scale;
        return mpfr_cmp_ui_2exp(t.v_, 1, -bits) <= 0;
    }

    /// Number of leading bits on which a and b agree (relative), capped.
    static long agreement_bits(const BigFloat& a, const BigFloat& b, long cap) {
        if (mpfr_equal_p(a.v_, b.v_)) return cap;
        BigFloat diff = (a - b).abs();
        BigFloat scale = std::max(a.abs(), b.abs());
        if (scale.is_zero()) return cap;
        const long bits = static_cast<long>(scale.exponent2() - diff.exponent2());
        return std::clamp(bits, 0L, cap);
    }

    /// Scientific-notation decimal string with the given significant digits.
    std::string decimal(int digits) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits > 1 ? digits - 1 : 0, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }
    /// Hex-float rendering, bit-exact.
    std::string hex() const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%Ra", v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.decimal(20); }

private:
    mpfr_t v_;
};

template <>
struct ring_traits<BigFloat> {
    static BigFloat zero() { return BigFloat(MPFR_PREC_MIN); }
    static BigFloat one() { return from_int(1); }
    static BigFloat from_int(long n) { return BigFloat::from_long(n, 64); }
    static bool is_zero(const BigFloat& x) { return x.is_zero(); }
    static BigFloat div_int(const BigFloat& x, long n) { return x.div_long(n); }
    static std::optional<BigFloat> invert(const BigFloat& x) {
        if (x.is_zero()) return std::nullopt;
        return one() / x;
    }
};

} // namespace gammaq
