#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "gammaq/errors.hpp"

namespace gammaq {

using Integer = mpz_class;

/// Exact arbitrary-size rational. Always stored reduced with positive
/// denominator (mpq canonical form).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, rationals absorb ints
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Strict parse of "n" or "n/d" with optional leading '-'. No floats,
    /// no whitespace, no '+'. Returns nothing on any deviation.
    static std::optional<Rational> parse(std::string_view s) {
        auto all_digits = [](std::string_view t) {
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view num = s, den;
        if (auto pos = s.find('/'); pos != std::string_view::npos) {
            num = s.substr(0, pos);
            den = s.substr(pos + 1);
            if (!all_digits(den)) return std::nullopt;
        }
        if (!num.empty() && num.front() == '-') num.remove_prefix(1);
        if (!all_digits(num)) return std::nullopt;
        Integer n(std::string(s.substr(0, s.find('/'))), 10);
        Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
        if (sgn(d) == 0) return std::nullopt;
        return Rational(n, d);
    }

    const mpq_class& raw() const { return v_; }
    Integer num() const { return Integer(mpq_numref(v_.get_mpq_t())); }
    Integer den() const { return Integer(mpq_denref(v_.get_mpq_t())); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    /// x^e for integer e (negative e requires x != 0).
    Rational pow_int(long e) const {
        if (e == 0) return Rational(1);
        const Rational base = e < 0 ? inverse() : *this;
        const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        Integer n, d;
        mpz_pow_ui(n.get_mpz_t(), mpq_numref(base.v_.get_mpq_t()), k);
        mpz_pow_ui(d.get_mpz_t(), mpq_denref(base.v_.get_mpq_t()), k);
        return Rational(n, d); // gcd(n,d)=1 is preserved by powers
    }

    Rational abs() const {
        mpq_class a;
        mpq_abs(a.get_mpq_t(), v_.get_mpq_t());
        return Rational(a);
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Canonical text form: "5", "-3/4".
    std::string to_string() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

/// Element of (1/2)Z, stored as twice its value so the lattice is closed
/// under addition and negation with no rounding anywhere.
class HalfInteger {
public:
    HalfInteger() : twice_(0) {}
    HalfInteger(long n) : twice_(2 * Integer(n)) {} // NOLINT: implicit by design
    explicit HalfInteger(const Integer& n) : twice_(2 * n) {}

    static HalfInteger from_twice(Integer t) {
        HalfInteger h;
        h.twice_ = std::move(t);
        return h;
    }
    /// Accepts denominators 1 and 2 only.
    static std::optional<HalfInteger> from_rational(const Rational& r) {
        if (r.den() == 1) return from_twice(2 * r.num());
        if (r.den() == 2) return from_twice(r.num());
        return std::nullopt;
    }

    const Integer& twice() const { return twice_; }
    bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
    bool is_half_odd() const { return !is_integer(); }
    /// True exactly on the pole set of Gamma.
    bool is_nonpositive_integer() const { return is_integer() && sgn(twice_) <= 0; }

    Integer as_integer() const {
        if (!is_integer()) throw std::domain_error("HalfInteger: not an integer");
        return twice_ / 2;
    }
    Rational to_rational() const { return Rational(twice_, Integer(2)); }

    friend HalfInteger operator+(const HalfInteger& a, const HalfInteger& b) { return from_twice(a.twice_ + b.twice_); }
    friend HalfInteger operator-(const HalfInteger& a, const HalfInteger& b) { return from_twice(a.twice_ - b.twice_); }
    HalfInteger operator-() const { return from_twice(-twice_); }
    HalfInteger operator+(long n) const { return from_twice(twice_ + 2 * Integer(n)); }

    friend bool operator==(const HalfInteger& a, const HalfInteger& b) { return a.twice_ == b.twice_; }
    friend bool operator!=(const HalfInteger& a, const HalfInteger& b) { return !(a == b); }
    friend bool operator<(const HalfInteger& a, const HalfInteger& b) { return a.twice_ < b.twice_; }
    friend bool operator<=(const HalfInteger& a, const HalfInteger& b) { return a.twice_ <= b.twice_; }

    /// "3", "-1/2", "5/2".
    std::string to_string() const {
        if (is_integer()) return Integer(twice_ / 2).get_str();
        return twice_.get_str() + "/2";
    }

    friend std::ostream& operator<<(std::ostream& os, const HalfInteger& h) { return os << h.to_string(); }

private:
    Integer twice_;
};

} // namespace gammaq
