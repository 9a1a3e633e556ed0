#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gammaq/rational.hpp"
#include "gammaq/series.hpp"

namespace gammaq {

/// Power product g^a * l^b * p^(c/2) * prod zK^eK over the generators
/// g = Euler-Mascheroni constant, l = ln 2, p = pi (exponent kept in half
/// units so sqrt(pi) needs no field extension), zK = zeta(K) for odd K >= 3.
/// Even zeta values never appear: they are reduced to pi powers on entry.
class Monomial {
public:
    unsigned gamma_exp = 0;
    unsigned log2_exp = 0;
    unsigned pi_half_exp = 0;                 // exponent of pi in half units
    std::vector<std::pair<int, unsigned>> zeta; // (K odd >= 3, exp > 0), ascending K

    bool is_unit() const { return gamma_exp == 0 && log2_exp == 0 && pi_half_exp == 0 && zeta.empty(); }
    bool is_pure_pi() const { return gamma_exp == 0 && log2_exp == 0 && zeta.empty(); }

    Monomial operator*(const Monomial& o) const;

    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

    /// "g^2*l*p^{1/2}*z3" — factors in generator order, ^1 omitted,
    /// integer pi exponents printed plainly (p^2), half ones as p^{k/2}.
    std::string to_string() const;
};

/// Element of the ring Q[g, l, p^(1/2), z3, z5, ...]: a finite sum of
/// monomials with exact rational coefficients. The empty sum is zero; no
/// zero coefficient is ever stored, so equality is structural.
class ConstExpr {
public:
    using TermMap = std::map<Monomial, Rational>;

    ConstExpr() = default;
    ConstExpr(const Rational& r) { add_term(Monomial{}, r); } // NOLINT: implicit by design
    ConstExpr(long n) : ConstExpr(Rational(n)) {}             // NOLINT

    static ConstExpr monomial(Monomial m, Rational c);
    static ConstExpr sym_gamma();          // g
    static ConstExpr sym_log2();           // l
    static ConstExpr pi_half_power(unsigned k); // p^(k/2)
    static ConstExpr sym_zeta(int k);      // zK, k odd >= 3

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
    std::optional<Rational> as_rational() const {
        if (terms_.empty()) return Rational(0);
        if (is_rational()) return terms_.begin()->second;
        return std::nullopt;
    }

    ConstExpr& operator+=(const ConstExpr& o);
    ConstExpr& operator-=(const ConstExpr& o);
    friend ConstExpr operator+(ConstExpr a, const ConstExpr& b) { return a += b; }
    friend ConstExpr operator-(ConstExpr a, const ConstExpr& b) { return a -= b; }
    friend ConstExpr operator*(const ConstExpr& a, const ConstExpr& b);
    ConstExpr operator-() const;

    /// Exact scalar multiple.
    friend ConstExpr operator*(const ConstExpr& a, const Rational& s);
    friend ConstExpr operator*(const Rational& s, const ConstExpr& a) { return a * s; }

    friend bool operator==(const ConstExpr& a, const ConstExpr& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ConstExpr& a, const ConstExpr& b) { return !(a == b); }

    /// Canonical rendering, bit-exact across runs; documented in the README.
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const ConstExpr& e) { return os << e.to_string(); }

private:
    void add_term(Monomial m, Rational c);

    TermMap terms_;
};

/// zeta(k) as a ring element: odd k stays symbolic, even k = 2m reduces to
/// (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!), a rational multiple of pi^k.
ConstExpr from_zeta(int k);

/// Finite Q-linear combination of (half-)integer powers of pi, keyed by the
/// pi exponent in half units. No zero entries.
class PiVector {
public:
    std::map<long, Rational> entries;

    bool is_zero() const { return entries.empty(); }
    void set(long pi_half_exp, Rational c) {
        if (!c.is_zero()) entries[pi_half_exp] = std::move(c);
    }
    /// Largest pi exponent present (half units); entries must be non-empty.
    long leading_exp_half() const { return entries.rbegin()->first; }
    const Rational& leading_coeff() const { return entries.rbegin()->second; }

    friend bool operator==(const PiVector& a, const PiVector& b) { return a.entries == b.entries; }
    friend bool operator!=(const PiVector& a, const PiVector& b) { return !(a == b); }

    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const PiVector& v) { return os << v.to_string(); }
};

/// Outcome of projecting a ConstExpr onto pure pi powers. Failure lists the
/// monomials that are not powers of pi — that listing is the cancellation
/// test signal, not an exception.
struct PiVectorResult {
    bool ok = false;
    PiVector vec;
    std::vector<std::string> offending; // rendered non-pi monomials
};

PiVectorResult as_pi_vector(const ConstExpr& e);

template <>
struct ring_traits<ConstExpr> {
    static ConstExpr zero() { return {}; }
    static ConstExpr one() { return ConstExpr(1); }
    static ConstExpr from_int(long n) { return ConstExpr(n); }
    static bool is_zero(const ConstExpr& x) { return x.is_zero(); }
    static ConstExpr div_int(const ConstExpr& x, long n) { return x * Rational(1, n); }
    static std::optional<ConstExpr> invert(const ConstExpr& x) {
        auto r = x.as_rational();
        if (!r || r->is_zero()) return std::nullopt;
        return ConstExpr(r->inverse());
    }
};

} // namespace gammaq
