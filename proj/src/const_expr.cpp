#include "gammaq/const_expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "gammaq/sequences.hpp"

namespace gammaq {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.gamma_exp = gamma_exp + o.gamma_exp;
    r.log2_exp = log2_exp + o.log2_exp;
    r.pi_half_exp = pi_half_exp + o.pi_half_exp;
    // merge the two sorted zeta factor lists
    auto i = zeta.begin();
    auto j = o.zeta.begin();
    while (i != zeta.end() || j != o.zeta.end()) {
        if (j == o.zeta.end() || (i != zeta.end() && i->first < j->first)) {
            r.zeta.push_back(*i++);
        } else if (i == zeta.end() || j->first < i->first) {
            r.zeta.push_back(*j++);
        } else {
            r.zeta.emplace_back(i->first, i->second + j->second);
            ++i, ++j;
        }
    }
    return r;
}

std::string Monomial::to_string() const {
    std::string out;
    auto append = [&out](const std::string& f) {
        if (!out.empty()) out += "*";
        out += f;
    };
    auto powered = [](const std::string& sym, unsigned e) {
        return e == 1 ? sym : sym + "^" + std::to_string(e);
    };
    if (gamma_exp > 0) append(powered("g", gamma_exp));
    if (log2_exp > 0) append(powered("l", log2_exp));
    if (pi_half_exp > 0) {
        if (pi_half_exp % 2 == 0)
            append(powered("p", pi_half_exp / 2));
        else
            append("p^{" + std::to_string(pi_half_exp) + "/2}");
    }
    for (const auto& [k, e] : zeta) append(powered("z" + std::to_string(k), e));
    return out;
}

void ConstExpr::add_term(Monomial m, Rational c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ConstExpr ConstExpr::monomial(Monomial m, Rational c) {
    ConstExpr e;
    e.add_term(std::move(m), std::move(c));
    return e;
}

ConstExpr ConstExpr::sym_gamma() {
    Monomial m;
    m.gamma_exp = 1;
    return monomial(m, Rational(1));
}

ConstExpr ConstExpr::sym_log2() {
    Monomial m;
    m.log2_exp = 1;
    return monomial(m, Rational(1));
}

ConstExpr ConstExpr::pi_half_power(unsigned k) {
    Monomial m;
    m.pi_half_exp = k;
    return monomial(m, Rational(1));
}

ConstExpr ConstExpr::sym_zeta(int k) {
    if (k < 3 || k % 2 == 0) throw std::domain_error("sym_zeta: k must be odd and >= 3");
    Monomial m;
    m.zeta.emplace_back(k, 1u);
    return monomial(m, Rational(1));
}

ConstExpr& ConstExpr::operator+=(const ConstExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ConstExpr& ConstExpr::operator-=(const ConstExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ConstExpr operator*(const ConstExpr& a, const ConstExpr& b) {
    ConstExpr r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

ConstExpr ConstExpr::operator-() const {
    ConstExpr r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ConstExpr operator*(const ConstExpr& a, const Rational& s) {
    ConstExpr r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
    return r;
}

std::string ConstExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Reverse map order: highest gamma power first, constants last.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool first = out.empty();
        Rational shown = c;
        if (!first) {
            out += c.sign() < 0 ? " - " : " + ";
            shown = c.abs();
        }
        if (m.is_unit()) {
            out += shown.to_string();
        } else if (shown == Rational(1)) {
            out += m.to_string();
        } else {
            out += shown.to_string() + "*" + m.to_string();
        }
    }
    return out;
}

ConstExpr from_zeta(int k) {
    if (k < 2) throw std::domain_error("from_zeta: k must be >= 2");
    if (k % 2 == 1) return ConstExpr::sym_zeta(k);
    // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
    const int m = k / 2;
    Rational coeff = bernoulli(static_cast<unsigned>(k)) * Rational(Integer(1) << k, 2 * factorial(static_cast<unsigned>(k)));
    if (m % 2 == 0) coeff = -coeff;
    Monomial mono;
    mono.pi_half_exp = static_cast<unsigned>(2 * k);
    return ConstExpr::monomial(mono, coeff);
}

std::string PiVector::to_string() const {
    if (entries.empty()) return "0";
    std::string out;
    for (const auto& [exp_half, c] : entries) {
        const bool first = out.empty();
        Rational shown = c;
        if (!first) {
            out += c.sign() < 0 ? " - " : " + ";
            shown = c.abs();
        }
        Monomial m;
        m.pi_half_exp = static_cast<unsigned>(exp_half);
        if (m.is_unit()) {
            out += shown.to_string();
        } else if (shown == Rational(1)) {
            out += m.to_string();
        } else {
            out += shown.to_string() + "*" + m.to_string();
        }
    }
    return out;
}

PiVectorResult as_pi_vector(const ConstExpr& e) {
    PiVectorResult res;
    for (const auto& [m, c] : e.terms()) {
        if (m.is_pure_pi())
            res.vec.set(m.pi_half_exp, c);
        else
            res.offending.push_back(m.to_string());
    }
    res.ok = res.offending.empty();
    return res;
}

} // namespace gammaq
