#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gammaq/const_expr.hpp"
#include "gammaq/gamma_symbolic.hpp"
#include "gammaq/numeric.hpp"
#include "gammaq/rational.hpp"

using namespace gammaq;

namespace {

ConstExpr random_expr(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<unsigned> exps(0, 2);
    std::uniform_int_distribution<int> pick(0, 2);
    ConstExpr e;
    for (int t = 0; t < 3; ++t) {
        Monomial m;
        m.gamma_exp = exps(rng);
        m.log2_exp = exps(rng);
        m.pi_half_exp = exps(rng);
        if (pick(rng) == 0) m.zeta.emplace_back(3 + 2 * pick(rng), 1u);
        e += ConstExpr::monomial(m, Rational(coeff(rng)));
    }
    return e;
}

} // namespace

TEST_CASE("even zeta values reduce to pi powers") {
    CHECK(from_zeta(2) == ConstExpr::pi_half_power(4) * Rational(1, 6));
    CHECK(from_zeta(3) == ConstExpr::sym_zeta(3));
    CHECK(from_zeta(4) == ConstExpr::pi_half_power(8) * Rational(1, 90));
    CHECK(from_zeta(6) == ConstExpr::pi_half_power(12) * Rational(1, 945));
    CHECK_THROWS_AS(from_zeta(1), std::domain_error);
    CHECK_THROWS_AS(from_zeta(0), std::domain_error);
}

TEST_CASE("from_zeta(4) evaluates to the known value") {
    const double z4 = evaluate(from_zeta(4), 64).to_double();
    CHECK(std::abs(z4 - 1.082323233711138) < 1e-12);
}

TEST_CASE("half-exponent pi bookkeeping") {
    CHECK(ConstExpr::pi_half_power(1) * ConstExpr::pi_half_power(1) == ConstExpr::pi_half_power(2));
    const ConstExpr g = ConstExpr::sym_gamma();
    const ConstExpr pi = ConstExpr::pi_half_power(2);
    CHECK((g + pi) * (g - pi) == g * g - pi * pi);
    CHECK((-g) * (-g) + from_zeta(2) == g * g + ConstExpr::pi_half_power(4) * Rational(1, 6));
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
        const ConstExpr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == ConstExpr());
    }
}

TEST_CASE("as_pi_vector separates pure pi powers from the rest") {
    const ConstExpr mixed = ConstExpr::sym_gamma() * ConstExpr::sym_gamma() +
                            ConstExpr::pi_half_power(4) * Rational(1, 6);
    const auto r = as_pi_vector(mixed);
    CHECK(!r.ok);
    REQUIRE(r.offending.size() == 1);
    CHECK(r.offending[0] == "g^2");

    const ConstExpr pure = ConstExpr(1) - ConstExpr::pi_half_power(4) * Rational(1, 6);
    const auto r2 = as_pi_vector(pure);
    REQUIRE(r2.ok);
    PiVector expected;
    expected.set(0, Rational(1));
    expected.set(4, Rational(-1, 6));
    CHECK(r2.vec == expected);
    CHECK(r2.vec.leading_exp_half() == 4);
    CHECK(r2.vec.leading_coeff() == Rational(-1, 6));
}

TEST_CASE("pi-vector round trip") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int i = 0; i < 50; ++i) {
        PiVector v;
        ConstExpr e;
        for (long exp_half = 0; exp_half < 8; ++exp_half) {
            const Rational c(coeff(rng));
            v.set(exp_half, c);
            e += ConstExpr::pi_half_power(static_cast<unsigned>(exp_half)) * c;
        }
        const auto r = as_pi_vector(e);
        REQUIRE(r.ok);
        CHECK(r.vec == v);
    }
}

TEST_CASE("evaluate substitutes high-precision constants") {
    const double g = evaluate(ConstExpr::sym_gamma(), 128).to_double();
    CHECK(std::abs(g - 0.5772156649015329) < 1e-15);
    const double pi2 = evaluate(ConstExpr::pi_half_power(4), 64).to_double();
    CHECK(std::abs(pi2 - 9.869604401089358) < 1e-12);
    const double l = evaluate(ConstExpr::sym_log2(), 64).to_double();
    CHECK(std::abs(l - 0.6931471805599453) < 1e-14);
}

TEST_CASE("third derivative row evaluates consistently with the numeric route") {
    // -g^3 - 3 zeta(2) g - 2 zeta(3), evaluated, versus 3! * coeff_3 numerically
    const ConstExpr g = ConstExpr::sym_gamma();
    const ConstExpr expr = -(g * g * g) - from_zeta(2) * Rational(3) * g - from_zeta(3) * Rational(2);
    const BigFloat lhs = evaluate(expr, 192);
    const NumericTaylor nt = gamma_taylor_numeric(Rational(1), 3, 192);
    const BigFloat rhs = nt.coeffs[3].mul_rational(Rational(6));
    CHECK(BigFloat::agree_to_bits(lhs, rhs, 160));
    CHECK(std::abs(lhs.to_double() + 5.44487) < 1e-4);
}

TEST_CASE("gamma derivatives at 1 contain no ln2 and only integer pi powers") {
    const GammaTaylor gt = taylor(HalfInteger(1), 12);
    for (std::size_t n = 0; n <= 12; ++n) {
        const ConstExpr d = derivative(gt, n);
        for (const auto& [m, c] : d.terms()) {
            CHECK(m.log2_exp == 0);
            CHECK(m.pi_half_exp % 4 == 0); // even zeta reductions only: pi^{2k}
            for (const auto& [k, e] : m.zeta) {
                CHECK(k % 2 == 1);
                CHECK(k >= 3);
            }
        }
    }
}

TEST_CASE("canonical rendering") {
    CHECK(ConstExpr().to_string() == "0");
    CHECK(ConstExpr(Rational(5, 4)).to_string() == "5/4");
    CHECK((-ConstExpr::sym_gamma()).to_string() == "-1*g");
    const ConstExpr g = ConstExpr::sym_gamma();
    CHECK((g * g + from_zeta(2)).to_string() == "g^2 + 1/6*p^2");
    CHECK(ConstExpr::pi_half_power(1).to_string() == "p^{1/2}");
    const ConstExpr cube = -(g * g * g) - from_zeta(2) * Rational(3) * g - from_zeta(3) * Rational(2);
    CHECK(cube.to_string() == "-1*g^3 - 1/2*g*p^2 - 2*z3");
    PiVector v;
    v.set(0, Rational(1));
    v.set(4, Rational(-1, 6));
    CHECK(v.to_string() == "1 - 1/6*p^2");
}
