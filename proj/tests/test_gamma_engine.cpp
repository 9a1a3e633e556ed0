#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gammaq/errors.hpp"
#include "gammaq/gamma_symbolic.hpp"
#include "gammaq/numeric.hpp"
#include "gammaq/sequences.hpp"

using namespace gammaq;

namespace {

const HalfInteger kHalf = HalfInteger::from_twice(Integer(1));       // 1/2
const HalfInteger kFiveHalves = HalfInteger::from_twice(Integer(5)); // 5/2
const HalfInteger kMinusHalf = HalfInteger::from_twice(Integer(-1)); // -1/2
const HalfInteger kMinusThreeHalves = HalfInteger::from_twice(Integer(-3));

ConstExpr g() { return ConstExpr::sym_gamma(); }
ConstExpr l2() { return ConstExpr::sym_log2(); }

} // namespace

TEST_CASE("gamma values on the half-integer lattice") {
    CHECK(gamma_value(HalfInteger(1)) == ConstExpr(1));
    CHECK(gamma_value(HalfInteger(4)) == ConstExpr(6));
    CHECK(gamma_value(kHalf) == ConstExpr::pi_half_power(1));
    CHECK(gamma_value(kFiveHalves) == ConstExpr::pi_half_power(1) * Rational(3, 4));
    CHECK(gamma_value(kMinusHalf) == ConstExpr::pi_half_power(1) * Rational(-2));
    CHECK(gamma_value(kMinusThreeHalves) == ConstExpr::pi_half_power(1) * Rational(4, 3));
    CHECK_THROWS_AS(gamma_value(HalfInteger(0)), PoleError);
    CHECK_THROWS_AS(gamma_value(HalfInteger(-2)), PoleError);
    // numeric certification of Gamma(1/2) = sqrt(pi)
    CHECK(std::abs(evaluate(gamma_value(kHalf), 64).to_double() - 1.7724538509055160) < 1e-14);
}

TEST_CASE("polygamma anchors and shifts") {
    CHECK(polygamma(HalfInteger(1), 0) == -g());
    CHECK(polygamma(HalfInteger(1), 1) == from_zeta(2)); // pi^2/6
    CHECK(polygamma(kHalf, 0) == -g() - l2() * Rational(2));
    CHECK(polygamma(kHalf, 1) == ConstExpr::pi_half_power(4) * Rational(1, 2));
    // psi(2) = 1 - g, psi(3) = 3/2 - g
    CHECK(polygamma(HalfInteger(2), 0) == ConstExpr(1) - g());
    CHECK(polygamma(HalfInteger(3), 0) == ConstExpr(Rational(3, 2)) - g());
    // psi(-1/2) = 2 - g - 2 ln 2
    CHECK(polygamma(kMinusHalf, 0) == ConstExpr(2) - g() - l2() * Rational(2));
    CHECK_THROWS_AS(polygamma(HalfInteger(0), 1), PoleError);

    // numeric certification of the classical 1/2 anchors
    const double psi_half = evaluate(polygamma(kHalf, 0), 64).to_double();
    CHECK(std::abs(psi_half + 1.9635100260214235) < 1e-13);
    const double psi1_half = evaluate(polygamma(kHalf, 1), 64).to_double();
    CHECK(std::abs(psi1_half - 4.934802200544679) < 1e-12);
}

TEST_CASE("shift rule inverse") {
    for (const HalfInteger& q : {HalfInteger(2), HalfInteger(3), kHalf, kFiveHalves, kMinusHalf}) {
        const HalfInteger prev = q + (-1);
        if (prev.is_nonpositive_integer()) continue;
        for (unsigned k = 0; k <= 4; ++k) {
            Rational expected = Rational(factorial(k)) * prev.to_rational().pow_int(-(static_cast<long>(k) + 1));
            if (k % 2 == 1) expected = -expected;
            CHECK(polygamma(q, k) - polygamma(prev, k) == ConstExpr(expected));
        }
    }
}

TEST_CASE("taylor derivatives match the tabulated polynomials") {
    const GammaTaylor gt = taylor(HalfInteger(1), 5);
    CHECK(derivative(gt, 0) == ConstExpr(1));
    CHECK(derivative(gt, 1) == -g());
    CHECK(derivative(gt, 2) == g() * g() + from_zeta(2));
    CHECK(derivative(gt, 3) == -(g() * g() * g()) - from_zeta(2) * Rational(3) * g() -
                                   from_zeta(3) * Rational(2));
    const ConstExpr g2 = g() * g();
    CHECK(derivative(gt, 4) == g2 * g2 + from_zeta(2) * Rational(6) * g2 +
                                   from_zeta(3) * Rational(8) * g() + from_zeta(4) * Rational(27, 2));
    CHECK(derivative(gt, 5) ==
          -(g2 * g2 * g()) - from_zeta(2) * Rational(10) * (g2 * g()) -
              from_zeta(3) * Rational(20) * g2 - from_zeta(4) * Rational(135, 2) * g() -
              from_zeta(2) * from_zeta(3) * Rational(20) - from_zeta(5) * Rational(24));
}

TEST_CASE("first derivative at one half") {
    const GammaTaylor gt = taylor(kHalf, 1);
    const ConstExpr expected = ConstExpr::pi_half_power(1) * Rational(-1) * (g() + l2() * Rational(2));
    CHECK(derivative(gt, 1) == expected);
    CHECK(std::abs(evaluate(derivative(gt, 1), 64).to_double() + 3.4802309) < 1e-6);
}

TEST_CASE("log-series route equals the recursion route exactly") {
    const GammaTaylor a = taylor(HalfInteger(1), 12);
    const GammaTaylor b = taylor_via_recursion(12);
    CHECK(a.series == b.series);
}

TEST_CASE("functional equation: series of Gamma(q+1+t) is (q+t) times series at q") {
    for (const HalfInteger& q : {kHalf, HalfInteger(1), HalfInteger::from_twice(Integer(3)),
                                 HalfInteger(2), kMinusHalf}) {
        const std::size_t N = 8;
        Series<ConstExpr> linear(N);
        linear.coeff(0) = ConstExpr(q.to_rational());
        linear.coeff(1) = ConstExpr(1);
        CHECK(taylor(q + 1, N).series == mul(linear, taylor(q, N).series));
    }
}

TEST_CASE("pole rejection") {
    CHECK_THROWS_AS(taylor(HalfInteger(0), 3), PoleError);
    CHECK_THROWS_AS(taylor(HalfInteger(-5), 3), PoleError);
    CHECK_NOTHROW(taylor(kMinusHalf, 3));
    CHECK_NOTHROW(taylor(kMinusThreeHalves, 3));
}

TEST_CASE("symbolic derivatives agree with the numeric backend to 160 bits") {
    for (const HalfInteger& q : {HalfInteger(1), kHalf, kFiveHalves, kMinusThreeHalves}) {
        const GammaTaylor gt = taylor(q, 8);
        const NumericTaylor nt = gamma_taylor_numeric(q.to_rational(), 8, 192);
        for (std::size_t n = 0; n <= 8; ++n) {
            const BigFloat sym = evaluate(derivative(gt, n), 192);
            const BigFloat num = nt.coeffs[n].mul_rational(Rational(factorial(static_cast<unsigned>(n))));
            CHECK(BigFloat::agree_to_bits(sym, num, 160));
        }
    }
}
