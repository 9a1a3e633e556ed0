#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gammaq/errors.hpp"
#include "gammaq/numeric.hpp"
#include "gammaq/sequences.hpp"
#include "gammaq/verifier.hpp"

using namespace gammaq;

namespace {

const HalfInteger kHalf = HalfInteger::from_twice(Integer(1));
const HalfInteger kFiveHalves = HalfInteger::from_twice(Integer(5));
const HalfInteger kMinusHalf = HalfInteger::from_twice(Integer(-1));
const HalfInteger kMinusThreeHalves = HalfInteger::from_twice(Integer(-3));

} // namespace

TEST_CASE("rq coefficients: empty, polynomial, reciprocal cases") {
    const RqSeries r1 = rq_coefficients(HalfInteger(1), 4);
    CHECK(r1.m == 0);
    CHECK(r1.b[0] == Rational(1));
    for (std::size_t k = 1; k <= 4; ++k) CHECK(r1.b[k].is_zero());

    const RqSeries r52 = rq_coefficients(kFiveHalves, 4);
    CHECK(r52.m == 2);
    CHECK(r52.xi == kHalf);
    CHECK(r52.b[0] == Rational(9, 16));
    CHECK(r52.b[1] == Rational(-5, 2));
    CHECK(r52.b[2] == Rational(1));
    CHECK(r52.b[3].is_zero());
    CHECK(r52.b[4].is_zero());

    const RqSeries rm = rq_coefficients(kMinusHalf, 6);
    CHECK(rm.m == -1);
    for (std::size_t k = 0; k <= 6; ++k)
        CHECK(rm.b[k] == Rational(Integer(4)).pow_int(static_cast<long>(k) + 1));

    CHECK_THROWS_AS(rq_coefficients(HalfInteger(-2), 3), PoleError);
    CHECK_THROWS_AS(rq_coefficients(HalfInteger(0), 3), PoleError);
}

TEST_CASE("xi product coefficient families") {
    const auto a1 = xi_product_coeffs(HalfInteger(1), 4);
    CHECK(a1[0].a == Rational(1));
    CHECK(a1[0].pi_exp_half == 0);
    CHECK(a1[1].a == Rational(1, 6));
    CHECK(a1[1].pi_exp_half == 4);
    CHECK(a1[2].a == Rational(7, 360));

    const auto ah = xi_product_coeffs(kHalf, 4);
    CHECK(ah[0].a == Rational(1));
    CHECK(ah[0].pi_exp_half == 2);
    CHECK(ah[1].a == Rational(1, 2));
    CHECK(ah[2].a == Rational(5, 24));
    CHECK(ah[2].pi_exp_half == 10); // pi^5

    CHECK_THROWS_AS(xi_product_coeffs(HalfInteger::from_twice(Integer(3)), 2), std::domain_error);
}

TEST_CASE("dual routes for the reflection families agree to j = 40") {
    const auto bern = sin_ratio_coeffs_bernoulli(40);
    const auto recip = sin_ratio_coeffs_series(40);
    const auto eul = sec_coeffs_euler(40);
    const auto sec = sec_coeffs_series(40);
    for (std::size_t j = 0; j <= 40; ++j) {
        CHECK(bern[j] == recip[j]);
        CHECK(eul[j] == sec[j]);
        CHECK(!bern[j].is_zero());
        CHECK(!eul[j].is_zero());
    }
}

TEST_CASE("rows via the pi route") {
    const auto rows1 = c_via_pi(HalfInteger(1), 2);
    PiVector expect0;
    expect0.set(0, Rational(1));
    CHECK(rows1[0] == expect0);
    PiVector expect1;
    expect1.set(4, Rational(1, 6));
    CHECK(rows1[1] == expect1);

    const auto rows_h = c_via_pi(kHalf, 1);
    PiVector pi1;
    pi1.set(2, Rational(1)); // Gamma(1/2)^2 = pi
    CHECK(rows_h[0] == pi1);
    PiVector pi3;
    pi3.set(6, Rational(1, 2)); // c_{1,1/2} = pi^3/2
    CHECK(rows_h[1] == pi3);
}

TEST_CASE("rows via the cauchy route cancel down to pi powers") {
    const auto rows1 = c_via_cauchy(HalfInteger(1), 1);
    CHECK(rows1[0] == ConstExpr(1));
    CHECK(rows1[1] == from_zeta(2)); // gamma^2 cancels, pi^2/6 remains

    const auto rows_h = c_via_cauchy(kHalf, 0);
    CHECK(rows_h[0] == ConstExpr::pi_half_power(2));
}

TEST_CASE("theorem 1 certificates pass") {
    const CertificateReport r1 = verify_theorem1(HalfInteger(1), 4);
    CHECK(r1.pass);
    CHECK(r1.rows_equal);
    CHECK(r1.triangular);
    CHECK(r1.all_leading_nonzero);
    for (std::size_t j = 0; j <= 4; ++j) {
        CHECK(r1.leading[j].pi_exp_half == 4 * static_cast<long>(j));
        CHECK(r1.leading[j].coeff == sin_ratio_coeffs_bernoulli(4)[j]);
    }

    const CertificateReport r52 = verify_theorem1(kFiveHalves, 3);
    CHECK(r52.pass);
    for (std::size_t j = 0; j <= 3; ++j) {
        Integer e = euler_number(2 * static_cast<unsigned>(j));
        mpz_abs(e.get_mpz_t(), e.get_mpz_t());
        const Rational expected = Rational(9, 16) * Rational(e, factorial(2 * static_cast<unsigned>(j)));
        CHECK(r52.leading[j].coeff == expected);
        CHECK(r52.leading[j].pi_exp_half == 4 * static_cast<long>(j) + 2);
    }

    CHECK(verify_theorem1(kMinusThreeHalves, 3).pass);
    CHECK(verify_theorem1(kMinusHalf, 3).pass);
    CHECK(verify_theorem1(HalfInteger(3), 3).pass);
}

TEST_CASE("serial and parallel certificate paths agree exactly") {
    for (const HalfInteger& q : {HalfInteger(2), kFiveHalves, kMinusThreeHalves}) {
        const CertificateReport s = verify_theorem1(q, 6, ExecMode::serial);
        const CertificateReport p = verify_theorem1(q, 6, ExecMode::parallel);
        CHECK(s.pass == p.pass);
        CHECK(s.rows == p.rows);
        CHECK(s.rows_cauchy == p.rows_cauchy);
        for (std::size_t j = 0; j <= 6; ++j) {
            CHECK(s.leading[j].coeff == p.leading[j].coeff);
            CHECK(s.leading[j].pi_exp_half == p.leading[j].pi_exp_half);
        }
    }
}

TEST_CASE("reflection coefficients at quarter and third points") {
    const auto c14 = reflection_coeffs_numeric(Rational(1, 4), 1, 128);
    CHECK(std::abs(c14[0].to_double() - 4.442882938158366) < 1e-12);
    CHECK(std::abs(c14[1].to_double() + 13.9577284) < 1e-5); // -sqrt(2) pi^2
    const auto c13 = reflection_coeffs_numeric(Rational(1, 3), 0, 128);
    CHECK(std::abs(c13[0].to_double() - 3.6275987284684357) < 1e-12);
    CHECK_THROWS_AS(reflection_coeffs_numeric(Rational(1, 2), 3, 128), std::domain_error);
    CHECK_THROWS_AS(reflection_coeffs_numeric(Rational(2), 3, 128), std::domain_error);
}

TEST_CASE("theorem 2 rows agree through both routes") {
    const Theorem2Report rep = verify_theorem2(Rational(1, 4), 12, 256);
    CHECK(rep.pass);
    CHECK(rep.rows.size() == 13);
    for (const auto& row : rep.rows) {
        CHECK(row.pass);
        CHECK(row.agree_bits >= 180);
        CHECK(BigFloat::agree_to_bits(row.lhs, row.rhs, 180));
    }
    CHECK(rep.nonzero_count == 13);

    const Theorem2Report r13 = verify_theorem2(Rational(1, 3), 2, 192);
    CHECK(r13.pass);
    CHECK(std::abs(r13.rows[0].lhs.to_double() - 3.6275987284684357) < 1e-12);
    CHECK(std::abs(r13.rows[0].rhs.to_double() - 3.6275987284684357) < 1e-12);

    const Theorem2Report r25 = verify_theorem2(Rational(2, 5), 8, 192);
    CHECK(r25.pass);
    CHECK(r25.nonzero_count == r25.rows.size()); // observed, reported, not a theorem i.e. jmax-sampled
}

TEST_CASE("theorem 2 rejects half-integer lattice points") {
    CHECK_THROWS_AS(verify_theorem2(Rational(1, 2), 4, 128), std::domain_error);
    CHECK_THROWS_AS(verify_theorem2(Rational(3), 4, 128), std::domain_error);
    CHECK_THROWS_AS(verify_theorem2(Rational(-5, 2), 4, 128), std::domain_error);
}

TEST_CASE("theorem 2 also holds left of zero and beyond one") {
    // q = 7/3 makes 1 - q negative; exercises the shifted negative-q path
    const Theorem2Report rep = verify_theorem2(Rational(7, 3), 6, 192);
    CHECK(rep.pass);
}
