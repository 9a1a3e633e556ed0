#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gammaq/bigfloat.hpp"
#include "gammaq/const_expr.hpp"
#include "gammaq/rational.hpp"

namespace gammaq {

/// Whether row-level work runs on the serial reference path or the OpenMP
/// one. Results are identical either way (all row arithmetic is exact or
/// row-local); the serial path exists as the reference for tests and the
/// benchmark.
enum class ExecMode { serial, parallel };

/// Coefficients b_k of R_q(t^2) = prod over the functional-equation factors
/// linking Gamma(q +/- t) to Gamma(xi +/- t), expanded in powers of t^2.
/// For m >= 0 this is a polynomial of exact degree m; for m < 0 a truncated
/// reciprocal series.
struct RqSeries {
    HalfInteger q;
    HalfInteger xi; // 1 or 1/2
    long m = 0;     // q = xi + m
    std::vector<Rational> b; // b[0..jmax], coefficient of t^(2k)
};

RqSeries rq_coefficients(const HalfInteger& q, std::size_t jmax);

/// One coefficient of Gamma(xi+t)Gamma(xi-t) = sum_j a_j pi^(2(j+1-xi)) t^(2j).
struct XiCoefficient {
    Rational a;
    long pi_exp_half; // pi exponent in half units: 4j for xi=1, 4j+2 for xi=1/2
};

/// xi = 1: coefficients of x/sin x (closed form in Bernoulli numbers);
/// xi = 1/2: coefficients of sec x, |E_{2j}|/(2j)!. Anything else is a
/// domain error.
std::vector<XiCoefficient> xi_product_coeffs(const HalfInteger& xi, std::size_t jmax);

/// Independent series-reciprocal routes for the same families (test oracles
/// and the dual-route acceptance check).
std::vector<Rational> sin_ratio_coeffs_bernoulli(std::size_t jmax); // x/sin x via B_{2j}
std::vector<Rational> sin_ratio_coeffs_series(std::size_t jmax);    // x/sin x via reciprocal
std::vector<Rational> sec_coeffs_euler(std::size_t jmax);           // sec x via |E_{2j}|
std::vector<Rational> sec_coeffs_series(std::size_t jmax);          // sec x via reciprocal

/// Rows c_{j,q} as explicit pi-power combinations:
/// c_{j,q} = sum_{k<=j} b_k a_{j-k} pi^(2(j-k+1-xi)).
std::vector<PiVector> c_via_pi(const HalfInteger& q, std::size_t jmax);

/// Rows c_{j,q} from the Cauchy square of the Taylor series:
/// coefficient of t^(2j) in Gamma(q+t)Gamma(q-t). Throws std::logic_error
/// if any odd coefficient fails to vanish (an implementation bug, not an
/// input condition).
std::vector<ConstExpr> c_via_cauchy(const HalfInteger& q, std::size_t jmax,
                                    ExecMode mode = ExecMode::serial);

struct LeadingEntry {
    long pi_exp_half = 0;     // observed leading pi exponent (half units)
    long expected_exp_half = 0;
    Rational coeff;           // observed leading coefficient
    Rational expected;        // b_0 * a_j
    bool nonzero = false;
    bool exp_matches = false;
};

struct RowFailure {
    std::size_t j = 0;
    std::string kind;   // "eq6_not_pi_polynomial" | "eq5_eq6_mismatch" | "leading"
    std::string detail;
};

/// Everything the triangular pi-power certificate consists of, plus the
/// matching eq-6 rows for auditability.
struct CertificateReport {
    HalfInteger q;
    HalfInteger xi;
    long m = 0;
    std::size_t jmax = 0;
    std::vector<PiVector> rows;       // row j = c_{j,q} per the pi-power route
    std::vector<ConstExpr> rows_cauchy; // row j per the Cauchy route
    std::vector<LeadingEntry> leading;
    bool rows_equal = false;
    bool triangular = false;
    bool all_leading_nonzero = false;
    bool pass = false;
    std::vector<RowFailure> failures;
};

CertificateReport verify_theorem1(const HalfInteger& q, std::size_t jmax,
                                  ExecMode mode = ExecMode::parallel);

/// Coefficients of pi / sin(pi (q+t)) in t, i.e. the values d_j pi^(j+1),
/// for rational q with denominator >= 3.
std::vector<BigFloat> reflection_coeffs_numeric(const Rational& q, std::size_t jmax,
                                                mpfr_prec_t prec);

struct Theorem2Row {
    std::size_t j = 0;
    BigFloat lhs;        // d_j pi^(j+1) from the reflection series
    BigFloat rhs;        // same value from the two Taylor series
    long agree_bits = 0; // relative agreement, capped at prec
    bool pass = false;
    bool d_nonzero = false;
};

struct Theorem2Report {
    Rational q;
    std::size_t jmax = 0;
    mpfr_prec_t prec = 0;
    long guard = 64;          // route agreement demanded to prec - guard bits
    std::vector<Theorem2Row> rows;
    std::size_t nonzero_count = 0;
    bool pass = false;
};

/// Checks the reflection identity row by row at the given precision. Both
/// routes are recomputed at prec + 64 first; any value that fails to agree
/// with its higher-precision run to prec - 8 bits raises PrecisionError
/// instead of producing a silent verdict.
Theorem2Report verify_theorem2(const Rational& q, std::size_t jmax, mpfr_prec_t prec);

} // namespace gammaq
