#pragma once

#include <cstddef>

#include "gammaq/const_expr.hpp"
#include "gammaq/rational.hpp"
#include "gammaq/series.hpp"

namespace gammaq {

/// Exact Taylor expansion of Gamma at a half-integer point:
/// series coefficient n is Gamma^(n)(q) / n! as a ConstExpr.
struct GammaTaylor {
    HalfInteger q;
    Series<ConstExpr> series;
};

/// Gamma(q) for q in (1/2)Z outside the poles: m! for integers,
/// rational * sqrt(pi) for half-odd arguments.
ConstExpr gamma_value(const HalfInteger& q);

/// psi^(k)(q), exact. Anchored at psi^(k)(1) and psi^(k)(1/2) and moved by
/// the shift rule psi^(k)(z+1) = psi^(k)(z) + (-1)^k k! z^-(k+1); even zeta
/// values reduce to pi powers on entry.
ConstExpr polygamma(const HalfInteger& q, unsigned k);

/// Log-series route: Gamma(q) * exp(sum_{k>=1} psi^(k-1)(q) t^k / k!).
GammaTaylor taylor(const HalfInteger& q, std::size_t order);

/// Independent route at q = 1 via the derivative recursion
/// Gamma^(n)(1) = -g Gamma^(n-1)(1)
///              + sum_{k=1}^{n-1} (-1)^{k+1} (n-1)!/(n-k-1)! zeta(k+1) Gamma^(n-k-1)(1).
GammaTaylor taylor_via_recursion(std::size_t order);

/// Gamma^(n)(q) = n! * coefficient n.
ConstExpr derivative(const GammaTaylor& gt, std::size_t n);

} // namespace gammaq
