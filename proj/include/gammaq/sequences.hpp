#pragma once

#include <vector>

#include "gammaq/rational.hpp"

namespace gammaq {

/// Bernoulli number B_n, convention B_1 = -1/2. Memoized; safe for
/// concurrent readers with serialized table growth.
Rational bernoulli(unsigned n);

/// Signed Euler number E_n in the secant convention
/// (sec x = sum |E_{2k}| x^{2k} / (2k)!, E_0 = 1, E_2 = -1, E_4 = 5, ...).
/// Odd indices are zero.
Integer euler_number(unsigned n);

Integer factorial(unsigned n);

/// C(n, k); throws std::domain_error when k > n.
Integer binomial(unsigned n, unsigned k);

/// Grow the memo tables up to index n (useful before parallel sections and
/// before persisting the CLI cache).
void ensure_bernoulli(unsigned n);
void ensure_euler(unsigned n);

/// Copies of the current memo tables (index 0..size-1).
std::vector<Rational> bernoulli_table_snapshot();
std::vector<Integer> euler_table_snapshot();

/// Replace the memo tables with externally loaded values. The tables are
/// verified against the defining recurrences first; returns false (and
/// leaves the tables untouched) if anything is off.
bool seed_bernoulli_table(const std::vector<Rational>& table);
bool seed_euler_table(const std::vector<Integer>& table);

} // namespace gammaq
