#include "gammaq/sequences.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace gammaq {

namespace {

std::shared_mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli; // B_0 .. B_{size-1}

std::shared_mutex g_euler_mutex;
std::vector<Integer> g_euler; // E_0 .. E_{size-1}

// Defining recurrence: sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1, B_0 = 1.
// Solved for B_n; yields the B_1 = -1/2 convention. Reads table[0..n-1].
Rational next_bernoulli(const std::vector<Rational>& table, unsigned n) {
    Rational acc;
    for (unsigned k = 0; k < n; ++k) {
        if (table[k].is_zero()) continue;
        acc += Rational(binomial(n + 1, k)) * table[k];
    }
    return -acc / Rational(static_cast<long>(n) + 1);
}

// sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0 for n >= 1, E_0 = 1.
Integer next_even_euler(const std::vector<Integer>& table, unsigned m) {
    Integer acc(0);
    for (unsigned k = 0; k < m; ++k) acc += binomial(2 * m, 2 * k) * table[2 * k];
    return -acc;
}

bool verify_bernoulli_table(const std::vector<Rational>& t) {
    if (t.empty() || t[0] != Rational(1)) return false;
    for (unsigned n = 1; n < t.size(); ++n)
        if (t[n] != next_bernoulli(t, n)) return false;
    return true;
}

bool verify_euler_table(const std::vector<Integer>& t) {
    if (t.empty() || t[0] != 1) return false;
    for (unsigned n = 1; n < t.size(); ++n) {
        if (n % 2 == 1) {
            if (t[n] != 0) return false;
        } else if (t[n] != next_even_euler(t, n / 2)) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational bernoulli(unsigned n) {
    {
        std::shared_lock lock(g_bernoulli_mutex);
        if (n < g_bernoulli.size()) return g_bernoulli[n];
    }
    std::unique_lock lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
    while (g_bernoulli.size() <= n)
        g_bernoulli.push_back(next_bernoulli(g_bernoulli, static_cast<unsigned>(g_bernoulli.size())));
    return g_bernoulli[n];
}

Integer euler_number(unsigned n) {
    {
        std::shared_lock lock(g_euler_mutex);
        if (n < g_euler.size()) return g_euler[n];
    }
    std::unique_lock lock(g_euler_mutex);
    if (g_euler.empty()) g_euler.emplace_back(1);
    while (g_euler.size() <= n) {
        const unsigned i = static_cast<unsigned>(g_euler.size());
        g_euler.push_back(i % 2 == 1 ? Integer(0) : next_even_euler(g_euler, i / 2));
    }
    return g_euler[n];
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("binomial: k > n");
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void ensure_bernoulli(unsigned n) { bernoulli(n); }
void ensure_euler(unsigned n) { euler_number(n); }

std::vector<Rational> bernoulli_table_snapshot() {
    std::shared_lock lock(g_bernoulli_mutex);
    return g_bernoulli;
}

std::vector<Integer> euler_table_snapshot() {
    std::shared_lock lock(g_euler_mutex);
    return g_euler;
}

bool seed_bernoulli_table(const std::vector<Rational>& table) {
    if (!verify_bernoulli_table(table)) return false;
    std::unique_lock lock(g_bernoulli_mutex);
    if (table.size() > g_bernoulli.size()) g_bernoulli = table;
    return true;
}

bool seed_euler_table(const std::vector<Integer>& table) {
    if (!verify_euler_table(table)) return false;
    std::unique_lock lock(g_euler_mutex);
    if (table.size() > g_euler.size()) g_euler = table;
    return true;
}

} // namespace gammaq
