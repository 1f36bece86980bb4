#pragma once

// Test-only generators and independent oracles.

#include "tdo/weyl.hpp"

#include <map>
#include <random>
#include <vector>

namespace testing_support {

using tdo::MultiIndex;
using tdo::Rational;
using tdo::WeylElement;

/// Laurent polynomial as exponent vector -> coefficient.
using Poly = std::map<std::vector<std::int64_t>, Rational>;

inline void add_to(Poly& p, const std::vector<std::int64_t>& e, const Rational& c)
{
    Rational& slot = p[e];
    slot += c;
    if (slot == 0)
        p.erase(e);
}

/// One partial derivative in variable k.
inline Poly d(const Poly& f, std::size_t k)
{
    Poly out;
    for (const auto& [e, c] : f) {
        if (e[k] == 0)
            continue;
        auto g = e;
        g[k] -= 1;
        add_to(out, g, c * Rational(static_cast<long>(e[k])));
    }
    return out;
}

/// Multiplication by one variable.
inline Poly x(const Poly& f, std::size_t k, std::int64_t power)
{
    Poly out;
    for (const auto& [e, c] : f) {
        auto g = e;
        g[k] += power;
        add_to(out, g, c);
    }
    return out;
}

/// Operator action built from single derivatives and multiplications, term by term.
inline Poly act(const WeylElement& a, const Poly& f)
{
    Poly out;
    for (const auto& [key, c] : a.terms()) {
        Poly g = f;
        for (std::size_t k = 0; k < key.nu.size(); ++k)
            for (std::int64_t j = 0; j < key.nu[k]; ++j)
                g = d(g, k);
        for (std::size_t k = 0; k < key.mu.size(); ++k)
            if (key.mu[k] != 0)
                g = x(g, k, key.mu[k]);
        for (const auto& [e, v] : g)
            add_to(out, e, c * v);
    }
    return out;
}

inline Poly monomial(const std::vector<std::int64_t>& e) { return Poly{{e, Rational(1)}}; }

/// Test monomials: entries 0..max in each slot, plus negative last exponents when laurent.
inline std::vector<std::vector<std::int64_t>> probe_exponents(std::size_t n, std::int64_t max, bool laurent)
{
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> e(n + 1, 0);
    const std::int64_t lo_last = laurent ? -max : 0;
    e[n] = lo_last;
    while (true) {
        out.push_back(e);
        std::size_t k = 0;
        while (k <= n) {
            const std::int64_t lo = k == n ? lo_last : 0;
            if (++e[k] <= max)
                break;
            e[k] = lo;
            ++k;
        }
        if (k > n)
            break;
    }
    return out;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Rational rational()
    {
        const std::int64_t p = uniform(-5, 5);
        const std::int64_t q = uniform(1, 4);
        return tdo::ratio(p, q);
    }

    /// Random element with up to `terms` terms and per-slot exponents <= max_exp.
    WeylElement element(std::size_t n, std::int64_t max_exp, std::size_t terms, bool laurent = false)
    {
        WeylElement a(n, laurent);
        for (std::size_t t = 0; t < terms; ++t) {
            MultiIndex mu(n + 1), nu(n + 1);
            for (std::size_t k = 0; k <= n; ++k) {
                mu[k] = uniform(0, max_exp);
                nu[k] = uniform(0, max_exp);
            }
            if (laurent)
                mu[n] = uniform(-max_exp, max_exp);
            a.add_term(rational(), mu, nu);
        }
        return a;
    }

    /// Single monomial term with total filtration order at most `order`.
    WeylElement bounded(std::size_t n, std::int64_t order, std::size_t terms)
    {
        WeylElement a(n);
        for (std::size_t t = 0; t < terms; ++t) {
            MultiIndex mu(n + 1), nu(n + 1);
            std::int64_t budget = uniform(0, order);
            while (budget > 0) {
                const auto k = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n)));
                (uniform(0, 1) ? mu : nu)[k] += 1;
                --budget;
            }
            a.add_term(rational(), mu, nu);
        }
        return a;
    }

private:
    std::mt19937_64 rng_;
};

/// Pascal's triangle, independent of the library binomial.
inline std::vector<std::vector<Rational>> pascal(std::size_t rows)
{
    std::vector<std::vector<Rational>> t(rows + 1);
    for (std::size_t r = 0; r <= rows; ++r) {
        t[r].assign(r + 1, Rational(1));
        for (std::size_t k = 1; k < r; ++k)
            t[r][k] = t[r - 1][k - 1] + t[r - 1][k];
    }
    return t;
}

inline Rational choose(std::int64_t a, std::int64_t b)
{
    static const auto t = pascal(80);
    if (a < 0 || b < 0 || b > a)
        return 0;
    return t.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
}

} // namespace testing_support
