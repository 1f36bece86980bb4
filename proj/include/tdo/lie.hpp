#pragma once

// Chevalley-Cartan generators of sp_2n, the parabolic pieces m, r_+, r_-, the
// central element z and its shift z_ell, all realized as Weyl-algebra
// elements. The abstract Lie algebra is never built; every relation is checked
// inside the realization.

#include "tdo/linalg.hpp"
#include "tdo/toric.hpp"
#include "tdo/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tdo {

namespace sym {
inline std::string one_index(const char* base, std::size_t i) { return std::string(base) + "_" + std::to_string(i); }
inline std::string two_index(const char* base, std::size_t i, std::size_t j)
{
    return std::string(base) + "_" + std::to_string(i) + "_" + std::to_string(j);
}
inline std::string e(std::size_t i) { return one_index("e", i); }
inline std::string f(std::size_t i) { return one_index("f", i); }
inline std::string h(std::size_t i) { return one_index("h", i); }
inline std::string m(std::size_t i, std::size_t j) { return two_index("m", i, j); }
inline std::string rplus(std::size_t i, std::size_t j) { return two_index("rplus", i, j); }
inline std::string rminus(std::size_t i, std::size_t j) { return two_index("rminus", i, j); }
inline std::string aplus(std::size_t i, std::size_t j) { return two_index("aplus", i, j); }
inline const std::string z = "z";
inline const std::string z_ell = "z_ell";
inline const std::string euler = "euler";
} // namespace sym

struct Realization {
    std::size_t n = 2;
    std::int64_t twist = 0;
    std::map<std::string, WeylElement> table;
    /// rplus_ij = rplus_sign * P_i P_j Q_{n+1}^{-1}
    int rplus_sign = -1;
    /// True for the Fourier image; Laurent entries (e_n, rplus) are absent then.
    bool transported = false;

    bool has(const std::string& s) const { return table.count(s) != 0; }
    const WeylElement& at(const std::string& s) const
    {
        auto it = table.find(s);
        if (it == table.end())
            throw StructuralError("realization has no symbol '" + s + "'");
        return it->second;
    }
};

/// Bourbaki C_n Cartan matrix, a_ij = alpha_j(h_i), 0-based storage.
inline std::vector<std::vector<std::int64_t>> bourbaki_cartan_c(std::size_t n)
{
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = 2;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    if (n >= 2)
        a[n - 2][n - 1] = -2;
    return a;
}

struct CartanData {
    std::vector<std::vector<std::int64_t>> cartan_matrix;
    std::vector<std::string> fundamental_weights; // w_1..w_n
    /// alpha_n restricted to the Cartan of sl_n, in fundamental weights of sl_n.
    std::vector<std::int64_t> alpha_n_restricted;

    static CartanData type_c(std::size_t n)
    {
        CartanData d;
        d.cartan_matrix = bourbaki_cartan_c(n);
        for (std::size_t i = 1; i <= n; ++i)
            d.fundamental_weights.push_back("w" + std::to_string(i));
        for (std::size_t i = 0; i + 1 < n; ++i)
            d.alpha_n_restricted.push_back(d.cartan_matrix[i][n - 1]);
        return d;
    }
};

inline Realization build_realization(std::size_t n, std::int64_t ell)
{
    if (n < 2)
        throw PreconditionError("rank n must be at least 2");
    Realization r;
    r.n = n;
    r.twist = ell;
    auto& t = r.table;
    const auto Q = [n](std::size_t i, std::int64_t k = 1) { return WeylElement::q(n, i, k); };
    const auto P = [n](std::size_t i, std::int64_t k = 1) { return WeylElement::p(n, i, k); };
    const Rational half = ratio(1, 2);

    for (std::size_t i = 1; i < n; ++i) {
        t[sym::e(i)] = -(Q(i + 1) * P(i));
        t[sym::h(i)] = Q(i + 1) * P(i + 1) - Q(i) * P(i);
        t[sym::f(i)] = -(Q(i) * P(i + 1));
    }
    t[sym::e(n)] = half * (Q(n + 1, -1) * P(n, 2));
    t[sym::h(n)] = -(Q(n) * P(n)) - half;
    t[sym::f(n)] = -half * (Q(n, 2) * Q(n + 1));

    WeylElement z(n);
    for (std::size_t i = 1; i <= n; ++i)
        z -= half * (Q(i) * P(i));
    z = z - ratio(static_cast<std::int64_t>(n), 4);
    t[sym::z] = z;
    t[sym::z_ell] = -(Q(n + 1) * P(n + 1));
    t[sym::euler] = generators(RingSpec::resolution_x(n, ell)).euler_relation;

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            t[sym::m(i, j)] = -(Q(j) * P(i));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            t[sym::rplus(i, j)] = Rational(r.rplus_sign) * (Q(n + 1, -1) * P(i) * P(j));
            t[sym::rminus(i, j)] = Q(i) * Q(j) * Q(n + 1);
            t[sym::aplus(i, j)] = t[sym::rplus(i, j)] * t[sym::z_ell];
        }
    return r;
}

struct RelationCheck {
    std::string relation;
    std::string lhs;
    std::string rhs;
    bool ok = false;
};

struct RelationReport {
    std::string name;
    std::vector<RelationCheck> checks;
    /// Cartan matrix read off from [h_i, e_j] (verify_sp2n only); nullopt entries were not proportional.
    std::vector<std::vector<std::optional<Rational>>> read_cartan;
    bool cartan_matches_bourbaki = false;

    std::size_t failures() const
    {
        std::size_t k = 0;
        for (const auto& c : checks)
            k += c.ok ? 0 : 1;
        return k;
    }
    bool passed() const { return failures() == 0 && !checks.empty(); }

    void expect_equal(const std::string& relation, const WeylElement& lhs, const WeylElement& rhs)
    {
        checks.push_back({relation, to_string(lhs), to_string(rhs), lhs == rhs});
    }
    void expect(const std::string& relation, bool ok, const std::string& lhs, const std::string& rhs)
    {
        checks.push_back({relation, lhs, rhs, ok});
    }
};

/// c with a = c * b, if a is a scalar multiple of b (b nonzero).
inline std::optional<Rational> proportionality(const WeylElement& a, const WeylElement& b)
{
    if (b.is_zero())
        return std::nullopt;
    if (a.is_zero())
        return Rational(0);
    const auto& [k0, c0] = *b.terms().begin();
    const Rational c = a.coefficient(k0.mu, k0.nu) / c0;
    if (a == c * b)
        return c;
    return std::nullopt;
}

inline WeylElement ad_power(const WeylElement& x, const WeylElement& y, unsigned k)
{
    WeylElement r = y;
    for (unsigned i = 0; i < k; ++i)
        r = commutator(x, r);
    return r;
}

inline RelationReport verify_sp2n(const Realization& r)
{
    RelationReport rep;
    rep.name = "sp2n";
    const std::size_t n = r.n;
    const WeylElement zero(n);
    const auto bourbaki = bourbaki_cartan_c(n);
    rep.read_cartan.assign(n, std::vector<std::optional<Rational>>(n));
    rep.cartan_matches_bourbaki = true;

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            rep.expect_equal("[" + sym::h(i) + "," + sym::h(j) + "] = 0", commutator(r.at(sym::h(i)), r.at(sym::h(j))),
                             zero);

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const WeylElement rhs = i == j ? r.at(sym::h(i)) : zero;
            rep.expect_equal("[" + sym::e(i) + "," + sym::f(j) + "] = " + (i == j ? sym::h(i) : std::string("0")),
                             commutator(r.at(sym::e(i)), r.at(sym::f(j))), rhs);
        }

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const WeylElement he = commutator(r.at(sym::h(i)), r.at(sym::e(j)));
            const auto a = proportionality(he, r.at(sym::e(j)));
            rep.read_cartan[i - 1][j - 1] = a;
            const std::string rel = "[" + sym::h(i) + "," + sym::e(j) + "] = a_" + std::to_string(i) +
                                    std::to_string(j) + " " + sym::e(j);
            if (!a) {
                rep.expect(rel, false, to_string(he), "not proportional to " + sym::e(j));
                rep.cartan_matches_bourbaki = false;
                continue;
            }
            rep.expect(rel, true, to_string(he), to_string(*a) + " * " + sym::e(j));
            if (*a != Rational(static_cast<long>(bourbaki[i - 1][j - 1])))
                rep.cartan_matches_bourbaki = false;
            rep.expect_equal("[" + sym::h(i) + "," + sym::f(j) + "] = -a_" + std::to_string(i) + std::to_string(j) +
                                 " " + sym::f(j),
                             commutator(r.at(sym::h(i)), r.at(sym::f(j))), -(*a) * r.at(sym::f(j)));
        }
    rep.expect("read-off Cartan matrix equals Bourbaki C_n", rep.cartan_matches_bourbaki, "read-off", "Bourbaki");

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            if (i == j)
                continue;
            const auto a = rep.read_cartan[i - 1][j - 1];
            if (!a || a->get_den() != 1 || *a > 0)
                continue;
            const unsigned k = static_cast<unsigned>(1 - a->get_num().get_si());
            rep.expect_equal("ad(" + sym::e(i) + ")^" + std::to_string(k) + "(" + sym::e(j) + ") = 0",
                             ad_power(r.at(sym::e(i)), r.at(sym::e(j)), k), zero);
            rep.expect_equal("ad(" + sym::f(i) + ")^" + std::to_string(k) + "(" + sym::f(j) + ") = 0",
                             ad_power(r.at(sym::f(i)), r.at(sym::f(j)), k), zero);
        }
    return rep;
}

/// Coefficients of x in the span of basis (exact), or nullopt.
inline std::optional<std::vector<Rational>> solve_in_span(const std::vector<WeylElement>& basis, const WeylElement& x)
{
    Echelon<WeylKey> ech;
    for (const auto& b : basis) {
        SparseVec<WeylKey> v(b.terms().begin(), b.terms().end());
        ech.insert(v);
    }
    SparseVec<WeylKey> target(x.terms().begin(), x.terms().end());
    auto cert = ech.certificate(target);
    if (!cert)
        return std::nullopt;
    std::vector<Rational> out(basis.size());
    for (const auto& [id, c] : *cert)
        out[id] = c;
    return out;
}

inline RelationReport verify_parabolic(const Realization& r)
{
    RelationReport rep;
    rep.name = "parabolic";
    const std::size_t n = r.n;
    const WeylElement zero(n);
    const WeylElement& z = r.at(sym::z);
    const WeylElement& zl = r.at(sym::z_ell);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            pairs.emplace_back(i, j);

    std::vector<WeylElement> aplus_basis;
    for (auto [i, j] : pairs)
        aplus_basis.push_back(r.at(sym::aplus(i, j)));

    for (auto [i, j] : pairs) {
        const auto& a = r.at(sym::aplus(i, j));
        rep.expect_equal("[z_ell," + sym::aplus(i, j) + "] = " + sym::aplus(i, j), commutator(zl, a), a);
        const auto& y = r.at(sym::rminus(i, j));
        rep.expect_equal("[z," + sym::rminus(i, j) + "] = -" + sym::rminus(i, j), commutator(z, y), -y);
        rep.expect_equal("[z_ell," + sym::rminus(i, j) + "] = -" + sym::rminus(i, j), commutator(zl, y), -y);
        if (r.has(sym::rplus(i, j))) {
            const auto& x = r.at(sym::rplus(i, j));
            rep.expect_equal("[z," + sym::rplus(i, j) + "] = " + sym::rplus(i, j), commutator(z, x), x);
            rep.expect_equal(sym::rplus(i, j) + " * z_ell = " + sym::aplus(i, j), x * zl, a);
        }
    }
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = p; q < pairs.size(); ++q) {
            auto [i, j] = pairs[p];
            auto [k, l] = pairs[q];
            rep.expect_equal("[" + sym::aplus(i, j) + "," + sym::aplus(k, l) + "] = 0",
                             commutator(r.at(sym::aplus(i, j)), r.at(sym::aplus(k, l))), zero);
        }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const auto& m = r.at(sym::m(i, j));
            rep.expect_equal("[z_ell," + sym::m(i, j) + "] = 0", commutator(zl, m), zero);
            rep.expect_equal("[z," + sym::m(i, j) + "] = 0", commutator(z, m), zero);
            for (auto [k, l] : pairs) {
                const WeylElement br = commutator(m, r.at(sym::aplus(k, l)));
                const bool in_span = solve_in_span(aplus_basis, br).has_value();
                rep.expect("[" + sym::m(i, j) + "," + sym::aplus(k, l) + "] in span(aplus)", in_span, to_string(br),
                           "span(aplus)");
            }
        }
    // z + ell/2 + n/4 agrees with z_ell modulo the Euler relation.
    const WeylElement shifted = z + ratio(r.twist, 2) + ratio(static_cast<std::int64_t>(n), 4);
    rep.expect_equal("z + ell/2 + n/4 - z_ell = -1/2 euler", shifted - zl, ratio(-1, 2) * r.at(sym::euler));
    return rep;
}

struct AlgebraGenerator {
    std::string label;
    WeylElement element;
    int weight_shift = 0; // change of the z_ell eigenvalue
};

/// 1, the gl_n images m_ij, z_ell, r_- and r_+ z_ell.
inline std::vector<AlgebraGenerator> a_ell_generating_set(const Realization& r)
{
    const std::size_t n = r.n;
    std::vector<AlgebraGenerator> out;
    out.push_back({"1", WeylElement::constant(n, 1), 0});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            out.push_back({sym::m(i, j), r.at(sym::m(i, j)), 0});
    out.push_back({sym::z_ell, r.at(sym::z_ell), 0});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            out.push_back({sym::rminus(i, j), r.at(sym::rminus(i, j)), -1});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            out.push_back({sym::aplus(i, j), r.at(sym::aplus(i, j)), +1});
    return out;
}

} // namespace tdo
