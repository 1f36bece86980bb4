#include "support.hpp"

#include "tdo/toric.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tdo;
namespace ts = testing_support;

namespace {

// Box enumeration with the ring conditions written out directly.
std::set<WeylKey> brute_force(RingKind kind, std::size_t n, std::int64_t order)
{
    std::set<WeylKey> out;
    const std::size_t len = 2 * (n + 1);
    std::vector<std::int64_t> v(len, -order);
    while (true) {
        std::int64_t ord = 0;
        for (auto x : v)
            ord += x < 0 ? -x : x;
        bool ok = ord <= order;
        for (std::size_t k = 0; ok && k < len; ++k) {
            const bool last_q = k == n;
            if (v[k] < 0 && !(last_q && kind == RingKind::SingularX))
                ok = false;
        }
        if (ok) {
            std::int64_t h = 0;
            for (std::size_t k = 0; k < n; ++k)
                h += v[k] - v[n + 1 + k];
            const std::int64_t w = kind == RingKind::WeightedY ? 2 : -2;
            h += w * (v[n] - v[2 * n + 1]);
            if (h == 0) {
                MultiIndex mu(n + 1), nu(n + 1);
                for (std::size_t k = 0; k <= n; ++k) {
                    mu[k] = v[k];
                    nu[k] = v[n + 1 + k];
                }
                out.insert({mu, nu});
            }
        }
        std::size_t k = 0;
        while (k < len && ++v[k] > order)
            v[k++] = -order;
        if (k == len)
            break;
    }
    return out;
}

std::vector<RingSpec> rings(std::size_t n)
{
    return {RingSpec::singular_x(n), RingSpec::resolution_x(n, -1), RingSpec::resolution_x(n, 2),
            RingSpec::weighted_y(n, 0), RingSpec::weighted_y(n, -4)};
}

} // namespace

TEST(ToricRings, AdmissibleMonomialsMatchBoxEnumeration)
{
    for (std::size_t n : {2u, 3u}) {
        const std::int64_t order = n == 2 ? 4 : 3;
        for (const auto& r : rings(n)) {
            const auto got = admissible_monomials(r, order);
            const std::set<WeylKey> got_set(got.begin(), got.end());
            EXPECT_EQ(got_set.size(), got.size());
            EXPECT_EQ(got_set, brute_force(r.kind, n, order)) << to_string(r.kind) << " n=" << n;
            EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
        }
    }
}

TEST(ToricRings, GeneratorCountsAndMembership)
{
    for (std::size_t n : {2u, 3u, 4u})
        for (const auto& r : rings(n)) {
            const GeneratorSet g = generators(r);
            EXPECT_EQ(g.degree0.size(), n * n + 1);
            EXPECT_EQ(g.degree_plus.size(), n * (n + 1) / 2);
            EXPECT_EQ(g.degree_minus.size(), n * (n + 1) / 2);
            for (const auto& le : g.all())
                EXPECT_TRUE(is_member(le.element, r)) << le.label;
        }
}

TEST(ToricRings, DegreesOfGeneratorFamilies)
{
    const std::size_t n = 3;
    const GeneratorSet g = generators(RingSpec::resolution_x(n, 0));
    auto deg = [](const WeylElement& a) {
        std::set<std::int64_t> d;
        for (const auto& [k, c] : a.terms())
            d.insert(degree(k.mu, k.nu));
        return d;
    };
    for (const auto& le : g.degree0)
        EXPECT_EQ(deg(le.element), std::set<std::int64_t>{0});
    for (const auto& le : g.degree_plus)
        EXPECT_EQ(deg(le.element), std::set<std::int64_t>{3});
    for (const auto& le : g.degree_minus)
        EXPECT_EQ(deg(le.element), std::set<std::int64_t>{-3});
}

TEST(ToricRings, MembershipRejectsOutsiders)
{
    const std::size_t n = 2;
    const RingSpec sx = RingSpec::singular_x(n), rx = RingSpec::resolution_x(n, 0), wy = RingSpec::weighted_y(n, 0);
    EXPECT_FALSE(is_member(WeylElement::q(n, 1), rx));
    EXPECT_FALSE(is_member(WeylElement::p(n, 3), rx));
    const WeylElement laurent = WeylElement::q(n, 3, -1) * WeylElement::p(n, 1) * WeylElement::p(n, 2);
    EXPECT_TRUE(is_member(laurent, sx));
    EXPECT_FALSE(is_member(laurent, rx));
    EXPECT_FALSE(is_member(laurent, wy));
    const WeylElement qqp = WeylElement::q(n, 1) * WeylElement::q(n, 2) * WeylElement::p(n, 3);
    EXPECT_TRUE(is_member(qqp, wy));
    EXPECT_FALSE(is_member(qqp, rx));
    EXPECT_THROW(is_member(WeylElement::q(3, 1), rx), StructuralError);
    EXPECT_THROW(RingSpec::weighted_y(n, 1), PreconditionError);
}

TEST(ToricRings, ClosedUnderProduct)
{
    ts::Gen g(21);
    for (const auto& r : rings(2)) {
        const auto mons = admissible_monomials(r, 3);
        auto pick = [&] {
            WeylElement a(r.n, r.laurent_last);
            for (int t = 0; t < 3; ++t) {
                const auto& k = mons[static_cast<std::size_t>(g.uniform(0, static_cast<std::int64_t>(mons.size()) - 1))];
                a += WeylElement::monomial(r.n, k.mu, k.nu, g.rational());
            }
            return a;
        };
        for (int t = 0; t < 30; ++t) {
            const WeylElement a = pick(), b = pick();
            ASSERT_TRUE(is_member(a * b, r)) << to_string(r.kind);
            ASSERT_TRUE(is_member(commutator(a, b), r));
        }
    }
}

TEST(ToricRings, EulerRelationIsCentral)
{
    for (std::size_t n : {2u, 3u})
        for (const auto& r : rings(n)) {
            const GeneratorSet g = generators(r);
            for (const auto& le : g.all())
                EXPECT_TRUE(commutator(g.euler_relation, le.element).is_zero()) << le.label;
        }
}

TEST(ToricRings, EulerRelationKillsCovariantMonomials)
{
    const std::size_t n = 3;
    for (std::int64_t ell = -3; ell <= 3; ++ell) {
        const WeylElement eu = generators(RingSpec::resolution_x(n, ell)).euler_relation;
        // Q^mu with mu_1+..+mu_n - 2 mu_{n+1} = ell
        for (std::int64_t top = 0; top <= 3; ++top)
            for (std::int64_t a = 0; a <= ell + 2 * top; ++a) {
                const std::int64_t b = ell + 2 * top - a;
                if (b < 0)
                    continue;
                const MultiIndex mu(std::vector<std::int64_t>{a, b, 0, top});
                EXPECT_TRUE(apply(eu, ModuleVector::monomial(mu)).is_zero());
            }
    }
}

TEST(SpanOracle, EveryAdmissibleMonomialIsSpanned)
{
    for (std::size_t n : {2u, 3u}) {
        std::vector<RingSpec> rs = {RingSpec::singular_x(n)};
        for (std::int64_t ell : {-2, 0, 2})
            rs.push_back(RingSpec::resolution_x(n, ell));
        for (const auto& r : rs) {
            const SpanReport rep = span_oracle(r, 4, 3);
            EXPECT_TRUE(rep.all_spanned) << to_string(r.kind) << " n=" << n;
            EXPECT_EQ(rep.entries.size(), admissible_monomials(r, 4).size());
            for (const auto& e : rep.entries) {
                ASSERT_TRUE(e.spanned);
                ASSERT_EQ(evaluate_certificate(rep, e), WeylElement::monomial(n, e.monomial.mu, e.monomial.nu));
                ASSERT_GE(e.min_word_len, 0);
                ASSERT_LE(e.min_word_len, 3);
            }
            ASSERT_EQ(rep.min_len_per_order.size(), 5u);
            // constants need the empty word; order-2 generators need one letter
            EXPECT_EQ(rep.min_len_per_order[0], 0);
            EXPECT_EQ(rep.min_len_per_order[2], 1);
        }
    }
}

TEST(SpanOracle, ShortWordsDoNotSuffice)
{
    // Q_1^2 P_1^2 has order 4 and is not a single generator
    const SpanReport rep = span_oracle(RingSpec::resolution_x(2, 0), 4, 1);
    EXPECT_FALSE(rep.all_spanned);
    const MultiIndex m(std::vector<std::int64_t>{2, 0, 0});
    for (const auto& e : rep.entries)
        if (e.monomial.mu == m && e.monomial.nu == m) {
            EXPECT_FALSE(e.spanned);
        }
}
