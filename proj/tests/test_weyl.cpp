#include "support.hpp"

#include "tdo/report.hpp"
#include "tdo/weyl.hpp"

#include <gtest/gtest.h>

using namespace tdo;
namespace ts = testing_support;

namespace {

MultiIndex mi(std::vector<std::int64_t> v) { return MultiIndex(std::move(v)); }

// Operators agree as maps on every probe monomial.
void expect_same_action(const WeylElement& a, const WeylElement& b, std::int64_t max, bool laurent)
{
    for (const auto& e : ts::probe_exponents(a.rank(), max, laurent))
        ASSERT_EQ(ts::act(a, ts::monomial(e)), ts::act(b, ts::monomial(e))) << MultiIndex(e).str();
}

} // namespace

TEST(WeylProduct, SquaredDerivativeTimesSquaredCoordinate)
{
    const std::size_t n = 1;
    const WeylElement P = WeylElement::p(n, 1), Q = WeylElement::q(n, 1);
    const WeylElement got = P * P * Q * Q;
    WeylElement want = WeylElement::q(n, 1, 2) * WeylElement::p(n, 1, 2);
    want += Rational(4) * (Q * P);
    want += WeylElement::constant(n, 2);
    EXPECT_EQ(got, want);
    EXPECT_EQ(got.coefficient(mi({2, 0}), mi({2, 0})), Rational(1));
    EXPECT_EQ(got.coefficient(mi({1, 0}), mi({1, 0})), Rational(4));
    EXPECT_EQ(got.coefficient(mi({0, 0}), mi({0, 0})), Rational(2));
    // action on 1, Q, Q^2, Q^3 through the oracle
    const std::vector<Rational> expect = {2, 6, 12, 20};
    for (std::int64_t k = 0; k <= 3; ++k) {
        const auto img = ts::act(got, ts::monomial({k, 0}));
        ASSERT_EQ(img.size(), 1u);
        EXPECT_EQ(img.at({k, 0}), expect[static_cast<std::size_t>(k)]);
    }
}

TEST(WeylProduct, CanonicalCommutationRelations)
{
    const std::size_t n = 3;
    for (std::size_t i = 1; i <= n + 1; ++i)
        for (std::size_t j = 1; j <= n + 1; ++j) {
            const WeylElement c = commutator(WeylElement::p(n, i), WeylElement::q(n, j));
            EXPECT_EQ(c, i == j ? WeylElement::constant(n, 1) : WeylElement(n)) << i << "," << j;
            EXPECT_TRUE(commutator(WeylElement::q(n, i), WeylElement::q(n, j)).is_zero());
            EXPECT_TRUE(commutator(WeylElement::p(n, i), WeylElement::p(n, j)).is_zero());
        }
}

TEST(WeylProduct, LaurentLastVariable)
{
    const std::size_t n = 2;
    const WeylElement Qi = WeylElement::q(n, 3, -1), P = WeylElement::p(n, 3);
    EXPECT_TRUE(Qi.laurent());
    // P Q^{-1} = Q^{-1} P - Q^{-2}
    const WeylElement want = Qi * P - WeylElement::q(n, 3, -2);
    EXPECT_EQ(P * Qi, want);
    expect_same_action(P * Qi, want, 3, true);
    EXPECT_EQ(WeylElement::q(n, 3) * Qi, WeylElement::constant(n, 1));
}

TEST(WeylProduct, ProductIsComposition)
{
    ts::Gen g(11);
    for (int t = 0; t < 40; ++t) {
        const bool laurent = t % 2 == 1;
        const WeylElement a = g.element(2, 2, 3, laurent), b = g.element(2, 2, 3, laurent);
        const WeylElement ab = a * b;
        for (const auto& e : ts::probe_exponents(2, 3, laurent))
            ASSERT_EQ(ts::act(ab, ts::monomial(e)), ts::act(a, ts::act(b, ts::monomial(e))));
    }
}

TEST(WeylProduct, Associativity)
{
    ts::Gen g(12);
    for (int t = 0; t < 30; ++t) {
        const bool laurent = t % 3 == 0;
        const WeylElement a = g.element(2, 2, 2, laurent), b = g.element(2, 2, 2, laurent),
                          c = g.element(2, 2, 2, laurent);
        ASSERT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(WeylProduct, JacobiIdentity)
{
    ts::Gen g(13);
    for (int t = 0; t < 30; ++t) {
        const WeylElement a = g.element(3, 2, 2), b = g.element(3, 2, 2), c = g.element(3, 2, 2);
        const WeylElement j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                              commutator(c, commutator(a, b));
        ASSERT_TRUE(j.is_zero()) << to_string(j);
    }
}

TEST(WeylProduct, DistributesOverSums)
{
    ts::Gen g(14);
    for (int t = 0; t < 30; ++t) {
        const WeylElement a = g.element(2, 2, 2), b = g.element(2, 2, 2), c = g.element(2, 2, 2);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(WeylProduct, DegreeIsAdditive)
{
    ts::Gen g(15);
    for (int t = 0; t < 40; ++t) {
        const WeylElement a = g.element(2, 2, 1), b = g.element(2, 2, 1);
        if (a.is_zero() || b.is_zero())
            continue;
        const auto da = degree(a.terms().begin()->first.mu, a.terms().begin()->first.nu);
        const auto db = degree(b.terms().begin()->first.mu, b.terms().begin()->first.nu);
        const WeylElement ab = a * b;
        for (const auto& [k, c] : ab.terms())
            ASSERT_EQ(degree(k.mu, k.nu), da + db);
    }
}

TEST(WeylProduct, OrderIsSubadditive)
{
    ts::Gen g(16);
    for (int t = 0; t < 40; ++t) {
        const WeylElement a = g.bounded(2, 4, 3), b = g.bounded(2, 4, 3);
        ASSERT_LE((a * b).order(), a.order() + b.order());
    }
}

TEST(WeylAction, ApplyMatchesOracle)
{
    ts::Gen g(17);
    for (int t = 0; t < 30; ++t) {
        const bool laurent = t % 2 == 0;
        const WeylElement a = g.element(2, 2, 3, laurent);
        for (const auto& e : ts::probe_exponents(2, 2, true)) {
            const ModuleVector img = apply(a, ModuleVector::monomial(MultiIndex(e)));
            const ts::Poly want = ts::act(a, ts::monomial(e));
            ts::Poly got;
            for (const auto& [m, c] : img.coeffs())
                got[m.values()] = c;
            ASSERT_EQ(got, want);
        }
    }
}

TEST(WeylAction, ApplyOfProductIsIteratedApply)
{
    ts::Gen g(18);
    for (int t = 0; t < 20; ++t) {
        const WeylElement a = g.element(2, 2, 2), b = g.element(2, 2, 2);
        for (const auto& e : ts::probe_exponents(2, 2, false)) {
            const ModuleVector v = ModuleVector::monomial(MultiIndex(e));
            ASSERT_EQ(apply(a * b, v), apply(a, apply(b, v)));
        }
    }
}

namespace {

struct BothNegative {
    bool contains(const MultiIndex& m) const { return m[0] < 0 && m[1] < 0; }
};

} // namespace

// H^1(P^1, O(d)) in the Cech model: Q1^a Q2^b with a, b <= -1 and a + b = d.
TEST(WeylAction, CechTruncationOnProjectiveLine)
{
    const std::size_t n = 1;
    const WeylElement e = WeylElement::q(n, 1) * WeylElement::p(n, 2);
    const WeylElement f = WeylElement::q(n, 2) * WeylElement::p(n, 1);
    const WeylElement h = WeylElement::q(n, 1) * WeylElement::p(n, 1) - WeylElement::q(n, 2) * WeylElement::p(n, 2);
    const WeylElement euler = WeylElement::q(n, 1) * WeylElement::p(n, 1) + WeylElement::q(n, 2) * WeylElement::p(n, 2);
    for (std::int64_t dd = -2; dd >= -6; --dd) {
        std::vector<MultiIndex> basis;
        for (std::int64_t a = -1; a >= dd + 1; --a)
            basis.push_back(mi({a, dd - a}));
        EXPECT_EQ(Rational(static_cast<long>(basis.size())), ts::choose(-dd - 1, 1))
            << "d=" << dd;
        for (const auto& m : basis) {
            const ModuleVector v = ModuleVector::monomial(m);
            EXPECT_EQ(apply(euler, v, BothNegative{}), Rational(dd) * v);
            // [e, f] = h survives truncation
            const ModuleVector lhs = apply(e, apply(f, v, BothNegative{}), BothNegative{}) -
                                     apply(f, apply(e, v, BothNegative{}), BothNegative{});
            EXPECT_EQ(lhs, apply(h, v, BothNegative{}));
        }
    }
    // d = -2: the single class is killed by both coordinates
    const ModuleVector v = ModuleVector::monomial(mi({-1, -1}));
    EXPECT_TRUE(apply(WeylElement::q(n, 1), v, BothNegative{}).is_zero());
    EXPECT_TRUE(apply(WeylElement::q(n, 2), v, BothNegative{}).is_zero());
    EXPECT_EQ(apply(WeylElement::p(n, 1), v, BothNegative{}), Rational(-1) * ModuleVector::monomial(mi({-2, -1})));
}

TEST(WeylText, RoundTrip)
{
    ts::Gen g(19);
    for (int t = 0; t < 30; ++t) {
        const WeylElement a = g.element(3, 3, 4, t % 2 == 0);
        ASSERT_EQ(parse_weyl(to_string(a)), a);
        ASSERT_EQ(weyl_from_json(to_json(a)), a);
        ASSERT_EQ(weyl_from_json(Json::parse(to_json(a).dump())), a);
    }
    EXPECT_EQ(parse_weyl("0", 2), WeylElement(2));
    EXPECT_EQ(to_string(WeylElement(2)), "0");
}

TEST(WeylText, TextFormIsCanonical)
{
    const std::size_t n = 1;
    const WeylElement a = WeylElement::q(n, 1) * WeylElement::p(n, 1) + WeylElement::constant(n, ratio(2, 4));
    EXPECT_EQ(to_string(a), "1/2 * Q^[0,0] P^[0,0] + 1/1 * Q^[1,0] P^[1,0]");
}

TEST(WeylErrors, StructuralViolations)
{
    const WeylElement a = WeylElement::q(2, 1), b = WeylElement::q(3, 1);
    EXPECT_THROW(a * b, StructuralError);
    EXPECT_THROW(a + b, StructuralError);
    EXPECT_THROW(WeylElement::monomial(2, mi({-1, 0, 0}), mi({0, 0, 0})), StructuralError);
    EXPECT_THROW(WeylElement::monomial(2, mi({0, 0, 0}), mi({0, -1, 0})), StructuralError);
    EXPECT_THROW(WeylElement::monomial(2, mi({0, 0}), mi({0, 0})), StructuralError);
    WeylElement plain(2);
    EXPECT_THROW(plain.add_term(1, mi({0, 0, -1}), mi({0, 0, 0})), StructuralError);
    EXPECT_THROW(apply(a, ModuleVector::monomial(mi({0, 0}))), StructuralError);
}

TEST(WeylErrors, ParseFailures)
{
    EXPECT_THROW(parse_weyl("1/2 * Q^[0,0 P^[0,0]"), ParseError);
    EXPECT_THROW(parse_weyl("x * Q^[0,0] P^[0,0]"), ParseError);
    EXPECT_THROW(parse_weyl("1/2 Q^[0,0] P^[0,0]"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(ratio(1, 0), std::domain_error);
}

TEST(Arithmetic, RatioIsCanonical)
{
    EXPECT_EQ(to_string(ratio(-2, 2)), "-1/1");
    EXPECT_EQ(to_string(ratio(6, -4)), "-3/2");
    EXPECT_EQ(ratio(3, 6), ratio(1, 2));
}

TEST(Arithmetic, BinomialAndFallingAgainstPascal)
{
    for (std::int64_t a = 0; a <= 30; ++a)
        for (std::int64_t b = -1; b <= a + 1; ++b)
            ASSERT_EQ(binomial(a, b), ts::choose(a, b)) << a << " " << b;
    for (std::int64_t c = -6; c <= 6; ++c)
        for (std::int64_t k = 0; k <= 5; ++k) {
            Rational f = 1;
            for (std::int64_t i = 0; i < k; ++i)
                f *= Rational(static_cast<long>(c - i));
            ASSERT_EQ(falling(c, k), f);
            if (c >= 0) {
                ASSERT_EQ(falling(c, k), ts::choose(c, k) * factorial(k));
            }
        }
    EXPECT_EQ(floor_div(-3, 2), -2);
    EXPECT_EQ(ceil_div(-3, 2), -1);
    EXPECT_EQ(ceil_div(3, 2), 2);
    EXPECT_THROW(checked_add(std::numeric_limits<std::int64_t>::max(), 1), std::overflow_error);
}
