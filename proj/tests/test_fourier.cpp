#include "support.hpp"

#include "tdo/fourier.hpp"
#include "tdo/ring_iso.hpp"
#include "tdo/suites.hpp"

#include <gtest/gtest.h>

using namespace tdo;
namespace ts = testing_support;

namespace {

WeylElement Q(std::size_t n, std::size_t i, std::int64_t k = 1) { return WeylElement::q(n, i, k); }
WeylElement P(std::size_t n, std::size_t i, std::int64_t k = 1) { return WeylElement::p(n, i, k); }

} // namespace

TEST(Fourier, ActionOnVariables)
{
    const std::size_t n = 3;
    EXPECT_EQ(fourier_I(Q(n, n + 1)), P(n, n + 1));
    EXPECT_EQ(fourier_I(P(n, n + 1)), -Q(n, n + 1));
    for (std::size_t i = 1; i <= n; ++i) {
        EXPECT_EQ(fourier_I(Q(n, i)), Q(n, i));
        EXPECT_EQ(fourier_I(P(n, i)), P(n, i));
    }
    EXPECT_EQ(fourier_I(WeylElement::constant(n, ratio(3, 7))), WeylElement::constant(n, ratio(3, 7)));
}

TEST(Fourier, MultiplicativeOnRandomPairs)
{
    ts::Gen g(31);
    for (int t = 0; t < 100; ++t) {
        const WeylElement a = g.bounded(2, 3, 3), b = g.bounded(2, 3, 3);
        ASSERT_EQ(fourier_I(a * b), fourier_I(a) * fourier_I(b));
        ASSERT_EQ(fourier_I(a + b), fourier_I(a) + fourier_I(b));
    }
}

TEST(Fourier, FourthPowerIsIdentity)
{
    ts::Gen g(32);
    for (int t = 0; t < 50; ++t) {
        const WeylElement a = g.bounded(3, 4, 4);
        const WeylElement f2 = fourier_I(fourier_I(a));
        ASSERT_EQ(fourier_I(fourier_I(f2)), a);
        ASSERT_EQ(fourier_I_inverse(fourier_I(a)), a);
        ASSERT_EQ(fourier_I(fourier_I_inverse(a)), a);
    }
}

TEST(Fourier, PreservesCommutationRelations)
{
    for (std::size_t n : {2u, 3u})
        for (std::size_t i = 1; i <= n + 1; ++i)
            for (std::size_t j = 1; j <= n + 1; ++j) {
                const WeylElement c = commutator(fourier_I(P(n, i)), fourier_I(Q(n, j)));
                EXPECT_EQ(c, i == j ? WeylElement::constant(n, 1) : WeylElement(n));
                EXPECT_TRUE(commutator(fourier_I(Q(n, i)), fourier_I(Q(n, j))).is_zero());
            }
}

TEST(Fourier, Errors)
{
    EXPECT_THROW(fourier_I(Q(2, 3, -1)), PreconditionError);
    ReflectionSpec bad;
    bad.reflected_indices = {1};
    EXPECT_THROW(fourier_I(Q(2, 1), bad), StructuralError);
    ReflectionSpec sign;
    sign.convention_sign = 2;
    EXPECT_THROW(fourier_I(Q(2, 1), sign), StructuralError);
}

TEST(Fourier, DisplayedValues)
{
    const std::size_t n = 2;
    const Rational h = ratio(1, 2);
    EXPECT_EQ(fourier_I(h * (P(n, n, 2) * P(n, n + 1))), -h * (P(n, n, 2) * Q(n, n + 1)));
    // computed under the convention; the displayed value has the opposite sign
    EXPECT_EQ(fourier_I(-h * (Q(n, n, 2) * Q(n, n + 1))), -h * (Q(n, n, 2) * P(n, n + 1)));
    EXPECT_EQ(fourier_I(-(Q(n, n + 1) * P(n, n + 1))), Q(n, n + 1) * P(n, n + 1) + Rational(1));
    const auto shown = displayed_fourier_values(n);
    ASSERT_EQ(shown.size(), 3u);
    EXPECT_TRUE(shown[0].agrees);
    EXPECT_FALSE(shown[1].agrees);
    EXPECT_EQ(shown[1].computed, -shown[1].displayed);
    EXPECT_TRUE(shown[2].agrees);
}

TEST(RingIso, ResolutionToWeighted)
{
    for (std::size_t n : {2u, 3u})
        for (std::int64_t ell : {-2, 0, 2, 4}) {
            const RingIsoReport rep = verify_ring_iso(n, ell, 5);
            EXPECT_TRUE(rep.forward_ok) << n << " " << ell;
            EXPECT_TRUE(rep.backward_ok) << n << " " << ell;
            EXPECT_TRUE(rep.generators_ok) << n << " " << ell;
            EXPECT_TRUE(rep.euler_ok) << n << " " << ell;
            EXPECT_EQ(rep.target_twist, ell - 2);
            EXPECT_EQ(rep.counts_source[0], n * n + 1);
            EXPECT_EQ(rep.counts_source[1], n * (n + 1) / 2);
            EXPECT_EQ(rep.forward.size(), admissible_monomials(RingSpec::resolution_x(n, ell), 5).size());
        }
}

TEST(RingIso, OddTwistRejected)
{
    EXPECT_THROW(verify_ring_iso(2, 1, 3), PreconditionError);
    EXPECT_THROW(verify_ring_iso(3, -3, 3), PreconditionError);
}

TEST(RingIso, EulerRelationImage)
{
    for (std::int64_t ell : {-2, 0, 2}) {
        const std::size_t n = 3;
        const WeylElement src = generators(RingSpec::resolution_x(n, ell)).euler_relation;
        WeylElement want(n);
        for (std::size_t i = 1; i <= n; ++i)
            want += Q(n, i) * P(n, i);
        want += Rational(2) * (Q(n, n + 1) * P(n, n + 1));
        want = want - Rational(ell - 2);
        EXPECT_EQ(fourier_I(src), want);
    }
}

TEST(RingIso, TransportedRealization)
{
    for (std::size_t n : {2u, 3u})
        for (std::int64_t ell : {-2, 0, 2}) {
            const Realization tr = transport_realization(build_realization(n, ell + 2));
            EXPECT_TRUE(tr.transported);
            EXPECT_FALSE(tr.has(sym::e(n)));
            EXPECT_FALSE(tr.has(sym::rplus(1, 1)));
            EXPECT_TRUE(verify_parabolic(tr).passed());
            EXPECT_EQ(tr.at(sym::z_ell), Q(n, n + 1) * P(n, n + 1) + Rational(1));
            for (const auto& g : a_ell_generating_set(tr))
                EXPECT_TRUE(is_member(g.element, RingSpec::weighted_y(n, ell))) << g.label;
        }
}

TEST(RingIso, DivisorClass)
{
    for (std::int64_t ell = -5; ell <= 5; ++ell) {
        const DivisorImage d = phi_I(3, ell);
        EXPECT_EQ(d.divisor_class, ell - 2);
        EXPECT_EQ(d.cartier, ell % 2 == 0);
        EXPECT_EQ(d.coefficients, (std::vector<std::int64_t>{ell, 0, 0, -1}));
    }
}
