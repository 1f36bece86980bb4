#pragma once

// F_I as a ring isomorphism ResolutionX(l) -> WeightedY(l-2), the transported
// realization of A_{l+2} on the weighted projective space, and the divisor
// class bookkeeping for phi_I.

#include "tdo/fourier.hpp"
#include "tdo/lie.hpp"
#include "tdo/toric.hpp"

#include <string>
#include <vector>

namespace tdo {

/// Applies F_I to every table entry; entries with a Laurent exponent in the
/// reflected slot (e_n and the r_+ basis) are dropped.
inline Realization transport_realization(const Realization& r, const ReflectionSpec& spec = {})
{
    validate_reflection(spec, r.n);
    Realization out;
    out.n = r.n;
    out.twist = r.twist;
    out.rplus_sign = r.rplus_sign;
    out.transported = true;
    for (const auto& [name, el] : r.table) {
        if (el.has_negative_exponent())
            continue;
        out.table.emplace(name, fourier_I(el, spec));
    }
    return out;
}

struct GeneratorCorrespondence {
    std::string source_label;
    std::string image;        // F_I(source) as text
    std::string native_label; // matching monomial generator of WeightedY
    Rational sign = 1;        // F_I(source) = sign * native + constant
    Rational constant = 0;
    bool matched = false;
};

struct MonomialVerdict {
    WeylKey monomial;
    std::string image;
    bool member = false;
};

struct RingIsoReport {
    std::size_t n = 2;
    std::int64_t twist = 0;        // resolution side
    std::int64_t target_twist = 0; // weighted side, twist - 2
    std::int64_t max_order = 0;
    std::vector<MonomialVerdict> forward;
    std::vector<MonomialVerdict> backward;
    std::vector<GeneratorCorrespondence> correspondence;
    std::size_t counts_source[3] = {0, 0, 0};
    std::size_t counts_native[3] = {0, 0, 0};
    bool forward_ok = false;
    bool backward_ok = false;
    bool generators_ok = false;
    bool euler_ok = false; // F_I(euler relation) is the weighted Euler relation of twist l-2

    bool passed() const { return forward_ok && backward_ok && generators_ok && euler_ok; }
};

/// Monomial generators of the weighted ring: Q_iP_j, Q_{n+1}P_{n+1}; Q_iQ_jP_{n+1}; P_iP_jQ_{n+1}.
inline GeneratorSet native_weighted_generators(std::size_t n)
{
    GeneratorSet g;
    const auto Q = [n](std::size_t i) { return WeylElement::q(n, i); };
    const auto P = [n](std::size_t i) { return WeylElement::p(n, i); };
    const std::string last = std::to_string(n + 1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            g.degree0.push_back({"Q" + std::to_string(i) + "P" + std::to_string(j), Q(i) * P(j)});
    g.degree0.push_back({"Q" + last + "P" + last, Q(n + 1) * P(n + 1)});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            g.degree_plus.push_back({"Q" + std::to_string(i) + "Q" + std::to_string(j) + "P" + last,
                                     Q(i) * Q(j) * P(n + 1)});
            g.degree_minus.push_back({"P" + std::to_string(i) + "P" + std::to_string(j) + "Q" + last,
                                      P(i) * P(j) * Q(n + 1)});
        }
    return g;
}

namespace detail {

/// c, d with a = c * b + d, d constant and c = +-1.
inline bool match_up_to_sign(const WeylElement& a, const WeylElement& b, Rational& sign, Rational& constant)
{
    for (int s : {1, -1}) {
        const WeylElement d = a - Rational(s) * b;
        if (d.size() > 1)
            continue;
        const MultiIndex zero(a.rank() + 1);
        const Rational c = d.coefficient(zero, zero);
        if (d == WeylElement::constant(a.rank(), c)) {
            sign = s;
            constant = c;
            return true;
        }
    }
    return false;
}

} // namespace detail

inline RingIsoReport verify_ring_iso(std::size_t n, std::int64_t ell, std::int64_t max_order)
{
    if (ell % 2 != 0)
        throw PreconditionError("ring isomorphism requires an even twist, got " + std::to_string(ell));
    RingIsoReport rep;
    rep.n = n;
    rep.twist = ell;
    rep.target_twist = ell - 2;
    rep.max_order = max_order;
    const RingSpec src = RingSpec::resolution_x(n, ell);
    const RingSpec dst = RingSpec::weighted_y(n, ell - 2);

    rep.forward_ok = true;
    for (const auto& k : admissible_monomials(src, max_order)) {
        const WeylElement img = fourier_I(WeylElement::monomial(n, k.mu, k.nu));
        const bool ok = is_member(img, dst);
        rep.forward.push_back({k, to_string(img), ok});
        rep.forward_ok = rep.forward_ok && ok;
    }
    rep.backward_ok = true;
    for (const auto& k : admissible_monomials(dst, max_order)) {
        const WeylElement img = fourier_I_inverse(WeylElement::monomial(n, k.mu, k.nu));
        const bool ok = is_member(img, src);
        rep.backward.push_back({k, to_string(img), ok});
        rep.backward_ok = rep.backward_ok && ok;
    }

    const GeneratorSet gs = generators(src);
    const GeneratorSet gn = native_weighted_generators(n);
    const std::vector<LabeledElement>* src_lists[3] = {&gs.degree0, &gs.degree_plus, &gs.degree_minus};
    const std::vector<LabeledElement>* nat_lists[3] = {&gn.degree0, &gn.degree_plus, &gn.degree_minus};
    rep.generators_ok = true;
    for (int d = 0; d < 3; ++d) {
        rep.counts_source[d] = src_lists[d]->size();
        rep.counts_native[d] = nat_lists[d]->size();
        if (rep.counts_source[d] != rep.counts_native[d])
            rep.generators_ok = false;
        std::vector<bool> used(nat_lists[d]->size(), false);
        for (const auto& g : *src_lists[d]) {
            GeneratorCorrespondence c;
            c.source_label = g.label;
            const WeylElement img = fourier_I(g.element);
            c.image = to_string(img);
            for (std::size_t k = 0; k < nat_lists[d]->size(); ++k) {
                if (used[k])
                    continue;
                if (detail::match_up_to_sign(img, (*nat_lists[d])[k].element, c.sign, c.constant)) {
                    used[k] = true;
                    c.native_label = (*nat_lists[d])[k].label;
                    c.matched = true;
                    break;
                }
            }
            rep.generators_ok = rep.generators_ok && c.matched;
            rep.correspondence.push_back(std::move(c));
        }
    }

    WeylElement y_euler(n);
    for (std::size_t i = 1; i <= n; ++i)
        y_euler += WeylElement::q(n, i) * WeylElement::p(n, i);
    y_euler += Rational(2) * (WeylElement::q(n, n + 1) * WeylElement::p(n, n + 1));
    y_euler -= WeylElement::constant(n, Rational(ell - 2));
    rep.euler_ok = fourier_I(gs.euler_relation) == y_euler;
    return rep;
}

/// phi_I(l D_0) as coefficients on D'_1..D'_{n+1}, and its class in
/// A_{n-1}(Y) = Z D'_1 (D'_i ~ D'_1 for i <= n, D'_{n+1} ~ 2 D'_1).
struct DivisorImage {
    std::vector<std::int64_t> coefficients;
    std::int64_t divisor_class = 0;
    bool cartier = false; // invertible iff the class is even
};

inline DivisorImage phi_I(std::size_t n, std::int64_t ell)
{
    DivisorImage d;
    d.coefficients.assign(n + 1, 0);
    d.coefficients[0] = ell;
    d.coefficients[n] = -1;
    for (std::size_t i = 0; i < n; ++i)
        d.divisor_class = checked_add(d.divisor_class, d.coefficients[i]);
    d.divisor_class = checked_add(d.divisor_class, checked_add(d.coefficients[n], d.coefficients[n]));
    d.cartier = d.divisor_class % 2 == 0;
    return d;
}

} // namespace tdo
