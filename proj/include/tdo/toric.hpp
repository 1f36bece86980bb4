#pragma once

// The three operator rings as subrings of the Weyl algebra:
//   SingularX      -- regular operators on the singular cone (Laurent in Q_{n+1})
//   ResolutionX(l) -- operators twisted by O(l D_0) on the resolution
//   WeightedY(l)   -- operators twisted by O(l) on P^n(1,...,1,2)
// Each ring is described extensionally: a sign condition on exponents plus a
// torus-homogeneity condition on tau = mu - nu, together with a generator list.

#include "tdo/fourier.hpp"
#include "tdo/linalg.hpp"
#include "tdo/weyl.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace tdo {

enum class RingKind { SingularX, ResolutionX, WeightedY };

inline std::string to_string(RingKind k)
{
    switch (k) {
    case RingKind::SingularX: return "SingularX";
    case RingKind::ResolutionX: return "ResolutionX";
    case RingKind::WeightedY: return "WeightedY";
    }
    return "?";
}

struct RingSpec {
    RingKind kind = RingKind::ResolutionX;
    std::size_t n = 2;
    std::int64_t twist = 0;
    bool laurent_last = false;

    static RingSpec singular_x(std::size_t n) { return {RingKind::SingularX, n, 0, true}; }
    static RingSpec resolution_x(std::size_t n, std::int64_t ell) { return {RingKind::ResolutionX, n, ell, false}; }
    static RingSpec weighted_y(std::size_t n, std::int64_t ell)
    {
        if (ell % 2 != 0)
            throw PreconditionError("twist on the weighted projective space must be even");
        return {RingKind::WeightedY, n, ell, false};
    }

    /// sum tau' -/+ 2 tau_{n+1}; vanishes on members.
    std::int64_t homogeneity(const MultiIndex& tau) const
    {
        const std::int64_t last2 = checked_add(tau.last(), tau.last());
        return kind == RingKind::WeightedY ? checked_add(tau.front_sum(), last2)
                                           : checked_sub(tau.front_sum(), last2);
    }
};

inline bool is_member(const MultiIndex& mu, const MultiIndex& nu, const RingSpec& r)
{
    if (mu.size() != r.n + 1 || nu.size() != r.n + 1)
        throw StructuralError("ring/term rank mismatch");
    if (!nu.all_nonnegative())
        return false;
    for (std::size_t k = 0; k < r.n; ++k)
        if (mu[k] < 0)
            return false;
    if (mu.last() < 0 && r.kind != RingKind::SingularX)
        return false;
    return r.homogeneity(mu - nu) == 0;
}

inline bool is_member(const WeylTerm& t, const RingSpec& r) { return is_member(t.mu, t.nu, r); }

inline bool is_member(const WeylElement& a, const RingSpec& r)
{
    if (a.rank() != r.n)
        throw StructuralError("ring/element rank mismatch");
    for (const auto& [k, c] : a.terms())
        if (!is_member(k.mu, k.nu, r))
            return false;
    return true;
}

struct LabeledElement {
    std::string label;
    WeylElement element;
};

struct GeneratorSet {
    std::vector<LabeledElement> degree0;
    std::vector<LabeledElement> degree_plus;  // degree +3 on the resolution side
    std::vector<LabeledElement> degree_minus; // degree -3 on the resolution side
    WeylElement euler_relation;

    std::vector<LabeledElement> all() const
    {
        std::vector<LabeledElement> out = degree0;
        out.insert(out.end(), degree_plus.begin(), degree_plus.end());
        out.insert(out.end(), degree_minus.begin(), degree_minus.end());
        return out;
    }
};

namespace detail {

inline std::string idx(std::size_t i, std::size_t j) { return std::to_string(i) + "_" + std::to_string(j); }

inline WeylElement euler_operator(std::size_t n, std::int64_t last_weight)
{
    WeylElement e(n);
    for (std::size_t i = 1; i <= n; ++i)
        e += WeylElement::q(n, i) * WeylElement::p(n, i);
    e += Rational(last_weight) * (WeylElement::q(n, n + 1) * WeylElement::p(n, n + 1));
    return e;
}

inline GeneratorSet cone_generators(std::size_t n, bool laurent)
{
    GeneratorSet g;
    const auto Q = [n](std::size_t i, std::int64_t k = 1) { return WeylElement::q(n, i, k); };
    const auto P = [n](std::size_t i, std::int64_t k = 1) { return WeylElement::p(n, i, k); };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            g.degree0.push_back({"Q" + std::to_string(i) + "P" + std::to_string(j), Q(i) * P(j)});
    g.degree0.push_back({"Q" + std::to_string(n + 1) + "P" + std::to_string(n + 1), Q(n + 1) * P(n + 1)});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            g.degree_plus.push_back({"Q" + std::to_string(i) + "Q" + std::to_string(j) + "Q" + std::to_string(n + 1),
                                     Q(i) * Q(j) * Q(n + 1)});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            if (laurent)
                g.degree_minus.push_back(
                    {"P" + std::to_string(i) + "P" + std::to_string(j) + "Q" + std::to_string(n + 1) + "^-1",
                     Q(n + 1, -1) * P(i) * P(j)});
            else
                g.degree_minus.push_back({"P" + std::to_string(i) + "P" + std::to_string(j) + "P" + std::to_string(n + 1),
                                          P(i) * P(j) * P(n + 1)});
        }
    return g;
}

} // namespace detail

/// Generator lists. Symmetric index pairs are listed once (i <= j) for the
/// degree +-3 families. WeightedY(l) gets the Fourier images of ResolutionX(l+2).
inline GeneratorSet generators(const RingSpec& r)
{
    const std::size_t n = r.n;
    switch (r.kind) {
    case RingKind::SingularX: {
        GeneratorSet g = detail::cone_generators(n, true);
        g.euler_relation = detail::euler_operator(n, -2);
        return g;
    }
    case RingKind::ResolutionX: {
        GeneratorSet g = detail::cone_generators(n, false);
        g.euler_relation = detail::euler_operator(n, -2) - Rational(r.twist);
        return g;
    }
    case RingKind::WeightedY: {
        GeneratorSet src = generators(RingSpec::resolution_x(n, r.twist + 2));
        GeneratorSet g;
        auto map_list = [](const std::vector<LabeledElement>& in) {
            std::vector<LabeledElement> out;
            for (const auto& le : in)
                out.push_back({"F(" + le.label + ")", fourier_I(le.element)});
            return out;
        };
        g.degree0 = map_list(src.degree0);
        g.degree_plus = map_list(src.degree_plus);
        g.degree_minus = map_list(src.degree_minus);
        g.euler_relation = fourier_I(src.euler_relation);
        return g;
    }
    }
    throw StructuralError("unknown ring kind");
}

/// All monomials Q^mu P^nu of the ring with filtration order <= max_order,
/// in canonical (mu, nu) order.
inline std::vector<WeylKey> admissible_monomials(const RingSpec& r, std::int64_t max_order)
{
    const std::size_t len = r.n + 1;
    std::vector<WeylKey> out;
    MultiIndex mu(len), nu(len);
    // slots 0..len-1 are mu, len..2len-1 are nu
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t slot, std::int64_t budget) {
        if (slot == 2 * len) {
            if (is_member(mu, nu, r))
                out.push_back({mu, nu});
            return;
        }
        const bool is_mu = slot < len;
        const std::size_t k = is_mu ? slot : slot - len;
        MultiIndex& target = is_mu ? mu : nu;
        const bool may_be_negative = is_mu && k == r.n && r.kind == RingKind::SingularX;
        for (std::int64_t v = may_be_negative ? -budget : 0; v <= budget; ++v) {
            target[k] = v;
            rec(slot + 1, budget - (v < 0 ? -v : v));
        }
        target[k] = 0;
    };
    rec(0, max_order);
    std::sort(out.begin(), out.end());
    return out;
}

struct SpanEntry {
    WeylKey monomial;
    std::int64_t order = 0;
    bool spanned = false;
    int min_word_len = -1; // shortest word length whose span contains it, -1 if none
    /// monomial = sum coeff * product(word), words as generator indices into SpanReport::generator_labels.
    std::vector<std::pair<std::vector<std::size_t>, Rational>> certificate;
};

struct SpanReport {
    RingSpec ring;
    std::int64_t max_order = 0;
    std::size_t max_word_len = 0;
    std::vector<std::string> generator_labels;
    std::size_t words_considered = 0;
    std::size_t words_kept = 0;
    std::vector<SpanEntry> entries;
    /// per order k = 0..max_order: minimal word length spanning every admissible
    /// monomial of order <= k, or -1.
    std::vector<int> min_len_per_order;
    bool all_spanned = false;
};

inline WeylElement word_product(const std::vector<LabeledElement>& gens, const std::vector<std::size_t>& word,
                                std::size_t n)
{
    WeylElement r = WeylElement::constant(n, 1);
    for (auto g : word)
        r = r * gens.at(g).element;
    return r;
}

/// Enumerates generator words of length <= max_word_len whose product stays
/// within filtration order max_order, and decides by exact row reduction
/// whether every admissible monomial of that order lies in their span.
inline SpanReport span_oracle(const RingSpec& r, std::int64_t max_order, std::size_t max_word_len)
{
    SpanReport rep;
    rep.ring = r;
    rep.max_order = max_order;
    rep.max_word_len = max_word_len;
    const std::vector<LabeledElement> gens = generators(r).all();
    for (const auto& g : gens)
        rep.generator_labels.push_back(g.label);

    const auto targets = admissible_monomials(r, max_order);
    for (const auto& t : targets) {
        SpanEntry e;
        e.monomial = t;
        e.order = filtration_order(t.mu, t.nu);
        rep.entries.push_back(std::move(e));
    }

    // Polynomial rings have multiplicative order, so prefixes above the bound can be pruned.
    const bool prunable = !r.laurent_last;
    Echelon<WeylKey> ech;
    std::vector<std::vector<std::size_t>> kept_words;

    auto to_sparse = [](const WeylElement& a) {
        SparseVec<WeylKey> v;
        for (const auto& [k, c] : a.terms())
            v.emplace(k, c);
        return v;
    };

    std::vector<std::pair<std::vector<std::size_t>, WeylElement>> layer;
    layer.push_back({{}, WeylElement::constant(r.n, 1)});
    for (std::size_t len = 0; len <= max_word_len; ++len) {
        if (len > 0) {
            std::vector<std::pair<std::vector<std::size_t>, WeylElement>> next;
            for (const auto& [word, prod] : layer)
                for (std::size_t g = 0; g < gens.size(); ++g) {
                    WeylElement p = prod * gens[g].element;
                    ++rep.words_considered;
                    if (prunable && p.order() > max_order)
                        continue;
                    auto w = word;
                    w.push_back(g);
                    next.push_back({std::move(w), std::move(p)});
                }
            layer = std::move(next);
        } else {
            ++rep.words_considered;
        }
        for (const auto& [word, prod] : layer) {
            if (prod.is_zero() || prod.order() > max_order)
                continue;
            kept_words.push_back(word);
            ech.insert(to_sparse(prod));
        }
        for (auto& e : rep.entries) {
            if (e.min_word_len >= 0)
                continue;
            SparseVec<WeylKey> v;
            v.emplace(e.monomial, Rational(1));
            if (ech.contains(v))
                e.min_word_len = static_cast<int>(len);
        }
    }
    rep.words_kept = kept_words.size();

    rep.all_spanned = true;
    for (auto& e : rep.entries) {
        SparseVec<WeylKey> v;
        v.emplace(e.monomial, Rational(1));
        auto cert = ech.certificate(v);
        e.spanned = cert.has_value();
        rep.all_spanned = rep.all_spanned && e.spanned;
        if (cert)
            for (const auto& [id, c] : *cert)
                e.certificate.push_back({kept_words.at(id), c});
    }
    for (std::int64_t k = 0; k <= max_order; ++k) {
        int worst = 0;
        for (const auto& e : rep.entries)
            if (e.order <= k)
                worst = (e.min_word_len < 0 || worst < 0) ? -1 : std::max(worst, e.min_word_len);
        rep.min_len_per_order.push_back(worst);
    }
    return rep;
}

/// Recomputes sum coeff * product(word) for a certificate.
inline WeylElement evaluate_certificate(const SpanReport& rep, const SpanEntry& e)
{
    const std::vector<LabeledElement> gens = generators(rep.ring).all();
    WeylElement sum(rep.ring.n, rep.ring.laurent_last);
    for (const auto& [word, c] : e.certificate)
        sum += c * word_product(gens, word, rep.ring.n);
    return sum;
}

} // namespace tdo
