#pragma once

// Cohomology modules as weight-graded spaces of Laurent monomials with the
// action of A_l (resolution) or of the transported A_{l+2} (weighted
// projective space). Top cohomology uses Cech truncation: monomials leaving
// the support are coboundaries and map to zero.

#include "tdo/lie.hpp"
#include "tdo/linalg.hpp"
#include "tdo/ring_iso.hpp"
#include "tdo/toric.hpp"
#include "tdo/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tdo {

enum class ModuleKind { H0_ResX, Htop_ResX, H0_Y, Htop_Y };

inline std::string to_string(ModuleKind k)
{
    switch (k) {
    case ModuleKind::H0_ResX: return "H0_ResX";
    case ModuleKind::Htop_ResX: return "Htop_ResX";
    case ModuleKind::H0_Y: return "H0_Y";
    case ModuleKind::Htop_Y: return "Htop_Y";
    }
    return "?";
}

inline bool on_weighted_side(ModuleKind k) { return k == ModuleKind::H0_Y || k == ModuleKind::Htop_Y; }
inline bool is_top_degree(ModuleKind k) { return k == ModuleKind::Htop_ResX || k == ModuleKind::Htop_Y; }

struct SupportPredicate {
    ModuleKind kind = ModuleKind::H0_ResX;
    std::size_t n = 2;
    std::int64_t twist = 0;

    /// sum mu' - 2 mu_{n+1} (resolution) or sum mu' + 2 mu_{n+1} (weighted).
    std::int64_t character(const MultiIndex& mu) const
    {
        const std::int64_t last2 = checked_add(mu.last(), mu.last());
        return on_weighted_side(kind) ? checked_add(mu.front_sum(), last2) : checked_sub(mu.front_sum(), last2);
    }

    bool contains(const MultiIndex& mu) const
    {
        if (mu.size() != n + 1)
            return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (is_top_degree(kind) ? mu[i] >= 0 : mu[i] < 0)
                return false;
        }
        const bool last_negative = kind == ModuleKind::Htop_Y;
        if (last_negative ? mu.last() >= 0 : mu.last() < 0)
            return false;
        return character(mu) == twist;
    }

    /// z_l eigenvalue: -mu_{n+1} on the resolution, mu_{n+1} + 1 on the weighted side.
    std::int64_t weight(const MultiIndex& mu) const
    {
        return on_weighted_side(kind) ? checked_add(mu.last(), 1) : -mu.last();
    }

    /// mu_{n+1} carrying the given weight.
    std::int64_t last_exponent(std::int64_t lambda) const
    {
        return on_weighted_side(kind) ? checked_sub(lambda, 1) : -lambda;
    }
};

struct WeightRange {
    bool empty = true;
    bool bounded_below = true;
    std::int64_t lo = 0; // meaningful only when bounded_below
    std::int64_t hi = 0;
};

/// The weights that occur, read off from the sign conditions.
inline WeightRange natural_weights(const SupportPredicate& s)
{
    const std::int64_t n = static_cast<std::int64_t>(s.n);
    const std::int64_t l = s.twist;
    WeightRange r;
    switch (s.kind) {
    case ModuleKind::H0_ResX: // sum mu' = l - 2 lambda >= 0, lambda <= 0
        r.empty = false;
        r.bounded_below = false;
        r.hi = std::min<std::int64_t>(0, floor_div(l, 2));
        break;
    case ModuleKind::Htop_ResX: // l - 2 lambda <= -n, lambda <= 0
        r.lo = ceil_div(l + n, 2);
        r.hi = 0;
        r.empty = r.lo > r.hi;
        break;
    case ModuleKind::H0_Y: // l - 2 (lambda - 1) >= 0, lambda >= 1
        r.lo = 1;
        r.hi = floor_div(l, 2) + 1;
        r.empty = r.lo > r.hi;
        break;
    case ModuleKind::Htop_Y: // l - 2 (lambda - 1) <= -n, lambda <= 0
        r.lo = ceil_div(l + n, 2) + 1;
        r.hi = 0;
        r.empty = r.lo > r.hi;
        break;
    }
    return r;
}

namespace detail {

/// All n-tuples of nonnegative integers with the given sum, in lexicographic order.
inline void compositions(std::size_t n, std::int64_t total, const std::function<void(const std::vector<std::int64_t>&)>& f)
{
    if (total < 0)
        return;
    std::vector<std::int64_t> a(n, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i + 1 == n) {
            a[i] = left;
            f(a);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            a[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (n == 0) {
        if (total == 0)
            f(a);
        return;
    }
    rec(0, total);
}

} // namespace detail

/// Basis monomials of M^lambda, sorted.
inline std::vector<MultiIndex> weight_space_basis(const SupportPredicate& s, std::int64_t lambda)
{
    std::vector<MultiIndex> out;
    const std::int64_t last = s.last_exponent(lambda);
    const std::int64_t front = on_weighted_side(s.kind) ? checked_sub(s.twist, checked_add(last, last))
                                                        : checked_add(s.twist, checked_add(last, last));
    const bool negative = is_top_degree(s.kind);
    // negative exponents mu_i = -1 - a_i with a_i >= 0
    const std::int64_t total = negative ? -front - static_cast<std::int64_t>(s.n) : front;
    detail::compositions(s.n, total, [&](const std::vector<std::int64_t>& a) {
        MultiIndex mu(s.n + 1);
        for (std::size_t i = 0; i < s.n; ++i)
            mu[i] = negative ? -1 - a[i] : a[i];
        mu[s.n] = last;
        if (s.contains(mu))
            out.push_back(mu);
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t weight_space_dimension(ModuleKind kind, std::size_t n, std::int64_t ell, std::int64_t lambda)
{
    return weight_space_basis({kind, n, ell}, lambda).size();
}

/// Total dimension of a finite module (throws for H0 on the resolution).
inline std::size_t total_dimension(ModuleKind kind, std::size_t n, std::int64_t ell)
{
    const SupportPredicate s{kind, n, ell};
    const WeightRange r = natural_weights(s);
    if (!r.bounded_below)
        throw PreconditionError("module is infinite-dimensional");
    std::size_t d = 0;
    if (!r.empty)
        for (std::int64_t l = r.lo; l <= r.hi; ++l)
            d += weight_space_basis(s, l).size();
    return d;
}

struct Window {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

struct WeightModule {
    SupportPredicate support;
    /// A_l realization, or the F_I transport of the A_{l+2} realization for Y.
    Realization realization;
    std::vector<AlgebraGenerator> action;
    WeightRange natural;
    Window window;       // weights actually enumerated
    bool empty = true;   // nothing in the window
    bool finite = true;  // the whole module (not just the window) is finite
    bool cut_below = false; // window stops above the lowest weight
    bool cut_above = false; // window stops below the top weight
    std::map<std::int64_t, std::vector<MultiIndex>> spaces;

    std::size_t n() const { return support.n; }
    std::int64_t twist() const { return support.twist; }

    bool trusted(std::int64_t lambda) const { return !(cut_below && lambda == window.lo); }

    std::size_t dimension() const
    {
        std::size_t d = 0;
        for (const auto& [l, b] : spaces)
            d += b.size();
        return d;
    }

    const std::vector<MultiIndex>& basis(std::int64_t lambda) const
    {
        static const std::vector<MultiIndex> none;
        auto it = spaces.find(lambda);
        return it == spaces.end() ? none : it->second;
    }

    bool in_window(const MultiIndex& mu) const
    {
        if (!support.contains(mu))
            return false;
        const std::int64_t l = support.weight(mu);
        return l >= window.lo && l <= window.hi;
    }

    ModuleVector act(const WeylElement& op, const ModuleVector& v) const { return apply(op, v, support); }
    ModuleVector act(const std::string& symbol, const ModuleVector& v) const
    {
        return act(realization.at(symbol), v);
    }

    /// The raising generators r_+ z_l (or their images).
    std::vector<WeylElement> raising() const
    {
        std::vector<WeylElement> out;
        for (std::size_t i = 1; i <= n(); ++i)
            for (std::size_t j = i; j <= n(); ++j)
                out.push_back(realization.at(sym::aplus(i, j)));
        return out;
    }

    std::vector<WeylElement> sl_raising() const
    {
        std::vector<WeylElement> out;
        for (std::size_t i = 1; i < n(); ++i)
            out.push_back(realization.at(sym::e(i)));
        return out;
    }
};

/// Builds the module; the window defaults to the full range for finite modules
/// and to the top six weights for H0 on the resolution. An explicit window is
/// intersected with the natural range.
inline WeightModule build_module(ModuleKind kind, std::size_t n, std::int64_t ell,
                                 std::optional<Window> window = std::nullopt)
{
    if (n < 2)
        throw PreconditionError("rank n must be at least 2");
    if (on_weighted_side(kind) && ell % 2 != 0)
        throw PreconditionError("modules on the weighted projective space need an even twist, got " +
                                std::to_string(ell));
    if (window && window->lo > window->hi)
        throw PreconditionError("empty window");
    WeightModule m;
    m.support = {kind, n, ell};
    if (on_weighted_side(kind))
        m.realization = transport_realization(build_realization(n, ell + 2));
    else
        m.realization = build_realization(n, ell);
    m.action = a_ell_generating_set(m.realization);
    m.natural = natural_weights(m.support);
    m.finite = m.natural.bounded_below;
    if (m.natural.empty) {
        m.window = window.value_or(Window{0, 0});
        return m;
    }
    Window w;
    w.hi = m.natural.hi;
    w.lo = m.natural.bounded_below ? m.natural.lo : m.natural.hi - 5;
    if (window) {
        w.lo = m.natural.bounded_below ? std::max(m.natural.lo, window->lo) : window->lo;
        w.hi = std::min(w.hi, window->hi);
    }
    m.window = w;
    m.cut_below = !m.natural.bounded_below || w.lo > m.natural.lo;
    m.cut_above = w.hi < m.natural.hi;
    for (std::int64_t l = w.lo; l <= w.hi; ++l) {
        auto b = weight_space_basis(m.support, l);
        if (!b.empty())
            m.spaces.emplace(l, std::move(b));
    }
    m.empty = m.spaces.empty();
    return m;
}

// ---------------------------------------------------------------------------
// Linear algebra on a weight space.

using ImageKey = std::pair<std::size_t, MultiIndex>;

/// Joint kernel of the given operators on M^lambda, as vectors in the monomial basis.
inline std::vector<ModuleVector> joint_kernel(const WeightModule& m, std::int64_t lambda,
                                              const std::vector<WeylElement>& ops)
{
    const auto& basis = m.basis(lambda);
    std::vector<SparseVec<ImageKey>> images;
    images.reserve(basis.size());
    for (const auto& mu : basis) {
        SparseVec<ImageKey> img;
        const ModuleVector v = ModuleVector::monomial(mu);
        for (std::size_t k = 0; k < ops.size(); ++k) {
            const ModuleVector w = m.act(ops[k], v);
            for (const auto& [e, c] : w.coeffs())
                img.emplace(ImageKey{k, e}, c);
        }
        images.push_back(std::move(img));
    }
    std::vector<ModuleVector> out;
    for (const auto& rel : kernel(images)) {
        ModuleVector v(m.n());
        for (const auto& [i, c] : rel)
            v.add(basis.at(i), c);
        out.push_back(std::move(v));
    }
    return out;
}

/// c with op v = c v, if v is an eigenvector.
inline std::optional<Rational> eigenvalue(const WeightModule& m, const WeylElement& op, const ModuleVector& v)
{
    if (v.is_zero())
        return std::nullopt;
    const ModuleVector w = m.act(op, v);
    const auto& [e0, c0] = *v.coeffs().begin();
    const Rational c = w.coefficient(e0) / c0;
    if (w == c * v)
        return c;
    return std::nullopt;
}

/// (h_1, ..., h_{n-1}) eigenvalues; nullopt if v is not a joint eigenvector.
inline std::optional<std::vector<Rational>> sl_profile(const WeightModule& m, const ModuleVector& v)
{
    std::vector<Rational> p;
    for (std::size_t i = 1; i < m.n(); ++i) {
        auto c = eigenvalue(m, m.realization.at(sym::h(i)), v);
        if (!c)
            return std::nullopt;
        p.push_back(*c);
    }
    return p;
}

/// (h_1, ..., h_n) eigenvalues, i.e. the sp_2n weight in fundamental weights.
inline std::optional<std::vector<Rational>> sp_profile(const WeightModule& m, const ModuleVector& v)
{
    std::vector<Rational> p;
    for (std::size_t i = 1; i <= m.n(); ++i) {
        if (!m.realization.has(sym::h(i)))
            return std::nullopt;
        auto c = eigenvalue(m, m.realization.at(sym::h(i)), v);
        if (!c)
            return std::nullopt;
        p.push_back(*c);
    }
    return p;
}

inline std::string weight_label(const std::vector<Rational>& profile)
{
    std::string s;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += to_string(profile[i]) + " w" + std::to_string(i + 1);
    }
    return "L(" + (s.empty() ? std::string("0") : s) + ")";
}

/// k if the profile is k w_i (k >= 0 integral); i is 1-based.
inline std::optional<std::int64_t> multiple_of_fundamental(const std::vector<Rational>& profile, std::size_t i)
{
    for (std::size_t j = 0; j < profile.size(); ++j) {
        if (j + 1 == i)
            continue;
        if (profile[j] != 0)
            return std::nullopt;
    }
    const Rational k = profile.at(i - 1);
    if (k.get_den() != 1 || k < 0)
        return std::nullopt;
    return k.get_num().get_si();
}

// ---------------------------------------------------------------------------
// Decomposition.

struct WeightEntry {
    std::int64_t weight = 0;
    std::size_t dim = 0;
    bool trusted = true;
    bool z_consistent = false; // z_l acts by the weight on every basis monomial
    bool shift_law = false;    // every generator moves M^lambda into one weight space
    std::vector<ModuleVector> singular;
    std::optional<MultiIndex> highest_monomial;
    std::vector<Rational> profile; // sl_n profile of the singular line
    std::string label;             // "ambiguous" unless one singular line
    bool identified = false;       // one singular line whose binomial dimension matches
    std::size_t primitive_dim = 0;
    std::vector<ModuleVector> primitive;
};

struct DecompositionReport {
    ModuleKind kind = ModuleKind::H0_ResX;
    std::size_t n = 2;
    std::int64_t twist = 0;
    Window window;
    bool finite = true;
    bool empty = true;
    std::vector<WeightEntry> weights; // descending weight
    std::vector<std::int64_t> primitive_weights;
    bool irreducible = false;
    bool z_consistent = false;
    bool shift_law = false;

    const WeightEntry* at(std::int64_t lambda) const
    {
        for (const auto& w : weights)
            if (w.weight == lambda)
                return &w;
        return nullptr;
    }
};

inline bool check_shift_law(const WeightModule& m, std::int64_t lambda)
{
    for (const auto& mu : m.basis(lambda)) {
        const ModuleVector v = ModuleVector::monomial(mu);
        for (const auto& g : m.action) {
            const std::int64_t target = lambda + g.weight_shift;
            const ModuleVector w = m.act(g.element, v);
            for (const auto& [e, c] : w.coeffs())
                if (m.support.weight(e) != target)
                    return false;
        }
    }
    return true;
}

/// Dimensions, z_l consistency, shift law and sl_n identification per weight.
inline DecompositionReport weight_decompose(const WeightModule& m)
{
    DecompositionReport rep;
    rep.kind = m.support.kind;
    rep.n = m.n();
    rep.twist = m.twist();
    rep.window = m.window;
    rep.finite = m.finite;
    rep.empty = m.empty;
    rep.z_consistent = true;
    rep.shift_law = true;
    const WeylElement& zl = m.realization.at(sym::z_ell);
    const auto e_ops = m.sl_raising();
    for (auto it = m.spaces.rbegin(); it != m.spaces.rend(); ++it) {
        WeightEntry w;
        w.weight = it->first;
        w.dim = it->second.size();
        w.trusted = m.trusted(w.weight);
        w.z_consistent = true;
        for (const auto& mu : it->second) {
            const ModuleVector v = ModuleVector::monomial(mu);
            if (!(m.act(zl, v) == Rational(w.weight) * v))
                w.z_consistent = false;
        }
        w.shift_law = check_shift_law(m, w.weight);
        w.singular = joint_kernel(m, w.weight, e_ops);
        w.label = "ambiguous";
        if (w.singular.size() == 1) {
            const ModuleVector& s = w.singular.front();
            if (s.size() == 1)
                w.highest_monomial = s.coeffs().begin()->first;
            if (auto p = sl_profile(m, s)) {
                w.profile = *p;
                w.label = weight_label(w.profile);
                for (std::size_t i : {std::size_t{1}, m.n() - 1}) {
                    if (auto k = multiple_of_fundamental(w.profile, i)) {
                        const auto nn = static_cast<std::int64_t>(m.n());
                        if (binomial(nn - 1 + *k, nn - 1) == Rational(static_cast<long>(w.dim)))
                            w.identified = true;
                    }
                }
            }
        }
        rep.z_consistent = rep.z_consistent && w.z_consistent;
        rep.shift_law = rep.shift_law && w.shift_law;
        rep.weights.push_back(std::move(w));
    }
    return rep;
}

struct PrimitiveSpace {
    std::int64_t weight = 0;
    bool trusted = true;
    std::vector<ModuleVector> basis;
};

/// Per weight, the joint kernel of the raising generators r_+ z_l.
inline std::vector<PrimitiveSpace> find_primitive(const WeightModule& m)
{
    std::vector<PrimitiveSpace> out;
    const auto ops = m.raising();
    for (auto it = m.spaces.rbegin(); it != m.spaces.rend(); ++it) {
        auto k = joint_kernel(m, it->first, ops);
        if (!k.empty())
            out.push_back({it->first, m.trusted(it->first), std::move(k)});
    }
    return out;
}

/// One primitive subspace, at the top weight, with the top weight in the window.
/// A primitive subspace at an untrusted weight also counts against irreducibility.
inline bool check_irreducible(const WeightModule& m, const std::vector<PrimitiveSpace>& prim)
{
    if (m.empty || m.cut_above)
        return false;
    return prim.size() == 1 && prim.front().weight == m.natural.hi && prim.front().trusted;
}

inline bool check_irreducible(const WeightModule& m) { return check_irreducible(m, find_primitive(m)); }

/// Fills the primitive columns and the irreducibility verdict.
inline DecompositionReport decompose(const WeightModule& m)
{
    DecompositionReport rep = weight_decompose(m);
    const auto prim = find_primitive(m);
    for (const auto& p : prim) {
        rep.primitive_weights.push_back(p.weight);
        for (auto& w : rep.weights)
            if (w.weight == p.weight) {
                w.primitive_dim = p.basis.size();
                w.primitive = p.basis;
            }
    }
    rep.irreducible = check_irreducible(m, prim);
    return rep;
}

// ---------------------------------------------------------------------------
// Generation.

struct ClosureReport {
    MultiIndex generator;
    std::map<std::int64_t, std::size_t> reached; // weight -> dimension of the span there
    bool ok = false;
};

/// Span of the orbit of v under the generators, restricted to the window.
inline ClosureReport check_generation_closure(const WeightModule& m, const MultiIndex& v)
{
    if (!m.in_window(v))
        throw PreconditionError("generator " + v.str() + " is not a basis monomial of the module");
    ClosureReport rep;
    rep.generator = v;
    std::map<std::int64_t, Echelon<MultiIndex>> span;
    std::vector<std::pair<std::int64_t, ModuleVector>> queue;
    auto push = [&](const ModuleVector& w) {
        if (w.is_zero())
            return;
        const std::int64_t l = m.support.weight(w.coeffs().begin()->first);
        SparseVec<MultiIndex> sv(w.coeffs().begin(), w.coeffs().end());
        if (!span[l].insert(sv))
            queue.emplace_back(l, w);
    };
    push(ModuleVector::monomial(v));
    while (!queue.empty()) {
        auto [l, w] = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : m.action) {
            if (g.weight_shift == 0 && g.label == "1")
                continue;
            const std::int64_t target = l + g.weight_shift;
            if (target < m.window.lo || target > m.window.hi)
                continue;
            push(m.act(g.element, w));
        }
    }
    rep.ok = true;
    for (const auto& [l, b] : m.spaces) {
        rep.reached[l] = span.count(l) ? span[l].rank() : 0;
        if (m.trusted(l) && rep.reached[l] != b.size())
            rep.ok = false;
    }
    return rep;
}

enum class CertificateFamily {
    T0Pos,           // Q^mu P_n^l / l!
    T0Neg,           // Q^mu P_{n+1}^{-l/2} / (-l/2)!  or  Q^mu P_n P_{n+1}^{-(l-1)/2} / (-(l-1)/2)!
    THresDisplayed,  // D_mu with the published prefactor
    THresCorrected,  // D_mu normalized to map the generator onto Q^mu
    T0Weight,        // Q^mu P_{n+1}^{l/2} / (l/2)!
    TNWeight,        // the weighted analogue of the corrected D_mu
};

inline std::string to_string(CertificateFamily f)
{
    switch (f) {
    case CertificateFamily::T0Pos: return "t0pos";
    case CertificateFamily::T0Neg: return "t0neg";
    case CertificateFamily::THresDisplayed: return "thres-displayed";
    case CertificateFamily::THresCorrected: return "thres-corrected";
    case CertificateFamily::T0Weight: return "t0weight";
    case CertificateFamily::TNWeight: return "tnweight";
    }
    return "?";
}

inline ModuleKind certificate_module(CertificateFamily f)
{
    switch (f) {
    case CertificateFamily::T0Pos:
    case CertificateFamily::T0Neg: return ModuleKind::H0_ResX;
    case CertificateFamily::THresDisplayed:
    case CertificateFamily::THresCorrected: return ModuleKind::Htop_ResX;
    case CertificateFamily::T0Weight: return ModuleKind::H0_Y;
    case CertificateFamily::TNWeight: return ModuleKind::Htop_Y;
    }
    throw StructuralError("unknown certificate family");
}

/// The monomial the certificate operators start from.
inline MultiIndex certificate_generator(CertificateFamily f, std::size_t n, std::int64_t ell)
{
    MultiIndex g(n + 1);
    switch (f) {
    case CertificateFamily::T0Pos:
        g[n - 1] = ell;
        break;
    case CertificateFamily::T0Neg:
        if (ell % 2 == 0) {
            g[n] = -ell / 2;
        } else {
            g[n - 1] = 1;
            g[n] = -(ell - 1) / 2;
        }
        break;
    case CertificateFamily::THresDisplayed:
    case CertificateFamily::THresCorrected:
        for (std::size_t i = 1; i < n; ++i)
            g[i] = -1;
        g[0] = ell + static_cast<std::int64_t>(n) - 1;
        break;
    case CertificateFamily::T0Weight:
        g[n] = ell / 2;
        break;
    case CertificateFamily::TNWeight:
        for (std::size_t i = 1; i <= n; ++i)
            g[i] = -1;
        g[0] = ell + static_cast<std::int64_t>(n) + 1;
        break;
    }
    return g;
}

/// Published prefactor of D_mu:
///   (-1)^(sum mu_i + n) / ( prod_{i=0}^{-mu_1} (l+n-1-i) * prod_{j>=2} (-(mu_j+1))! ).
inline Rational thres_displayed_prefactor(std::size_t n, std::int64_t ell, const MultiIndex& mu)
{
    const std::int64_t nn = static_cast<std::int64_t>(n);
    Rational den = 1;
    for (std::int64_t i = 0; i <= -mu[0]; ++i)
        den *= Rational(ell + nn - 1 - i);
    for (std::size_t j = 1; j < n; ++j)
        den *= factorial(-(mu[j] + 1));
    if (den == 0)
        throw PreconditionError("vanishing prefactor denominator");
    const std::int64_t sign_exp = mu.front_sum() + nn;
    return Rational(sign_exp % 2 == 0 ? 1 : -1) / den;
}

/// Certificate operator sending the family's generator to (a multiple of) Q^mu.
inline WeylElement certificate_operator(CertificateFamily f, std::size_t n, std::int64_t ell, const MultiIndex& mu)
{
    const std::int64_t nn = static_cast<std::int64_t>(n);
    MultiIndex q = mu, p(n + 1);
    Rational c = 1;
    switch (f) {
    case CertificateFamily::T0Pos:
        p[n - 1] = ell;
        c = 1 / factorial(ell);
        break;
    case CertificateFamily::T0Neg:
        if (ell % 2 == 0) {
            p[n] = -ell / 2;
            c = 1 / factorial(-ell / 2);
        } else {
            p[n - 1] = 1;
            p[n] = -(ell - 1) / 2;
            c = 1 / factorial(-(ell - 1) / 2);
        }
        break;
    case CertificateFamily::T0Weight:
        p[n] = ell / 2;
        c = 1 / factorial(ell / 2);
        break;
    case CertificateFamily::THresDisplayed:
    case CertificateFamily::THresCorrected: {
        q = MultiIndex(n + 1);
        q[0] = -ell - nn;
        q[n] = mu[n];
        for (std::size_t j = 0; j < n; ++j)
            p[j] = -(mu[j] + 1);
        if (f == CertificateFamily::THresDisplayed) {
            c = thres_displayed_prefactor(n, ell, mu);
        } else {
            Rational d = falling(ell + nn - 1, p[0]);
            for (std::size_t j = 1; j < n; ++j)
                d *= falling(-1, p[j]);
            c = 1 / d;
        }
        break;
    }
    case CertificateFamily::TNWeight: {
        q = MultiIndex(n + 1);
        q[0] = -ell - nn - 2;
        for (std::size_t j = 0; j < n; ++j)
            p[j] = -(mu[j] + 1);
        p[n] = -(mu[n] + 1);
        Rational d = falling(ell + nn + 1, p[0]);
        for (std::size_t j = 1; j <= n; ++j)
            d *= falling(-1, p[j]);
        c = 1 / d;
        break;
    }
    }
    WeylElement op(n);
    op.add_term(c, q, p);
    return op;
}

struct CertificateCheck {
    MultiIndex target;
    std::string op;
    bool member = false;
    Rational scalar = 0; // D(generator) = scalar * Q^target
    bool ok = false;
};

struct CertificateReport {
    CertificateFamily family = CertificateFamily::T0Pos;
    MultiIndex generator;
    std::vector<CertificateCheck> checks;
    bool exact_normalization = true; // every scalar is 1
    bool ok = false;                 // every operator is a member and every scalar is nonzero
};

/// Certificate strategy: one explicit ring element per basis monomial in the window.
inline CertificateReport check_generation_certificate(const WeightModule& m, CertificateFamily f)
{
    if (certificate_module(f) != m.support.kind)
        throw PreconditionError("certificate family " + to_string(f) + " does not apply to " +
                                to_string(m.support.kind));
    CertificateReport rep;
    rep.family = f;
    const std::size_t n = m.n();
    const std::int64_t ell = m.twist();
    rep.generator = certificate_generator(f, n, ell);
    if (!m.support.contains(rep.generator))
        throw PreconditionError("generator " + rep.generator.str() + " is not in the module");
    const RingSpec ring = on_weighted_side(m.support.kind) ? RingSpec::weighted_y(n, ell) : RingSpec::resolution_x(n, ell);
    const ModuleVector g = ModuleVector::monomial(rep.generator);
    rep.ok = !m.empty;
    for (const auto& [l, basis] : m.spaces)
        for (const auto& mu : basis) {
            CertificateCheck c;
            c.target = mu;
            const WeylElement op = certificate_operator(f, n, ell, mu);
            c.op = to_string(op);
            c.member = is_member(op, ring);
            const ModuleVector img = m.act(op, g);
            c.scalar = img.coefficient(mu);
            c.ok = c.member && c.scalar != 0 && img == c.scalar * ModuleVector::monomial(mu);
            rep.exact_normalization = rep.exact_normalization && c.scalar == 1;
            rep.ok = rep.ok && c.ok;
            rep.checks.push_back(std::move(c));
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Lift to a g-module: x v := (1/lambda) (x z_l) v on M^lambda.

enum class LiftStatus { Lifted, NotApplicable, Failed };

inline std::string to_string(LiftStatus s)
{
    switch (s) {
    case LiftStatus::Lifted: return "lifted";
    case LiftStatus::NotApplicable: return "not-applicable";
    case LiftStatus::Failed: return "failed";
    }
    return "?";
}

enum class LiftMode {
    Strict,   // every weight must be nonzero
    Extended, // a zero top weight is allowed; r_+ acts by 0 there
};

struct LiftReport {
    LiftStatus status = LiftStatus::NotApplicable;
    LiftMode mode = LiftMode::Strict;
    std::string reason;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    /// lifted action agrees with the direct action of the Laurent r_+ elements
    bool matches_laurent_action = false;
    std::optional<ModuleVector> primitive;
    std::optional<std::vector<Rational>> sp_profile;
};

namespace detail {

inline ModuleVector lifted_rplus(const WeightModule& m, const WeylElement& x, const ModuleVector& v)
{
    if (v.is_zero())
        return ModuleVector(m.n());
    const std::int64_t l = m.support.weight(v.coeffs().begin()->first);
    if (l == 0)
        return ModuleVector(m.n());
    const WeylElement xz = x * m.realization.at(sym::z_ell);
    ModuleVector w = m.act(xz, v);
    return ratio(1, l) * w;
}

} // namespace detail

inline LiftReport lift_to_g(const WeightModule& m, LiftMode mode = LiftMode::Strict)
{
    LiftReport rep;
    rep.mode = mode;
    if (on_weighted_side(m.support.kind) || m.realization.transported) {
        rep.reason = "no Laurent r_+ on the weighted side";
        return rep;
    }
    if (m.empty) {
        rep.reason = "empty module";
        return rep;
    }
    const std::int64_t top = m.natural.hi;
    if (top > 0 || (top == 0 && mode == LiftMode::Strict)) {
        rep.reason = "weight " + std::to_string(top) + " occurs";
        return rep;
    }
    const std::size_t n = m.n();
    std::vector<std::string> ms, xs, ys;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            ms.push_back(sym::m(i, j));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            xs.push_back(sym::rplus(i, j));
            ys.push_back(sym::rminus(i, j));
        }
    const auto& R = m.realization;
    std::map<std::pair<std::string, std::string>, WeylElement> mx, xy;
    for (const auto& a : ms)
        for (const auto& x : xs)
            mx.emplace(std::make_pair(a, x), commutator(R.at(a), R.at(x)));
    for (const auto& x : xs)
        for (const auto& y : ys)
            xy.emplace(std::make_pair(x, y), commutator(R.at(x), R.at(y)));

    rep.matches_laurent_action = true;
    auto record = [&](bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok && rep.failures.size() < 20)
            rep.failures.push_back(what);
    };
    for (const auto& [l, basis] : m.spaces) {
        if (!m.trusted(l))
            continue;
        for (const auto& mu : basis) {
            const ModuleVector v = ModuleVector::monomial(mu);
            for (const auto& x : xs) {
                const ModuleVector xv = detail::lifted_rplus(m, R.at(x), v);
                if (!(xv == m.act(R.at(x), v)))
                    rep.matches_laurent_action = false;
                for (const auto& a : ms) {
                    const ModuleVector lhs = detail::lifted_rplus(m, mx.at({a, x}), v);
                    const ModuleVector rhs = m.act(R.at(a), xv) - detail::lifted_rplus(m, R.at(x), m.act(R.at(a), v));
                    record(lhs == rhs, "[" + a + "," + x + "] on " + mu.str());
                }
                for (const auto& y : ys) {
                    const ModuleVector lhs = m.act(xy.at({x, y}), v);
                    const ModuleVector rhs =
                        detail::lifted_rplus(m, R.at(x), m.act(R.at(y), v)) - m.act(R.at(y), xv);
                    record(lhs == rhs, "[" + x + "," + y + "] on " + mu.str());
                }
            }
        }
    }
    const auto prim = find_primitive(m);
    if (prim.size() == 1 && prim.front().weight == top) {
        const auto sing = joint_kernel(m, top, m.sl_raising());
        if (sing.size() == 1) {
            rep.primitive = sing.front();
            rep.sp_profile = sp_profile(m, sing.front());
        }
    }
    rep.status = rep.failures.empty() ? LiftStatus::Lifted : LiftStatus::Failed;
    if (rep.status == LiftStatus::Failed)
        rep.reason = std::to_string(rep.failures.size()) + " bracket failures";
    return rep;
}

// ---------------------------------------------------------------------------
// Lowering chain from the highest weight vector.

struct ChainStep {
    std::int64_t m = 0;
    ModuleVector vector;
    bool singular = false;
    std::vector<Rational> profile;
    bool profile_ok = false; // profile = nu + 2m w_{n-1}
};

struct ChainReport {
    bool applicable = false;
    std::vector<ChainStep> steps;
    bool terminated = false; // reached 0 inside the window
    bool finite_module = false;
    bool consistent = false; // terminated iff the module is finite
    bool ok = false;
};

/// Applies the realized f_n repeatedly to the top sl_n-singular vector.
inline ChainReport check_lowering_chain(const WeightModule& m)
{
    ChainReport rep;
    rep.finite_module = m.finite;
    if (m.empty || m.cut_above)
        return rep;
    const std::int64_t top = m.natural.hi;
    const auto sing = joint_kernel(m, top, m.sl_raising());
    if (sing.size() != 1)
        return rep;
    const auto nu = sl_profile(m, sing.front());
    if (!nu)
        return rep;
    rep.applicable = true;
    const WeylElement& fn = m.realization.at(sym::f(m.n()));
    const auto e_ops = m.sl_raising();
    ModuleVector v = sing.front();
    rep.ok = true;
    for (std::int64_t k = 0;; ++k) {
        if (k > 0)
            v = m.act(fn, v);
        if (v.is_zero()) {
            rep.terminated = true;
            break;
        }
        if (top - k < m.window.lo)
            break;
        ChainStep s;
        s.m = k;
        s.vector = v;
        s.singular = true;
        for (const auto& e : e_ops)
            if (!m.act(e, v).is_zero())
                s.singular = false;
        if (auto p = sl_profile(m, v)) {
            s.profile = *p;
            std::vector<Rational> want = *nu;
            want.back() += Rational(2 * k);
            s.profile_ok = s.profile == want;
        }
        rep.ok = rep.ok && s.singular && s.profile_ok;
        rep.steps.push_back(std::move(s));
    }
    rep.consistent = rep.terminated == rep.finite_module;
    rep.ok = rep.ok && rep.consistent;
    return rep;
}

// ---------------------------------------------------------------------------
// Weyl group orbits for C_n in epsilon coordinates.

/// w_i = e_1 + ... + e_i, so the epsilon coordinate k is the sum of the coefficients of w_i, i >= k.
inline std::vector<Rational> fundamental_to_epsilon(const std::vector<Rational>& c)
{
    std::vector<Rational> e(c.size(), 0);
    Rational acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        acc += c[k];
        e[k] = acc;
    }
    return e;
}

/// True iff b is a signed permutation of a (hyperoctahedral group, brute force).
inline bool same_hyperoctahedral_orbit(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    if (a.size() != b.size())
        return false;
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    do {
        for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
            bool eq = true;
            for (std::size_t i = 0; i < n && eq; ++i) {
                const Rational x = (signs >> i) & 1 ? Rational(-a[perm[i]]) : a[perm[i]];
                eq = x == b[i];
            }
            if (eq)
                return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

struct OrbitReport {
    std::size_t n = 2;
    std::vector<Rational> even_weight; // fundamental-weight coordinates
    std::vector<Rational> odd_weight;
    std::vector<Rational> even_shifted; // epsilon coordinates of weight + rho
    std::vector<Rational> odd_shifted;
    bool dot_orbit = false;   // related by the rho-shifted action
    bool plain_orbit = false; // related by the linear action
};

inline OrbitReport weyl_orbit_check(std::size_t n, const std::vector<Rational>& even_weight,
                                    const std::vector<Rational>& odd_weight)
{
    OrbitReport rep;
    rep.n = n;
    rep.even_weight = even_weight;
    rep.odd_weight = odd_weight;
    const auto ee = fundamental_to_epsilon(even_weight);
    const auto eo = fundamental_to_epsilon(odd_weight);
    rep.plain_orbit = same_hyperoctahedral_orbit(ee, eo);
    rep.even_shifted = ee;
    rep.odd_shifted = eo;
    for (std::size_t k = 0; k < n; ++k) {
        rep.even_shifted[k] += Rational(static_cast<long>(n - k));
        rep.odd_shifted[k] += Rational(static_cast<long>(n - k));
    }
    rep.dot_orbit = same_hyperoctahedral_orbit(rep.even_shifted, rep.odd_shifted);
    return rep;
}

} // namespace tdo
