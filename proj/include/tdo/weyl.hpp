#pragma once

// Sparse exact arithmetic in the Weyl algebra on Q_1..Q_{n+1}, P_1..P_{n+1}
// with [P_i, Q_j] = delta_ij. Elements are kept normal ordered (Q's left of
// P's). Q_{n+1} may carry a negative exponent when the element is flagged
// Laurent; every other slot is polynomial.

#include "tdo/multi_index.hpp"
#include "tdo/rational.hpp"

#include <concepts>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdo {

struct WeylKey {
    MultiIndex mu; // exponents of Q
    MultiIndex nu; // exponents of P

    friend auto operator<=>(const WeylKey&, const WeylKey&) = default;
    friend bool operator==(const WeylKey&, const WeylKey&) = default;
};

struct WeylTerm {
    Rational coeff;
    MultiIndex mu;
    MultiIndex nu;
};

/// sum_i (mu_i - nu_i).
inline std::int64_t degree(const MultiIndex& mu, const MultiIndex& nu) { return (mu - nu).sum(); }
inline std::int64_t degree(const WeylTerm& t) { return degree(t.mu, t.nu); }

/// Bernstein-type filtration order sum |mu_i| + sum nu_i.
inline std::int64_t filtration_order(const MultiIndex& mu, const MultiIndex& nu)
{
    std::int64_t s = 0;
    for (auto x : mu)
        s = checked_add(s, x < 0 ? -x : x);
    for (auto x : nu)
        s = checked_add(s, x);
    return s;
}

class WeylElement {
public:
    using TermMap = std::map<WeylKey, Rational>;

    WeylElement() = default;
    explicit WeylElement(std::size_t n, bool laurent = false) : n_(n), laurent_(laurent) {}

    static WeylElement constant(std::size_t n, const Rational& c)
    {
        WeylElement a(n);
        a.add_term(c, MultiIndex(n + 1), MultiIndex(n + 1));
        return a;
    }

    static WeylElement monomial(std::size_t n, const MultiIndex& mu, const MultiIndex& nu,
                                const Rational& c = 1)
    {
        WeylElement a(n, mu.size() == n + 1 && mu.last() < 0);
        a.add_term(c, mu, nu);
        return a;
    }

    /// Q_i^k, 1-based i; k < 0 only for i = n+1 (sets the Laurent flag).
    static WeylElement q(std::size_t n, std::size_t i, std::int64_t k = 1)
    {
        return monomial(n, MultiIndex::unit(n + 1, i, k), MultiIndex(n + 1));
    }

    /// P_i^k, 1-based i.
    static WeylElement p(std::size_t n, std::size_t i, std::int64_t k = 1)
    {
        return monomial(n, MultiIndex(n + 1), MultiIndex::unit(n + 1, i, k));
    }

    std::size_t rank() const { return n_; }
    bool laurent() const { return laurent_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    std::vector<WeylTerm> term_list() const
    {
        std::vector<WeylTerm> out;
        out.reserve(terms_.size());
        for (const auto& [k, c] : terms_)
            out.push_back({c, k.mu, k.nu});
        return out;
    }

    Rational coefficient(const MultiIndex& mu, const MultiIndex& nu) const
    {
        auto it = terms_.find({mu, nu});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Rational& c, const MultiIndex& mu, const MultiIndex& nu)
    {
        validate(mu, nu);
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(WeylKey{mu, nu}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Largest filtration order of any term (0 for the zero element).
    std::int64_t order() const
    {
        std::int64_t o = 0;
        for (const auto& [k, c] : terms_)
            o = std::max(o, filtration_order(k.mu, k.nu));
        return o;
    }

    bool has_negative_exponent() const
    {
        for (const auto& [k, c] : terms_)
            if (k.mu.last() < 0)
                return true;
        return false;
    }

    WeylElement& operator+=(const WeylElement& b)
    {
        check_rank(b);
        laurent_ = laurent_ || b.laurent_;
        for (const auto& [k, c] : b.terms_)
            add_term(c, k.mu, k.nu);
        return *this;
    }

    WeylElement& operator-=(const WeylElement& b)
    {
        check_rank(b);
        laurent_ = laurent_ || b.laurent_;
        for (const auto& [k, c] : b.terms_)
            add_term(-c, k.mu, k.nu);
        return *this;
    }

    WeylElement& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator-(WeylElement a) { return a *= Rational(-1); }
    friend WeylElement operator*(WeylElement a, const Rational& s) { return a *= s; }
    friend WeylElement operator*(const Rational& s, WeylElement a) { return a *= s; }
    friend WeylElement operator+(WeylElement a, const Rational& s)
    {
        return a += constant(a.n_, s);
    }
    friend WeylElement operator-(WeylElement a, const Rational& s)
    {
        return a -= constant(a.n_, s);
    }

    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

    /// Equality of canonical forms; the Laurent flag is not compared.
    friend bool operator==(const WeylElement& a, const WeylElement& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    void check_rank(const WeylElement& b) const
    {
        if (n_ != b.n_)
            throw StructuralError("Weyl element rank mismatch (" + std::to_string(n_) + " vs " +
                                  std::to_string(b.n_) + ")");
    }

private:
    void validate(const MultiIndex& mu, const MultiIndex& nu) const
    {
        if (mu.size() != n_ + 1 || nu.size() != n_ + 1)
            throw StructuralError("exponent vector length must be n+1");
        for (std::size_t k = 0; k <= n_; ++k) {
            if (nu[k] < 0)
                throw StructuralError("negative P exponent");
            if (mu[k] < 0) {
                if (k != n_)
                    throw StructuralError("Laurent exponent outside the last variable");
                if (!laurent_)
                    throw StructuralError("Laurent exponent in an element without the Laurent flag");
            }
        }
    }

    std::size_t n_ = 0;
    bool laurent_ = false;
    TermMap terms_;
};

namespace detail {

// P^b Q^c = sum_k binom(b,k) c(c-1)...(c-k+1) Q^{c-k} P^{b-k} in a single variable.
struct Reorder {
    Rational coeff;
    std::int64_t k;
};

inline std::vector<Reorder> reorder_single(std::int64_t b, std::int64_t c)
{
    std::vector<Reorder> out;
    for (std::int64_t k = 0; k <= b; ++k) {
        Rational f = falling(c, k);
        if (f == 0)
            break;
        out.push_back({binomial(b, k) * f, k});
    }
    return out;
}

inline void multiply_terms(const MultiIndex& a_mu, const MultiIndex& a_nu, const Rational& a_c,
                           const MultiIndex& b_mu, const MultiIndex& b_nu, const Rational& b_c,
                           WeylElement& out)
{
    const std::size_t len = a_mu.size();
    std::vector<std::vector<Reorder>> per_var(len);
    for (std::size_t v = 0; v < len; ++v) {
        per_var[v] = reorder_single(a_nu[v], b_mu[v]);
        if (per_var[v].empty())
            return;
    }
    const MultiIndex mu0 = a_mu + b_mu;
    const MultiIndex nu0 = a_nu + b_nu;
    std::vector<std::size_t> pick(len, 0);
    while (true) {
        Rational c = a_c * b_c;
        MultiIndex mu = mu0, nu = nu0;
        for (std::size_t v = 0; v < len; ++v) {
            const auto& r = per_var[v][pick[v]];
            c *= r.coeff;
            mu[v] = checked_sub(mu[v], r.k);
            nu[v] = checked_sub(nu[v], r.k);
        }
        out.add_term(c, mu, nu);
        std::size_t v = 0;
        while (v < len && ++pick[v] == per_var[v].size()) {
            pick[v] = 0;
            ++v;
        }
        if (v == len)
            break;
    }
}

} // namespace detail

/// Normal-ordered product.
inline WeylElement operator*(const WeylElement& a, const WeylElement& b)
{
    a.check_rank(b);
    WeylElement out(a.rank(), a.laurent() || b.laurent());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            detail::multiply_terms(ka.mu, ka.nu, ca, kb.mu, kb.nu, cb, out);
    return out;
}

inline WeylElement product(const WeylElement& a, const WeylElement& b) { return a * b; }

inline WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

/// b^k by repeated multiplication; k >= 0.
inline WeylElement power(const WeylElement& b, unsigned k)
{
    WeylElement r = WeylElement::constant(b.rank(), 1);
    for (unsigned i = 0; i < k; ++i)
        r = r * b;
    return r;
}

// ---------------------------------------------------------------------------
// Action on Laurent monomials Q^e.

/// Sparse combination of Laurent monomials Q^e (negative exponents allowed anywhere).
class ModuleVector {
public:
    using Map = std::map<MultiIndex, Rational>;

    ModuleVector() = default;
    explicit ModuleVector(std::size_t n) : n_(n) {}

    static ModuleVector monomial(const MultiIndex& e, const Rational& c = 1)
    {
        ModuleVector v(e.rank());
        v.add(e, c);
        return v;
    }

    std::size_t rank() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    const Map& coeffs() const { return coeffs_; }

    Rational coefficient(const MultiIndex& e) const
    {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add(const MultiIndex& e, const Rational& c)
    {
        if (e.size() != n_ + 1)
            throw StructuralError("module monomial length must be n+1");
        if (c == 0)
            return;
        auto [it, inserted] = coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }

    ModuleVector& operator+=(const ModuleVector& b)
    {
        for (const auto& [e, c] : b.coeffs_)
            add(e, c);
        return *this;
    }
    ModuleVector& operator-=(const ModuleVector& b)
    {
        for (const auto& [e, c] : b.coeffs_)
            add(e, -c);
        return *this;
    }
    ModuleVector& operator*=(const Rational& s)
    {
        if (s == 0)
            coeffs_.clear();
        for (auto& [e, c] : coeffs_)
            c *= s;
        return *this;
    }
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const Rational& s, ModuleVector a) { return a *= s; }
    friend bool operator==(const ModuleVector& a, const ModuleVector& b) = default;

    std::string str() const
    {
        if (coeffs_.empty())
            return "0";
        std::string s;
        for (const auto& [e, c] : coeffs_) {
            if (!s.empty())
                s += " + ";
            s += to_string(c) + " * Q^" + e.str();
        }
        return s;
    }

private:
    std::size_t n_ = 0;
    Map coeffs_;
};

template <class S>
concept MonomialSupport = requires(const S& s, const MultiIndex& m) {
    { s.contains(m) } -> std::convertible_to<bool>;
};

/// Keeps every monomial.
struct AnySupport {
    bool contains(const MultiIndex&) const { return true; }
};

/// Polynomial monomials only (all exponents >= 0).
struct PolynomialSupport {
    bool contains(const MultiIndex& m) const { return m.all_nonnegative(); }
};

/// Applies op to v; monomials leaving the support are dropped (they are
/// coboundaries in the Cech model).
template <MonomialSupport S>
ModuleVector apply(const WeylElement& op, const ModuleVector& v, const S& support)
{
    if (op.rank() != v.rank())
        throw StructuralError("operator/module rank mismatch");
    ModuleVector out(v.rank());
    for (const auto& [key, oc] : op.terms()) {
        for (const auto& [e, vc] : v.coeffs()) {
            Rational c = oc * vc;
            MultiIndex r = e;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (key.nu[k] != 0) {
                    c *= falling(e[k], key.nu[k]);
                    if (c == 0)
                        break;
                }
                r[k] = checked_add(checked_sub(e[k], key.nu[k]), key.mu[k]);
            }
            if (c != 0 && support.contains(r))
                out.add(r, c);
        }
    }
    return out;
}

inline ModuleVector apply(const WeylElement& op, const ModuleVector& v) { return apply(op, v, AnySupport{}); }

// ---------------------------------------------------------------------------
// Text form: "c * Q^[mu] P^[nu] + ..." in canonical (mu, nu) order; "0" for zero.

inline std::string to_string(const WeylElement& a)
{
    if (a.is_zero())
        return "0";
    std::string s;
    for (const auto& [k, c] : a.terms()) {
        if (!s.empty())
            s += " + ";
        s += to_string(c);
        s += " * Q^";
        s += k.mu.str();
        s += " P^";
        s += k.nu.str();
    }
    return s;
}

namespace detail {

inline MultiIndex parse_index_list(std::string_view s)
{
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("expected [..] exponent list");
    std::vector<std::int64_t> vals;
    std::string body(s.substr(1, s.size() - 2));
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        long long v = std::strtoll(item.c_str(), &end, 10);
        if (item.empty() || *end != '\0')
            throw ParseError("malformed exponent '" + item + "'");
        vals.push_back(v);
    }
    return MultiIndex(std::move(vals));
}

} // namespace detail

/// Inverse of to_string(WeylElement). The rank is read off the exponent vectors;
/// for "0" it must be supplied.
inline WeylElement parse_weyl(std::string_view text, std::size_t rank_if_zero = 0)
{
    if (text == "0")
        return WeylElement(rank_if_zero);
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(" + ", start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 3;
    }
    std::vector<WeylTerm> terms;
    for (auto part : parts) {
        auto star = part.find(" * Q^");
        auto pp = part.find(" P^");
        if (star == std::string_view::npos || pp == std::string_view::npos || pp < star)
            throw ParseError("malformed term '" + std::string(part) + "'");
        Rational c = parse_rational(part.substr(0, star));
        MultiIndex mu = detail::parse_index_list(part.substr(star + 5, pp - star - 5));
        MultiIndex nu = detail::parse_index_list(part.substr(pp + 3));
        terms.push_back({c, mu, nu});
    }
    const std::size_t n = terms.front().mu.rank();
    bool laurent = false;
    for (const auto& t : terms)
        laurent = laurent || (t.mu.size() == n + 1 && t.mu.last() < 0);
    WeylElement a(n, laurent);
    for (const auto& t : terms)
        a.add_term(t.coeff, t.mu, t.nu);
    return a;
}

} // namespace tdo
