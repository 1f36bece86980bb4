#pragma once

// JSON encodings of every report type plus plain tables for the text and CSV
// renderings. Rationals are always "p/q" strings; monomials are exponent arrays.

#include "tdo/lie.hpp"
#include "tdo/modules.hpp"
#include "tdo/ring_iso.hpp"
#include "tdo/toric.hpp"
#include "tdo/weyl.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace tdo {

using Json = nlohmann::json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const MultiIndex& m)
{
    Json a = Json::array();
    for (auto x : m)
        a.push_back(x);
    return a;
}

inline Json to_json(const std::vector<Rational>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

inline Json to_json(const WeylElement& a)
{
    Json terms = Json::array();
    for (const auto& [k, c] : a.terms())
        terms.push_back({{"coeff", to_string(c)}, {"mu", to_json(k.mu)}, {"nu", to_json(k.nu)}});
    return {{"rank", a.rank()}, {"text", to_string(a)}, {"terms", terms}};
}

inline WeylElement weyl_from_json(const Json& j)
{
    const std::size_t n = j.at("rank").get<std::size_t>();
    bool laurent = false;
    std::vector<WeylTerm> terms;
    for (const auto& t : j.at("terms")) {
        MultiIndex mu(t.at("mu").get<std::vector<std::int64_t>>());
        MultiIndex nu(t.at("nu").get<std::vector<std::int64_t>>());
        laurent = laurent || (mu.size() == n + 1 && mu.last() < 0);
        terms.push_back({parse_rational(t.at("coeff").get<std::string>()), mu, nu});
    }
    WeylElement a(n, laurent);
    for (const auto& t : terms)
        a.add_term(t.coeff, t.mu, t.nu);
    return a;
}

inline Json to_json(const ModuleVector& v)
{
    Json terms = Json::array();
    for (const auto& [e, c] : v.coeffs())
        terms.push_back({{"coeff", to_string(c)}, {"mu", to_json(e)}});
    return terms;
}

inline Json to_json(const RelationReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"relation", c.relation}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"status", c.ok ? "pass" : "fail"}});
    Json j = {{"name", r.name}, {"failures", r.failures()}, {"checks", checks}};
    if (!r.read_cartan.empty()) {
        Json m = Json::array();
        for (const auto& row : r.read_cartan) {
            Json jr = Json::array();
            for (const auto& a : row)
                jr.push_back(a ? Json(to_string(*a)) : Json(nullptr));
            m.push_back(jr);
        }
        j["read_cartan"] = m;
        j["cartan_matches_bourbaki"] = r.cartan_matches_bourbaki;
    }
    return j;
}

inline Json to_json(const SpanReport& r)
{
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json cert = Json::array();
        for (const auto& [word, c] : e.certificate)
            cert.push_back({{"word", word}, {"coeff", to_string(c)}});
        entries.push_back({{"mu", to_json(e.monomial.mu)},
                           {"nu", to_json(e.monomial.nu)},
                           {"order", e.order},
                           {"spanned", e.spanned},
                           {"min_word_len", e.min_word_len},
                           {"certificate", cert}});
    }
    return {{"ring", to_string(r.ring.kind)},
            {"n", r.ring.n},
            {"twist", r.ring.twist},
            {"max_order", r.max_order},
            {"max_word_len", r.max_word_len},
            {"generators", r.generator_labels},
            {"words_considered", r.words_considered},
            {"words_kept", r.words_kept},
            {"min_len_per_order", r.min_len_per_order},
            {"all_spanned", r.all_spanned},
            {"entries", entries}};
}

inline Json to_json(const RingIsoReport& r)
{
    auto verdicts = [](const std::vector<MonomialVerdict>& v) {
        Json a = Json::array();
        for (const auto& m : v)
            a.push_back({{"mu", to_json(m.monomial.mu)}, {"nu", to_json(m.monomial.nu)}, {"image", m.image},
                         {"member", m.member}});
        return a;
    };
    Json corr = Json::array();
    for (const auto& c : r.correspondence)
        corr.push_back({{"source", c.source_label},
                        {"image", c.image},
                        {"native", c.native_label},
                        {"sign", to_string(c.sign)},
                        {"constant", to_string(c.constant)},
                        {"matched", c.matched}});
    return {{"n", r.n},
            {"twist", r.twist},
            {"target_twist", r.target_twist},
            {"max_order", r.max_order},
            {"forward_ok", r.forward_ok},
            {"backward_ok", r.backward_ok},
            {"generators_ok", r.generators_ok},
            {"euler_ok", r.euler_ok},
            {"generator_counts_source", {r.counts_source[0], r.counts_source[1], r.counts_source[2]}},
            {"generator_counts_native", {r.counts_native[0], r.counts_native[1], r.counts_native[2]}},
            {"correspondence", corr},
            {"forward", verdicts(r.forward)},
            {"backward", verdicts(r.backward)}};
}

inline Json to_json(const DecompositionReport& r)
{
    Json ws = Json::array();
    for (const auto& w : r.weights) {
        Json sing = Json::array();
        for (const auto& s : w.singular)
            sing.push_back(to_json(s));
        Json prim = Json::array();
        for (const auto& s : w.primitive)
            prim.push_back(to_json(s));
        ws.push_back({{"weight", w.weight},
                      {"dim", w.dim},
                      {"trusted", w.trusted},
                      {"z_consistent", w.z_consistent},
                      {"shift_law", w.shift_law},
                      {"singular", sing},
                      {"highest_monomial", w.highest_monomial ? to_json(*w.highest_monomial) : Json(nullptr)},
                      {"profile", to_json(w.profile)},
                      {"label", w.label},
                      {"identified", w.identified},
                      {"primitive_dim", w.primitive_dim},
                      {"primitive", prim}});
    }
    return {{"kind", to_string(r.kind)},
            {"n", r.n},
            {"twist", r.twist},
            {"window", {r.window.lo, r.window.hi}},
            {"finite", r.finite},
            {"empty", r.empty},
            {"irreducible", r.irreducible},
            {"z_consistent", r.z_consistent},
            {"shift_law", r.shift_law},
            {"primitive_weights", r.primitive_weights},
            {"weights", ws}};
}

inline Json to_json(const ClosureReport& r)
{
    Json reached = Json::object();
    for (const auto& [l, d] : r.reached)
        reached[std::to_string(l)] = d;
    return {{"generator", to_json(r.generator)}, {"reached", reached}, {"ok", r.ok}};
}

inline Json to_json(const CertificateReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"target", to_json(c.target)},
                          {"operator", c.op},
                          {"member", c.member},
                          {"scalar", to_string(c.scalar)},
                          {"ok", c.ok}});
    return {{"family", to_string(r.family)},
            {"generator", to_json(r.generator)},
            {"exact_normalization", r.exact_normalization},
            {"ok", r.ok},
            {"checks", checks}};
}

inline Json to_json(const LiftReport& r)
{
    return {{"status", to_string(r.status)},
            {"mode", r.mode == LiftMode::Strict ? "strict" : "extended"},
            {"reason", r.reason},
            {"checks", r.checks},
            {"failures", r.failures},
            {"matches_laurent_action", r.matches_laurent_action},
            {"primitive", r.primitive ? to_json(*r.primitive) : Json(nullptr)},
            {"sp_profile", r.sp_profile ? to_json(*r.sp_profile) : Json(nullptr)}};
}

inline Json to_json(const ChainReport& r)
{
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"m", s.m},
                         {"vector", to_json(s.vector)},
                         {"singular", s.singular},
                         {"profile", to_json(s.profile)},
                         {"profile_ok", s.profile_ok}});
    return {{"applicable", r.applicable},
            {"terminated", r.terminated},
            {"finite_module", r.finite_module},
            {"consistent", r.consistent},
            {"ok", r.ok},
            {"steps", steps}};
}

inline Json to_json(const OrbitReport& r)
{
    return {{"n", r.n},
            {"even_weight", to_json(r.even_weight)},
            {"odd_weight", to_json(r.odd_weight)},
            {"even_shifted_epsilon", to_json(r.even_shifted)},
            {"odd_shifted_epsilon", to_json(r.odd_shifted)},
            {"dot_orbit", r.dot_orbit},
            {"plain_orbit", r.plain_orbit}};
}

// ---------------------------------------------------------------------------
// Tables.

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

inline std::string render_text(const Table& t)
{
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        width[c] = t.columns[c].size();
    for (const auto& r : t.rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < width.size(); ++c) {
            const std::string cell = c < cells.size() ? cells[c] : "";
            if (c > 0)
                s += " | ";
            s += cell + std::string(width[c] - cell.size(), ' ');
        }
        while (!s.empty() && s.back() == ' ')
            s.pop_back();
        return s + "\n";
    };
    std::string out = t.title + "\n" + line(t.columns);
    std::size_t total = 0;
    for (auto w : width)
        total += w;
    out += std::string(total + 3 * (width.empty() ? 0 : width.size() - 1), '-') + "\n";
    for (const auto& r : t.rows)
        out += line(r);
    return out;
}

inline std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

/// One CSV block per table; the first column repeats the table title.
inline std::string render_csv(const Table& t)
{
    std::string out = "table";
    for (const auto& c : t.columns)
        out += "," + csv_cell(c);
    out += "\n";
    for (const auto& r : t.rows) {
        out += csv_cell(t.title);
        for (const auto& c : r)
            out += "," + csv_cell(c);
        out += "\n";
    }
    return out;
}

/// weight | dim | sl_n label | primitive? | notes
inline Table table(const DecompositionReport& r, const std::string& title)
{
    Table t;
    t.title = title;
    t.columns = {"weight", "dim", "sl_n label", "primitive?", "notes"};
    if (r.empty) {
        t.rows.push_back({"-", "0", "-", "-", "empty (expected for l > -n)"});
        return t;
    }
    for (const auto& w : r.weights) {
        std::string notes;
        if (!w.trusted)
            notes = "boundary";
        if (r.irreducible && r.weights.size() == 1)
            notes += std::string(notes.empty() ? "" : ", ") + "irreducible=true";
        if (!w.identified)
            notes += std::string(notes.empty() ? "" : ", ") + "unidentified";
        t.rows.push_back({std::to_string(w.weight), std::to_string(w.dim), w.label,
                          w.primitive_dim > 0 ? "yes (" + std::to_string(w.primitive_dim) + ")" : "no", notes});
    }
    return t;
}

inline std::string monomial_text(const MultiIndex& mu)
{
    std::string s;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] == 0)
            continue;
        s += "Q" + std::to_string(i + 1);
        if (mu[i] != 1)
            s += "^" + std::to_string(mu[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace tdo
