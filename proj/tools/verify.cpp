// verify: runs verification suites and writes JSON/CSV/text reports plus a manifest.
//
// exit codes: 0 all suites pass, 1 a suite failed or hit a precondition error,
// 2 usage error.

#include "tdo/suites.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& s)
{
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (pos != s.size())
        throw UsageError("not an integer: '" + s + "'");
    return v;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s)
{
    const auto c = s.find(':', 1);
    if (c == std::string::npos)
        throw UsageError("expected a:b, got '" + s + "'");
    return {parse_int(s.substr(0, c)), parse_int(s.substr(c + 1))};
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty())
            out.push_back(cur);
    return out;
}

// "3", "-4:4" or "-2,0,2"
std::vector<std::int64_t> parse_twists(const std::string& s)
{
    std::vector<std::int64_t> out;
    for (const auto& part : split(s, ',')) {
        if (part.find(':', 1) != std::string::npos) {
            const auto [a, b] = parse_range(part);
            if (a > b)
                throw UsageError("empty twist range '" + part + "'");
            for (std::int64_t l = a; l <= b; ++l)
                out.push_back(l);
        } else {
            out.push_back(parse_int(part));
        }
    }
    if (out.empty())
        throw UsageError("empty twist list");
    return out;
}

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream o;
    for (unsigned int i = 0; i < len; ++i)
        o << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return o.str();
}

std::string render(const tdo::SuiteResult& r, const std::string& format)
{
    if (format == "json")
        return r.to_json().dump(2) + "\n";
    std::string out;
    for (const auto& t : r.all_tables())
        out += (format == "csv" ? tdo::render_csv(t) : tdo::render_text(t)) + "\n";
    return out;
}

void write_file(const fs::path& p, const std::string& data)
{
    std::ofstream f(p, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + p.string());
    f << data;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the sp_2n realization and its cohomology modules"};
    app.set_config("--config", "", "TOML or INI config file; command-line flags take precedence");

    std::size_t n = 2;
    std::string ell_text, suite_text, window_text, format = "text", out_dir;
    std::int64_t max_order = 4, iso_order = 5;
    std::size_t max_word_len = 3;
    bool list = false;

    app.add_option("--n", n, "rank n >= 2");
    app.add_option("--ell", ell_text, "twist: integer, a:b range or comma list (suite defaults if omitted)")
        ->allow_extra_args(false);
    app.add_option("--suite", suite_text, "comma-separated suites, or 'all'")->default_val("all");
    app.add_option("--window", window_text, "weight window a:b");
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_dir, "output directory for reports and manifest")->envname("VERIFY_OUT_DIR");
    app.add_option("--max-order", max_order, "filtration order bound for the span oracle");
    app.add_option("--max-word-len", max_word_len, "generator word length bound for the span oracle");
    app.add_option("--iso-order", iso_order, "order bound for the ring isomorphism check");
    app.add_flag("--list-suites", list, "print suite names and exit");

    tdo::RunConfig cfg;
    try {
        app.parse(argc, argv);
        if (list) {
            for (const auto& s : tdo::suite_names())
                std::cout << s << "\n";
            return 0;
        }
        cfg.n = n;
        if (!ell_text.empty())
            cfg.ells = parse_twists(ell_text);
        cfg.suites = suite_text == "all" ? tdo::suite_names() : split(suite_text, ',');
        if (!window_text.empty()) {
            const auto [a, b] = parse_range(window_text);
            cfg.window = tdo::Window{a, b};
        }
        cfg.format = format;
        cfg.max_order = max_order;
        cfg.max_word_len = max_word_len;
        cfg.iso_order = iso_order;
        cfg.validate();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const tdo::PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::vector<tdo::SuiteResult> results;
    std::vector<double> seconds(cfg.suites.size(), 0);
    {
        std::vector<std::future<tdo::SuiteResult>> futures;
        for (std::size_t i = 0; i < cfg.suites.size(); ++i)
            futures.push_back(std::async(std::launch::async, [&cfg, &seconds, i] {
                const auto t0 = std::chrono::steady_clock::now();
                auto r = tdo::run_suite(cfg.suites[i], cfg);
                seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                return r;
            }));
        for (auto& f : futures)
            results.push_back(f.get());
    }

    bool all_pass = true;
    tdo::Json manifest_suites = tdo::Json::array();
    const std::string ext = format == "json" ? "json" : format == "csv" ? "csv" : "txt";
    try {
        if (!out_dir.empty())
            fs::create_directories(out_dir);
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            all_pass = all_pass && r.passed();
            tdo::Json entry = {{"suite", r.name}, {"status", r.status()}, {"seconds", seconds[i]}};
            if (!out_dir.empty()) {
                tdo::Json artifacts = tdo::Json::object();
                std::vector<std::string> formats = {"json"};
                if (format != "json")
                    formats.push_back(format);
                for (const auto& f : formats) {
                    const std::string name = r.name + "." + (f == "json" ? "json" : ext);
                    const std::string data = render(r, f);
                    write_file(fs::path(out_dir) / name, data);
                    artifacts[name] = sha256_hex(data);
                }
                entry["artifacts"] = artifacts;
            } else {
                std::cout << render(r, format);
            }
            manifest_suites.push_back(entry);
        }
        if (!out_dir.empty()) {
            tdo::Json config = {{"n", cfg.n},
                                {"ell", cfg.ells ? tdo::Json(*cfg.ells) : tdo::Json(nullptr)},
                                {"suites", cfg.suites},
                                {"window", cfg.window ? tdo::Json({cfg.window->lo, cfg.window->hi}) : tdo::Json(nullptr)},
                                {"format", cfg.format},
                                {"max_order", cfg.max_order},
                                {"max_word_len", cfg.max_word_len},
                                {"iso_order", cfg.iso_order}};
            const tdo::Json manifest = {{"config", config}, {"all_pass", all_pass}, {"suites", manifest_suites}};
            write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    for (const auto& r : results)
        std::cerr << r.name << ": " << r.status() << "\n";
    return all_pass ? 0 : 1;
}
