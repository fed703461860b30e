#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wallcross/errors.hpp"
#include "wallcross/json_io.hpp"
#include "wallcross/verify.hpp"

using namespace wallcross;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rational(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rat r(text);
        r.canonicalize();
        return r;
    }
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    Rat scale = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
    Rat r = Rat(digits) / scale;
    r.canonicalize();
    return r;
}

/// Map sigma to its chamber index; a critical value is rejected.
int chamber_from_sigma(int d, const Rat& sigma) {
    if (sigma <= 0) throw UsageError("sigma must be positive");
    int chamber = 0;
    for (int wall : critical_values(d)) {
        if (sigma == wall) throw UsageError("sigma is a critical value");
        if (sigma > wall) ++chamber;
    }
    return chamber;
}

int default_order(int genus, std::optional<int> flag, int fallback = 0) {
    if (flag) return *flag;
    if (const char* env = std::getenv("WALLCROSS_ORDER")) return std::atoi(env);
    return fallback > 0 ? fallback : 10 * genus;
}

void require_integral(const LaurentPoly& p) {
    if (!p.integer_coefficients())
        throw NonIntegral("user-facing result has fractional coefficients: " + p.str());
}

void require_integral(const QSeries& s) {
    for (int n = 0; n < s.order(); ++n) require_integral(s[n]);
}

void emit(std::string text, const std::string& out) {
    if (text.empty() || text.back() != '\n') text += '\n';
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out);
    if (!file) throw UsageError("cannot open output file " + out);
    file << text;
}

struct MotiveRequest {
    int genus = 2;
    int degree = 0;
    int gamma = 0;
    std::string sigma;
    std::optional<int> chamber;

    struct Resolved {
        LaurentPoly motive;
        int chamber;
        int dimension;
        bool smooth;
    };

    Resolved resolve() const {
        int ch = 0;
        if (!sigma.empty() && chamber)
            throw UsageError("give either --sigma or --chamber, not both");
        if (!sigma.empty())
            ch = chamber_from_sigma(degree, parse_rational(sigma));
        else if (chamber)
            ch = *chamber;
        Resolved r;
        r.chamber = ch;
        r.dimension = triple_dim(genus, degree, gamma);
        if (gamma == 0) {
            if (ch >= chamber_count(degree)) throw UsageError("chamber out of range");
            r.motive = triple_motive_chamber(genus, degree, ch);
            const bool odd = ((degree % 2) + 2) % 2 == 1;
            r.smooth = degree < 0 || (ch == 0 && odd && degree > 4 * genus - 4);
        } else {
            const int last = chamber_count(degree) - 1;
            if (ch == 0) {
                r.motive = poles_motive(genus, degree, gamma, PolesRegime::eps);
            } else if (ch == last && gamma > degree) {
                r.motive = poles_motive(genus, degree, gamma, PolesRegime::infty);
            } else {
                throw UsageError("with poles only the epsilon chamber and, for gamma > d, "
                                 "the last chamber are available");
            }
            r.smooth = true;
        }
        return r;
    }
};

std::string motive_json(const MotiveRequest& req, const MotiveRequest::Resolved& r,
                        const LaurentPoly& value) {
    std::string meta = "{\"genus\":" + std::to_string(req.genus) +
                       ",\"degree\":" + std::to_string(req.degree) +
                       ",\"chamber\":" + std::to_string(r.chamber) +
                       ",\"gamma\":" + std::to_string(req.gamma) +
                       ",\"dimension\":" + std::to_string(r.dimension) +
                       std::string(",\"smooth\":") + (r.smooth ? "true" : "false") +
                       ",\"empty\":" + (value.is_zero() ? "true" : "false") +
                       ",\"motive\":" + to_json(value) + "}";
    return meta;
}

int run(int argc, char** argv) {
    CLI::App app{"exact motivic invariants of rank-2 Bradlow-Higgs moduli spaces"};
    app.require_subcommand(1);

    MotiveRequest req;
    std::string format = "json", out, which = "fmot", suite = "all", graph_spec;
    std::optional<int> order_flag;
    int max_n = 2;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--genus", req.genus)->check(CLI::Range(2, 64));
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", out);
    };
    auto add_motive_flags = [&](CLI::App* cmd) {
        add_common(cmd);
        cmd->add_option("--degree", req.degree)->required();
        cmd->add_option("--sigma", req.sigma);
        cmd->add_option("--chamber", [&](const CLI::results_t& v) {
            req.chamber = std::stoi(v[0]);
            return true;
        }, "chamber index");
        cmd->add_option("--gamma", req.gamma)->check(CLI::Range(0, 1 << 20));
    };

    CLI::App* motive = app.add_subcommand("motive", "motive of one moduli space");
    add_motive_flags(motive);
    CLI::App* pvir_cmd = app.add_subcommand("pvir", "virtual Poincare polynomial");
    add_motive_flags(pvir_cmd);

    CLI::App* genfun_cmd = app.add_subcommand("genfun", "generating functions");
    add_common(genfun_cmd);
    genfun_cmd->add_option("--which", which)
        ->check(CLI::IsMember({"fmot", "fvir", "g", "hmb", "pairs"}));
    genfun_cmd->add_option("--order", [&](const CLI::results_t& v) {
        order_flag = std::stoi(v[0]);
        return true;
    }, "truncation order");

    CLI::App* verify_cmd = app.add_subcommand("verify", "named verification suites");
    add_common(verify_cmd);
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--order", [&](const CLI::results_t& v) {
        order_flag = std::stoi(v[0]);
        return true;
    }, "truncation order");

    CLI::App* cks_cmd = app.add_subcommand("cks", "CKS weight polynomials for a dual graph");
    add_common(cks_cmd);
    cks_cmd->add_option("--graph", graph_spec)->required();
    cks_cmd->add_option("--max-n", max_n)->check(CLI::Range(1, 30));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (motive->parsed() || pvir_cmd->parsed()) {
        const auto resolved = req.resolve();
        const LaurentPoly value =
            motive->parsed() ? resolved.motive : pvir(resolved.motive, resolved.dimension);
        require_integral(value);
        if (format == "text")
            emit(value.str(), out);
        else
            emit(motive_json(req, resolved, value), out);
        return 0;
    }
    if (genfun_cmd->parsed()) {
        QSeries s('q', 1);
        if (which == "fmot")
            s = fmot(req.genus, default_order(req.genus, order_flag), GenfunMode::direct);
        else if (which == "fvir")
            s = fvir_direct(req.genus, default_order(req.genus, order_flag));
        else if (which == "g")
            s = g_series(req.genus, default_order(req.genus, order_flag));
        else if (which == "hmb")
            s = char_variety_mixed_hodge(
                req.genus,
                std::max(default_order(req.genus, order_flag, 8 * req.genus - 5),
                         8 * req.genus - 5));
        else
            s = pair_genfun_motivic(req.genus, default_order(req.genus, order_flag));
        require_integral(s);
        emit(format == "csv" ? to_csv(s) : format == "text" ? s.str() : to_json(s), out);
        return 0;
    }
    if (verify_cmd->parsed()) {
        const SuiteReport report = run_suite(suite, req.genus, order_flag.value_or(0));
        std::string lines;
        for (const auto& check : report.checks) {
            lines += (check.pass ? "PASS " : "FAIL ") + check.name;
            if (!check.detail.empty()) lines += ": " + check.detail;
            lines += "\n";
        }
        lines += report.pass ? "suite passed" : "suite FAILED";
        emit(lines, out);
        return report.pass ? 0 : kExitVerifyFailure;
    }
    if (cks_cmd->parsed()) {
        const Multigraph graph = graph_from_spec(graph_spec);
        const QSeries u = u_series(graph, max_n);
        if (format == "text") {
            emit(u.str(), out);
        } else {
            // the lemma backs the formula only while removals keep the
            // graph connected; outside that the value is mechanical
            const bool internal = cks_regime_internal(graph, max_n - 1);
            emit(std::string("{\"regime_internal\":") + (internal ? "true" : "false") +
                     ",\"series\":" + to_json(u) + "}",
                 out);
        }
        return 0;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
