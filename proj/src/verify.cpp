#include "wallcross/verify.hpp"

#include <functional>
#include <future>
#include <stdexcept>

#include "wallcross/cks.hpp"
#include "wallcross/errors.hpp"

namespace wallcross {

namespace {

using Check = std::function<CheckReport()>;

CheckReport equality(const std::string& name, const LaurentPoly& a, const LaurentPoly& b) {
    CheckReport r{name, a == b, ""};
    if (!r.pass) r.detail = "difference " + (a - b).str();
    return r;
}

CheckReport boolean(const std::string& name, bool ok, const std::string& detail) {
    return CheckReport{name, ok, ok ? "" : detail};
}

void add_macdonald(std::vector<Check>& checks, int g) {
    checks.push_back([g] { return macdonald_check(g, 21); });
    checks.push_back([g] {
        return equality("sym2(E(C)) = [S^2] g=" + std::to_string(g), sym2(sym_power(g, 1)),
                        sym_power(g, 2));
    });
    checks.push_back([] {
        for (int n = 0; n <= 8; ++n) {
            if (sym2(proj_space(n)) != grassmann2(n + 2))
                return boolean("sym2(CP^n) = Gr(2,n+2)", false, "fails at n=" + std::to_string(n));
        }
        return boolean("sym2(CP^n) = Gr(2,n+2), n<=8", true, "");
    });
    checks.push_back([g] {
        for (int k = 0; k <= 2 * g - 2; ++k) {
            CheckReport r = serre_symmetric_check(g, k);
            if (!r.pass) return r;
        }
        return boolean("serre duality sweep g=" + std::to_string(g), true, "");
    });
}

void add_pairs(std::vector<Check>& checks, int g) {
    checks.push_back([g] {
        const QSeries gen = pair_genfun_motivic(g, 7);
        for (int n = 0; n <= 6; ++n) {
            if (gen[n] != pair_motive(g, 2 * n + 1, 0))
                return boolean("pair walk vs genfun g=" + std::to_string(g), false,
                               "coefficient u^" + std::to_string(n));
        }
        return boolean("pair walk vs genfun g=" + std::to_string(g) + ", d<=13", true, "");
    });
    checks.push_back([g] {
        for (int d = 1; d <= 13; d += 2) {
            const LaurentPoly p = pair_poincare(g, d); // cross-checks walk internally
            if (p.coefficient({0, 0, 2 * (d + 2 * g - 2), 0}) != 1)
                return boolean("pair Poincare top class g=" + std::to_string(g), false,
                               "d=" + std::to_string(d));
        }
        return boolean("pair Poincare vs walk g=" + std::to_string(g) + ", odd d<=13", true, "");
    });
}

void add_fmot(std::vector<Check>& checks, int g, int order) {
    checks.push_back([g, order] {
        return boolean("fmot direct = closed g=" + std::to_string(g),
                       fmot(g, order, GenfunMode::direct) == fmot(g, order, GenfunMode::closed),
                       "series differ");
    });
}

void add_fvir(std::vector<Check>& checks, int g, int order) {
    checks.push_back([g, order] {
        const LaurentPoly t = LaurentPoly::variable(Var::t);
        const LaurentPoly clear = (LaurentPoly(1) - t.pow(2)) * Rat(2);
        QSeries direct = fvir_direct(g, order);
        direct *= clear;
        return boolean("fvir direct = closed (cleared) g=" + std::to_string(g),
                       direct == fvir_closed_cleared(g, order), "series differ");
    });
}

void add_qvir(std::vector<Check>& checks, int g, int order) {
    checks.push_back([g, order] {
        const QSeries q = qvir(g, order); // throws if degrees survive past 8g-5
        for (int k = 0; k < q.order(); k += 2)
            if (!q[k].is_zero())
                return boolean("Q^vir odd degrees g=" + std::to_string(g), false,
                               "even coefficient at q^" + std::to_string(k));
        return boolean("Q^vir degree window g=" + std::to_string(g), true, "");
    });
    checks.push_back([g, order] {
        const QSeries q = qvir(g, order);
        const int top = 8 * g - 4;
        for (int k = 0; k <= top; ++k) {
            const LaurentPoly expect = q[top - k].shifted(Var::t, 2 * k - top);
            if (q[k] != expect)
                return boolean("Q^vir palindrome g=" + std::to_string(g), false,
                               "q^" + std::to_string(k));
        }
        return boolean("Q^vir palindrome g=" + std::to_string(g), true, "");
    });
    checks.push_back([g, order] {
        const QSeries q = qvir(g, order);
        LaurentPoly at_one;
        for (int k = 0; k < q.order(); ++k) at_one += q[k];
        const LaurentPoly t = LaurentPoly::variable(Var::t);
        return equality("Q^vir(1,t) = (1+t^2) P(M21) g=" + std::to_string(g), at_one,
                        (LaurentPoly(1) + t.pow(2)) * poincare_m21(g));
    });
    checks.push_back([g, order] {
        const QSeries q = qmot(g, order);
        LaurentPoly at_one;
        for (int k = 0; k < q.order(); ++k) at_one += q[k];
        return equality("Q^mot(1) = (1+L) [M21] g=" + std::to_string(g), at_one,
                        (LaurentPoly(1) + lefschetz(1)) * higgs_motive_extract(g).m21);
    });
}

void add_compare(std::vector<Check>& checks, int g, int order) {
    checks.push_back([g, order] {
        CompareFG c = compare_F_G(g, order);
        if (!c.low.pass) return c.low;
        if (!c.high.pass) return c.high;
        std::string middle;
        for (const auto& [k, diff] : c.middle)
            if (!diff.is_zero()) middle += " q^" + std::to_string(k);
        return boolean("F^vir vs G ranges g=" + std::to_string(g), true,
                       middle.empty() ? "" : "middle-range differences at" + middle);
    });
}

void add_cks(std::vector<Check>& checks, int g) {
    for (int r = 2; r <= 3; ++r) {
        if ((r - 1) * (2 * g - 2) > 10) continue;
        checks.push_back([g, r] { return ratcurve_check(g, r); });
    }
}

void add_poles(std::vector<Check>& checks, int g) {
    checks.push_back([g] { return poles_limit_check(g, 0, 6, 12); });
    checks.push_back([g] { return poles_limit_check(g, 1, 6, 12); });
}

void add_minfty(std::vector<Check>& checks, int g) {
    for (int d : {1, 3, 5}) checks.push_back([g, d] { return b_sum_check(g, d); });
    checks.push_back([g] {
        for (int d = 2 - 2 * g; d < 0; ++d)
            if (triple_motive_chamber(g, d, 0) != triple_motive_eps(g, d))
                return boolean("chamber independence d<0", false, "d=" + std::to_string(d));
        return boolean("chamber independence d<0 g=" + std::to_string(g), true, "");
    });
}

} // namespace

std::vector<std::string> suite_names() {
    return {"macdonald", "pairs", "fmot", "fvir", "qvir", "compare", "cks", "poles", "minfty",
            "all"};
}

SuiteReport run_suite(const std::string& name, int g, int order) {
    CurveParams curve(g);
    if (order <= 0) order = 10 * g;
    std::vector<Check> checks;
    const bool all = name == "all";
    if (all || name == "macdonald") add_macdonald(checks, g);
    if (all || name == "pairs") add_pairs(checks, g);
    if (all || name == "fmot") add_fmot(checks, g, order);
    if (all || name == "fvir") add_fvir(checks, g, order);
    if (all || name == "qvir") add_qvir(checks, g, order);
    if (all || name == "compare") add_compare(checks, g, order);
    if (all || name == "cks") add_cks(checks, g);
    if (all || name == "poles") add_poles(checks, g);
    if (all || name == "minfty") add_minfty(checks, g);
    if (checks.empty()) throw std::invalid_argument("unknown suite: " + name);

    std::vector<std::future<CheckReport>> futures;
    futures.reserve(checks.size());
    for (auto& c : checks) futures.push_back(std::async(std::launch::async, c));

    SuiteReport report{name, {}, true};
    for (auto& f : futures) {
        CheckReport r;
        try {
            r = f.get();
        } catch (const std::exception& e) {
            r = CheckReport{"exception", false, e.what()};
        }
        report.pass = report.pass && r.pass;
        report.checks.push_back(std::move(r));
    }
    return report;
}

} // namespace wallcross
