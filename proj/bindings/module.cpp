#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wallcross/json_io.hpp"
#include "wallcross/verify.hpp"

namespace py = pybind11;
using namespace wallcross;

namespace {

FlipSign sign_from(const std::string& s) {
    if (s == "plus") return FlipSign::plus;
    if (s == "minus") return FlipSign::minus;
    throw std::invalid_argument("sign must be 'plus' or 'minus'");
}

PolesRegime regime_from(const std::string& s) {
    if (s == "eps") return PolesRegime::eps;
    if (s == "infty") return PolesRegime::infty;
    throw std::invalid_argument("regime must be 'eps' or 'infty'");
}

GenfunMode mode_from(const std::string& s) {
    if (s == "direct") return GenfunMode::direct;
    if (s == "closed") return GenfunMode::closed;
    throw std::invalid_argument("mode must be 'direct' or 'closed'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact motivic invariants of rank-2 Bradlow-Higgs moduli spaces";

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init<long>())
        .def("__repr__", &LaurentPoly::str)
        .def("__str__", &LaurentPoly::str)
        .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
        .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
        .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
        .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
        .def("is_zero", &LaurentPoly::is_zero)
        .def("to_json", [](const LaurentPoly& p) { return to_json(p); });

    py::class_<QSeries>(m, "QSeries")
        .def("__repr__", &QSeries::str)
        .def("__eq__", [](const QSeries& a, const QSeries& b) { return a == b; })
        .def("__getitem__", [](const QSeries& s, int n) { return s[n]; })
        .def_property_readonly("order", &QSeries::order)
        .def("to_json", [](const QSeries& s) { return to_json(s); })
        .def("to_csv", [](const QSeries& s) { return to_csv(s); });

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("name", &CheckReport::name)
        .def_readonly("passed", &CheckReport::pass)
        .def_readonly("detail", &CheckReport::detail)
        .def("__bool__", [](const CheckReport& r) { return r.pass; })
        .def("__repr__", [](const CheckReport& r) {
            return (r.pass ? "<pass " : "<FAIL ") + r.name + ">";
        });

    // building blocks
    m.def("lefschetz", &lefschetz, py::arg("k") = 1);
    m.def("sym_power", &sym_power);
    m.def("jacobian", &jacobian);
    m.def("proj_space", &proj_space);
    m.def("grassmann2", &grassmann2);
    m.def("sym2", &sym2);
    m.def("pvir", &pvir);
    m.def("zeta_series", &zeta_series);
    m.def("macdonald_check", &macdonald_check);

    m.def("serre_symmetric_check", &serre_symmetric_check);

    // pairs and triples
    m.def("critical_values", &critical_values);
    m.def("chamber_count", &chamber_count);
    m.def("pair_flip",
          [](int g, int d, int wall, const std::string& s) {
              return pair_flip(g, d, wall, sign_from(s));
          });
    m.def("pair_motive", &pair_motive);
    m.def("pair_genfun_motivic", &pair_genfun_motivic);
    m.def("pair_poincare", &pair_poincare);
    m.def("flip_W", [](int g, int d, int wall, const std::string& s) {
        return flip_W(g, d, wall, sign_from(s));
    });
    m.def("flip_B_minus", &flip_B_minus);
    m.def("attract_type1", &attract_type1);
    m.def("index_set", [](int g, int d, const std::string& kind) {
        static const std::map<std::string, IndexKind> kinds{{"i1_odd", IndexKind::i1_odd},
                                                            {"i2_odd", IndexKind::i2_odd},
                                                            {"i1_even", IndexKind::i1_even},
                                                            {"i2_even", IndexKind::i2_even},
                                                            {"i2_infty", IndexKind::i2_infty}};
        const auto it = kinds.find(kind);
        if (it == kinds.end()) throw std::invalid_argument("unknown index kind: " + kind);
        std::vector<std::pair<int, int>> out;
        for (const auto& p : index_set(g, d, it->second)) out.emplace_back(p.d1, p.d2);
        return out;
    });
    m.def("triple_motive_eps", &triple_motive_eps);
    m.def("triple_motive_chamber", &triple_motive_chamber);
    m.def("even_strata", [](int g, int d) {
        const EvenStrata s = even_strata(g, d);
        return py::make_tuple(s.x1, s.x2, s.m_ss);
    });
    m.def("triple_dim", &triple_dim, py::arg("g"), py::arg("d"), py::arg("gamma") = 0);
    m.def("b_sum_check", &b_sum_check);
    m.def("poles_motive", [](int g, int d, int gamma, const std::string& regime) {
        return poles_motive(g, d, gamma, regime_from(regime));
    });
    m.def("poles_limit_check", &poles_limit_check);
    m.def("higgs_motive_extract", [](int g) {
        const HiggsExtract h = higgs_motive_extract(g);
        return py::make_tuple(h.m21, h.report);
    });

    // generating functions
    m.def("fmot", [](int g, int order, const std::string& mode) {
        return fmot(g, order, mode_from(mode));
    });
    m.def("fvir_direct", &fvir_direct);
    m.def("fvir_closed_cleared", &fvir_closed_cleared);
    m.def("qvir", &qvir);
    m.def("qmot", &qmot);
    m.def("char_variety_mixed_hodge", &char_variety_mixed_hodge);
    m.def("g_series", &g_series);
    m.def("poincare_m21", &poincare_m21);

    // CKS combinatorics
    m.def("cks_weight", [](const std::string& spec, int n) {
        return cks_weight(graph_from_spec(spec), n);
    });
    m.def("u_series", [](const std::string& spec, int max_n) {
        return u_series(graph_from_spec(spec), max_n);
    });
    m.def("betti1", [](const std::string& spec, std::uint64_t mask) {
        return betti1(graph_from_spec(spec), mask);
    });
    m.def("cks_regime_internal", [](const std::string& spec, int max_removed) {
        return cks_regime_internal(graph_from_spec(spec), max_removed);
    });
    m.def("ratcurve_check", &ratcurve_check);
    m.def("compare_F_G", [](int g, int order) {
        const CompareFG c = compare_F_G(g, order);
        py::list middle;
        for (const auto& [k, diff] : c.middle) middle.append(py::make_tuple(k, diff));
        return py::make_tuple(c.low.pass && c.high.pass, middle);
    });

    // verification suites
    m.def("run_suite",
          [](const std::string& name, int g, int order) {
              const SuiteReport r = run_suite(name, g, order);
              py::list checks;
              for (const auto& c : r.checks) checks.append(c);
              return py::make_tuple(r.pass, checks);
          },
          py::arg("name"), py::arg("g"), py::arg("order") = 0);
    m.def("suite_names", &suite_names);

    m.def("laurent_from_json", &laurent_from_json);
}
