#include "wallcross/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace wallcross {

using nlohmann::json;

namespace {

json poly_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"e", {e[0], e[1], e[2], e[3]}},
                         {"num", c.get_num().get_str()},
                         {"den", c.get_den().get_str()}});
    }
    return json{{"vars", {"x", "y", "t", "w"}}, {"terms", terms}};
}

} // namespace

std::string to_json(const LaurentPoly& p) { return poly_json(p).dump(); }

std::string to_json(const QSeries& s) {
    json coeffs = json::array();
    for (int n = 0; n < s.order(); ++n) coeffs.push_back(poly_json(s[n]));
    return json{{"var", std::string(1, s.var())}, {"order", s.order()}, {"coeffs", coeffs}}
        .dump();
}

std::string to_csv(const QSeries& s) {
    std::ostringstream os;
    os << "q_degree,t_polynomial\n";
    for (int n = 0; n < s.order(); ++n) {
        if (s[n].is_zero()) continue;
        os << n << ",\"" << s[n].str() << "\"\n";
    }
    return os.str();
}

LaurentPoly laurent_from_json(const std::string& text) {
    const json j = json::parse(text);
    LaurentPoly p;
    for (const auto& term : j.at("terms")) {
        const auto& e = term.at("e");
        Exponents exps{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(),
                       e.at(3).get<int>()};
        Rat c(term.at("num").get<std::string>() + "/" + term.at("den").get<std::string>());
        c.canonicalize();
        p += LaurentPoly::monomial(exps, c);
    }
    return p;
}

Multigraph graph_from_spec(const std::string& text) {
    auto shorthand = [&](const std::string& prefix) -> int {
        if (text.rfind(prefix, 0) != 0) return -1;
        return std::stoi(text.substr(prefix.size()));
    };
    if (int k = shorthand("banana:"); k >= 0) return Multigraph::banana(k);
    if (int k = shorthand("rose:"); k >= 0) return Multigraph::rose(k);
    const json j = json::parse(text);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Multigraph(j.at("vertices").get<int>(), std::move(edges));
}

} // namespace wallcross
