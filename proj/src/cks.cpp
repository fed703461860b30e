#include "wallcross/cks.hpp"

#include <numeric>
#include <stdexcept>

#include "wallcross/errors.hpp"

namespace wallcross {

Multigraph::Multigraph(int vertices, std::vector<std::pair<int, int>> edge_list)
    : vertex_count(vertices), edges(std::move(edge_list)) {
    if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (edges.size() > 62) throw std::invalid_argument("too many edges for subset enumeration");
    for (const auto& [u, v] : edges)
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
}

Multigraph Multigraph::banana(int k) {
    std::vector<std::pair<int, int>> e(static_cast<std::size_t>(k), {0, 1});
    return Multigraph(2, std::move(e));
}

Multigraph Multigraph::rose(int k) {
    std::vector<std::pair<int, int>> e(static_cast<std::size_t>(k), {0, 0});
    return Multigraph(1, std::move(e));
}

int betti1(const Multigraph& graph, std::uint64_t removed_mask) {
    // b1 = E' - V + c via union-find on the surviving edges
    std::vector<int> parent(static_cast<std::size_t>(graph.vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    int surviving = 0;
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        if (removed_mask & (std::uint64_t{1} << i)) continue;
        ++surviving;
        int a = find(graph.edges[i].first), b = find(graph.edges[i].second);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    int components = 0;
    for (int v = 0; v < graph.vertex_count; ++v)
        if (find(v) == v) ++components;
    return surviving - graph.vertex_count + components;
}

bool cks_regime_internal(const Multigraph& graph, int max_removed) {
    const std::size_t ne = graph.edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
        const int removed = __builtin_popcountll(mask);
        if (removed > max_removed) continue;
        // c = b1 - E' + V
        const int components =
            betti1(graph, mask) - (static_cast<int>(ne) - removed) + graph.vertex_count;
        if (components > 1) return false;
    }
    return true;
}

namespace {

/// [Wedge^k (Q^b + L^b)] = sum_j C(b,j) C(b,k-j) w^(k-j)
LaurentPoly wedge_class(int b, int k) {
    LaurentPoly r;
    if (k < 0) return r;
    auto choose = [](int n, int m) {
        if (m < 0 || m > n) return Rat(0);
        Rat c = 1;
        for (int i = 0; i < m; ++i) {
            c *= n - i;
            c /= i + 1;
        }
        return c;
    };
    for (int j = 0; j <= k; ++j) {
        Rat c = choose(b, j) * choose(b, k - j);
        if (c != 0) r += LaurentPoly::monomial({0, 0, 0, k - j}, c);
    }
    return r;
}

} // namespace

LaurentPoly cks_weight(const Multigraph& graph, int n) {
    if (n < 0) throw std::invalid_argument("cks_weight: n must be >= 0");
    const std::size_t ne = graph.edges.size();
    LaurentPoly total;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
        const int i = __builtin_popcountll(mask);
        if (i > n) continue;
        const int b = betti1(graph, mask);
        LaurentPoly term = wedge_class(b, n - i);
        if (i % 2 == 1) term = -term;
        total += term;
    }
    if (n % 2 == 1) total = -total;
    return total;
}

QSeries u_series(const Multigraph& graph, int max_n) {
    if (max_n < 1) throw std::invalid_argument("u_series: max_n must be >= 1");
    QSeries r('q', max_n);
    for (int n = 0; n < max_n; ++n) r.set(n, cks_weight(graph, n));
    return r;
}

CheckReport ratcurve_check(int g, int r) {
    CurveParams curve(g);
    if (r < 2) throw std::invalid_argument("ratcurve_check: rank must be >= 2");
    const int m = (r - 1) * (2 * g - 2); // node count and congruence modulus
    CheckReport report{"ratcurve g=" + std::to_string(g) + " r=" + std::to_string(r), true, ""};
    const QSeries u_banana = u_series(Multigraph::banana(m), m);
    const QSeries u_rose = u_series(Multigraph::rose(m), m);
    const LaurentPoly w = LaurentPoly::variable(Var::w);
    QSeries factor('q', m, LaurentPoly(1));
    factor.add(1, -(LaurentPoly(1) + w));
    factor.add(2, w);
    const QSeries rhs = factor * u_banana;
    for (int n = 0; n < m; ++n) {
        if (u_rose[n] != rhs[n]) {
            report.pass = false;
            report.detail = "q^" + std::to_string(n) + ": " + u_rose[n].str() + " vs " +
                            rhs[n].str();
            return report;
        }
    }
    return report;
}

} // namespace wallcross
