#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wallcross/blocks.hpp"

namespace wallcross {

/// Dual graph of a nodal curve: loops and parallel edges allowed.
struct Multigraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    Multigraph(int vertices, std::vector<std::pair<int, int>> edge_list);

    /// Two vertices joined by k parallel edges.
    static Multigraph banana(int k);
    /// One vertex with k loops.
    static Multigraph rose(int k);
};

/// First Betti number of the graph after deleting the edges selected by
/// the bitmask (bit i set = edge i removed).
int betti1(const Multigraph& graph, std::uint64_t removed_mask);

/// True when no removal of up to max_removed edges disconnects the graph;
/// the weight-polynomial formula is only backed by the source lemma inside
/// this regime, outside it results are evaluated mechanically but flagged.
bool cks_regime_internal(const Multigraph& graph, int max_removed);

/// Weight polynomial of the n-th CKS complex as an alternating sum over
/// edge subsets of size <= n:
///   (-1)^n sum_i (-1)^i sum_{|I|=i} [Wedge^(n-i)(Q^b + L^b)],  b = b1(G - I),
/// in the weight variable w standing for the Tate class L.
LaurentPoly cks_weight(const Multigraph& graph, int n);

/// U(Sigma) = sum_{n=0}^{max_n - 1} q^n [CKS^n[-n]].
QSeries u_series(const Multigraph& graph, int max_n);

/// Congruence U(rose) = (1-q)(1-qw) U(banana) mod q^((r-1)(2g-2)) for the
/// banana/rose pair on (r-1)(2g-2) edges.
CheckReport ratcurve_check(int g, int r);

} // namespace wallcross
