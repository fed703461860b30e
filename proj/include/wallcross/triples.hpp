#pragma once

#include <vector>

#include "wallcross/pairs.hpp"

namespace wallcross {

struct IndexPair {
    int d1;
    int d2;
};
bool operator==(const IndexPair& a, const IndexPair& b);

/// Fixed-point index families. The o/e kinds are the ordinary odd/even
/// sets, i2_infty the sigma = infinity type-2 family, and the poles kinds
/// take an extra pole order gamma.
enum class IndexKind { i1_odd, i2_odd, i1_even, i2_even, i2_infty };
enum class PolesKind { type1_eps, type2_eps, type2_infty };

std::vector<IndexPair> index_set(int g, int d, IndexKind kind);
std::vector<IndexPair> poles_index_set(int g, int d, int gamma, PolesKind kind);

/// Triple flip-locus motives at a wall:
///   [W^{d,+}] = L^2g [CP^(2g-3)] [S^((d-s)/2)] [J] + L^(3g-2) [S^((d-s)/2)] [S^s]
///   [W^{d,-}] = L^2g [S^((d-s)/2)] [J] [CP^((d+s)/2+g-2)]
LaurentPoly flip_W(int g, int d, int wall, FlipSign sign);

/// [B^{d,-}] at a wall; the internal (L^((d-s)/2) - L)/(L - 1) factor is an
/// exact quotient for every (d-s)/2 >= 0 and evaluates to -1 at exponent 0.
LaurentPoly flip_B_minus(int g, int d, int wall);

/// Type-1 attracting cell [F^((d1,d2),1+)]. The correction summand
/// (L^(4g-2)-L^(4g-3)) [S^d1] ([S^d2] - [J][CP^(d2-g)]) is evaluated in its
/// Serre-dual form (L-1) L^(3g-2+d2) [S^d1] [S^(2g-2-d2)], which stays in
/// the polynomial ring for every d2 and vanishes for d2 > 2g-2.
LaurentPoly attract_type1(int g, int d1, int d2);

/// Motive of M_eps^{2,d}; the zero polynomial for d < 2-2g (empty moduli).
LaurentPoly triple_motive_eps(int g, int d);

/// Motive in an arbitrary chamber, walking up from the epsilon chamber:
/// [M_(s+)] = [M_(s-)] - [W+] + [W-]. The last chamber is M_infinity.
LaurentPoly triple_motive_chamber(int g, int d, int chamber);

/// Stratum classes of M_infinity for one splitting d1 + d2 = d.
struct InftyStrata {
    LaurentPoly smooth_cell; // d1 < d2 only
    LaurentPoly x2;          // d1 == d2 (even degree) only
    LaurentPoly nsw_plus;    // d1 > d2
    LaurentPoly sw_plus;     // d1 > d2
    LaurentPoly spf2;        // d1 > d2
};
InftyStrata infty_strata(int g, int d, int d1, int d2);

/// M_infinity decomposition against the chamber walk, using the wall-sum
/// relation sum [B+] = L^(4g-3) [M_eps pairs] + sum [B-]. Odd d >= 1 or
/// d < 0 (where the identity is the bare cell sum).
CheckReport b_sum_check(int g, int d);

/// Final combined even-degree strata (no Brill-Noether class remains).
struct EvenStrata {
    LaurentPoly x1;
    LaurentPoly x2;
    LaurentPoly m_ss;
};
EvenStrata even_strata(int g, int d);

enum class PolesRegime { eps, infty };

/// Motive of M^{2,d}(gamma) for gamma >= 1 in the epsilon or infinity
/// regime; the infinity regime needs gamma > d.
LaurentPoly poles_motive(int g, int d, int gamma, PolesRegime regime);

/// P^vir stabilization of the poles motives against the limit series
/// (1+t^3)^2g (1+t)^2g / ((1-t^2)^2 (1-t^4)) below the degree bound.
CheckReport poles_limit_check(int g, int d, int degree_bound, int gamma_max);

/// Extraction of [M^{2,1}] from the Serre-duality identity
/// [M_eps^{2,2n+1}] - L^(2n-2g+3) [M_eps^{2,4g-5-2n}] = [M^{2,1}] [CP^(2n-2g+2)],
/// defined at n = g-1 and cross-checked for n in {g, g+1, g+2}.
struct HiggsExtract {
    LaurentPoly m21;
    CheckReport report;
};
HiggsExtract higgs_motive_extract(int g);

/// Moduli dimensions: d + 1 + 6(g-1) without poles, d + 6g - 6 + 4 gamma
/// with poles of order gamma >= 1.
int triple_dim(int g, int d, int gamma = 0);

} // namespace wallcross
