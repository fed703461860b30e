#pragma once

#include <utility>
#include <vector>

#include "wallcross/triples.hpp"

namespace wallcross {

enum class GenfunMode { direct, closed };

/// F^mot(q) = sum_{n >= 1-g} [M_eps^{2,2n+1}] q^(2n+2g-1). Direct mode sums
/// the chamber motives; closed mode assembles the four closed-form pieces
/// (zeta terms over the common denominator L-1, the two Gamma terms, Theta).
QSeries fmot(int g, int order, GenfunMode mode);

/// F^vir(q,t) = sum P^vir(M_eps^{2,2n+1}, t) q^(2n+2g-1), direct summation.
QSeries fvir_direct(int g, int order);

/// 2 (1-t^2) F^vir from the closed form; the pure-t denominators are
/// cleared so every coefficient stays polynomial in t.
QSeries fvir_closed_cleared(int g, int order);

/// Q^vir = (1-q^2)(1-q^2 t^4) F^vir, a polynomial with odd q-degrees in
/// [1, 8g-5]; throws TruncationNotZero if a higher coefficient survives.
QSeries qvir(int g, int order);

/// Q^mot = (1-q^2)(1-q^2 L^2) F^mot, same degree window.
QSeries qmot(int g, int order);

/// Mixed Hodge polynomial H(M_B^2, q, t) of the rank-2 twisted character
/// variety, expanded as a q-series; equals PH(M^{2,1}, q, t) by P = W.
/// Coefficients are checked to be nonnegative integers vanishing above
/// q-degree 8g-6.
QSeries char_variety_mixed_hodge(int g, int order);

/// G(q,t) = odd_q(PH / ((1-q)(1-q t^2))).
QSeries g_series(int g, int order);

/// P(M^{2,1}, t) = PH(1, t).
LaurentPoly poincare_m21(int g);

/// Range comparison of Thm BHMSMY: F^vir - G vanishes at every odd
/// q-degree <= 2g-3 and in [6g-5, order); the middle-range difference is
/// reported without a sign assertion.
struct CompareFG {
    CheckReport low;
    CheckReport high;
    std::vector<std::pair<int, LaurentPoly>> middle;
};
CompareFG compare_F_G(int g, int order);

} // namespace wallcross
