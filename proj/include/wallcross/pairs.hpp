#pragma once

#include <vector>

#include "wallcross/blocks.hpp"

namespace wallcross {

enum class FlipSign { plus, minus };

/// Walls for rank-2 pairs and triples of degree d: the positive integers
/// <= d with the parity of d; empty for d <= 0.
std::vector<int> critical_values(int d);

/// Chamber count for degree d: one chamber per wall gap plus the final
/// unbounded one (a single chamber when there are no walls).
int chamber_count(int d);

/// Motive of the pair flip locus PW^{d,+/-} at a wall.
LaurentPoly pair_flip(int g, int d, int wall, FlipSign sign);

/// Motive of the pair moduli space in the given chamber, computed by the
/// downward wall-crossing walk from the empty chamber above sigma = d.
LaurentPoly pair_motive(int g, int d, int chamber);

/// Closed-form generating function sum_n [M_eps^{2,2n+1}] u^n =
/// L^g [J] Z(C,u) / ((L-1)(1-L^2 u)) - [J] Z(C,L u) / ((L-1)(1-u)),
/// assembled over the common denominator L-1 and divided out exactly.
QSeries pair_genfun_motivic(int g, int order);

/// Poincare polynomial of the degree-d pair moduli space. Odd d uses the
/// closed form (1+t)^2g / (1-t^2) * sum_i (t^2i - t^(2g-2+2d-4i)) P(S^i)
/// and cross-checks it against the wall-crossing walk; the closed form
/// does not cover even degree, which falls back to the walk.
LaurentPoly pair_poincare(int g, int d);

} // namespace wallcross
