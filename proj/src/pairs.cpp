#include "wallcross/pairs.hpp"

#include <stdexcept>

#include "wallcross/errors.hpp"

namespace wallcross {

std::vector<int> critical_values(int d) {
    std::vector<int> walls;
    if (d <= 0) return walls;
    for (int w = (d % 2 == 0) ? 2 : 1; w <= d; w += 2) walls.push_back(w);
    return walls;
}

int chamber_count(int d) {
    return static_cast<int>(critical_values(d).size()) + 1;
}

namespace {

// Walls above d are tolerated: every flip locus there carries an empty
// symmetric power, so the formulas vanish on their own.
void require_wall(int d, int wall) {
    if (wall < 1 || (wall - d) % 2 != 0)
        throw NotAWall("sigma = " + std::to_string(wall) + " is not a critical value for d = " +
                       std::to_string(d));
}

} // namespace

LaurentPoly pair_flip(int g, int d, int wall, FlipSign sign) {
    CurveParams curve(g);
    require_wall(d, wall);
    const int s = (d - wall) / 2;
    if (sign == FlipSign::plus)
        return sym_power(g, s) * jacobian(g) * proj_space(wall + g - 2);
    return sym_power(g, s) * jacobian(g) * proj_space(s - 1);
}

LaurentPoly pair_motive(int g, int d, int chamber) {
    CurveParams curve(g);
    if (d < 0) return LaurentPoly();
    const auto walls = critical_values(d);
    const int chambers = chamber_count(d);
    if (chamber < 0 || chamber >= chambers)
        throw std::invalid_argument("pair_motive: chamber out of range");
    // The top chamber (sigma > d) is empty; walk down across each wall.
    LaurentPoly m;
    for (int k = static_cast<int>(walls.size()) - 1; k >= chamber; --k)
        m += pair_flip(g, d, walls[static_cast<std::size_t>(k)], FlipSign::plus) -
             pair_flip(g, d, walls[static_cast<std::size_t>(k)], FlipSign::minus);
    return m;
}

QSeries pair_genfun_motivic(int g, int order) {
    CurveParams curve(g);
    if (order < 1) throw std::invalid_argument("pair_genfun_motivic: order must be >= 1");
    QSeries zeta = zeta_series(g, order);
    QSeries zeta_lu('u', order);
    for (int n = 0; n < order; ++n) zeta_lu.set(n, zeta[n] * lefschetz(n));

    QSeries a = lefschetz(g) * series_expand(zeta, {one_minus('u', 1, lefschetz(2), order)}, order);
    QSeries b = series_expand(zeta_lu, {one_minus('u', 1, LaurentPoly(1), order)}, order);
    QSeries num = a - b;

    const LaurentPoly l_minus_one = lefschetz(1) - LaurentPoly(1);
    QSeries result('u', order);
    for (int n = 0; n < order; ++n)
        result.set(n, jacobian(g) * exact_div(num[n], l_minus_one));
    return result;
}

LaurentPoly pair_poincare(int g, int d) {
    CurveParams curve(g);
    if (d < 0) throw std::invalid_argument("pair_poincare: d must be >= 0");
    const LaurentPoly from_walk = pvir(pair_motive(g, d, 0), d + 2 * (g - 1));
    if (d % 2 == 0) return from_walk; // no closed form for even degree
    const LaurentPoly t = LaurentPoly::variable(Var::t);
    LaurentPoly sum;
    for (int i = 0; i <= d / 2; ++i) {
        LaurentPoly weight = t.pow(2 * i) - t.pow(2 * g - 2 + 2 * d - 4 * i);
        sum += weight * pvir(sym_power(g, i), i);
    }
    LaurentPoly numerator = (LaurentPoly(1) + t).pow(2 * g) * sum;
    LaurentPoly closed = exact_div(numerator, LaurentPoly(1) - t.pow(2));
    if (closed != from_walk)
        throw RangeMismatch("pair Poincare closed form disagrees with the wall-crossing walk at d=" +
                            std::to_string(d));
    return closed;
}

} // namespace wallcross
