#include "wallcross/blocks.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wallcross/errors.hpp"

namespace wallcross {

CurveParams::CurveParams(int genus) : g(genus) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
}

namespace {

const LaurentPoly kX = LaurentPoly::variable(Var::x);
const LaurentPoly kY = LaurentPoly::variable(Var::y);
const LaurentPoly kT = LaurentPoly::variable(Var::t);
const LaurentPoly kOne = LaurentPoly(1);

std::string diff_witness(const char* what, int where, const LaurentPoly& a,
                         const LaurentPoly& b) {
    std::ostringstream os;
    os << what << " differ at " << where << ": " << a.str() << " vs " << b.str();
    return os.str();
}

} // namespace

QSeries zeta_series(int g, int order) {
    CurveParams curve(g);
    if (order < 1) throw std::invalid_argument("zeta_series: order must be >= 1");
    const int work = std::max(order, 2 * g + 1);
    QSeries fx('u', work, kOne);
    fx.add(1, -kX);
    QSeries fy('u', work, kOne);
    fy.add(1, -kY);
    QSeries num('u', work, kOne);
    for (int i = 0; i < g; ++i) num = num * fx;
    for (int i = 0; i < g; ++i) num = num * fy;
    return series_expand(num.truncated(order),
                         {one_minus('u', 1, kOne, order), one_minus('u', 1, lefschetz(1), order)},
                         order);
}

LaurentPoly sym_power(int g, int n) {
    CurveParams curve(g);
    if (n < 0) return LaurentPoly();
    static std::mutex mu;
    static std::map<int, std::vector<LaurentPoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& v = cache[g];
    if (static_cast<int>(v.size()) <= n) {
        int order = n + 1;
        QSeries z = zeta_series(g, order);
        v.resize(static_cast<std::size_t>(order));
        for (int k = 0; k < order; ++k) v[static_cast<std::size_t>(k)] = z[k];
    }
    return v[static_cast<std::size_t>(n)];
}

LaurentPoly jacobian(int g) {
    CurveParams curve(g);
    return (kOne - kX).pow(g) * (kOne - kY).pow(g);
}

LaurentPoly proj_space(int n) {
    LaurentPoly p;
    for (int k = 0; k <= n; ++k) p += lefschetz(k);
    return p;
}

LaurentPoly grassmann2(int n) {
    if (n < 2) return LaurentPoly();
    LaurentPoly num = (lefschetz(n) - kOne) * (lefschetz(n - 1) - kOne);
    LaurentPoly den = (lefschetz(2) - kOne) * (lefschetz(1) - kOne);
    return exact_div(num, den);
}

LaurentPoly sym2(const LaurentPoly& e) {
    if (e.uses(Var::t) || e.uses(Var::w))
        throw std::invalid_argument("sym2 expects an E-polynomial in x, y only");
    std::map<Var, LaurentPoly> frobenius{{Var::x, kX.pow(2)}, {Var::y, kY.pow(2)}};
    LaurentPoly r = (e * e + substitute(e, frobenius)) * Rat(1, 2);
    if (!r.integer_coefficients())
        throw NonIntegral("sym2 produced fractional coefficients; input was not an E-polynomial");
    return r;
}

LaurentPoly pvir(const LaurentPoly& e, int dim) {
    if (dim < 0) throw std::invalid_argument("pvir: dim must be >= 0");
    if (e.uses(Var::t) || e.uses(Var::w))
        throw std::invalid_argument("pvir expects an E-polynomial in x, y only");
    LaurentPoly minus_inv_t = LaurentPoly::monomial({0, 0, -1, 0}, Rat(-1));
    std::map<Var, LaurentPoly> bind{{Var::x, minus_inv_t}, {Var::y, minus_inv_t}};
    LaurentPoly r = substitute(e, bind).shifted(Var::t, 2 * dim);
    if (r.min_exponent(Var::t) < 0)
        throw NegativeExponent("pvir result is not polynomial; wrong dimension " +
                               std::to_string(dim));
    return r;
}

CheckReport macdonald_check(int g, int order) {
    CheckReport report{"macdonald g=" + std::to_string(g), true, ""};
    if (order < 1) throw std::invalid_argument("macdonald_check: order must be >= 1");
    QSeries direct('q', order);
    for (int n = 0; n < order; ++n) direct.set(n, pvir(sym_power(g, n), n));
    QSeries num('q', std::max(order, 2 * g + 1), kOne);
    {
        QSeries base('q', num.order(), kOne);
        base.add(1, kT);
        QSeries acc('q', num.order(), kOne);
        for (int i = 0; i < 2 * g; ++i) acc = acc * base;
        num = acc;
    }
    QSeries closed = series_expand(num.truncated(order),
                                   {one_minus('q', 1, kOne, order),
                                    one_minus('q', 1, kT.pow(2), order)},
                                   order);
    for (int n = 0; n < order; ++n) {
        if (direct[n] != closed[n]) {
            report.pass = false;
            report.detail = diff_witness("q-coefficients", n, direct[n], closed[n]);
            return report;
        }
    }
    return report;
}

CheckReport serre_symmetric_check(int g, int k) {
    CurveParams curve(g);
    if (k < 0 || k > 2 * g - 2)
        throw std::invalid_argument("serre_symmetric_check: need 0 <= k <= 2g-2");
    // Identity: [S^k] = L^(k-g+1) [S^(2g-2-k)] + [CP^(k-g)] [J]. For
    // k < g-1 the L-power is negative, so evaluate the equivalent identity
    // with k replaced by 2g-2-k.
    int kk = (k < g - 1) ? 2 * g - 2 - k : k;
    LaurentPoly lhs = sym_power(g, kk);
    LaurentPoly rhs =
        lefschetz(kk - g + 1) * sym_power(g, 2 * g - 2 - kk) + proj_space(kk - g) * jacobian(g);
    CheckReport report{"serre g=" + std::to_string(g) + " k=" + std::to_string(k), lhs == rhs,
                       ""};
    if (!report.pass) report.detail = diff_witness("sides", kk, lhs, rhs);
    return report;
}

} // namespace wallcross
