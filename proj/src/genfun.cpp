#include "wallcross/genfun.hpp"

#include <stdexcept>

#include "wallcross/errors.hpp"

namespace wallcross {

namespace {

const LaurentPoly kOne = LaurentPoly(1);
const LaurentPoly kT = LaurentPoly::variable(Var::t);

LaurentPoly l_minus_one() { return lefschetz(1) - kOne; }

QSeries qs_pow(const QSeries& base, int k) {
    QSeries r(base.var(), base.order(), kOne);
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

/// 1 + c * q^p as a series.
QSeries binom(char var, int order, int p, const LaurentPoly& c) {
    QSeries r(var, order, kOne);
    r.add(p, c);
    return r;
}

/// Z(C, q^2) and Z(C, L q^2) as q-series.
QSeries zeta_q2(int g, int order, bool lefschetz_twist) {
    QSeries r('q', order);
    for (int n = 0; 2 * n < order; ++n) {
        LaurentPoly c = sym_power(g, n);
        if (lefschetz_twist) c *= lefschetz(n);
        r.set(2 * n, c);
    }
    return r;
}

/// Theta(q): the I1 correction terms of the odd-degree assembly, with the
/// bracket [S^d2] - [J][CP^(d2-g)] in its Serre-dual polynomial form.
QSeries theta(int g, int order) {
    QSeries r('q', order);
    for (int n = 0; n <= 2 * g - 3; ++n) {
        const int qdeg = 2 * n + 2 * g - 1;
        if (qdeg >= order) continue;
        LaurentPoly sum;
        for (int i = 0; i <= n; ++i) {
            const int d2 = 2 * n + 1 - i;
            if (d2 > 2 * g - 2) continue;
            sum += l_minus_one() * lefschetz(3 * g - 2 + d2) * sym_power(g, i) *
                   sym_power(g, 2 * g - 2 - d2);
        }
        r.add(qdeg, sum);
    }
    return r;
}

void divide_coeffs(QSeries& s, const LaurentPoly& den) {
    for (int n = 0; n < s.order(); ++n) s.set(n, exact_div(s[n], den));
}

} // namespace

QSeries fmot(int g, int order, GenfunMode mode) {
    CurveParams curve(g);
    if (order < 1) throw std::invalid_argument("fmot: order must be >= 1");
    if (mode == GenfunMode::direct) {
        QSeries r('q', order);
        for (int k = 1; k < order; k += 2) r.set(k, triple_motive_eps(g, k - 2 * g + 2));
        return r;
    }
    // pairs term over the common denominator L - 1
    QSeries a = lefschetz(g) *
                series_expand(zeta_q2(g, order, false),
                              {one_minus('q', 2, lefschetz(2), order)}, order);
    QSeries b = series_expand(zeta_q2(g, order, true), {one_minus('q', 2, kOne, order)}, order);
    QSeries pairs_term = a - b;
    divide_coeffs(pairs_term, l_minus_one());
    pairs_term *= jacobian(g) * lefschetz(4 * g - 3);
    QSeries total = pairs_term.shifted(2 * g - 1);

    // L^(5g-4) q^(4g-4) Z(C, L q^2) Gamma(1/(Lq)), expanded term by term
    const QSeries z_twist = zeta_q2(g, order, true);
    for (int j = 0; j <= g - 2; ++j) {
        QSeries piece = z_twist * (sym_power(g, 2 * j + 1) * lefschetz(5 * g - 5 - 2 * j));
        total += piece.shifted(4 * g - 5 - 2 * j);
    }

    // L^(4g-3) Z(C, q^2) Gamma(q)
    QSeries gamma_q('q', order);
    for (int j = 0; j <= g - 2; ++j) gamma_q.add(2 * j + 1, sym_power(g, 2 * j + 1));
    total += zeta_q2(g, order, false) * gamma_q * lefschetz(4 * g - 3);

    total += theta(g, order);
    return total;
}

QSeries fvir_direct(int g, int order) {
    CurveParams curve(g);
    QSeries r('q', order);
    for (int k = 1; k < order; k += 2) {
        const int d = k - 2 * g + 2;
        r.set(k, pvir(triple_motive_eps(g, d), triple_dim(g, d)));
    }
    return r;
}

QSeries fvir_closed_cleared(int g, int order) {
    CurveParams curve(g);
    const int N = order;
    const LaurentPoly t2 = kT.pow(2), t3 = kT.pow(3), t4 = kT.pow(4);
    const LaurentPoly one_minus_t2 = kOne - t2;
    const QSeries f_q2 = one_minus('q', 2, kOne, N);
    const QSeries f_q2t2 = one_minus('q', 2, t2, N);
    const QSeries f_q2t4 = one_minus('q', 2, t4, N);
    const QSeries f_qt2 = one_minus('q', 1, t2, N);
    const QSeries f_qt2m = one_minus('q', 1, -t2, N);
    const QSeries f_q = one_minus('q', 1, kOne, N);
    const QSeries f_qm = one_minus('q', 1, -kOne, N);

    const QSeries pow_1_qt = qs_pow(binom('q', N, 1, kT), 2 * g);        // (1+qt)^2g
    const QSeries pow_1_mqt = qs_pow(binom('q', N, 1, -kT), 2 * g);      // (1-qt)^2g
    const QSeries pow_q2t = qs_pow(binom('q', N, 2, kT), 2 * g);         // (1+q^2 t)^2g
    const QSeries pow_q2t3 = qs_pow(binom('q', N, 2, t3), 2 * g);        // (1+q^2 t^3)^2g
    const LaurentPoly pow_1_t = (kOne + kT).pow(2 * g);                  // (1+t)^2g

    // odd_q-style bracket (1+qt)^2g/((1-qt^2)(1-q)) - (1-qt)^2g/((1+qt^2)(1+q))
    const QSeries odd_bracket = series_expand(pow_1_qt, {f_qt2, f_q}, N) -
                                series_expand(pow_1_mqt, {f_qt2m, f_qm}, N);

    // terms 1 and 2, cleared: 2 q^(2g-1)(1+t)^2g ((1+q^2t^3)^2g - t^2g (1+q^2t)^2g)
    //                         / ((1-q^2)(1-q^2t^2)(1-q^2t^4))
    QSeries t12 = series_expand((pow_q2t3 - kT.pow(2 * g) * pow_q2t) * (Rat(2) * pow_1_t),
                                {f_q2, f_q2t2, f_q2t4}, N)
                      .shifted(2 * g - 1);

    // term 3, cleared: (1-t^2) q^(2g-2) t^(4g-4) (1+q^2t)^2g
    //                  / ((1-q^2)(1-q^2t^2)) * odd_bracket
    QSeries t3s = series_expand(pow_q2t * odd_bracket, {f_q2, f_q2t2}, N);
    t3s *= one_minus_t2 * kT.pow(4 * g - 4);
    t3s = t3s.shifted(2 * g - 2);

    // term 4, cleared: 2 q^(2g-2) t^(4g-4) (1+q^2t)^2g (1+t)^2g
    //                  (q t^(4-2g)/(1-q^2t^4) - q/(1-q^2)) / ((1-q^2)(1-q^2t^2)).
    // The even projection in the Gamma tail contributes both half terms
    // here, so the cleared coefficient is 2; the direct sum pins it down.
    QSeries inner = series_expand(QSeries('q', N, kOne), {f_q2t4}, N) *
                        LaurentPoly::monomial({0, 0, 4 - 2 * g, 0}, Rat(1)) -
                    series_expand(QSeries('q', N, kOne), {f_q2}, N);
    QSeries t4s = series_expand(pow_q2t * inner.shifted(1), {f_q2, f_q2t2}, N);
    t4s *= pow_1_t * kT.pow(4 * g - 4) * Rat(2);
    t4s = t4s.shifted(2 * g - 2);

    // term 5, cleared: (1-t^2) (1+q^2t^3)^2g / ((1-q^2t^2)(1-q^2t^4)) * odd_bracket
    QSeries t5s = series_expand(pow_q2t3 * odd_bracket, {f_q2t2, f_q2t4}, N);
    t5s *= one_minus_t2;

    // term 6, cleared: -2 q^(2g-1) (1+t)^2g (1+q^2t^3)^2g
    //                  (1/(1-q^2) - t^2g/(1-q^2t^4)) / ((1-q^2t^2)(1-q^2t^4))
    QSeries inner6 = series_expand(QSeries('q', N, kOne), {f_q2}, N) -
                     kT.pow(2 * g) * series_expand(QSeries('q', N, kOne), {f_q2t4}, N);
    QSeries t6s = series_expand(pow_q2t3 * inner6, {f_q2t2, f_q2t4}, N);
    t6s *= Rat(-2) * pow_1_t;
    t6s = t6s.shifted(2 * g - 1);

    // Theta term, cleared: 2 (1-t^2) t^(8g-6) E(Theta(u), -1/t, -1/t) at u = q t^2
    const QSeries th = theta(g, N);
    QSeries t7s('q', N);
    const LaurentPoly minus_inv_t = LaurentPoly::monomial({0, 0, -1, 0}, Rat(-1));
    const std::map<Var, LaurentPoly> bind{{Var::x, minus_inv_t}, {Var::y, minus_inv_t}};
    for (int k = 0; k < N; ++k) {
        if (th[k].is_zero()) continue;
        LaurentPoly c = substitute(th[k], bind).shifted(Var::t, 8 * g - 6 + 2 * k);
        t7s.set(k, Rat(2) * one_minus_t2 * c);
    }

    return t12 + t3s + t4s + t5s + t6s + t7s;
}

namespace {

QSeries clear_and_check(const QSeries& f, const QSeries& clearing, int vanish_above,
                        const char* what) {
    QSeries v = f * clearing;
    for (int k = vanish_above + 1; k < v.order(); ++k) {
        if (!v[k].is_zero())
            throw TruncationNotZero(std::string(what) + " has a surviving coefficient at q^" +
                                    std::to_string(k) + ": " + v[k].str());
    }
    return v;
}

} // namespace

QSeries qvir(int g, int order) {
    if (order <= 8 * g - 3) throw std::invalid_argument("qvir: order must exceed 8g-3");
    QSeries clearing('q', order, kOne);
    clearing.add(2, -(kOne + kT.pow(4)));
    clearing.add(4, kT.pow(4));
    return clear_and_check(fvir_direct(g, order), clearing, 8 * g - 5, "Q^vir");
}

QSeries qmot(int g, int order) {
    if (order <= 8 * g - 3) throw std::invalid_argument("qmot: order must exceed 8g-3");
    QSeries clearing('q', order, kOne);
    clearing.add(2, -(kOne + lefschetz(2)));
    clearing.add(4, lefschetz(2));
    return clear_and_check(fmot(g, order, GenfunMode::direct), clearing, 8 * g - 5, "Q^mot");
}

QSeries char_variety_mixed_hodge(int g, int order) {
    CurveParams curve(g);
    if (order <= 8 * g - 6)
        throw std::invalid_argument("char_variety_mixed_hodge: order must exceed 8g-6");
    const int N = order;
    const LaurentPoly t2 = kT.pow(2), t4 = kT.pow(4);
    const QSeries pow_1_qt = qs_pow(binom('q', N, 1, kT), 2 * g);
    const QSeries pow_1_mqt = qs_pow(binom('q', N, 1, -kT), 2 * g);
    const QSeries pow_q2t = qs_pow(binom('q', N, 2, kT), 2 * g);
    const QSeries pow_q2t3 = qs_pow(binom('q', N, 2, kT.pow(3)), 2 * g);

    QSeries term_a = series_expand(pow_1_qt * pow_q2t3,
                                   {one_minus('q', 2, t2, N), one_minus('q', 2, t4, N)}, N);
    QSeries term_b = series_expand(pow_1_qt * pow_q2t,
                                   {one_minus('q', 2, kOne, N), one_minus('q', 2, t2, N)}, N);
    term_b *= kT.pow(4 * g - 4);
    term_b = term_b.shifted(2 * g - 2);

    QSeries term_c = series_expand(pow_1_qt * pow_1_qt,
                                   {one_minus('q', 1, t2, N), one_minus('q', 1, kOne, N)}, N);
    QSeries term_d = series_expand(pow_1_qt * pow_1_mqt,
                                   {one_minus('q', 1, -t2, N), one_minus('q', 1, -kOne, N)}, N);
    QSeries half = (term_c + term_d) * (kT.pow(4 * g - 4) * Rat(-1, 2));
    half = half.shifted(2 * g - 2);

    QSeries ph = term_a + term_b + half;
    for (int k = 0; k < ph.order(); ++k) {
        if (!ph[k].integer_coefficients())
            throw NonIntegral("PH coefficient at q^" + std::to_string(k) + ": " + ph[k].str());
        if (!ph[k].nonnegative_coefficients())
            throw NegativeCoefficient("PH coefficient at q^" + std::to_string(k) + ": " +
                                      ph[k].str());
        if (k > 8 * g - 6 && !ph[k].is_zero())
            throw TruncationNotZero("PH survives above q-degree 8g-6 at q^" + std::to_string(k));
    }
    return ph;
}

QSeries g_series(int g, int order) {
    if (order < 2) throw std::invalid_argument("g_series: order must be >= 2");
    QSeries ph = char_variety_mixed_hodge(g, std::max(order, 8 * g - 5));
    QSeries expanded = series_expand(ph.truncated(order),
                                     {one_minus('q', 1, kOne, order),
                                      one_minus('q', 1, kT.pow(2), order)},
                                     order);
    return parity_filter(expanded, 2, 1);
}

LaurentPoly poincare_m21(int g) {
    QSeries ph = char_variety_mixed_hodge(g, 8 * g - 5);
    LaurentPoly p;
    for (int k = 0; k < ph.order(); ++k) p += ph[k];
    return p;
}

CompareFG compare_F_G(int g, int order) {
    CurveParams curve(g);
    if (order <= 8 * g - 5) throw std::invalid_argument("compare_F_G: order must exceed 8g-5");
    CompareFG out;
    out.low = {"F-G low range g=" + std::to_string(g), true, ""};
    out.high = {"F-G high range g=" + std::to_string(g), true, ""};
    const QSeries f = fvir_direct(g, order);
    const QSeries gs = g_series(g, order);
    for (int k = 1; k < order; k += 2) {
        const LaurentPoly diff = f[k] - gs[k];
        if (k <= 2 * g - 3) {
            if (!diff.is_zero()) {
                out.low.pass = false;
                out.low.detail = "difference at q^" + std::to_string(k) + ": " + diff.str();
            }
        } else if (k >= 6 * g - 5) {
            if (!diff.is_zero()) {
                out.high.pass = false;
                out.high.detail = "difference at q^" + std::to_string(k) + ": " + diff.str();
            }
        } else {
            out.middle.emplace_back(k, diff);
        }
    }
    return out;
}

} // namespace wallcross
