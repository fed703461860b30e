#pragma once

#include <vector>

#include "wallcross/laurent.hpp"

namespace wallcross {

/// Truncated power series in one distinguished variable (q or u) with
/// LaurentPoly coefficients. Terms of degree >= order are discarded;
/// arithmetic on two series requires the same variable and truncates to
/// the smaller order.
class QSeries {
public:
    QSeries(char var, int order);
    QSeries(char var, int order, LaurentPoly constant);

    char var() const { return var_; }
    int order() const { return order_; }

    const LaurentPoly& operator[](int n) const;
    void set(int n, LaurentPoly p);
    void add(int n, const LaurentPoly& p);

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries operator-() const;
    QSeries& operator*=(const LaurentPoly& c);

    QSeries truncated(int order) const;

    /// Multiply by var^k, k >= 0.
    QSeries shifted(int k) const;

    bool is_zero() const;

    /// Largest n with nonzero coefficient, or -1 for the zero series.
    int top_degree() const;

    std::string str() const;

private:
    char var_;
    int order_;
    std::vector<LaurentPoly> coeffs_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(QSeries a, const LaurentPoly& c);
QSeries operator*(const LaurentPoly& c, QSeries a);
bool operator==(const QSeries& a, const QSeries& b);
inline bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

/// Build the factor 1 - m * var^power with a polynomial m.
QSeries one_minus(char var, int power, const LaurentPoly& m, int order);

/// Geometric-series expansion of numerator / prod(factors), exact to the
/// given order. Every factor must have constant coefficient exactly 1 (so
/// its non-constant part has positive series valuation); a factor like
/// 1 - t^2 is rejected with BadDenominator.
QSeries series_expand(const QSeries& numerator, const std::vector<QSeries>& denom_factors,
                      int order);

/// Keep exactly the terms whose series degree is congruent to m mod r.
QSeries parity_filter(const QSeries& s, int r, int m);

} // namespace wallcross
