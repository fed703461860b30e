#include "wallcross/qseries.hpp"

#include <sstream>
#include <stdexcept>

#include "wallcross/errors.hpp"

namespace wallcross {

QSeries::QSeries(char var, int order) : var_(var), order_(order) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
    coeffs_.resize(static_cast<std::size_t>(order));
}

QSeries::QSeries(char var, int order, LaurentPoly constant) : QSeries(var, order) {
    coeffs_[0] = std::move(constant);
}

const LaurentPoly& QSeries::operator[](int n) const {
    static const LaurentPoly zero;
    if (n < 0 || n >= order_) return zero;
    return coeffs_[static_cast<std::size_t>(n)];
}

void QSeries::set(int n, LaurentPoly p) {
    if (n < 0 || n >= order_) return;
    coeffs_[static_cast<std::size_t>(n)] = std::move(p);
}

void QSeries::add(int n, const LaurentPoly& p) {
    if (n < 0 || n >= order_) return;
    coeffs_[static_cast<std::size_t>(n)] += p;
}

namespace {

void require_same_var(const QSeries& a, const QSeries& b) {
    if (a.var() != b.var())
        throw std::invalid_argument(std::string("series variable mismatch: ") + a.var() +
                                    " vs " + b.var());
}

} // namespace

QSeries& QSeries::operator+=(const QSeries& o) {
    require_same_var(*this, o);
    *this = truncated(std::min(order_, o.order()));
    for (int n = 0; n < order_; ++n) coeffs_[n] += o[n];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    require_same_var(*this, o);
    *this = truncated(std::min(order_, o.order()));
    for (int n = 0; n < order_; ++n) coeffs_[n] -= o[n];
    return *this;
}

QSeries QSeries::operator-() const {
    QSeries r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QSeries& QSeries::operator*=(const LaurentPoly& c) {
    for (auto& p : coeffs_) p *= c;
    return *this;
}

QSeries QSeries::truncated(int order) const {
    if (order == order_) return *this;
    QSeries r(var_, order);
    for (int n = 0; n < std::min(order, order_); ++n) r.coeffs_[n] = coeffs_[n];
    return r;
}

QSeries QSeries::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("series shift must be nonnegative");
    QSeries r(var_, order_);
    for (int n = 0; n + k < order_; ++n) r.coeffs_[n + k] = coeffs_[n];
    return r;
}

bool QSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

int QSeries::top_degree() const {
    for (int n = order_ - 1; n >= 0; --n)
        if (!coeffs_[n].is_zero()) return n;
    return -1;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n < order_; ++n) {
        if (coeffs_[n].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[n].str() << ")*" << var_ << "^" << n;
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var_ << "^" << order_ << ")";
    return os.str();
}

QSeries operator+(QSeries a, const QSeries& b) {
    a += b;
    return a;
}

QSeries operator-(QSeries a, const QSeries& b) {
    a -= b;
    return a;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    require_same_var(a, b);
    QSeries r(a.var(), std::min(a.order(), b.order()));
    for (int i = 0; i < std::min(a.order(), r.order()); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < r.order(); ++j) {
            if (b[j].is_zero()) continue;
            r.add(i + j, a[i] * b[j]);
        }
    }
    return r;
}

QSeries operator*(QSeries a, const LaurentPoly& c) {
    a *= c;
    return a;
}

QSeries operator*(const LaurentPoly& c, QSeries a) {
    a *= c;
    return a;
}

bool operator==(const QSeries& a, const QSeries& b) {
    if (a.var() != b.var()) return false;
    int n = std::min(a.order(), b.order());
    for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

QSeries one_minus(char var, int power, const LaurentPoly& m, int order) {
    if (power < 1) throw BadDenominator("denominator factor must involve the series variable");
    QSeries f(var, std::max(order, power + 1), LaurentPoly(1));
    f.add(power, -m);
    return f;
}

QSeries series_expand(const QSeries& numerator, const std::vector<QSeries>& denom_factors,
                      int order) {
    QSeries r = numerator.truncated(std::min(order, numerator.order()));
    for (const auto& f : denom_factors) {
        require_same_var(r, f);
        if (!f[0].is_one())
            throw BadDenominator(
                "denominator factor has series-degree-0 part different from 1: " + f.str());
        // s = r / f via s_n = r_n - sum_{k>=1} f_k s_{n-k}
        QSeries s(r.var(), r.order());
        for (int n = 0; n < r.order(); ++n) {
            LaurentPoly c = r[n];
            for (int k = 1; k <= n; ++k) {
                if (f[k].is_zero()) continue;
                c -= f[k] * s[n - k];
            }
            s.set(n, std::move(c));
        }
        r = std::move(s);
    }
    return r;
}

QSeries parity_filter(const QSeries& s, int r, int m) {
    if (r < 1 || m < 0 || m >= r) throw std::invalid_argument("parity_filter: need 0 <= m < r");
    QSeries out(s.var(), s.order());
    for (int n = m; n < s.order(); n += r) out.set(n, s[n]);
    return out;
}

} // namespace wallcross
