#include "wallcross/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "wallcross/errors.hpp"

namespace wallcross {

namespace {

const char* var_name(int i) {
    static const char* names[kNumVars] = {"x", "y", "t", "w"};
    return names[i];
}

void check_exponents(const Exponents& e) {
    for (int i = 0; i < kNumVars; ++i) {
        if (e[i] < 0 && static_cast<Var>(i) != Var::t)
            throw NegativeExponent(std::string("negative exponent in ") + var_name(i));
    }
}

} // namespace

void LaurentPoly::insert(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    check_exponents(e);
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::variable(Var v, int power) {
    Exponents e{0, 0, 0, 0};
    e[static_cast<int>(v)] = power;
    return monomial(e, Rat(1));
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const Rat& c) {
    LaurentPoly p;
    p.insert(e, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0} &&
           terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0});
}

Rat LaurentPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool LaurentPoly::uses(Var v) const {
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_)
        if (e[i] != 0) return true;
    return false;
}

int LaurentPoly::min_exponent(Var v) const {
    const int i = static_cast<int>(v);
    bool first = true;
    int m = 0;
    for (const auto& [e, c] : terms_) {
        if (first || e[i] < m) m = e[i];
        first = false;
    }
    return m;
}

int LaurentPoly::max_exponent(Var v) const {
    const int i = static_cast<int>(v);
    bool first = true;
    int m = 0;
    for (const auto& [e, c] : terms_) {
        if (first || e[i] > m) m = e[i];
        first = false;
    }
    return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
}

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    Exponents e;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = r.terms_.emplace(e, Rat());
            if (fresh) {
                it->second = ca * cb;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly operator*(LaurentPoly a, const Rat& c) {
    a *= c;
    return a;
}

LaurentPoly operator*(const Rat& c, LaurentPoly a) {
    a *= c;
    return a;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms() == b.terms();
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k == 0) return LaurentPoly(1);
    if (k < 0) {
        if (!is_monomial())
            throw std::invalid_argument("negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        Exponents ne;
        for (int i = 0; i < kNumVars; ++i) ne[i] = e[i] * k;
        Rat nc = 1;
        for (int i = 0; i < -k; ++i) nc /= c;
        return monomial(ne, nc);
    }
    LaurentPoly base(*this), r(1);
    int n = k;
    while (n > 0) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(Var v, int k) const {
    if (k == 0) return *this;
    LaurentPoly r;
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne[i] += k;
        r.insert(ne, c);
    }
    return r;
}

LaurentPoly LaurentPoly::truncated_t(int bound) const {
    LaurentPoly r;
    const int i = static_cast<int>(Var::t);
    for (const auto& [e, c] : terms_)
        if (e[i] <= bound) r.insert(e, c);
    return r;
}

bool LaurentPoly::integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

bool LaurentPoly::nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

Rat LaurentPoly::evaluate_ones() const {
    Rat s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = e != Exponents{0, 0, 0, 0};
        if (a != 1 || !has_vars) {
            os << a;
            if (has_vars) os << "*";
        }
        bool need_sep = false;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (need_sep) os << "*";
            os << var_name(i);
            if (e[i] != 1) os << "^" << e[i];
            need_sep = true;
        }
    }
    return os.str();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (a.is_zero()) return a;

    // Normalize t to ordinary exponents so lex division terminates.
    const int va = a.min_exponent(Var::t);
    const int vb = b.min_exponent(Var::t);
    LaurentPoly num = a.shifted(Var::t, -va);
    LaurentPoly den = b.shifted(Var::t, -vb);

    const auto& dl = *den.terms_.rbegin(); // leading term in lex order
    LaurentPoly q, r = num;
    while (!r.is_zero()) {
        const auto& rl = *r.terms_.rbegin();
        Exponents e;
        for (int i = 0; i < kNumVars; ++i) {
            e[i] = rl.first[i] - dl.first[i];
            if (e[i] < 0)
                throw NonExactDivision("leading term not divisible: (" + a.str() +
                                       ") / (" + b.str() + ")");
        }
        LaurentPoly m = LaurentPoly::monomial(e, rl.second / dl.second);
        q += m;
        r -= m * den;
    }
    return q.shifted(Var::t, va - vb);
}

LaurentPoly substitute(const LaurentPoly& p, const std::map<Var, LaurentPoly>& bindings) {
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (p.uses(v) && bindings.find(v) == bindings.end())
            throw std::invalid_argument(std::string("missing binding for ") +
                                        (i == 0 ? "x" : i == 1 ? "y" : i == 2 ? "t" : "w"));
    }
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term(c);
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            term *= bindings.at(static_cast<Var>(i)).pow(e[i]);
        }
        r += term;
    }
    return r;
}

LaurentPoly lefschetz(int k) {
    if (k < 0) throw NegativeExponent("lefschetz power must be nonnegative");
    return LaurentPoly::monomial({k, k, 0, 0}, Rat(1));
}

} // namespace wallcross
