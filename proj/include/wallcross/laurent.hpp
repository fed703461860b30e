#pragma once

#include <array>
#include <map>
#include <string>

#include <gmpxx.h>

namespace wallcross {

using Rat = mpq_class;

/// Variable slots of the coefficient ring. Exponents may be negative in t
/// only; x, y, w are strictly polynomial directions.
enum class Var : int { x = 0, y = 1, t = 2, w = 3 };

constexpr int kNumVars = 4;
using Exponents = std::array<int, kNumVars>;

/// Exact multivariate Laurent polynomial over arbitrary-precision rationals
/// in the fixed variable set {x, y, t, w}. Terms are kept in lexicographic
/// order on (x, y, t, w) exponents, with no zero coefficients stored, so
/// serialization is deterministic.
class LaurentPoly {
public:
    LaurentPoly() = default; // zero
    explicit LaurentPoly(long c) { insert({0, 0, 0, 0}, Rat(c)); }
    explicit LaurentPoly(const Rat& c) { insert({0, 0, 0, 0}, c); }

    static LaurentPoly variable(Var v, int power = 1);
    static LaurentPoly monomial(const Exponents& e, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    const std::map<Exponents, Rat>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rat coefficient(const Exponents& e) const;

    bool uses(Var v) const;
    int min_exponent(Var v) const; // 0 for the zero polynomial
    int max_exponent(Var v) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& c);
    LaurentPoly operator-() const;

    /// k < 0 is allowed only for nonzero monomials.
    LaurentPoly pow(int k) const;

    /// Multiply by v^k; k may be negative only for v == Var::t.
    LaurentPoly shifted(Var v, int k) const;

    /// Drop every term whose t-exponent exceeds bound.
    LaurentPoly truncated_t(int bound) const;

    bool integer_coefficients() const;
    bool nonnegative_coefficients() const;

    /// Value at x = y = t = w = 1 (Euler characteristic of a motive).
    Rat evaluate_ones() const;

    std::string str() const;

private:
    std::map<Exponents, Rat> terms_;

    void insert(const Exponents& e, const Rat& c);
    friend LaurentPoly exact_div(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Rat& c);
LaurentPoly operator*(const Rat& c, LaurentPoly a);
bool operator==(const LaurentPoly& a, const LaurentPoly& b);
inline bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

/// Exact quotient a / b; throws NonExactDivision if b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Substitute each variable occurring in p by its binding. Bindings must
/// cover every variable present; a negative exponent requires the binding
/// to be a monomial.
LaurentPoly substitute(const LaurentPoly& p, const std::map<Var, LaurentPoly>& bindings);

/// The Lefschetz class L^k = (xy)^k, k >= 0.
LaurentPoly lefschetz(int k = 1);

} // namespace wallcross
