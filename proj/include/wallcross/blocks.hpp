#pragma once

#include <string>

#include "wallcross/qseries.hpp"

namespace wallcross {

/// Genus of the base curve; every formula is parameterized by it.
struct CurveParams {
    int g;
    explicit CurveParams(int genus);
};

/// Outcome of a named verification, with the first failing coefficient
/// spelled out when pass is false.
struct CheckReport {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Motivic zeta function of the curve as a series in u: the coefficient of
/// u^n is E(S^n(C)). Realized as (1-xu)^g (1-yu)^g / ((1-u)(1-u*xy)).
QSeries zeta_series(int g, int order);

/// E(S^n(C)); the zero polynomial for n < 0.
LaurentPoly sym_power(int g, int n);

/// E(J(C)) = (1-x)^g (1-y)^g. Degree is irrelevant: all Jacobians of the
/// curve are isomorphic.
LaurentPoly jacobian(int g);

/// [CP^n] = 1 + L + ... + L^n; the zero polynomial for n < 0.
LaurentPoly proj_space(int n);

/// [Gr(2,n)] via the Gaussian binomial; zero for n < 2.
LaurentPoly grassmann2(int n);

/// Degree-2 power-structure formula (e(x,y)^2 + e(x^2,y^2)) / 2 for an
/// E-polynomial e; throws NonIntegral if the result has a fractional
/// coefficient.
LaurentPoly sym2(const LaurentPoly& e);

/// Virtual Poincare specialization t^(2 dim) * e(-1/t, -1/t); throws
/// NegativeExponent when the shift does not restore polynomiality, which
/// signals a wrong dimension argument.
LaurentPoly pvir(const LaurentPoly& e, int dim);

/// Sum of E(S^n) q^n against the Macdonald closed form (1+qt)^(2g) /
/// ((1-q)(1-qt^2)), both specialized to P^vir, up to the given order.
CheckReport macdonald_check(int g, int order);

/// Serre-duality identity [S^k] = L^(k-g+1) [S^(2g-2-k)] + [CP^(k-g)] [J]
/// for 0 <= k <= 2g-2; the k < g-1 half is evaluated through the
/// equivalent identity at 2g-2-k to stay inside the polynomial ring.
CheckReport serre_symmetric_check(int g, int k);

} // namespace wallcross
