#include <doctest.h>

#include "wallcross/errors.hpp"
#include "wallcross/triples.hpp"

using namespace wallcross;

namespace {

const LaurentPoly One = LaurentPoly(1);

LaurentPoly l_minus_one() { return lefschetz(1) - One; }

LaurentPoly curve_class(int g) {
    return One - Rat(g) * LaurentPoly::variable(Var::x) - Rat(g) * LaurentPoly::variable(Var::y) +
           lefschetz(1);
}

// [SW^{d,-}] = L^2g [S^((d-s)/2)] [J] ([CP^((d+s)/2+g-2)] - [CP^(g-2+s)])
LaurentPoly sw_minus(int g, int d, int wall) {
    return lefschetz(2 * g) * sym_power(g, (d - wall) / 2) * jacobian(g) *
           (proj_space((d + wall) / 2 + g - 2) - proj_space(g - 2 + wall));
}

// [SPF^{(d1,d2),1+}] = L^(3g-1+d2-d1) [S^d1] [S^(d1-d2+2g-2)]
LaurentPoly spf1(int g, int d1, int d2) {
    return lefschetz(3 * g - 1 + d2 - d1) * sym_power(g, d1) *
           sym_power(g, d1 - d2 + 2 * g - 2);
}

} // namespace

TEST_CASE("index sets") {
    CHECK(index_set(2, 1, IndexKind::i1_odd) == std::vector<IndexPair>{{0, 1}});
    CHECK(index_set(2, -1, IndexKind::i2_odd) == std::vector<IndexPair>{{-1, 0}});
    CHECK(index_set(2, 0, IndexKind::i1_even).empty());
    CHECK_THROWS_AS(index_set(2, 2, IndexKind::i1_odd), ParityMismatch);
}

TEST_CASE("index sets: the three equivalent inequality systems agree") {
    auto member = [](const std::vector<IndexPair>& set, int d1, int d2) {
        return std::find(set.begin(), set.end(), IndexPair{d1, d2}) != set.end();
    };
    for (int g : {2, 3}) {
        for (int d = -7; d <= 9; ++d) {
            const bool odd = ((d % 2) + 2) % 2 == 1;
            const auto i1 = index_set(g, d, odd ? IndexKind::i1_odd : IndexKind::i1_even);
            const auto i2 = index_set(g, d, odd ? IndexKind::i2_odd : IndexKind::i2_even);
            for (int d1 = -20; d1 <= 20; ++d1) {
                const int d2 = d - d1;
                const int s = d1 - d2 + 2 * g - 2;
                bool i1_l2, i1_l3, i2_l2, i2_l3;
                if (odd) {
                    i1_l2 = d >= 1 && 2 * d2 >= d + 1 && 2 * d2 <= std::min(d + 2 * g - 3, 2 * d);
                    i1_l3 = d >= 1 && s >= std::max(1, 2 * g - 2 - d) && s <= 2 * g - 3 && d1 >= 0;
                    i2_l2 = 2 * d2 >= std::max(0, d + 1) && 2 * d2 <= d + 2 * g - 3;
                    i2_l3 = s >= 1 && s <= std::min(d + 2 * g - 2, 2 * g - 3) && d2 >= 0;
                } else {
                    i1_l2 = d >= 2 && 2 * d2 >= d + 2 && 2 * d2 <= std::min(2 * d, d + 2 * g - 2);
                    i1_l3 = d >= 2 && s >= std::max(0, 2 * g - 2 - d) && s <= 2 * g - 4 && d1 >= 0;
                    i2_l2 = 2 * d2 >= std::max(0, d) && 2 * d2 <= d + 2 * g - 2;
                    i2_l3 = s >= 0 && s <= std::min(2 * g - 2, 2 * g - 2 + d) && d2 >= 0;
                }
                CHECK(member(i1, d1, d2) == i1_l2);
                CHECK(member(i1, d1, d2) == i1_l3);
                CHECK(member(i2, d1, d2) == i2_l2);
                CHECK(member(i2, d1, d2) == i2_l3);
            }
        }
    }
}

TEST_CASE("poles index sets: the three inequality systems agree") {
    auto member = [](const std::vector<IndexPair>& set, int d1, int d2) {
        return std::find(set.begin(), set.end(), IndexPair{d1, d2}) != set.end();
    };
    for (int g : {2, 3}) {
        for (int d = -6; d <= 7; ++d) {
            for (int gamma : {0, 1, 2, 3}) {
                const auto i1 = poles_index_set(g, d, gamma, PolesKind::type1_eps);
                const auto i2 = poles_index_set(g, d, gamma, PolesKind::type2_eps);
                const auto iinf = poles_index_set(g, d, gamma, PolesKind::type2_infty);
                for (int d1 = -20; d1 <= 20; ++d1) {
                    const int d2 = d - d1;
                    const int s = d1 - d2 + 2 * g - 2 + gamma;
                    // type 1: d/2 < d2 <= min{d, (d+gamma)/2+g-1} resp. the
                    // shifted-difference window, both with d1 >= 0
                    const bool i1_l2 =
                        2 * d2 > d && 2 * d2 <= std::min(2 * d, d + gamma + 2 * g - 2);
                    const bool i1_l3 = s >= std::max(0, 2 * g - 2 + gamma - d) &&
                                       s < 2 * g - 2 + gamma && d1 >= 0;
                    CHECK(member(i1, d1, d2) == (i1_l2 && d1 >= 0));
                    CHECK(member(i1, d1, d2) == i1_l3);
                    // type 2, epsilon regime
                    const bool i2_l2 =
                        2 * d2 > std::max(-2, d - 1) && 2 * d2 <= d + gamma + 2 * g - 2;
                    const bool i2_l3 =
                        s >= 0 && s < 2 * g - 2 + gamma + std::min(1, d + 1) && d2 >= 0;
                    CHECK(member(i2, d1, d2) == i2_l2);
                    CHECK(member(i2, d1, d2) == i2_l3);
                    // type 2, infinity regime
                    const bool iinf_l2 = d2 >= 0 && 2 * d2 <= d + gamma + 2 * g - 2;
                    const bool iinf_l3 = s >= 0 && s <= 2 * g - 2 + gamma + d && d2 >= 0;
                    CHECK(member(iinf, d1, d2) == iinf_l2);
                    CHECK(member(iinf, d1, d2) == iinf_l3);
                }
            }
        }
    }
}

TEST_CASE("flip loci") {
    CHECK(flip_W(2, 3, 3, FlipSign::plus) ==
          lefschetz(4) * (One + lefschetz(1)) * jacobian(2) + lefschetz(4) * sym_power(2, 3));
    CHECK(flip_W(2, 3, 1, FlipSign::minus) ==
          lefschetz(4) * curve_class(2) * jacobian(2) * proj_space(2));
    CHECK(flip_W(2, -3, 1, FlipSign::plus).is_zero());
    CHECK(flip_W(2, -3, 1, FlipSign::minus).is_zero());
    CHECK(flip_W(2, 3, 5, FlipSign::plus).is_zero()); // wall above d
    CHECK_THROWS_AS(flip_W(2, 3, 2, FlipSign::plus), NotAWall);
}

TEST_CASE("B minus at the top wall vanishes with the -1 geometric factor") {
    for (int g : {2, 3})
        for (int d : {1, 3, 5}) CHECK(flip_B_minus(g, d, d).is_zero());
    CHECK(flip_B_minus(2, -3, 1).is_zero());
}

TEST_CASE("B minus full two-line evaluation") {
    // g=2, d=3, wall=1: the geometric factor (L^1 - L)/(L - 1) kills line 2
    CHECK(flip_B_minus(2, 3, 1) ==
          lefschetz(5) * sym_power(2, 1) *
              (l_minus_one() * sym_power(2, 2) + jacobian(2)));
    // g=2, d=5, wall=1: the factor is L
    CHECK(flip_B_minus(2, 5, 1) ==
          lefschetz(5) * sym_power(2, 2) *
              ((l_minus_one() * sym_power(2, 3) + jacobian(2)) +
               lefschetz(1) * (l_minus_one() * sym_power(2, 1) + jacobian(2))));
}

TEST_CASE("type-1 attracting cells against the stratum decomposition") {
    // [F^{(d1,d2),1+}] = [B-] - [SW-] + [SPF^{1+}] at the wall d2 - d1
    for (int g : {2, 3}) {
        for (int d = 1; d <= 9; d += 2) {
            for (const auto& [d1, d2] : index_set(g, d, IndexKind::i1_odd)) {
                const LaurentPoly expect =
                    flip_B_minus(g, d, d2 - d1) - sw_minus(g, d, d2 - d1) + spf1(g, d1, d2);
                CHECK(attract_type1(g, d1, d2) == expect);
            }
        }
    }
}

TEST_CASE("type-1 correction term in its two algebraic forms") {
    for (int g : {2, 3}) {
        for (int d = 1; d <= 11; d += 2) {
            for (const auto& [d1, d2] : index_set(g, d, IndexKind::i1_odd)) {
                if (d2 < g - 1) continue; // literal form leaves the polynomial ring
                const LaurentPoly literal =
                    (lefschetz(4 * g - 2) - lefschetz(4 * g - 3)) * sym_power(g, d1) *
                    (sym_power(g, d2) - jacobian(g) * proj_space(d2 - g));
                const LaurentPoly folded =
                    d2 <= 2 * g - 2 ? l_minus_one() * lefschetz(3 * g - 2 + d2) *
                                          sym_power(g, d1) * sym_power(g, 2 * g - 2 - d2)
                                    : LaurentPoly();
                CHECK(literal == folded);
            }
        }
    }
}

TEST_CASE("attract_type1 edge cases") {
    CHECK(attract_type1(2, -1, 2).is_zero());
    CHECK(attract_type1(2, 0, 1) == lefschetz(6) * sym_power(2, 1));
    CHECK_THROWS_AS(attract_type1(2, 1, 0), IndexNotInSet);
}

TEST_CASE("epsilon-chamber motives") {
    CHECK(triple_motive_eps(2, -1) == lefschetz(5) * curve_class(2));
    CHECK(triple_motive_eps(2, -1).coefficient({6, 6, 0, 0}) == 1);
    for (int g : {2, 3}) CHECK(triple_motive_eps(g, 1 - 2 * g).is_zero());
}

TEST_CASE("smooth-case structure: monic top class and nonnegative P^vir") {
    for (int g : {2, 3}) {
        for (int d = 2 - 2 * g; d < 0; ++d) {
            const LaurentPoly m = triple_motive_eps(g, d);
            const int dim = triple_dim(g, d);
            CHECK(m.coefficient({dim, dim, 0, 0}) == 1);
            const LaurentPoly p = pvir(m, dim);
            CHECK(p.integer_coefficients());
            CHECK(p.nonnegative_coefficients());
        }
        for (int d = 4 * g - 3; d <= 4 * g + 1; d += 2) {
            const LaurentPoly m = triple_motive_eps(g, d);
            const int dim = triple_dim(g, d);
            CHECK(m.coefficient({dim, dim, 0, 0}) == 1);
            const LaurentPoly p = pvir(m, dim);
            CHECK(p.integer_coefficients());
            CHECK(p.nonnegative_coefficients());
        }
    }
}

TEST_CASE("chamber walk") {
    for (int g : {2, 3}) {
        for (int d = 2 - 2 * g; d < 0; ++d)
            CHECK(triple_motive_chamber(g, d, 0) == triple_motive_eps(g, d));
        CHECK(triple_motive_chamber(g, 1, 1) ==
              triple_motive_eps(g, 1) - flip_W(g, 1, 1, FlipSign::plus) +
                  flip_W(g, 1, 1, FlipSign::minus));
    }
    CHECK_THROWS_AS(triple_motive_chamber(2, 1, 2), std::invalid_argument);
}

TEST_CASE("walking up and down over a wall returns the motive") {
    for (int g : {2, 3}) {
        for (int d : {3, 4, 5}) {
            for (int wall : critical_values(d)) {
                const LaurentPoly before = triple_motive_eps(g, d);
                const LaurentPoly up = before - flip_W(g, d, wall, FlipSign::plus) +
                                       flip_W(g, d, wall, FlipSign::minus);
                const LaurentPoly down = up + flip_W(g, d, wall, FlipSign::plus) -
                                         flip_W(g, d, wall, FlipSign::minus);
                CHECK(down == before);
            }
        }
    }
}

TEST_CASE("infinity strata") {
    // sigma-bar >= 2g-2 kills NSW+
    CHECK(infty_strata(2, 3, 3, 0).nsw_plus.is_zero());
    CHECK(!infty_strata(3, 7, 5, 2).nsw_plus.is_zero());
    // d1 < d2 lies in the smooth part
    const InftyStrata cell = infty_strata(2, 3, 1, 2);
    CHECK(cell.smooth_cell == lefschetz(5) * sym_power(2, 2) * sym_power(2, 1));
    CHECK(cell.spf2.is_zero());
    // g=2, (3,0): SPF^{2+} = L^4 [CP^3] [J], the S^(2g-5) part being empty
    CHECK(infty_strata(2, 3, 3, 0).spf2 == lefschetz(4) * proj_space(3) * jacobian(2));
}

TEST_CASE("M_infinity decomposition (b_sum_check)") {
    for (int g : {2, 3}) {
        for (int d : {1, 3}) CHECK(b_sum_check(g, d).pass);
        CHECK(b_sum_check(g, -1).pass);
        CHECK(b_sum_check(g, 2 - 2 * g).pass);
    }
    CHECK(b_sum_check(2, 5).pass);
    CHECK_THROWS_AS(b_sum_check(2, 2), ParityMismatch);
}

TEST_CASE("even strata") {
    const EvenStrata s0 = even_strata(2, 0);
    CHECK(s0.x2 == jacobian(2) * proj_space(0) * lefschetz(5) +
                       lefschetz(4) * (lefschetz(2) + lefschetz(2) - One));
    CHECK(s0.m_ss.is_zero());
    CHECK(s0.x1.is_zero());
    CHECK_THROWS_AS(even_strata(2, 1), ParityMismatch);
    // [M_ss] at d = 2, g = 2: [J][S^1][CP^0] - [S^1]^2 + Sym^2(S^1)
    const EvenStrata s2 = even_strata(2, 2);
    CHECK(s2.m_ss == jacobian(2) * sym_power(2, 1) - sym_power(2, 1) * sym_power(2, 1) +
                         sym2(sym_power(2, 1)));
}

TEST_CASE("even-degree assembly touches the even strata") {
    // the X2 summands sit verbatim inside the even assembly
    for (int g : {2, 3}) {
        for (int d : {0, 2, 4}) {
            const LaurentPoly m = triple_motive_eps(g, d);
            const int dim = triple_dim(g, d);
            CHECK(m.coefficient({dim, dim, 0, 0}) == 1);
            CHECK(pvir(m, dim).integer_coefficients());
        }
    }
}

TEST_CASE("even-degree assembly equals the stratum-by-stratum route") {
    // L^(4g-3)[M_st] + type-1 cells + corrections + type-2 cells away from
    // (d/2,d/2) + [X1] + [X2], with [M_st] = [M_pairs] - [M_ss]
    for (int g : {2, 3}) {
        for (int d : {0, 2, 4, 6}) {
            const EvenStrata strata = even_strata(g, d);
            LaurentPoly expected =
                lefschetz(4 * g - 3) * (pair_motive(g, d, 0) - strata.m_ss);
            for (const auto& [d1, d2] : index_set(g, d, IndexKind::i2_even)) {
                if (d1 == d2) continue;
                expected +=
                    lefschetz(4 * g - 3) * sym_power(g, d2) * sym_power(g, d1 - d2 + 2 * g - 2);
            }
            for (const auto& [d1, d2] : index_set(g, d, IndexKind::i1_even))
                expected += attract_type1(g, d1, d2);
            expected += strata.x1 + strata.x2;
            CHECK(triple_motive_eps(g, d) == expected);
        }
    }
}

TEST_CASE("poles motives") {
    for (int g : {2, 3}) {
        // d < 0: only I2 terms; compare degrees and top class
        for (int d : {-1, 0, 1}) {
            for (int gamma : {1, 2, 3}) {
                const LaurentPoly m = poles_motive(g, d, gamma, PolesRegime::eps);
                const int dim = triple_dim(g, d, gamma);
                CHECK(m.coefficient({dim, dim, 0, 0}) == 1);
                const LaurentPoly p = pvir(m, dim);
                CHECK(p.integer_coefficients());
                CHECK(p.nonnegative_coefficients());
            }
        }
    }
    CHECK_THROWS_AS(poles_motive(2, 3, 2, PolesRegime::infty), PoleOrderTooSmall);
    CHECK_THROWS_AS(poles_motive(2, 0, 0, PolesRegime::eps), std::invalid_argument);
    // gamma > d: infinity regime agrees with eps regime for d < 0
    CHECK(poles_motive(2, -1, 2, PolesRegime::infty) ==
          poles_motive(2, -1, 2, PolesRegime::eps));
}

TEST_CASE("poles stabilization toward the classifying space") {
    CHECK(poles_limit_check(2, 0, 4, 8).pass);
    CHECK(poles_limit_check(2, 1, 4, 8).pass);
}

TEST_CASE("Hodge symmetry: every motive is symmetric in x and y") {
    auto swapped = [](const LaurentPoly& p) {
        return substitute(p, {{Var::x, LaurentPoly::variable(Var::y)},
                              {Var::y, LaurentPoly::variable(Var::x)}});
    };
    for (int g : {2, 3}) {
        for (int d = 2 - 2 * g; d <= 6; ++d) {
            for (int chamber = 0; chamber < chamber_count(d); ++chamber) {
                const LaurentPoly m = triple_motive_chamber(g, d, chamber);
                CHECK(swapped(m) == m);
            }
            if (d >= 0) {
                const LaurentPoly p = pair_motive(g, d, 0);
                CHECK(swapped(p) == p);
            }
            const LaurentPoly withpoles = poles_motive(g, d, 2, PolesRegime::eps);
            CHECK(swapped(withpoles) == withpoles);
        }
        const LaurentPoly m21 = higgs_motive_extract(g).m21;
        CHECK(swapped(m21) == m21);
    }
}

TEST_CASE("Higgs motive extraction") {
    for (int g : {2, 3}) {
        const HiggsExtract h = higgs_motive_extract(g);
        CHECK(h.report.pass);
        CHECK(h.m21.coefficient({8 * g - 6, 8 * g - 6, 0, 0}) == 1);
    }
}
