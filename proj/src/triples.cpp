#include "wallcross/triples.hpp"

#include <sstream>
#include <stdexcept>

#include "wallcross/errors.hpp"

namespace wallcross {

bool operator==(const IndexPair& a, const IndexPair& b) { return a.d1 == b.d1 && a.d2 == b.d2; }

namespace {

const LaurentPoly kOne = LaurentPoly(1);

LaurentPoly l_minus_one() { return lefschetz(1) - kOne; }

// Walls above d are tolerated: the flip loci carry an empty symmetric
// power there and vanish on their own.
void require_wall(int d, int wall) {
    if (wall < 1 || (wall - d) % 2 != 0)
        throw NotAWall("sigma = " + std::to_string(wall) + " is not a critical value for d = " +
                       std::to_string(d));
}

// ceiling of n/2, safe for negative n
int ceil2(int n) { return (n >= 0) ? (n + 1) / 2 : -((-n) / 2); }

// Enumerate d1 with lo2 <= 2*d1 <= hi2.
std::vector<IndexPair> enumerate(int d, int lo2, int hi2) {
    std::vector<IndexPair> out;
    for (int d1 = ceil2(lo2); 2 * d1 <= hi2; ++d1) out.push_back({d1, d - d1});
    return out;
}

std::string diff_witness(const char* what, const LaurentPoly& a, const LaurentPoly& b) {
    std::ostringstream os;
    os << what << ": lhs - rhs = " << (a - b).str();
    return os.str();
}

} // namespace

std::vector<IndexPair> poles_index_set(int g, int d, int gamma, PolesKind kind) {
    CurveParams curve(g);
    if (gamma < 0) throw std::invalid_argument("gamma must be >= 0");
    switch (kind) {
        case PolesKind::type1_eps:
            return enumerate(d, std::max(0, d - gamma + 2 - 2 * g), d - 1);
        case PolesKind::type2_eps:
            return enumerate(d, d - gamma + 2 - 2 * g, std::min(d, 2 * d + 1));
        case PolesKind::type2_infty:
            return enumerate(d, d - gamma + 2 - 2 * g, 2 * d);
    }
    throw std::logic_error("unreachable");
}

std::vector<IndexPair> index_set(int g, int d, IndexKind kind) {
    const bool odd = ((d % 2) + 2) % 2 == 1;
    switch (kind) {
        case IndexKind::i1_odd:
            if (!odd) throw ParityMismatch("I1^o needs odd d");
            return poles_index_set(g, d, 0, PolesKind::type1_eps);
        case IndexKind::i2_odd:
            if (!odd) throw ParityMismatch("I2^o needs odd d");
            return poles_index_set(g, d, 0, PolesKind::type2_eps);
        case IndexKind::i1_even:
            if (odd) throw ParityMismatch("I1^e needs even d");
            return poles_index_set(g, d, 0, PolesKind::type1_eps);
        case IndexKind::i2_even:
            if (odd) throw ParityMismatch("I2^e needs even d");
            return poles_index_set(g, d, 0, PolesKind::type2_eps);
        case IndexKind::i2_infty:
            return poles_index_set(g, d, 0, PolesKind::type2_infty);
    }
    throw std::logic_error("unreachable");
}

LaurentPoly flip_W(int g, int d, int wall, FlipSign sign) {
    CurveParams curve(g);
    require_wall(d, wall);
    const int s = (d - wall) / 2;
    if (sign == FlipSign::plus)
        return lefschetz(2 * g) * proj_space(2 * g - 3) * sym_power(g, s) * jacobian(g) +
               lefschetz(3 * g - 2) * sym_power(g, s) * sym_power(g, wall);
    return lefschetz(2 * g) * sym_power(g, s) * jacobian(g) *
           proj_space((d + wall) / 2 + g - 2);
}

LaurentPoly flip_B_minus(int g, int d, int wall) {
    CurveParams curve(g);
    require_wall(d, wall);
    const int s = (d - wall) / 2;
    if (s < 0) return LaurentPoly();
    const LaurentPoly ls = sym_power(g, s);
    const LaurentPoly line1 = (l_minus_one() * sym_power(g, (d + wall) / 2) + jacobian(g));
    const LaurentPoly line2 = (l_minus_one() * sym_power(g, wall) + jacobian(g));
    // (L^s - L)/(L - 1), an exact quotient; equals -1 at s = 0.
    const LaurentPoly geom = exact_div(lefschetz(s) - lefschetz(1), l_minus_one());
    return lefschetz(4 * g - 3) * ls * (line1 + geom * line2);
}

LaurentPoly attract_type1(int g, int d1, int d2) {
    CurveParams curve(g);
    if (d1 < 0) return LaurentPoly();
    const int d = d1 + d2;
    const auto set = index_set(g, d, (d % 2 + 2) % 2 == 1 ? IndexKind::i1_odd : IndexKind::i1_even);
    bool member = false;
    for (const auto& p : set) member = member || (p == IndexPair{d1, d2});
    if (!member)
        throw IndexNotInSet("(" + std::to_string(d1) + "," + std::to_string(d2) +
                            ") is not a type-1 index pair");
    LaurentPoly r = lefschetz(3 * g - 2 + d2) * sym_power(g, d1) * sym_power(g, d1 - d2 + 2 * g - 2);
    if (d2 <= 2 * g - 2)
        r += l_minus_one() * lefschetz(3 * g - 2 + d2) * sym_power(g, d1) *
             sym_power(g, 2 * g - 2 - d2);
    return r;
}

LaurentPoly triple_motive_eps(int g, int d) {
    CurveParams curve(g);
    if (d < 2 - 2 * g) return LaurentPoly(); // empty moduli space
    const bool odd = ((d % 2) + 2) % 2 == 1;
    LaurentPoly total;

    for (const auto& [d1, d2] : poles_index_set(g, d, 0, PolesKind::type2_eps)) {
        if (!odd && d1 == d2) continue; // that cell is X2, added below
        total += lefschetz(4 * g - 3) * sym_power(g, d2) * sym_power(g, d1 - d2 + 2 * g - 2);
    }
    if (d < 0) return total;

    total += lefschetz(4 * g - 3) * pair_motive(g, d, 0);
    for (const auto& [d1, d2] : poles_index_set(g, d, 0, PolesKind::type1_eps))
        total += attract_type1(g, d1, d2);

    if (!odd) {
        const LaurentPoly s_half = sym_power(g, d / 2);
        total += l_minus_one() * lefschetz(4 * g - 3) * sym2(s_half);
        total += lefschetz(4 * g - 3) * s_half * jacobian(g) * proj_space(g - 2);
        total += s_half * (lefschetz(3 * g - 2) *
                           (lefschetz(d / 2 + g - 1) + lefschetz(2 * g - 2) - kOne));
    }
    return total;
}

LaurentPoly triple_motive_chamber(int g, int d, int chamber) {
    CurveParams curve(g);
    const auto walls = critical_values(d);
    if (chamber < 0 || chamber >= chamber_count(d))
        throw std::invalid_argument("triple_motive_chamber: chamber out of range");
    LaurentPoly m = triple_motive_eps(g, d);
    for (int k = 0; k < chamber; ++k) {
        const int wall = walls[static_cast<std::size_t>(k)];
        m += flip_W(g, d, wall, FlipSign::minus) - flip_W(g, d, wall, FlipSign::plus);
    }
    return m;
}

InftyStrata infty_strata(int g, int d, int d1, int d2) {
    CurveParams curve(g);
    if (d1 + d2 != d) throw std::invalid_argument("infty_strata: d1 + d2 must equal d");
    InftyStrata s;
    if (d1 < d2) {
        s.smooth_cell = lefschetz(4 * g - 3) * sym_power(g, d2) * sym_power(g, d1 - d2 + 2 * g - 2);
        return s;
    }
    if (d1 == d2) {
        s.x2 = even_strata(g, d).x2;
        return s;
    }
    const int wall = d1 - d2;
    if (wall < 2 * g - 2)
        s.nsw_plus = lefschetz(2 * g) * sym_power(g, d2) * sym_power(g, 2 * g - 2 - wall);
    s.sw_plus = flip_W(g, d, wall, FlipSign::plus) - s.nsw_plus;
    s.spf2 = lefschetz(2 * g) * sym_power(g, d2) * proj_space(d1 - d2 + g - 2) *
             (l_minus_one() * sym_power(g, d2 - d1 + 2 * g - 2) + jacobian(g));
    return s;
}

CheckReport b_sum_check(int g, int d) {
    CurveParams curve(g);
    CheckReport report{"b_sum g=" + std::to_string(g) + " d=" + std::to_string(d), true, ""};
    const bool odd = ((d % 2) + 2) % 2 == 1;
    if (d >= 0 && !odd)
        throw ParityMismatch("b_sum_check supports odd d >= 1 and all d < 0");

    const LaurentPoly lhs = triple_motive_chamber(g, d, chamber_count(d) - 1);
    LaurentPoly rhs;
    for (const auto& [d1, d2] : index_set(g, d, IndexKind::i2_infty)) {
        const InftyStrata s = infty_strata(g, d, d1, d2);
        if (d1 < d2) {
            rhs += s.smooth_cell;
        } else if (d1 > d2) {
            rhs += s.spf2 - s.sw_plus;
        }
    }
    if (d >= 1) {
        // sum of [B+] over all walls, via 0 = [F^{(d),1+}] + sum([B-] - [B+])
        LaurentPoly b_plus_sum = lefschetz(4 * g - 3) * pair_motive(g, d, 0);
        for (int wall : critical_values(d)) b_plus_sum += flip_B_minus(g, d, wall);
        rhs += b_plus_sum;
    }
    if (lhs != rhs) {
        report.pass = false;
        report.detail = diff_witness("M_infinity decomposition", lhs, rhs);
    }
    return report;
}

EvenStrata even_strata(int g, int d) {
    CurveParams curve(g);
    if (d < 0 || d % 2 != 0) throw ParityMismatch("even_strata needs even d >= 0");
    const LaurentPoly s_half = sym_power(g, d / 2);
    const LaurentPoly sym2_half = sym2(s_half);
    EvenStrata r;
    // X1 = L^(4g-2) [S](L^(d/2-1) - 1) + L^(4g-3)[J][S][CP^(d/2-1)]
    //      - L^(4g-3)[S]^2 + L^(4g-2) Sym^2 S, with the first product
    //      grouped as L^(4g-3) [S](L^(d/2) - L) to stay polynomial at d = 0.
    r.x1 = lefschetz(4 * g - 3) *
           (s_half * (lefschetz(d / 2) - lefschetz(1)) +
            jacobian(g) * s_half * proj_space(d / 2 - 1) - s_half * s_half +
            lefschetz(1) * sym2_half);
    r.x2 = s_half * jacobian(g) * proj_space(g - 2) * lefschetz(4 * g - 3) +
           s_half * lefschetz(3 * g - 2) * (lefschetz(2 * g - 2) + lefschetz(g) - kOne);
    r.m_ss = jacobian(g) * s_half * proj_space(d / 2 - 1) - s_half * s_half + sym2_half;
    return r;
}

int triple_dim(int g, int d, int gamma) {
    if (gamma == 0) return d + 1 + 6 * (g - 1);
    return d + 6 * g - 6 + 4 * gamma;
}

LaurentPoly poles_motive(int g, int d, int gamma, PolesRegime regime) {
    CurveParams curve(g);
    if (gamma < 1) throw std::invalid_argument("poles_motive needs gamma >= 1");
    LaurentPoly total;
    if (regime == PolesRegime::infty) {
        if (gamma <= d)
            throw PoleOrderTooSmall("infinity regime needs gamma > d");
        for (const auto& [d1, d2] : poles_index_set(g, d, gamma, PolesKind::type2_infty))
            total += lefschetz(4 * g - 4 + 3 * gamma) * sym_power(g, d2) *
                     sym_power(g, d1 - d2 + 2 * g - 2 + gamma);
        return total;
    }
    for (const auto& [d1, d2] : poles_index_set(g, d, gamma, PolesKind::type2_eps))
        total += lefschetz(4 * g - 4 + 3 * gamma) * sym_power(g, d2) *
                 sym_power(g, d1 - d2 + 2 * g - 2 + gamma);
    if (d >= 0) {
        total += lefschetz(4 * g - 4 + 4 * gamma) * pair_motive(g, d, 0);
        for (const auto& [d1, d2] : poles_index_set(g, d, gamma, PolesKind::type1_eps))
            total += lefschetz(3 * g - 3 + 3 * gamma + d2) * sym_power(g, d1) *
                     sym_power(g, d1 - d2 + 2 * g - 2 + gamma);
    }
    return total;
}

CheckReport poles_limit_check(int g, int d, int degree_bound, int gamma_max) {
    CurveParams curve(g);
    CheckReport report{"poles_limit g=" + std::to_string(g) + " d=" + std::to_string(d), true, ""};
    if (gamma_max < 2) throw std::invalid_argument("poles_limit_check: gamma_max must be >= 2");

    // limit series (1+t^3)^2g (1+t)^2g / ((1-t^2)^2 (1-t^4)), truncated in t
    const LaurentPoly t = LaurentPoly::variable(Var::t);
    auto trunc_mul = [&](const LaurentPoly& a, const LaurentPoly& b) {
        return (a * b).truncated_t(degree_bound);
    };
    LaurentPoly limit = trunc_mul((kOne + t.pow(3)).pow(2 * g), (kOne + t).pow(2 * g));
    LaurentPoly geom2, geom4;
    for (int k = 0; 2 * k <= degree_bound; ++k) geom2 += t.pow(2 * k);
    for (int k = 0; 4 * k <= degree_bound; ++k) geom4 += t.pow(4 * k);
    limit = trunc_mul(trunc_mul(trunc_mul(limit, geom2), geom2), geom4);

    for (PolesRegime regime : {PolesRegime::eps, PolesRegime::infty}) {
        for (int gamma : {gamma_max - 1, gamma_max}) {
            if (regime == PolesRegime::infty && gamma <= d) continue;
            const LaurentPoly p =
                pvir(poles_motive(g, d, gamma, regime), triple_dim(g, d, gamma))
                    .truncated_t(degree_bound);
            if (p != limit) {
                report.pass = false;
                report.detail = diff_witness(
                    regime == PolesRegime::eps ? "eps regime" : "infty regime", p, limit);
                return report;
            }
        }
    }
    return report;
}

HiggsExtract higgs_motive_extract(int g) {
    CurveParams curve(g);
    HiggsExtract out;
    out.report = {"higgs_extract g=" + std::to_string(g), true, ""};
    auto side = [&](int n) {
        return triple_motive_eps(g, 2 * n + 1) -
               lefschetz(2 * n - 2 * g + 3) * triple_motive_eps(g, 4 * g - 5 - 2 * n);
    };
    out.m21 = side(g - 1); // right side is [M^{2,1}] [CP^0]
    for (int n = g; n <= g + 2; ++n) {
        const LaurentPoly candidate = exact_div(side(n), proj_space(2 * n - 2 * g + 2));
        if (candidate != out.m21) {
            out.report.pass = false;
            out.report.detail =
                "inconsistent [M^{2,1}] at n=" + std::to_string(n) + ": " + candidate.str();
            return out;
        }
    }
    return out;
}

} // namespace wallcross
