#include "hecke2/affine.hpp"

namespace hecke2 {

AffineElement::AffineElement(XPoly f_part, XPoly g_part)
    : f(std::move(f_part)), g(std::move(g_part)) {
    if (f.num_params() != g.num_params()) {
        throw ring_mismatch_error("element parts live over different parameter rings");
    }
}

AffineElement AffineElement::t_inverse(int num_params) {
    CoeffPoly q_inv = CoeffPoly::q(num_params, -1);
    return {XPoly::constant(q_inv - CoeffPoly::one(num_params)), XPoly::constant(q_inv)};
}

AffineElement AffineElement::from_poly(XPoly f_part) {
    int num_params = f_part.num_params();
    return {std::move(f_part), XPoly::zero(num_params)};
}

AffineElement AffineElement::x1(int num_params, int power) {
    return from_poly(XPoly::monomial(num_params, power, 0));
}

AffineElement AffineElement::x2(int num_params, int power) {
    return from_poly(XPoly::monomial(num_params, 0, power));
}

AffineElement& AffineElement::operator+=(const AffineElement& rhs) {
    f += rhs.f;
    g += rhs.g;
    return *this;
}

AffineElement& AffineElement::operator-=(const AffineElement& rhs) {
    f -= rhs.f;
    g -= rhs.g;
    return *this;
}

AffineElement operator*(const AffineElement& a, const AffineElement& b) {
    if (a.num_params() != b.num_params()) {
        throw ring_mismatch_error("cannot multiply elements over different parameter rings");
    }
    int num_params = a.num_params();
    CoeffPoly q = CoeffPoly::q(num_params);
    CoeffPoly big_q = CoeffPoly::q_minus_one(num_params);
    // (f1 + g1 T)(f2 + g2 T): push T through f2 and g2 with
    // T h = (swap h) T + (q-1) D(h), then collapse T^2 = (q-1) T + q.
    XPoly swapped_f2 = b.f.swapped();
    XPoly swapped_g2 = b.g.swapped();
    XPoly f_part = a.f * b.f + (a.g * divided_diff(b.f)) * big_q + (a.g * swapped_g2) * q;
    XPoly g_part = a.f * b.g + a.g * swapped_f2 + (a.g * swapped_g2) * big_q +
                   (a.g * divided_diff(b.g)) * big_q;
    return {std::move(f_part), std::move(g_part)};
}

std::string AffineElement::to_string() const {
    return f.to_string() + " + (" + g.to_string() + ") T";
}

bool is_central(const AffineElement& a) {
    int num_params = a.num_params();
    AffineElement t = AffineElement::t(num_params);
    AffineElement x1 = AffineElement::x1(num_params);
    bool by_commutators = (a * t == t * a) && (a * x1 == x1 * a);
    bool by_structure = a.g.is_zero() && a.f.is_symmetric();
    if (by_commutators != by_structure) {
        throw internal_error("centrality characterizations disagree on " + a.to_string());
    }
    return by_commutators;
}

bool verify_power_conjugation(int k, int num_params) {
    if (k < 2) {
        throw std::invalid_argument("conjugation formula needs power >= 2, got " +
                                    std::to_string(k));
    }
    AffineElement t = AffineElement::t(num_params);
    AffineElement lhs = t * AffineElement::x1(num_params, k) * t;
    XPoly correction =
        XPoly::monomial(num_params, 1, 1) * complete_symmetric(num_params, k - 2);
    AffineElement rhs{XPoly::monomial(num_params, 0, k) * CoeffPoly::q(num_params),
                      -(correction * CoeffPoly::q_minus_one(num_params))};
    return lhs == rhs;
}

bool verify_x2_relation(int m) {
    AffineElement t = AffineElement::t(m);
    AffineElement lhs =
        AffineElement::from_poly(defining_poly(XVar::x2, m) * CoeffPoly::q(m));
    AffineElement rhs = t * AffineElement::from_poly(defining_poly(XVar::x1, m)) * t +
                        AffineElement{XPoly::zero(m),
                                      t_correction(m) * CoeffPoly::q_minus_one(m)};
    return lhs == rhs;
}

bool verify_eh_identity(int n) {
    if (n < 1) throw std::invalid_argument("identity needs degree >= 1");
    // Work over the rank-1 parameter ring: only integer coefficients appear.
    XPoly elementary[3] = {XPoly::one(1), complete_symmetric(1, 1),
                           XPoly::monomial(1, 1, 1)};
    XPoly total = XPoly::zero(1);
    for (int r = 0; r <= n; ++r) {
        if (n - r > 2) continue;  // e_j vanishes beyond the number of variables
        XPoly term = elementary[n - r] * complete_symmetric(1, r);
        if (r % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total.is_zero();
}

}  // namespace hecke2
