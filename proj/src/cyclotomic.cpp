#include "hecke2/cyclotomic.hpp"

namespace hecke2 {

namespace {

CycloElement mul_by_t(const CycloElement& a) {
    int m = a.quotient_order();
    // (f + g T) T = q g + (f + (q-1) g) T
    return {m, a.g() * CoeffPoly::q(m), a.f() + a.g() * CoeffPoly::q_minus_one(m)};
}

/// Image of X2^{-1}: q T^{-1} X1^{-1} T^{-1} with every factor already in
/// normal form, multiplied in the quotient. (Products of restricted
/// elements never reinvoke this rule, so the recursion is well-founded.)
CycloElement psi_x2_inverse(int m) {
    CoeffPoly q_inv = CoeffPoly::q(m, -1);
    CycloElement t_inv{m, XPoly::constant(q_inv - CoeffPoly::one(m)),
                       XPoly::constant(q_inv)};
    CycloElement x1_inv = CycloElement::from_poly(m, x1_power_reduced(-1, m));
    return (t_inv * x1_inv * t_inv) * CoeffPoly::q(m);
}

CycloElement reduce_monomial(const CoeffPoly& c, int i, int j, int m) {
    if (j < 0) {
        return reduce_monomial(c, i, j + 1, m) * psi_x2_inverse(m);
    }
    if (j >= m) {
        // Split off one X2^m and substitute the conjugated relation:
        // X2^m -> lower X2 powers + q^{-1}(q-1) z T.
        CycloElement total = CycloElement::zero(m);
        for (int t = 0; t < m; ++t) {
            CoeffPoly coeff = CoeffPoly::e(m, m - t);
            if ((m - t) % 2 == 0) coeff = -coeff;
            total += reduce_monomial(c * coeff, i, j - m + t, m);
        }
        XPoly z_shifted = XPoly::monomial(m, i, j - m) * t_correction(m);
        CycloElement z_reduced = reduce(AffineElement::from_poly(std::move(z_shifted)), m);
        CoeffPoly scale = c * CoeffPoly::q(m, -1) * CoeffPoly::q_minus_one(m);
        total += mul_by_t(z_reduced * scale);
        return total;
    }
    // X2 exponent in range: only X1 may need the univariate rules.
    return CycloElement::from_poly(m, x1_power_reduced(i, m) * XPoly::monomial(c, 0, j));
}

}  // namespace

bool is_restricted(const XPoly& p, int m) {
    for (const auto& [mono, coeff] : p.terms()) {
        if (mono.x1 < 0 || mono.x1 >= m || mono.x2 < 0 || mono.x2 >= m) return false;
    }
    return true;
}

CycloElement::CycloElement(int m, XPoly f_part, XPoly g_part)
    : m_(m), f_(std::move(f_part)), g_(std::move(g_part)) {
    if (m < 1) throw invalid_rank_error("quotient order must be at least 1, got " +
                                        std::to_string(m));
    if (f_.num_params() != m || g_.num_params() != m) {
        throw ring_mismatch_error("quotient of order " + std::to_string(m) +
                                  " needs coefficients over " + std::to_string(m) +
                                  " parameters");
    }
    if (!is_restricted(f_, m) || !is_restricted(g_, m)) {
        throw std::invalid_argument("element parts must have X-exponents in [0, " +
                                    std::to_string(m - 1) + "]");
    }
}

CycloElement CycloElement::from_poly(int m, XPoly f_part) {
    return {m, std::move(f_part), XPoly::zero(m)};
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
    if (m_ != rhs.m_) throw ring_mismatch_error("cannot combine quotients of different order");
    f_ += rhs.f_;
    g_ += rhs.g_;
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
    if (m_ != rhs.m_) throw ring_mismatch_error("cannot combine quotients of different order");
    f_ -= rhs.f_;
    g_ -= rhs.g_;
    return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    if (a.m_ != b.m_) throw ring_mismatch_error("cannot multiply quotients of different order");
    return reduce(AffineElement{a.f_, a.g_} * AffineElement{b.f_, b.g_}, a.m_);
}

std::string CycloElement::to_string() const {
    return f_.to_string() + " + (" + g_.to_string() + ") T";
}

CycloElement reduce(const AffineElement& a, int m) {
    if (m < 1) throw invalid_rank_error("quotient order must be at least 1, got " +
                                        std::to_string(m));
    if (a.num_params() != m) {
        throw ring_mismatch_error("element over " + std::to_string(a.num_params()) +
                                  " parameters cannot map to a quotient of order " +
                                  std::to_string(m));
    }
    CycloElement total = CycloElement::zero(m);
    for (const auto& [mono, coeff] : a.f.terms()) {
        total += reduce_monomial(coeff, mono.x1, mono.x2, m);
    }
    CycloElement before_t = CycloElement::zero(m);
    for (const auto& [mono, coeff] : a.g.terms()) {
        before_t += reduce_monomial(coeff, mono.x1, mono.x2, m);
    }
    total += mul_by_t(before_t);
    return total;
}

XPoly x1_power_reduced(int power, int m) {
    if (m < 1) throw invalid_rank_error("quotient order must be at least 1, got " +
                                        std::to_string(m));
    std::map<int, CoeffPoly> terms;
    terms.emplace(power, CoeffPoly::one(m));
    auto add = [&](int d, const CoeffPoly& c) {
        auto [it, inserted] = terms.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    };
    // Knock the top exponent below m: X1^m = signed lower e-terms.
    while (!terms.empty() && terms.rbegin()->first >= m) {
        auto top = *terms.rbegin();
        terms.erase(std::prev(terms.end()));
        for (int t = 0; t < m; ++t) {
            CoeffPoly coeff = CoeffPoly::e(m, m - t);
            if ((m - t) % 2 == 0) coeff = -coeff;
            add(top.first - m + t, top.second * coeff);
        }
    }
    // Raise the bottom exponent to 0: X1^{-1} = e_m^{-1} * alternating tail.
    while (!terms.empty() && terms.begin()->first < 0) {
        auto bottom = *terms.begin();
        terms.erase(terms.begin());
        for (int j = 1; j <= m; ++j) {
            CoeffPoly coeff = j == m ? CoeffPoly::one(m) : CoeffPoly::e(m, m - j);
            if (j % 2 == 0) coeff = -coeff;
            add(bottom.first + j, bottom.second * coeff * CoeffPoly::e(m, m, -1));
        }
    }
    XPoly result(m);
    for (const auto& [d, c] : terms) result += XPoly::monomial(c, d, 0);
    return result;
}

XPoly antisymmetric_fold(const XPoly& p) {
    XPoly result(p.num_params());
    for (const auto& [mono, coeff] : p.terms()) {
        if (mono.x1 < mono.x2) {
            result += XPoly::monomial(coeff, mono.x1, mono.x2);
        } else if (mono.x1 > mono.x2) {
            result -= XPoly::monomial(coeff, mono.x2, mono.x1);
        }
    }
    return result;
}

XPoly monomial_symmetric(int m, int i, int j) {
    if (i < 0 || j < i || j > m - 1) {
        throw std::out_of_range("need 0 <= i <= j <= " + std::to_string(m - 1) + ", got i=" +
                                std::to_string(i) + ", j=" + std::to_string(j));
    }
    XPoly result = XPoly::monomial(m, i, j);
    if (i != j) result += XPoly::monomial(m, j, i);
    return result;
}

XPoly x1_obstruction(const XPoly& g, int m) {
    if (g.num_params() != m) {
        throw ring_mismatch_error("polynomial over " + std::to_string(g.num_params()) +
                                  " parameters in a quotient of order " + std::to_string(m));
    }
    if (!is_restricted(g, m) || !g.is_symmetric()) {
        throw std::domain_error("obstruction map needs a symmetric restricted polynomial");
    }
    CycloElement shifted =
        reduce(AffineElement::from_poly(XPoly::monomial(m, 1, 0) * g), m);
    if (!shifted.g().is_zero()) {
        throw internal_error("X1-shift of a restricted polynomial produced a T-term");
    }
    return antisymmetric_fold(shifted.f());
}

std::vector<XPoly> centre_t_basis(int m) {
    if (m < 1) throw invalid_rank_error("quotient order must be at least 1, got " +
                                        std::to_string(m));
    // Domain pairs (i, j), 0 <= i <= j <= m-2, ascending lex. The
    // obstruction of m_ij hits X1^i X2^{j+1} with coefficient -1 (checked)
    // plus at most one monomial belonging to an earlier pair, so one
    // ascending sweep solves the system exactly.
    std::vector<std::pair<int, int>> pairs;
    std::vector<XPoly> images;
    for (int i = 0; i + 1 <= m - 1; ++i) {
        for (int j = i; j + 1 <= m - 1; ++j) {
            pairs.emplace_back(i, j);
            images.push_back(x1_obstruction(monomial_symmetric(m, i, j), m));
            CoeffPoly diagonal = images.back().coefficient(i, j + 1);
            if (!(diagonal == -CoeffPoly::one(m))) {
                throw internal_error("obstruction matrix diagonal is not -1 at (" +
                                     std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
    std::vector<XPoly> basis;
    basis.reserve(static_cast<size_t>(m));
    for (int k = 0; k <= m - 1; ++k) {
        XPoly top = monomial_symmetric(m, k, m - 1);
        XPoly residual = x1_obstruction(top, m);
        XPoly correction = XPoly::zero(m);
        for (size_t idx = 0; idx < pairs.size(); ++idx) {
            auto [i, j] = pairs[idx];
            CoeffPoly c = -residual.coefficient(i, j + 1);
            if (c.is_zero()) continue;
            residual -= images[idx] * c;
            correction += monomial_symmetric(m, i, j) * c;
        }
        if (!residual.is_zero()) {
            throw internal_error("obstruction of X1^" + std::to_string(k) + " X2^" +
                                 std::to_string(m - 1) +
                                 " + swap is not in the span of the lower obstructions");
        }
        basis.push_back(top - correction);
    }
    return basis;
}

bool is_central(const CycloElement& c) {
    int m = c.quotient_order();
    CycloElement t = CycloElement::t(m);
    CycloElement x1 = CycloElement::from_poly(m, x1_power_reduced(1, m));
    return c * t == t * c && c * x1 == x1 * c;
}

bool commutes_with_t(const XPoly& f, const XPoly& g, int m) {
    CycloElement c{m, f, g};
    CycloElement t = CycloElement::t(m);
    bool by_commutator = c * t == t * c;
    bool by_structure = f.is_symmetric() && g.is_symmetric();
    if (by_commutator != by_structure) {
        throw internal_error("T-commutation characterizations disagree on " + c.to_string());
    }
    return by_commutator;
}

bool verify_centre_surjection(int m) {
    std::vector<XPoly> basis = centre_t_basis(m);
    CycloElement z = CycloElement::from_poly(m, t_correction(m));
    for (int k = 0; k <= m - 1; ++k) {
        CycloElement product =
            CycloElement::from_poly(m, x1_power_reduced(k - 1, m)) * z;
        if (!(product == CycloElement::from_poly(m, basis[static_cast<size_t>(k)]))) {
            return false;
        }
    }
    return true;
}

bool central_preimage_identity(int m, int k) {
    CoeffPoly q = CoeffPoly::q(m);
    XPoly lhs_poly = (XPoly::monomial(m, k, 0) * defining_poly(XVar::x2, m) +
                      XPoly::monomial(m, 0, k) * defining_poly(XVar::x1, m)) *
                     q;
    AffineElement preimage = AffineElement::from_poly(std::move(lhs_poly));
    if (!is_central(preimage)) return false;
    CycloElement lhs = reduce(preimage, m);
    CycloElement z_shifted = reduce(
        AffineElement::from_poly(XPoly::monomial(m, k, 0) * t_correction(m)), m);
    if (!z_shifted.g().is_zero()) {
        throw internal_error("X1-shift of the correction element produced a T-term");
    }
    CycloElement rhs{m, XPoly::zero(m), z_shifted.f() * CoeffPoly::q_minus_one(m)};
    return lhs == rhs;
}

bool verify_central_preimage(int m, int k) {
    if (k < 0 || k > m - 1) {
        throw std::out_of_range("need 0 <= k <= " + std::to_string(m - 1) + ", got " +
                                std::to_string(k));
    }
    return central_preimage_identity(m, k);
}

std::vector<CoeffPoly> leading_coefficient_profile(int m, int k) {
    if (k < 0 || k > m - 1) {
        throw std::out_of_range("need 0 <= k <= " + std::to_string(m - 1) + ", got " +
                                std::to_string(k));
    }
    CycloElement product = CycloElement::from_poly(m, x1_power_reduced(k - 1, m)) *
                           CycloElement::from_poly(m, t_correction(m));
    if (!product.g().is_zero()) {
        throw internal_error("polynomial product in the quotient produced a T-term");
    }
    std::vector<CoeffPoly> profile;
    profile.reserve(static_cast<size_t>(m));
    for (int j = 0; j <= m - 1; ++j) {
        profile.push_back(product.f().coefficient(j, m - 1));
    }
    return profile;
}

}  // namespace hecke2
