#include "hecke2/x_poly.hpp"

#include <sstream>

namespace hecke2 {

XPoly XPoly::constant(CoeffPoly coeff) {
    XPoly p(coeff.num_params());
    if (!coeff.is_zero()) p.terms_.emplace(XMonomial{0, 0}, std::move(coeff));
    return p;
}

XPoly XPoly::monomial(int num_params, int x1_pow, int x2_pow) {
    return monomial(CoeffPoly::one(num_params), x1_pow, x2_pow);
}

XPoly XPoly::monomial(CoeffPoly coeff, int x1_pow, int x2_pow) {
    XPoly p(coeff.num_params());
    if (!coeff.is_zero()) p.terms_.emplace(XMonomial{x1_pow, x2_pow}, std::move(coeff));
    return p;
}

CoeffPoly XPoly::coefficient(int x1_pow, int x2_pow) const {
    auto it = terms_.find(XMonomial{x1_pow, x2_pow});
    return it == terms_.end() ? CoeffPoly::zero(num_params_) : it->second;
}

XPoly XPoly::swapped() const {
    XPoly result(num_params_);
    for (const auto& [mono, coeff] : terms_) {
        result.terms_.emplace(XMonomial{mono.x2, mono.x1}, coeff);
    }
    return result;
}

void XPoly::add_term(const XMonomial& mono, const CoeffPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void XPoly::check_same_ring(const XPoly& rhs) const {
    if (num_params_ != rhs.num_params_) {
        throw ring_mismatch_error("cannot combine Laurent polynomials over " +
                                  std::to_string(num_params_) + " and " +
                                  std::to_string(rhs.num_params_) + " parameters");
    }
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
    check_same_ring(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
    check_same_ring(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
    return *this;
}

XPoly XPoly::operator-() const {
    XPoly result(num_params_);
    for (const auto& [mono, coeff] : terms_) result.terms_.emplace(mono, -coeff);
    return result;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    a.check_same_ring(b);
    XPoly result(a.num_params_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            result.add_term(XMonomial{ma.x1 + mb.x1, ma.x2 + mb.x2}, ca * cb);
        }
    }
    return result;
}

XPoly XPoly::operator*(const CoeffPoly& scalar) const {
    XPoly result(num_params_);
    for (const auto& [mono, coeff] : terms_) result.add_term(mono, coeff * scalar);
    return result;
}

std::string XPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        // Single-term coefficients contribute their sign to the join; the
        // magnitude is rendered via the negated poly when negative.
        bool negative = false;
        std::string coeff_text;
        bool parens = coeff.terms().size() > 1;
        if (parens) {
            coeff_text = "(" + coeff.to_string() + ")";
        } else {
            const auto& c = coeff.terms().begin()->second;
            negative = c < 0;
            coeff_text = (negative ? -coeff : coeff).to_string();
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (mono.x1 != 0) {
            factors.push_back(mono.x1 == 1 ? "X1" : "X1^" + std::to_string(mono.x1));
        }
        if (mono.x2 != 0) {
            factors.push_back(mono.x2 == 1 ? "X2" : "X2^" + std::to_string(mono.x2));
        }
        if (factors.empty()) {
            out << coeff_text;
        } else {
            if (coeff_text != "1") out << coeff_text << " ";
            for (size_t j = 0; j < factors.size(); ++j) {
                if (j > 0) out << " ";
                out << factors[j];
            }
        }
    }
    return out.str();
}

XPoly divided_diff(const XPoly& f) {
    XPoly result(f.num_params());
    for (const auto& [mono, coeff] : f.terms()) {
        int i = mono.x1, j = mono.x2;
        if (j > i) {
            for (int k = 0; k < j - i; ++k) {
                result += XPoly::monomial(coeff, i + k, j - k);
            }
        } else if (j < i) {
            for (int k = 0; k < i - j; ++k) {
                result -= XPoly::monomial(coeff, j + k, i - k);
            }
        }
    }
    return result;
}

XPoly divided_diff_s(const XPoly& f) {
    return -divided_diff(f).swapped();
}

XPoly complete_symmetric(int num_params, int degree) {
    XPoly result(num_params);
    for (int j = 0; j <= degree; ++j) {
        result += XPoly::monomial(num_params, j, degree - j);
    }
    return result;
}

XPoly defining_poly(XVar var, int m) {
    if (m < 1) throw invalid_rank_error("quotient order must be at least 1, got " +
                                        std::to_string(m));
    XPoly result(m);
    for (int j = 0; j <= m; ++j) {
        CoeffPoly coeff = j == m ? CoeffPoly::one(m) : CoeffPoly::e(m, m - j);
        if ((m - j) % 2 != 0) coeff = -coeff;
        result += XPoly::monomial(std::move(coeff), var == XVar::x1 ? j : 0,
                                  var == XVar::x2 ? j : 0);
    }
    return result;
}

XPoly t_correction(int m) {
    if (m < 1) throw invalid_rank_error("quotient order must be at least 1, got " +
                                        std::to_string(m));
    CoeffPoly top = CoeffPoly::e(m, m);
    if (m % 2 == 0) top = -top;
    XPoly result = XPoly::constant(std::move(top));
    XPoly inner(m);
    for (int j = 0; j <= m - 2; ++j) {
        CoeffPoly ej = j == 0 ? CoeffPoly::one(m) : CoeffPoly::e(m, j);
        if (j % 2 != 0) ej = -ej;
        inner += complete_symmetric(m, m - 2 - j) * ej;
    }
    result += XPoly::monomial(m, 1, 1) * inner;
    return result;
}

}  // namespace hecke2
