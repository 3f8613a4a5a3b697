#ifndef HECKE2_X_POLY_HPP
#define HECKE2_X_POLY_HPP

#include <compare>
#include <map>
#include <string>

#include "hecke2/coeff_ring.hpp"

namespace hecke2 {

/// Exponent pair of a Laurent monomial X1^{x1} X2^{x2}.
struct XMonomial {
    int x1 = 0;
    int x2 = 0;

    auto operator<=>(const XMonomial&) const = default;
};

/// Laurent polynomial in X1, X2 with coefficients in the parameter ring.
/// Canonical form: no zero coefficients, terms ordered lexicographically
/// on (x1, x2).
class XPoly {
public:
    using TermMap = std::map<XMonomial, CoeffPoly>;

    explicit XPoly(int num_params) : num_params_(num_params) {
        if (num_params < 1) throw invalid_rank_error("need at least one symmetric parameter");
    }

    static XPoly zero(int num_params) { return XPoly(num_params); }
    static XPoly one(int num_params) { return constant(CoeffPoly::one(num_params)); }
    static XPoly constant(CoeffPoly coeff);
    static XPoly monomial(int num_params, int x1_pow, int x2_pow);
    static XPoly monomial(CoeffPoly coeff, int x1_pow, int x2_pow);

    int num_params() const { return num_params_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CoeffPoly coefficient(int x1_pow, int x2_pow) const;

    /// Image under the exponent swap X1 <-> X2.
    XPoly swapped() const;
    bool is_symmetric() const { return *this == swapped(); }

    XPoly& operator+=(const XPoly& rhs);
    XPoly& operator-=(const XPoly& rhs);
    XPoly operator-() const;
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly operator*(const CoeffPoly& scalar) const;

    bool operator==(const XPoly& rhs) const {
        return num_params_ == rhs.num_params_ && terms_ == rhs.terms_;
    }

    /// Canonical text: terms in (x1, x2) order; multi-term coefficients
    /// parenthesized, e.g. "e2 - e1 X2 + X2^2 - e1 X1 + X1 X2 + X1^2".
    std::string to_string() const;

private:
    void add_term(const XMonomial& mono, const CoeffPoly& coeff);
    void check_same_ring(const XPoly& rhs) const;

    int num_params_;
    TermMap terms_;
};

/// Twisted derivation D with T f = (swap f) T + (q-1) D(f); determined by
/// (f - swap f) = D(f) (1 - X1 X2^{-1}). On monomials: D(X1^i X2^j) is a
/// sum of j-i monomials when j > i, minus a sum of i-j when j < i, zero on
/// the diagonal. D(X1) = -X2, D(X2) = X2.
XPoly divided_diff(const XPoly& f);

/// Companion operator D_s = -swap . D, determined by
/// (f - swap f) = D_s(f) (1 - X1^{-1} X2). D_s(X1) = X1, D_s(X2) = -X1.
/// D and D_s agree exactly on symmetric inputs (both vanish there).
XPoly divided_diff_s(const XPoly& f);

/// Complete homogeneous symmetric polynomial of the given degree,
/// sum of X1^j X2^{k-j}; zero for negative degree.
XPoly complete_symmetric(int num_params, int degree);

enum class XVar { x1, x2 };

/// Defining polynomial of the quotient in one variable: monic of degree m
/// with e_1, ..., e_m as signed coefficients, so its roots have elementary
/// symmetric values e_j. Over the rank-m parameter ring.
XPoly defining_poly(XVar var, int m);

/// Central correction element z: the coefficient of T produced when the
/// defining relation is pushed through X2^m. Satisfies
/// X2^m = (lower X2 powers) + q^{-1}(q-1) z T in the quotient.
XPoly t_correction(int m);

}  // namespace hecke2

#endif
