#ifndef HECKE2_CYCLOTOMIC_HPP
#define HECKE2_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "hecke2/affine.hpp"

namespace hecke2 {

/// True when every monomial of p has both exponents in [0, m-1].
bool is_restricted(const XPoly& p, int m);

/// Element of the cyclotomic quotient of order m, in normal form f + g T
/// with f, g restricted (all X-exponents in [0, m-1]). The quotient kills
/// the defining polynomial of X1; the restricted pairs form a free basis,
/// so equality is componentwise.
class CycloElement {
public:
    CycloElement(int m, XPoly f_part, XPoly g_part);

    static CycloElement zero(int m) { return {m, XPoly::zero(m), XPoly::zero(m)}; }
    static CycloElement one(int m) { return {m, XPoly::one(m), XPoly::zero(m)}; }
    static CycloElement t(int m) { return {m, XPoly::zero(m), XPoly::one(m)}; }
    static CycloElement from_poly(int m, XPoly f_part);

    int quotient_order() const { return m_; }
    const XPoly& f() const { return f_; }
    const XPoly& g() const { return g_; }
    bool is_zero() const { return f_.is_zero() && g_.is_zero(); }

    CycloElement& operator+=(const CycloElement& rhs);
    CycloElement& operator-=(const CycloElement& rhs);
    CycloElement operator-() const { return {m_, -f_, -g_}; }
    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    /// Product in the quotient: multiply in the ambient algebra, reduce.
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    CycloElement operator*(const CoeffPoly& scalar) const {
        return {m_, f_ * scalar, g_ * scalar};
    }

    bool operator==(const CycloElement& rhs) const {
        return m_ == rhs.m_ && f_ == rhs.f_ && g_ == rhs.g_;
    }

    /// Canonical text "<f> + (<g>) T", as for ambient elements.
    std::string to_string() const;

private:
    int m_;
    XPoly f_, g_;
};

/// The quotient map: rewrites an ambient element to restricted normal form.
/// X1 rules substitute the defining relation (and its X1^{-1} companion,
/// which divides by the unit e_m); the X2^m rule injects a T-term through
/// the conjugated relation q f_v(X2) = T f_v(X1) T + (q-1) z T; X2^{-1}
/// goes through q T^{-1} X1^{-1} T^{-1}. The element's coefficient ring
/// rank must equal m.
CycloElement reduce(const AffineElement& a, int m);

/// Image of X1^power (any integer) as a restricted polynomial in X1 alone.
XPoly x1_power_reduced(int power, int m);

/// The projector d: keeps X1^i X2^j for i < j, sends it to -X1^j X2^i for
/// i > j, kills the diagonal. Idempotent; its kernel is exactly the
/// symmetric subspace.
XPoly antisymmetric_fold(const XPoly& p);

/// Symmetric monomial basis element: X1^i X2^j + X1^j X2^i for i < j,
/// X1^i X2^i on the diagonal. Requires 0 <= i <= j <= m-1.
XPoly monomial_symmetric(int m, int i, int j);

/// The obstruction map g -> d(X1 g reduced): a symmetric restricted g has
/// X1 g symmetric in the quotient iff this vanishes. Input must be
/// symmetric and restricted.
XPoly x1_obstruction(const XPoly& g, int m);

/// Basis p_0, ..., p_{m-1} of {g symmetric restricted : X1 g symmetric in
/// the quotient}: p_k corrects X1^k X2^{m-1} + X1^{m-1} X2^k by lower
/// symmetric monomials, solved exactly through the triangular obstruction
/// matrix (diagonal entries -1, checked at runtime). The elements p_k T
/// are the T-part of the centre basis.
std::vector<XPoly> centre_t_basis(int m);

/// Commutator test against the generators T and X1 (X2 is generated by
/// them, so these suffice).
bool is_central(const CycloElement& c);

/// Whether f + g T commutes with T; cross-checked against the structural
/// criterion (f and g both symmetric) — internal_error on disagreement.
bool commutes_with_t(const XPoly& f, const XPoly& g, int m);

/// Checks X1^{k-1} z = p_k in the quotient for every 0 <= k <= m-1
/// (k = 0 goes through the X1^{-1} rule).
bool verify_centre_surjection(int m);

/// Identity behind the central preimages, for any integer k:
/// the symmetric ambient element q (X1^k f_v(X2) + X2^k f_v(X1)) is central
/// and reduces to (q-1) (X1^k z) T.
bool central_preimage_identity(int m, int k);

/// Same check, restricted to the basis range 0 <= k <= m-1.
bool verify_central_preimage(int m, int k);

/// Coefficients of X1^j X2^{m-1} (+ swap) in the reduced X1^{k-1} z,
/// j = 0..m-1; the surjection argument needs this to be the k-th unit
/// vector. Requires 0 <= k <= m-1.
std::vector<CoeffPoly> leading_coefficient_profile(int m, int k);

}  // namespace hecke2

#endif
