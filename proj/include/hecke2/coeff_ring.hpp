#ifndef HECKE2_COEFF_RING_HPP
#define HECKE2_COEFF_RING_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hecke2/errors.hpp"

namespace hecke2 {

/// Exponent vector of one coefficient-ring monomial q^a e_1^{b_1} ... e_m^{b_m}.
///
/// The ring is Z[q^{±1}, e_1, ..., e_{m-1}, e_m^{±1}]: q and e_m are
/// invertible, the remaining e_j only appear with non-negative exponent.
struct CoeffExponent {
    int q_pow = 0;
    std::vector<int> e_pows;  // size m, fixed per ring instance

    auto operator<=>(const CoeffExponent&) const = default;
};

/// Sparse element of the coefficient ring with arbitrary-precision integer
/// coefficients. Canonical form: no zero coefficients, terms ordered
/// lexicographically on (q_pow, e_pows).
class CoeffPoly {
public:
    using TermMap = std::map<CoeffExponent, mpz_class>;

    explicit CoeffPoly(int num_params);

    static CoeffPoly zero(int num_params) { return CoeffPoly(num_params); }
    static CoeffPoly one(int num_params);
    static CoeffPoly integer(int num_params, const mpz_class& value);
    /// q^power
    static CoeffPoly q(int num_params, int power = 1);
    /// e_index^power, 1-based index; only e_m admits negative powers.
    static CoeffPoly e(int num_params, int index, int power = 1);
    /// Single monomial coeff * q^{q_pow} * prod e_j^{e_pows[j-1]}.
    static CoeffPoly monomial(int num_params, const mpz_class& coeff, int q_pow,
                              std::vector<int> e_pows);
    /// Q = q - 1.
    static CoeffPoly q_minus_one(int num_params);

    int num_params() const { return num_params_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    CoeffPoly& operator+=(const CoeffPoly& rhs);
    CoeffPoly& operator-=(const CoeffPoly& rhs);
    CoeffPoly operator-() const;
    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    CoeffPoly operator*(const mpz_class& scalar) const;

    bool operator==(const CoeffPoly& rhs) const {
        return num_params_ == rhs.num_params_ && terms_ == rhs.terms_;
    }

    /// Canonical text: terms in map order, "q^a" / "e1^b" factors with unit
    /// exponents omitted; e.g. "q - 1", "2 q^2 e1 e3^-1".
    std::string to_string() const;

private:
    void add_term(const CoeffExponent& exp, const mpz_class& coeff);
    void check_same_ring(const CoeffPoly& rhs) const;

    int num_params_;
    TermMap terms_;
};

}  // namespace hecke2

#endif
