#ifndef HECKE2_PARAM_POINT_HPP
#define HECKE2_PARAM_POINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hecke2/coeff_ring.hpp"
#include "hecke2/errors.hpp"
#include "hecke2/fields.hpp"

namespace hecke2 {

// Uniform construction of field constants from a sample element (PrimeField
// values carry their modulus, so constants must be built from a live value).
inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational integer_like(const mpz_class& n, const Rational&) { return Rational(n); }
inline PrimeField zero_like(const PrimeField& x) { return PrimeField::zero(x.prime()); }
inline PrimeField one_like(const PrimeField& x) { return PrimeField::one(x.prime()); }
inline PrimeField integer_like(const mpz_class& n, const PrimeField& x) {
    return PrimeField::from_integer(n, x.prime());
}

/// Elementary symmetric values e_1, ..., e_n of the given field elements.
template <typename F>
std::vector<F> elementary_symmetric_values(const std::vector<F>& roots) {
    if (roots.empty()) throw invalid_rank_error("need at least one value");
    // Expand prod (t + v_i): the coefficient of t^{n-k} is e_k.
    std::vector<F> e(roots.size() + 1, zero_like(roots[0]));
    e[0] = one_like(roots[0]);
    for (size_t i = 0; i < roots.size(); ++i) {
        for (size_t k = i + 1; k >= 1; --k) {
            e[k] = e[k] + roots[i] * e[k - 1];
        }
    }
    return std::vector<F>(e.begin() + 1, e.end());
}

/// A specialization point: concrete field values for q and e_1, ..., e_m.
/// q and e_m must be nonzero (they are units of the coefficient ring).
template <typename F>
struct ParamPoint {
    F q;
    std::vector<F> e;  // e[j] holds the value of e_{j+1}

    static ParamPoint from_e(F q_value, std::vector<F> e_values) {
        if (q_value.is_zero()) throw non_unit_error("q must be nonzero at a specialization point");
        if (e_values.empty()) throw invalid_rank_error("need at least one symmetric parameter");
        if (e_values.back().is_zero()) {
            throw non_unit_error("e" + std::to_string(e_values.size()) +
                                 " must be nonzero at a specialization point");
        }
        return ParamPoint{std::move(q_value), std::move(e_values)};
    }

    /// Build the point from root values v_1, ..., v_m instead of their
    /// elementary symmetric values.
    static ParamPoint from_v(F q_value, const std::vector<F>& v_values) {
        return from_e(std::move(q_value), elementary_symmetric_values(v_values));
    }

    int num_params() const { return static_cast<int>(e.size()); }
    F zero() const { return zero_like(q); }
    F one() const { return one_like(q); }
};

namespace detail {

template <typename F>
F field_pow(F base, int exp, const F& one) {
    if (exp < 0) {
        base = base.inverse();
        exp = -exp;
    }
    F result = one;
    while (exp > 0) {
        if (exp & 1) result = result * base;
        base = base * base;
        exp >>= 1;
    }
    return result;
}

}  // namespace detail

/// Evaluate a coefficient at a point: the ring homomorphism q -> q0,
/// e_j -> e_j0. The point must carry as many symmetric parameters as the
/// coefficient ring.
template <typename F>
F evaluate(const CoeffPoly& poly, const ParamPoint<F>& point) {
    if (point.num_params() != poly.num_params()) {
        throw ring_mismatch_error("coefficient over " + std::to_string(poly.num_params()) +
                                  " parameters evaluated at a point with " +
                                  std::to_string(point.num_params()));
    }
    F one = point.one();
    F total = point.zero();
    for (const auto& [exp, coeff] : poly.terms()) {
        F term = integer_like(coeff, one) * detail::field_pow(point.q, exp.q_pow, one);
        for (size_t j = 0; j < exp.e_pows.size(); ++j) {
            if (exp.e_pows[j] == 0) continue;
            if (point.e[j].is_zero() && exp.e_pows[j] < 0) {
                throw evaluation_error("e" + std::to_string(j + 1) +
                                       " is zero but appears with negative exponent");
            }
            term = term * detail::field_pow(point.e[j], exp.e_pows[j], one);
        }
        total = total + term;
    }
    return total;
}

/// Deterministic "generic" rational point: small random numerators and
/// denominators, rejecting degenerate choices (q in {0, 1, -1}, vanishing
/// top parameter).
ParamPoint<Rational> generic_rational_point(int num_params, uint64_t seed);

/// Deterministic "generic" point over Z/p, rejecting q with q^k = 1 for
/// k <= 2*num_params and vanishing top parameter.
ParamPoint<PrimeField> generic_prime_point(int num_params, uint64_t seed, uint64_t prime);

}  // namespace hecke2

#endif
