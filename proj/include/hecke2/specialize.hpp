#ifndef HECKE2_SPECIALIZE_HPP
#define HECKE2_SPECIALIZE_HPP

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hecke2/cyclotomic.hpp"
#include "hecke2/linalg.hpp"
#include "hecke2/param_point.hpp"

namespace hecke2 {

/// The quotient of order m is free of rank 2 m^2 over the parameters, with
/// basis X1^i X2^j T^eps ordered by (eps, i, j).
inline size_t basis_dimension(int m) {
    return 2 * static_cast<size_t>(m) * static_cast<size_t>(m);
}

/// The basis element for one flat index under the (eps, i, j) order.
CycloElement basis_element(int m, size_t index);

/// Coordinates of an element in the specialized regular representation.
template <typename F>
std::vector<F> to_vector(const CycloElement& x, const ParamPoint<F>& at) {
    size_t m = static_cast<size_t>(x.quotient_order());
    if (at.num_params() != x.quotient_order()) {
        throw ring_mismatch_error("point arity differs from the quotient order");
    }
    std::vector<F> v(basis_dimension(x.quotient_order()), at.zero());
    for (const auto& [mono, coeff] : x.f().terms()) {
        v[static_cast<size_t>(mono.x1) * m + static_cast<size_t>(mono.x2)] =
            evaluate(coeff, at);
    }
    for (const auto& [mono, coeff] : x.g().terms()) {
        v[m * m + static_cast<size_t>(mono.x1) * m + static_cast<size_t>(mono.x2)] =
            evaluate(coeff, at);
    }
    return v;
}

/// Matrix of y -> x y on the specialized algebra (columns indexed by basis
/// elements).
template <typename F>
Matrix<F> left_mult_matrix(const CycloElement& x, const ParamPoint<F>& at) {
    size_t n = basis_dimension(x.quotient_order());
    Matrix<F> result(n, n, at.zero());
    for (size_t col = 0; col < n; ++col) {
        std::vector<F> v = to_vector(x * basis_element(x.quotient_order(), col), at);
        for (size_t row = 0; row < n; ++row) result.at(row, col) = v[row];
    }
    return result;
}

/// Matrix of y -> y x.
template <typename F>
Matrix<F> right_mult_matrix(const CycloElement& x, const ParamPoint<F>& at) {
    size_t n = basis_dimension(x.quotient_order());
    Matrix<F> result(n, n, at.zero());
    for (size_t col = 0; col < n; ++col) {
        std::vector<F> v = to_vector(basis_element(x.quotient_order(), col) * x, at);
        for (size_t row = 0; row < n; ++row) result.at(row, col) = v[row];
    }
    return result;
}

/// The stacked commutator matrix [. , T] / [. , X1] whose kernel is the
/// centre of the specialized algebra.
template <typename F>
Matrix<F> centre_commutator_matrix(const ParamPoint<F>& at, int m) {
    CycloElement t = CycloElement::t(m);
    CycloElement x1 = CycloElement::from_poly(m, x1_power_reduced(1, m));
    Matrix<F> stacked = left_mult_matrix(t, at) - right_mult_matrix(t, at);
    stacked.stack(left_mult_matrix(x1, at) - right_mult_matrix(x1, at));
    return stacked;
}

/// Dimension of the centre at the point, by exact nullspace computation on
/// the stacked commutator matrix (T and X1 generate, so their commutators
/// cut out the centre).
template <typename F>
int centre_dimension(const ParamPoint<F>& at, int m) {
    return static_cast<int>(nullity_of(centre_commutator_matrix(at, m)));
}

/// Dimension of the unital subalgebra generated by the given elements:
/// close the span of 1 under left multiplication by the generators.
template <typename F>
int subalgebra_dimension(const std::vector<CycloElement>& generators, const ParamPoint<F>& at) {
    int m = at.num_params();
    size_t n = basis_dimension(m);
    std::vector<Matrix<F>> mats;
    mats.reserve(generators.size());
    for (const CycloElement& g : generators) mats.push_back(left_mult_matrix(g, at));
    SpanBasis<F> span(n);
    std::vector<std::vector<F>> frontier;
    std::vector<F> one = to_vector(CycloElement::one(m), at);
    span.insert(one);
    frontier.push_back(std::move(one));
    while (!frontier.empty()) {
        std::vector<std::vector<F>> next;
        for (const auto& v : frontier) {
            for (const auto& mat : mats) {
                std::vector<F> w = mat.apply(v);
                if (span.insert(w)) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return static_cast<int>(span.dimension());
}

/// The generators of the q=1 comparison: the images of X1 + X2, X1 X2, and
/// (X1 X2)^{-1} in the quotient of order 3.
std::vector<CycloElement> counterexample_generators();

/// Runs the comparison at m=3, q=1, e=(0,0,1) over the rationals and
/// returns (dimension of the generated subalgebra, dimension of the
/// centre). The symmetric Laurent generators close on a strictly smaller
/// subalgebra than the centre at this point.
std::pair<int, int> counterexample_at_q1();

/// The same pair at a generic rational point (both entries come out equal
/// there, which is the cross-check that q=1 is what breaks surjectivity).
std::pair<int, int> counterexample_at_generic(uint64_t seed);

/// Exact value of the semisimplicity polynomial for n = 2:
/// prod_{i<j} prod_{a in {-1,0,1}} (q^a v_i - v_j) * (1 + q).
/// The specialized algebra is semisimple iff this is nonzero.
Rational semisimplicity_criterion(const Rational& q0, const std::vector<Rational>& v);

/// Number of m-tuples of partitions with total size n.
mpz_class count_multipartitions(int m, int n);

}  // namespace hecke2

#endif
