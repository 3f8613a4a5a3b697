#include "hecke2/specialize.hpp"

namespace hecke2 {

CycloElement basis_element(int m, size_t index) {
    size_t mm = static_cast<size_t>(m) * static_cast<size_t>(m);
    if (index >= 2 * mm) throw std::out_of_range("basis index out of range");
    bool t_part = index >= mm;
    size_t rest = t_part ? index - mm : index;
    XPoly mono = XPoly::monomial(m, static_cast<int>(rest / static_cast<size_t>(m)),
                                 static_cast<int>(rest % static_cast<size_t>(m)));
    if (t_part) return {m, XPoly::zero(m), std::move(mono)};
    return CycloElement::from_poly(m, std::move(mono));
}

std::vector<CycloElement> counterexample_generators() {
    const int m = 3;
    XPoly sum = XPoly::monomial(m, 1, 0) + XPoly::monomial(m, 0, 1);
    XPoly product = XPoly::monomial(m, 1, 1);
    XPoly product_inverse = XPoly::monomial(m, -1, -1);
    return {reduce(AffineElement::from_poly(std::move(sum)), m),
            reduce(AffineElement::from_poly(std::move(product)), m),
            reduce(AffineElement::from_poly(std::move(product_inverse)), m)};
}

std::pair<int, int> counterexample_at_q1() {
    auto point = ParamPoint<Rational>::from_e(
        Rational(1), {Rational(0), Rational(0), Rational(1)});
    return {subalgebra_dimension(counterexample_generators(), point),
            centre_dimension(point, 3)};
}

std::pair<int, int> counterexample_at_generic(uint64_t seed) {
    auto point = generic_rational_point(3, seed);
    return {subalgebra_dimension(counterexample_generators(), point),
            centre_dimension(point, 3)};
}

Rational semisimplicity_criterion(const Rational& q0, const std::vector<Rational>& v) {
    if (q0.is_zero()) throw non_unit_error("q must be invertible in the semisimplicity test");
    Rational q_inv = q0.inverse();
    Rational result = Rational(1) + q0;  // the k=2 factor 1 + q; k=1 contributes 1
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = i + 1; j < v.size(); ++j) {
            result = result * (q_inv * v[i] - v[j]);
            result = result * (v[i] - v[j]);
            result = result * (q0 * v[i] - v[j]);
        }
    }
    return result;
}

mpz_class count_multipartitions(int m, int n) {
    if (m < 1) throw invalid_rank_error("need at least one partition slot, got " +
                                        std::to_string(m));
    if (n < 0) throw std::invalid_argument("total size must be non-negative, got " +
                                           std::to_string(n));
    // Partition numbers p(0..n).
    std::vector<mpz_class> partitions(static_cast<size_t>(n) + 1, 0);
    partitions[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int total = part; total <= n; ++total) {
            partitions[static_cast<size_t>(total)] +=
                partitions[static_cast<size_t>(total - part)];
        }
    }
    // m-fold convolution: distribute the total size over the m slots.
    std::vector<mpz_class> ways(static_cast<size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int slot = 0; slot < m; ++slot) {
        std::vector<mpz_class> next(static_cast<size_t>(n) + 1, 0);
        for (int have = 0; have <= n; ++have) {
            if (ways[static_cast<size_t>(have)] == 0) continue;
            for (int add = 0; add + have <= n; ++add) {
                next[static_cast<size_t>(have + add)] +=
                    ways[static_cast<size_t>(have)] * partitions[static_cast<size_t>(add)];
            }
        }
        ways = std::move(next);
    }
    return ways[static_cast<size_t>(n)];
}

}  // namespace hecke2
