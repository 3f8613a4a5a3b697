#include "hecke2/param_point.hpp"

#include <random>

namespace hecke2 {

ParamPoint<Rational> generic_rational_point(int num_params, uint64_t seed) {
    if (num_params < 1) throw invalid_rank_error("need at least one symmetric parameter");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num_dist(-9, 9);
    std::uniform_int_distribution<long> den_dist(1, 9);
    auto draw = [&] { return Rational(mpz_class(num_dist(rng)), mpz_class(den_dist(rng))); };

    Rational q = draw();
    while (q.is_zero() || q == Rational(1) || q == Rational(-1)) q = draw();

    std::vector<Rational> e;
    e.reserve(static_cast<size_t>(num_params));
    for (int j = 0; j < num_params; ++j) e.push_back(draw());
    while (e.back().is_zero()) e.back() = draw();

    return ParamPoint<Rational>::from_e(q, std::move(e));
}

ParamPoint<PrimeField> generic_prime_point(int num_params, uint64_t seed, uint64_t prime) {
    if (num_params < 1) throw invalid_rank_error("need at least one symmetric parameter");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> dist(1, prime - 1);
    auto draw = [&] { return PrimeField(dist(rng), prime); };

    // Reject q that is a root of unity of low order: specializations divide
    // by differences of small q-powers, so demand q^k != 1 for k <= 2m.
    PrimeField one = PrimeField::one(prime);
    PrimeField q = one;
    bool degenerate = true;
    while (degenerate) {
        q = draw();
        degenerate = false;
        PrimeField power = one;
        for (int k = 1; k <= 2 * num_params; ++k) {
            power = power * q;
            if (power == one) {
                degenerate = true;
                break;
            }
        }
    }

    std::vector<PrimeField> e;
    e.reserve(static_cast<size_t>(num_params));
    for (int j = 0; j < num_params; ++j) e.push_back(draw());
    // dist never returns 0, so e.back() is already a unit.

    return ParamPoint<PrimeField>::from_e(q, std::move(e));
}

}  // namespace hecke2
