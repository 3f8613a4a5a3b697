#ifndef HECKE2_ERRORS_HPP
#define HECKE2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hecke2 {

// Two operands belong to rings with a different number of parameters.
struct ring_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A rank parameter m < 1 was supplied.
struct invalid_rank_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A value that must be invertible (q, e_m, a field denominator) is not.
struct non_unit_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Specialization into the target field failed (e.g. denominator divisible
// by the field characteristic).
struct evaluation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant the algorithms rely on was violated at runtime.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hecke2

#endif
