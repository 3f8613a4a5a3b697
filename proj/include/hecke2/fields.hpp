#ifndef HECKE2_FIELDS_HPP
#define HECKE2_FIELDS_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hecke2/errors.hpp"

namespace hecke2 {

/// Exact rational number. Thin wrapper over GMP's mpq_class that keeps the
/// canonical (reduced, positive-denominator) form and renders as "num/den".
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long num) : value_(num) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num) : value_(num) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parse "num" or "num/den" with optional leading '-'.
    static Rational from_string(const std::string& text);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return value_ == 0; }

    Rational operator+(const Rational& rhs) const { return Rational(value_ + rhs.value_); }
    Rational operator-(const Rational& rhs) const { return Rational(value_ - rhs.value_); }
    Rational operator*(const Rational& rhs) const { return Rational(value_ * rhs.value_); }
    Rational operator-() const { return Rational(-value_); }
    Rational inverse() const;
    Rational operator/(const Rational& rhs) const { return *this * rhs.inverse(); }

    bool operator==(const Rational& rhs) const { return value_ == rhs.value_; }

    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpq_class value_;
};

/// Element of Z/p for a prime p fitting in 64 bits (products go through
/// 128-bit intermediates). All elements of one computation must share p.
class PrimeField {
public:
    static constexpr uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

    PrimeField() : value_(0), prime_(kDefaultPrime) {}
    PrimeField(uint64_t value, uint64_t prime);

    /// Reduce an arbitrary integer (possibly negative / large) mod p.
    static PrimeField from_integer(const mpz_class& value, uint64_t prime);
    /// Parse "num" or "num/den"; throws evaluation_error if den ≡ 0 mod p.
    static PrimeField from_string(const std::string& text, uint64_t prime);

    static PrimeField zero(uint64_t prime) { return PrimeField(0, prime); }
    static PrimeField one(uint64_t prime) { return PrimeField(1, prime); }

    bool is_zero() const { return value_ == 0; }
    uint64_t value() const { return value_; }
    uint64_t prime() const { return prime_; }

    PrimeField operator+(const PrimeField& rhs) const;
    PrimeField operator-(const PrimeField& rhs) const;
    PrimeField operator*(const PrimeField& rhs) const;
    PrimeField operator-() const;
    PrimeField inverse() const;
    PrimeField operator/(const PrimeField& rhs) const { return *this * rhs.inverse(); }

    bool operator==(const PrimeField& rhs) const;

    std::string to_string() const { return std::to_string(value_); }

private:
    void check_same_field(const PrimeField& rhs) const;

    uint64_t value_;
    uint64_t prime_;
};

}  // namespace hecke2

#endif
