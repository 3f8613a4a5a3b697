#include "hecke2/fields.hpp"

namespace hecke2 {

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw non_unit_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(text));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational from \"" + text + "\"");
    }
}

Rational Rational::inverse() const {
    if (value_ == 0) throw non_unit_error("division by zero rational");
    return Rational(mpq_class(1) / value_);
}

std::string Rational::to_string() const {
    return value_.get_str();
}

PrimeField::PrimeField(uint64_t value, uint64_t prime) : value_(value % prime), prime_(prime) {
    if (prime < 2) throw std::invalid_argument("field modulus must be at least 2");
}

PrimeField PrimeField::from_integer(const mpz_class& value, uint64_t prime) {
    mpz_class p(static_cast<unsigned long>(prime));
    mpz_class r = value % p;
    if (r < 0) r += p;
    return PrimeField(r.get_ui(), prime);
}

PrimeField PrimeField::from_string(const std::string& text, uint64_t prime) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return from_integer(mpz_class(text), prime);
        }
        PrimeField num = from_integer(mpz_class(text.substr(0, slash)), prime);
        PrimeField den = from_integer(mpz_class(text.substr(slash + 1)), prime);
        if (den.is_zero()) {
            throw evaluation_error("denominator of \"" + text + "\" vanishes mod " +
                                   std::to_string(prime));
        }
        return num / den;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse field element from \"" + text + "\"");
    }
}

void PrimeField::check_same_field(const PrimeField& rhs) const {
    if (prime_ != rhs.prime_) {
        throw ring_mismatch_error("mixing elements mod " + std::to_string(prime_) + " and mod " +
                                  std::to_string(rhs.prime_));
    }
}

PrimeField PrimeField::operator+(const PrimeField& rhs) const {
    check_same_field(rhs);
    uint64_t s = value_ + rhs.value_;  // both < p < 2^63, no overflow
    if (s >= prime_) s -= prime_;
    return PrimeField(s, prime_);
}

PrimeField PrimeField::operator-(const PrimeField& rhs) const {
    check_same_field(rhs);
    uint64_t s = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + prime_ - rhs.value_;
    return PrimeField(s, prime_);
}

PrimeField PrimeField::operator*(const PrimeField& rhs) const {
    check_same_field(rhs);
    unsigned __int128 prod = static_cast<unsigned __int128>(value_) * rhs.value_;
    return PrimeField(static_cast<uint64_t>(prod % prime_), prime_);
}

PrimeField PrimeField::operator-() const {
    return PrimeField(value_ == 0 ? 0 : prime_ - value_, prime_);
}

PrimeField PrimeField::inverse() const {
    if (value_ == 0) throw non_unit_error("division by zero mod " + std::to_string(prime_));
    // Extended Euclid on (p, value); p prime so gcd is 1.
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(prime_), new_r = static_cast<int64_t>(value_);
    while (new_r != 0) {
        int64_t quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<int64_t>(prime_);
    return PrimeField(static_cast<uint64_t>(t), prime_);
}

bool PrimeField::operator==(const PrimeField& rhs) const {
    check_same_field(rhs);
    return value_ == rhs.value_;
}

}  // namespace hecke2
