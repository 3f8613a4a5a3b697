#include "hecke2/coeff_ring.hpp"

#include <sstream>

namespace hecke2 {

namespace {

void check_num_params(int num_params) {
    if (num_params < 1) {
        throw invalid_rank_error("coefficient ring needs at least one parameter, got " +
                                 std::to_string(num_params));
    }
}

}  // namespace

CoeffPoly::CoeffPoly(int num_params) : num_params_(num_params) {
    check_num_params(num_params);
}

CoeffPoly CoeffPoly::one(int num_params) {
    return integer(num_params, 1);
}

CoeffPoly CoeffPoly::integer(int num_params, const mpz_class& value) {
    CoeffPoly p(num_params);
    if (value != 0) {
        CoeffExponent exp;
        exp.e_pows.assign(static_cast<size_t>(num_params), 0);
        p.terms_.emplace(std::move(exp), value);
    }
    return p;
}

CoeffPoly CoeffPoly::q(int num_params, int power) {
    CoeffPoly p(num_params);
    CoeffExponent exp;
    exp.q_pow = power;
    exp.e_pows.assign(static_cast<size_t>(num_params), 0);
    p.terms_.emplace(std::move(exp), 1);
    return p;
}

CoeffPoly CoeffPoly::e(int num_params, int index, int power) {
    check_num_params(num_params);
    if (index < 1 || index > num_params) {
        throw std::out_of_range("symmetric-function index " + std::to_string(index) +
                                " out of range 1.." + std::to_string(num_params));
    }
    if (power < 0 && index != num_params) {
        throw non_unit_error("e" + std::to_string(index) +
                             " is not invertible; only the top parameter e" +
                             std::to_string(num_params) + " is a unit");
    }
    CoeffPoly p(num_params);
    if (power == 0) return one(num_params);
    CoeffExponent exp;
    exp.e_pows.assign(static_cast<size_t>(num_params), 0);
    exp.e_pows[static_cast<size_t>(index - 1)] = power;
    p.terms_.emplace(std::move(exp), 1);
    return p;
}

CoeffPoly CoeffPoly::monomial(int num_params, const mpz_class& coeff, int q_pow,
                              std::vector<int> e_pows) {
    check_num_params(num_params);
    if (e_pows.size() != static_cast<size_t>(num_params)) {
        throw std::invalid_argument("exponent vector has " + std::to_string(e_pows.size()) +
                                    " entries, ring has " + std::to_string(num_params) +
                                    " parameters");
    }
    for (size_t j = 0; j + 1 < e_pows.size(); ++j) {
        if (e_pows[j] < 0) {
            throw non_unit_error("e" + std::to_string(j + 1) +
                                 " is not invertible; negative exponent rejected");
        }
    }
    CoeffPoly p(num_params);
    if (coeff != 0) {
        CoeffExponent exp;
        exp.q_pow = q_pow;
        exp.e_pows = std::move(e_pows);
        p.terms_.emplace(std::move(exp), coeff);
    }
    return p;
}

CoeffPoly CoeffPoly::q_minus_one(int num_params) {
    return q(num_params) - one(num_params);
}

bool CoeffPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [exp, coeff] = *terms_.begin();
    if (coeff != 1 || exp.q_pow != 0) return false;
    for (int b : exp.e_pows) {
        if (b != 0) return false;
    }
    return true;
}

void CoeffPoly::add_term(const CoeffExponent& exp, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void CoeffPoly::check_same_ring(const CoeffPoly& rhs) const {
    if (num_params_ != rhs.num_params_) {
        throw ring_mismatch_error("cannot combine coefficients over " +
                                  std::to_string(num_params_) + " and " +
                                  std::to_string(rhs.num_params_) + " parameters");
    }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& rhs) {
    check_same_ring(rhs);
    for (const auto& [exp, coeff] : rhs.terms_) add_term(exp, coeff);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& rhs) {
    check_same_ring(rhs);
    for (const auto& [exp, coeff] : rhs.terms_) add_term(exp, -coeff);
    return *this;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly result(num_params_);
    for (const auto& [exp, coeff] : terms_) result.terms_.emplace(exp, -coeff);
    return result;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    a.check_same_ring(b);
    CoeffPoly result(a.num_params_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            CoeffExponent exp;
            exp.q_pow = ea.q_pow + eb.q_pow;
            exp.e_pows.resize(ea.e_pows.size());
            for (size_t j = 0; j < exp.e_pows.size(); ++j) {
                exp.e_pows[j] = ea.e_pows[j] + eb.e_pows[j];
            }
            result.add_term(exp, ca * cb);
        }
    }
    return result;
}

CoeffPoly CoeffPoly::operator*(const mpz_class& scalar) const {
    CoeffPoly result(num_params_);
    if (scalar == 0) return result;
    for (const auto& [exp, coeff] : terms_) result.terms_.emplace(exp, coeff * scalar);
    return result;
}

std::string CoeffPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest q power first ("q - 1", not "-1 + q"), then by e exponents.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exp, coeff] = *it;
        mpz_class abs_coeff = abs(coeff);
        if (first) {
            if (coeff < 0) out << "-";
            first = false;
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (exp.q_pow != 0) {
            factors.push_back(exp.q_pow == 1 ? "q" : "q^" + std::to_string(exp.q_pow));
        }
        for (size_t j = 0; j < exp.e_pows.size(); ++j) {
            if (exp.e_pows[j] == 0) continue;
            std::string f = "e" + std::to_string(j + 1);
            if (exp.e_pows[j] != 1) f += "^" + std::to_string(exp.e_pows[j]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            out << abs_coeff.get_str();
        } else {
            if (abs_coeff != 1) out << abs_coeff.get_str() << " ";
            for (size_t j = 0; j < factors.size(); ++j) {
                if (j > 0) out << " ";
                out << factors[j];
            }
        }
    }
    return out.str();
}

}  // namespace hecke2
