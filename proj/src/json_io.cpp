#include "hecke2/json_io.hpp"

#include <sstream>

namespace hecke2 {

nlohmann::ordered_json poly_to_json(const XPoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        terms.push_back({{"x1", mono.x1}, {"x2", mono.x2}, {"coeff", coeff.to_string()}});
    }
    return terms;
}

XPoly poly_from_json(const nlohmann::ordered_json& j, int num_params) {
    if (!j.is_array()) throw std::invalid_argument("term list must be a JSON array");
    XPoly result(num_params);
    for (const auto& term : j) {
        result += XPoly::monomial(coeff_from_string(term.at("coeff").get<std::string>(),
                                                    num_params),
                                  term.at("x1").get<int>(), term.at("x2").get<int>());
    }
    return result;
}

nlohmann::ordered_json cyclo_to_json(const CycloElement& c) {
    return {{"m", c.quotient_order()}, {"f", poly_to_json(c.f())}, {"g", poly_to_json(c.g())}};
}

CycloElement cyclo_from_json(const nlohmann::ordered_json& j) {
    int m = j.at("m").get<int>();
    if (m < 1) throw invalid_rank_error("quotient order must be at least 1, got " +
                                        std::to_string(m));
    return {m, poly_from_json(j.at("f"), m), poly_from_json(j.at("g"), m)};
}

namespace {

/// One factor of a canonical term: "q", "q^-2", "e3", "e12^4", or a bare
/// integer; applied onto the accumulating monomial data.
void apply_factor(const std::string& token, int num_params, mpz_class& coeff, int& q_pow,
                  std::vector<int>& e_pows, bool& saw_integer) {
    if (token.empty()) throw std::invalid_argument("empty factor in coefficient text");
    if (token[0] == 'q' || token[0] == 'e') {
        size_t caret = token.find('^');
        std::string head = token.substr(0, caret);
        int exponent = 1;
        if (caret != std::string::npos) {
            exponent = std::stoi(token.substr(caret + 1));
        }
        if (head == "q") {
            q_pow += exponent;
            return;
        }
        if (head.size() > 1 && head[0] == 'e') {
            int index = std::stoi(head.substr(1));
            if (index < 1 || index > num_params) {
                throw std::invalid_argument("parameter " + head + " out of range for " +
                                            std::to_string(num_params) + " parameters");
            }
            e_pows[static_cast<size_t>(index - 1)] += exponent;
            return;
        }
        throw std::invalid_argument("cannot parse factor \"" + token + "\"");
    }
    if (saw_integer) {
        throw std::invalid_argument("two integer factors in one term near \"" + token + "\"");
    }
    coeff = mpz_class(token);
    saw_integer = true;
}

}  // namespace

CoeffPoly coeff_from_string(const std::string& text, int num_params) {
    if (text == "0") return CoeffPoly::zero(num_params);
    CoeffPoly result(num_params);
    std::istringstream in(text);
    std::string token;
    int sign = 1;
    bool expect_term = true;
    mpz_class coeff;
    int q_pow = 0;
    std::vector<int> e_pows;
    bool saw_integer = false;
    bool in_term = false;
    auto flush_term = [&] {
        if (!in_term) throw std::invalid_argument("dangling sign in \"" + text + "\"");
        result += CoeffPoly::monomial(num_params, coeff * sign, q_pow, e_pows);
        in_term = false;
    };
    while (in >> token) {
        if (token == "+" || token == "-") {
            flush_term();
            sign = token == "-" ? -1 : 1;
            expect_term = true;
            continue;
        }
        if (expect_term) {
            coeff = 1;
            q_pow = 0;
            e_pows.assign(static_cast<size_t>(num_params), 0);
            saw_integer = false;
            in_term = true;
            expect_term = false;
            if (token[0] == '-' && token.size() > 1) {
                sign = -sign;
                token = token.substr(1);
            }
        }
        apply_factor(token, num_params, coeff, q_pow, e_pows, saw_integer);
    }
    flush_term();
    return result;
}

std::string centre_basis_json(int m) {
    std::vector<XPoly> basis = centre_t_basis(m);
    nlohmann::ordered_json symmetric = nlohmann::ordered_json::array();
    for (int i = 0; i <= m - 1; ++i) {
        for (int j = i; j <= m - 1; ++j) {
            symmetric.push_back(
                {{"i", i}, {"j", j}, {"terms", poly_to_json(monomial_symmetric(m, i, j))}});
        }
    }
    nlohmann::ordered_json t_part = nlohmann::ordered_json::array();
    for (int k = 0; k <= m - 1; ++k) {
        t_part.push_back({{"k", k}, {"terms", poly_to_json(basis[static_cast<size_t>(k)])}});
    }
    nlohmann::ordered_json out{{"m", m}, {"m_basis", symmetric}, {"p_basis", t_part}};
    return out.dump();
}

}  // namespace hecke2
