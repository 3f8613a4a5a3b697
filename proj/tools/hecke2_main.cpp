#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke2/json_io.hpp"
#include "hecke2/report.hpp"
#include "hecke2/specialize.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            items.push_back(text.substr(start));
            break;
        }
        items.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return items;
}

int run_centre_basis(int m, bool as_json) {
    if (as_json) {
        std::cout << hecke2::centre_basis_json(m) << "\n";
    } else {
        std::vector<hecke2::XPoly> basis = hecke2::centre_t_basis(m);
        for (int i = 0; i <= m - 1; ++i) {
            for (int j = i; j <= m - 1; ++j) {
                std::cout << "m[" << i << "," << j
                          << "] = " << hecke2::monomial_symmetric(m, i, j).to_string() << "\n";
            }
        }
        for (int k = 0; k <= m - 1; ++k) {
            std::cout << "p[" << k << "] = " << basis[static_cast<size_t>(k)].to_string()
                      << "\n";
        }
    }
    return 0;
}

int run_verify(int m_max, int k_max, uint64_t seed, double max_seconds, bool as_json) {
    hecke2::VerificationReport report =
        hecke2::run_verification(m_max, k_max, seed, max_seconds);
    if (as_json) {
        std::cout << hecke2::to_json_string(report) << "\n";
    } else {
        std::cout << hecke2::to_text(report);
    }
    return report.all_passed() ? 0 : 1;
}

template <typename F>
int centre_dim_with(const F& q, std::vector<F> values, bool values_are_roots, int m,
                    bool as_json) {
    if (values.size() != static_cast<size_t>(m)) {
        throw std::invalid_argument("expected " + std::to_string(m) + " parameter values, got " +
                                    std::to_string(values.size()));
    }
    auto point = values_are_roots ? hecke2::ParamPoint<F>::from_v(q, values)
                                  : hecke2::ParamPoint<F>::from_e(q, std::move(values));
    int dim = hecke2::centre_dimension(point, m);
    if (as_json) {
        ordered_json out{{"m", m}, {"centre_dim", dim}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << dim << "\n";
    }
    return 0;
}

int run_centre_dim(int m, const std::string& q_text, const std::string& e_text,
                   const std::string& v_text, uint64_t prime, bool as_json) {
    if (e_text.empty() == v_text.empty()) {
        throw std::invalid_argument("give exactly one of --e and --v");
    }
    bool values_are_roots = !v_text.empty();
    std::vector<std::string> items = split_list(values_are_roots ? v_text : e_text);
    if (prime == 0) {
        std::vector<hecke2::Rational> values;
        values.reserve(items.size());
        for (const auto& item : items) values.push_back(hecke2::Rational::from_string(item));
        return centre_dim_with(hecke2::Rational::from_string(q_text), std::move(values),
                               values_are_roots, m, as_json);
    }
    std::vector<hecke2::PrimeField> values;
    values.reserve(items.size());
    for (const auto& item : items) {
        values.push_back(hecke2::PrimeField::from_string(item, prime));
    }
    return centre_dim_with(hecke2::PrimeField::from_string(q_text, prime), std::move(values),
                           values_are_roots, m, as_json);
}

int run_counterexample() {
    auto [subalgebra_dim, centre_dim] = hecke2::counterexample_at_q1();
    ordered_json out{{"subalgebra_dim", subalgebra_dim}, {"centre_dim", centre_dim}};
    std::cout << out.dump() << "\n";
    return 0;
}

int run_semisimple(const std::string& q_text, const std::string& v_text) {
    hecke2::Rational q = hecke2::Rational::from_string(q_text);
    std::vector<hecke2::Rational> v;
    for (const auto& item : split_list(v_text)) {
        v.push_back(hecke2::Rational::from_string(item));
    }
    hecke2::Rational value = hecke2::semisimplicity_criterion(q, v);
    ordered_json out{{"P", value.to_string()}, {"semisimple", !value.is_zero()}};
    std::cout << out.dump() << "\n";
    return 0;
}

int run_multipartitions(int m, int n, bool as_json) {
    mpz_class count = hecke2::count_multipartitions(m, n);
    if (as_json) {
        ordered_json out{{"m", m}, {"n", n}, {"count", count.get_str()}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << count.get_str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation in the rank-2 cyclotomic Hecke algebra"};
    app.require_subcommand(1);

    int m = 1;
    int n = 2;
    int m_max = 3;
    int k_max = 6;
    uint64_t seed = 12345;
    uint64_t prime = 0;
    double max_seconds = 0.0;
    bool as_json = false;
    std::string q_text, e_text, v_text;

    CLI::App* centre_basis = app.add_subcommand(
        "centre-basis", "print the symmetric and T-part centre basis of the quotient");
    centre_basis->add_option("--m", m, "quotient order")->required();
    centre_basis->add_flag("--json", as_json, "emit JSON");

    CLI::App* verify = app.add_subcommand(
        "verify", "run every symbolic identity check and report pass/fail");
    verify->add_option("--m-max", m_max, "largest quotient order to check");
    verify->add_option("--k-max", k_max, "largest conjugated power to check");
    verify->add_option("--seed", seed, "seed for the randomized operator checks");
    verify->add_option("--max-seconds", max_seconds,
                       "soft time budget; 0 means unlimited (nonzero budgets can truncate "
                       "the check list)");
    verify->add_flag("--json", as_json, "emit JSON");

    CLI::App* centre_dim = app.add_subcommand(
        "centre-dim", "dimension of the centre at an exact parameter point");
    centre_dim->add_option("--m", m, "quotient order")->required();
    centre_dim->add_option("--q", q_text, "value of q (integer or num/den)")->required();
    centre_dim->add_option("--e", e_text, "comma-separated e_1..e_m values");
    centre_dim->add_option("--v", v_text, "comma-separated root values v_1..v_m");
    centre_dim->add_option("--prime", prime, "work mod this prime (0 = rationals)");
    centre_dim->add_flag("--json", as_json, "emit JSON");

    app.add_subcommand("counterexample-q1",
                       "subalgebra vs centre dimension at m=3, q=1, e=(0,0,1)");

    CLI::App* semisimple = app.add_subcommand(
        "semisimple", "exact value of the semisimplicity polynomial at (q, v)");
    semisimple->add_option("--q", q_text, "value of q (integer or num/den)")->required();
    semisimple->add_option("--v", v_text, "comma-separated root values")->required();

    CLI::App* multipartitions = app.add_subcommand(
        "multipartitions", "count m-tuples of partitions with total size n");
    multipartitions->add_option("--m", m, "number of partition slots")->required();
    multipartitions->add_option("--n", n, "total size");
    multipartitions->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (centre_basis->parsed()) return run_centre_basis(m, as_json);
        if (verify->parsed()) return run_verify(m_max, k_max, seed, max_seconds, as_json);
        if (centre_dim->parsed()) {
            return run_centre_dim(m, q_text, e_text, v_text, prime, as_json);
        }
        if (semisimple->parsed()) return run_semisimple(q_text, v_text);
        if (multipartitions->parsed()) return run_multipartitions(m, n, as_json);
        return run_counterexample();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
