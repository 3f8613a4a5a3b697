#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hecke2/json_io.hpp"
#include "hecke2/report.hpp"
#include "hecke2/specialize.hpp"

namespace py = pybind11;

namespace {

template <typename F>
int dimension_at(int m, const F& q, std::vector<F> values) {
    if (values.size() != static_cast<size_t>(m)) {
        throw std::invalid_argument("expected " + std::to_string(m) + " parameter values, got " +
                                    std::to_string(values.size()));
    }
    auto point = hecke2::ParamPoint<F>::from_e(q, std::move(values));
    return hecke2::centre_dimension(point, m);
}

int centre_dimension_at(int m, const std::string& q, const std::vector<std::string>& e,
                        uint64_t prime) {
    if (prime == 0) {
        std::vector<hecke2::Rational> values;
        values.reserve(e.size());
        for (const std::string& item : e) {
            values.push_back(hecke2::Rational::from_string(item));
        }
        return dimension_at(m, hecke2::Rational::from_string(q), std::move(values));
    }
    std::vector<hecke2::PrimeField> values;
    values.reserve(e.size());
    for (const std::string& item : e) {
        values.push_back(hecke2::PrimeField::from_string(item, prime));
    }
    return dimension_at(m, hecke2::PrimeField::from_string(q, prime), std::move(values));
}

std::string verify_json(int m_max, int k_max, uint64_t seed, double max_seconds) {
    return hecke2::to_json_string(hecke2::run_verification(m_max, k_max, seed, max_seconds));
}

std::pair<std::string, bool> semisimplicity(const std::string& q,
                                            const std::vector<std::string>& v) {
    std::vector<hecke2::Rational> roots;
    roots.reserve(v.size());
    for (const std::string& item : v) {
        roots.push_back(hecke2::Rational::from_string(item));
    }
    hecke2::Rational value =
        hecke2::semisimplicity_criterion(hecke2::Rational::from_string(q), roots);
    return {value.to_string(), !value.is_zero()};
}

std::string cyclo_product_json(const std::string& a_text, const std::string& b_text) {
    auto a = hecke2::cyclo_from_json(nlohmann::ordered_json::parse(a_text));
    auto b = hecke2::cyclo_from_json(nlohmann::ordered_json::parse(b_text));
    return hecke2::cyclo_to_json(a * b).dump();
}

}  // namespace

PYBIND11_MODULE(_hecke2, mod) {
    mod.doc() = "exact computation in the rank-2 cyclotomic Hecke algebra";

    mod.def("centre_basis_json", &hecke2::centre_basis_json, py::arg("m"),
            "JSON description of the centre basis at quotient order m");

    mod.def("verify_json", &verify_json, py::arg("m_max") = 3, py::arg("k_max") = 6,
            py::arg("seed") = 12345, py::arg("max_seconds") = 0.0,
            "run every symbolic identity check and return the JSON report");

    mod.def("centre_dimension", &centre_dimension_at, py::arg("m"), py::arg("q"),
            py::arg("e"), py::arg("prime") = 0,
            "dimension of the centre at an exact parameter point; values are "
            "strings like \"3\" or \"-1/2\", prime = 0 means rationals");

    mod.def(
        "counterexample_q1", [] { return hecke2::counterexample_at_q1(); },
        "(subalgebra dimension, centre dimension) at m = 3, q = 1, e = (0, 0, 1)");

    mod.def("semisimplicity", &semisimplicity, py::arg("q"), py::arg("v"),
            "(exact criterion value, is nonzero) at rational q and root values v");

    mod.def(
        "count_multipartitions_str",
        [](int m, int n) { return hecke2::count_multipartitions(m, n).get_str(); },
        py::arg("m"), py::arg("n"),
        "number of m-tuples of partitions with total size n, as a decimal string");

    mod.def("cyclo_product_json", &cyclo_product_json, py::arg("a"), py::arg("b"),
            "product of two quotient elements given/returned as JSON");
}
