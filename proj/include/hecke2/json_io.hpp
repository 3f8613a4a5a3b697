#ifndef HECKE2_JSON_IO_HPP
#define HECKE2_JSON_IO_HPP

#include <json.hpp>

#include "hecke2/cyclotomic.hpp"

namespace hecke2 {

/// Term list [{"x1": i, "x2": j, "coeff": "<canonical text>"}, ...] in
/// (x1, x2) order.
nlohmann::ordered_json poly_to_json(const XPoly& p);

/// Parse a term list back into a polynomial over the given ring rank.
XPoly poly_from_json(const nlohmann::ordered_json& j, int num_params);

/// {"m": M, "f": [...], "g": [...]} with term lists as above.
nlohmann::ordered_json cyclo_to_json(const CycloElement& c);

CycloElement cyclo_from_json(const nlohmann::ordered_json& j);

/// Parse the canonical coefficient text (e.g. "2 q^2 e1 e3^-1 - 1") back
/// into a CoeffPoly over the given ring rank.
CoeffPoly coeff_from_string(const std::string& text, int num_params);

/// One-line JSON description of the full centre basis at quotient order m:
/// {"m": M, "m_basis": [{"i", "j", "terms"}...], "p_basis": [{"k", "terms"}...]}.
std::string centre_basis_json(int m);

}  // namespace hecke2

#endif
