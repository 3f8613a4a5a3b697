#include "hecke2/report.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hecke2/cyclotomic.hpp"
#include "hecke2/specialize.hpp"

namespace hecke2 {

namespace {

constexpr int kRandomCases = 100;

CoeffPoly random_coeff(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> small(-9, 9);
    std::uniform_int_distribution<int> q_pow(-2, 2);
    std::uniform_int_distribution<int> e_pow(0, 2);
    std::uniform_int_distribution<int> num_terms(1, 2);
    CoeffPoly result = CoeffPoly::zero(m);
    int terms = num_terms(rng);
    for (int t = 0; t < terms; ++t) {
        int c = small(rng);
        if (c == 0) c = 1;
        std::vector<int> e_pows(static_cast<size_t>(m), 0);
        e_pows[static_cast<size_t>(std::uniform_int_distribution<int>(0, m - 1)(rng))] =
            e_pow(rng);
        result += CoeffPoly::monomial(m, c, q_pow(rng), std::move(e_pows));
    }
    if (result.is_zero()) result = CoeffPoly::one(m);
    return result;
}

XPoly random_poly(std::mt19937_64& rng, int m, int min_exp, int max_exp) {
    std::uniform_int_distribution<int> exp(min_exp, max_exp);
    std::uniform_int_distribution<int> num_terms(1, 3);
    XPoly result = XPoly::zero(m);
    int terms = num_terms(rng);
    for (int t = 0; t < terms; ++t) {
        result += XPoly::monomial(random_coeff(rng, m), exp(rng), exp(rng));
    }
    return result;
}

XPoly random_restricted(std::mt19937_64& rng, int m) {
    return random_poly(rng, m, 0, m - 1);
}

XPoly random_symmetric_restricted(std::mt19937_64& rng, int m) {
    XPoly p = random_restricted(rng, m);
    return p + p.swapped();
}

XPoly random_asymmetric(std::mt19937_64& rng, int m, int min_exp, int max_exp) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        XPoly p = random_poly(rng, m, min_exp, max_exp);
        if (!(p == p.swapped())) return p;
    }
    throw internal_error("failed to sample an asymmetric polynomial");
}

/// Both operator laws on random inputs: restriction preservation on
/// restricted polynomials, and D = D_s exactly on (and only on) symmetric
/// inputs. Returns an offending input's text, or empty on success.
std::string check_diff_ops(int m, std::mt19937_64& rng) {
    for (int i = 0; i < kRandomCases; ++i) {
        XPoly f = random_restricted(rng, m);
        if (!is_restricted(divided_diff(f), m) || !is_restricted(divided_diff_s(f), m)) {
            return f.to_string();
        }
        XPoly sym = random_symmetric_restricted(rng, m);
        if (!(divided_diff(sym) == divided_diff_s(sym))) return sym.to_string();
        XPoly asym = random_asymmetric(rng, m, -2, 2);
        if (divided_diff(asym) == divided_diff_s(asym)) return asym.to_string();
    }
    return "";
}

std::string check_commute_iff(int m, std::mt19937_64& rng) {
    for (int i = 0; i < kRandomCases; ++i) {
        XPoly f = random_symmetric_restricted(rng, m);
        XPoly g = random_symmetric_restricted(rng, m);
        if (!commutes_with_t(f, g, m)) {
            return (CycloElement{m, f, g}).to_string();
        }
        if (m >= 2) {
            XPoly asym = random_asymmetric(rng, m, 0, m - 1);
            if (commutes_with_t(asym, g, m)) {
                return (CycloElement{m, asym, g}).to_string();
            }
        }
    }
    return "";
}

std::string profile_text(const std::vector<CoeffPoly>& profile) {
    std::ostringstream out;
    out << "(";
    for (size_t j = 0; j < profile.size(); ++j) {
        if (j > 0) out << ", ";
        out << profile[j].to_string();
    }
    out << ")";
    return out.str();
}

}  // namespace

bool VerificationReport::all_passed() const {
    for (const auto& check : checks) {
        if (!check.passed) return false;
    }
    return true;
}

VerificationReport run_verification(int m_max, int k_max, uint64_t seed, double max_seconds) {
    if (m_max < 1) throw std::invalid_argument("m range must start at 1, got m_max=" +
                                               std::to_string(m_max));
    if (k_max < 2) {
        throw std::invalid_argument("conjugation checks need k_max >= 2, got " +
                                    std::to_string(k_max));
    }
    VerificationReport report;
    report.m_max = m_max;
    report.k_max = k_max;
    report.seed = seed;

    auto start = std::chrono::steady_clock::now();
    auto out_of_budget = [&] {
        if (max_seconds <= 0) return false;
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        return elapsed.count() > max_seconds;
    };
    // Runs one check unless the budget is exhausted; exceptions become
    // failures carrying the message, so a single broken invariant cannot
    // take down the whole report.
    auto run = [&](const std::string& id, const std::string& statement,
                   const std::function<std::string()>& body) {
        if (report.truncated || out_of_budget()) {
            report.truncated = true;
            return;
        }
        CheckResult result;
        result.id = id;
        result.statement = statement;
        try {
            result.witness = body();
            result.passed = result.witness.empty();
        } catch (const std::exception& e) {
            result.passed = false;
            result.witness = std::string("exception: ") + e.what();
        }
        report.checks.push_back(std::move(result));
    };

    for (int k = 2; k <= k_max; ++k) {
        run("t-conjugation:k=" + std::to_string(k),
            "T X1^k T = q X2^k - (q-1) (X1 X2) H_{k-2} T", [&] {
                if (verify_power_conjugation(k, 1)) return std::string();
                AffineElement t = AffineElement::t(1);
                return (t * AffineElement::x1(1, k) * t).to_string();
            });
    }

    for (int m = 1; m <= m_max; ++m) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(m));

        run("diff-ops:m=" + std::to_string(m),
            "D and D_s preserve restriction and agree exactly on symmetric inputs",
            [&] { return check_diff_ops(m, rng); });

        run("commute-iff:m=" + std::to_string(m),
            "f + g T commutes with T iff f and g are symmetric",
            [&] { return check_commute_iff(m, rng); });

        run("x2-relation:m=" + std::to_string(m), "q f_v(X2) = T f_v(X1) T + (q-1) z T", [&] {
            if (verify_x2_relation(m)) return std::string();
            AffineElement t = AffineElement::t(m);
            AffineElement diff =
                AffineElement::from_poly(defining_poly(XVar::x2, m) * CoeffPoly::q(m)) -
                t * AffineElement::from_poly(defining_poly(XVar::x1, m)) * t -
                AffineElement{XPoly::zero(m), t_correction(m) * CoeffPoly::q_minus_one(m)};
            return diff.to_string();
        });

        std::vector<XPoly> basis;
        run("centre-rank:m=" + std::to_string(m),
            "the m(m+3)/2 basis elements of the centre are central", [&] {
                basis = centre_t_basis(m);
                mpz_class expected = count_multipartitions(m, 2);
                long count = 0;
                for (int i = 0; i <= m - 1; ++i) {
                    for (int j = i; j <= m - 1; ++j) {
                        XPoly mij = monomial_symmetric(m, i, j);
                        ++count;
                        if (!is_central(CycloElement::from_poly(m, mij))) {
                            return mij.to_string();
                        }
                    }
                }
                for (const XPoly& p : basis) {
                    ++count;
                    if (!is_central(CycloElement{m, XPoly::zero(m), p})) {
                        return "(" + p.to_string() + ") T";
                    }
                }
                if (expected != count) {
                    return "basis has " + std::to_string(count) + " elements, expected " +
                           expected.get_str();
                }
                return std::string();
            });
        if (basis.empty() && !report.truncated) continue;  // construction failed; skip per-k

        for (int k = 0; k <= m - 1; ++k) {
            run("basis-chain:m=" + std::to_string(m) + ":k=" + std::to_string(k),
                "X_1^{k-1}z = p_k", [&] {
                    CycloElement product =
                        CycloElement::from_poly(m, x1_power_reduced(k - 1, m)) *
                        CycloElement::from_poly(m, t_correction(m));
                    if (product == CycloElement::from_poly(m, basis[static_cast<size_t>(k)])) {
                        return std::string();
                    }
                    return product.to_string();
                });
        }

        for (int k = 0; k <= m - 1; ++k) {
            run("profile:m=" + std::to_string(m) + ":k=" + std::to_string(k),
                "the X1^j X2^{m-1} + swap coefficient of X_1^{k-1}z is delta_{jk}", [&] {
                    std::vector<CoeffPoly> profile = leading_coefficient_profile(m, k);
                    for (int j = 0; j <= m - 1; ++j) {
                        const CoeffPoly& c = profile[static_cast<size_t>(j)];
                        bool expected_one = j == k;
                        if (expected_one ? !c.is_one() : !c.is_zero()) {
                            return profile_text(profile);
                        }
                    }
                    return std::string();
                });
        }

        for (int k = 0; k <= m - 1; ++k) {
            run("preimage:m=" + std::to_string(m) + ":k=" + std::to_string(k),
                "psi(q (X1^k f_v(X2) + X2^k f_v(X1))) = (q-1) (X1^k z) T, preimage central",
                [&] {
                    if (verify_central_preimage(m, k)) return std::string();
                    XPoly lhs_poly =
                        (XPoly::monomial(m, k, 0) * defining_poly(XVar::x2, m) +
                         XPoly::monomial(m, 0, k) * defining_poly(XVar::x1, m)) *
                        CoeffPoly::q(m);
                    return reduce(AffineElement::from_poly(std::move(lhs_poly)), m).to_string();
                });
        }
    }
    return report;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream out;
    size_t failed = 0;
    for (const auto& check : report.checks) {
        out << (check.passed ? "[PASS] " : "[FAIL] ") << check.id << "  " << check.statement
            << "\n";
        if (!check.passed) {
            ++failed;
            out << "       witness: " << check.witness << "\n";
        }
    }
    if (report.truncated) {
        out << "stopped early: time budget exhausted\n";
    }
    if (failed == 0) {
        out << "all " << report.checks.size() << " checks passed\n";
    } else {
        out << failed << " of " << report.checks.size() << " checks failed\n";
    }
    return out.str();
}

std::string to_json_string(const VerificationReport& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& check : report.checks) {
        checks.push_back({{"id", check.id},
                          {"statement", check.statement},
                          {"passed", check.passed},
                          {"witness", check.witness}});
    }
    nlohmann::ordered_json j{{"m_max", report.m_max},
                             {"k_max", report.k_max},
                             {"seed", report.seed},
                             {"truncated", report.truncated},
                             {"all_passed", report.all_passed()},
                             {"checks", checks}};
    return j.dump();
}

}  // namespace hecke2
