#pragma once

// Simple Hurwitz numbers H^g_(1^d): closed forms from the fitted ansatz and
// the search for linear relations among products of D^p H~_g.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hurwitzkit/ansatz.hpp"
#include "hurwitzkit/hurwitz_table.hpp"
#include "hurwitzkit/recurrence.hpp"
#include "hurwitzkit/wexpr.hpp"

namespace hurwitzkit::simple {

/// H~_g = sum_theta K_theta / Aut(theta) w^l(theta) / (1 - w)^e(theta) as an element of the W-ring.
WExpr wexpr_from_ansatz(const ansatz::AnsatzForm& form);

/// (2d+2g-2)! sum_theta K_theta / Aut(theta) [x^d] w^l(theta) / (1 - w)^e(theta).
Rational closed_form_simple(const ansatz::AnsatzForm& form, int d);

/// For a polynomial H~_g = sum_k c_k W^k, the polynomial
/// P(r) = sum_k c_k k C(k + r, k) in ascending coefficients, so that
/// [x^d] H~_g = sum_(r=0)^(d-1) d^(d-r-2) / (d-r-1)! P(r).
std::vector<Rational> p_polynomial(const WExpr& h);

/// (2d+2g-2)! sum_(r=0)^(d-1) d^(d-r-2) / (d-r-1)! P(r).
Rational p_form_value(int g, const std::vector<Rational>& p, int d);

/// (2d+2g-2)! sum_k c_k A_k(d).
Rational a_form_value(int g, const std::map<int, Rational>& c, int d);

/// One family member: a product of D^p H~_g.
using FamilyTerm = std::vector<DFactor>;

/// Family file: [{"factors": [{"g": 3, "p": 1}]}, {"factors": [{"g": 0, "p": 1}, {"g": 3, "p": 3}]}, ...].
/// Throws FormatError on anything else, or on a factor outside the W-ring.
std::vector<FamilyTerm> family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const std::vector<FamilyTerm>& family);
std::vector<FamilyTerm> load_family(const std::string& path);

/// The 26-term genus-3 family: the nine products (D^p H_i)(D^q H_j) with
/// p + q = 4, i + j = 3 other than H_0 * D^4 H_3, then D^p H_3 (0 <= p <= 3),
/// D^p H_2 (0 <= p <= 5) and D^p H_1 (1 <= p <= 7).
std::vector<FamilyTerm> genus3_family();

struct SearchResult {
    std::vector<FamilyTerm> family;
    std::size_t rank = 0;
    std::vector<DifferentialIdentity> basis;
    // per basis vector: first d <= d_check where the numeric identity fails
    std::vector<std::optional<int>> numeric_failures;
    int d_check = 0;

    bool all_verified() const;
    nlohmann::json to_json() const;
};

/// Null space of the family's W-expressions (coefficients of W^j and
/// W^j log W), each basis vector re-checked on table values for 1 <= d <= d_check.
SearchResult search_recursions(const std::vector<FamilyTerm>& family, const HurwitzTable& table, int d_check);

/// Whether the identity (over the same family) lies in the span of the basis.
bool in_span(const SearchResult& result, const DifferentialIdentity& identity);

/// Sum of c * W-expression over the identity's terms.
WExpr identity_wexpr(const DifferentialIdentity& identity);

}  // namespace hurwitzkit::simple
