#pragma once

// Recurrences on the simple Hurwitz numbers H^g_(1^d), and the identities in
// D = x d/dx between the series H~_g(x) = sum_d H^g_(1^d) x^d / (2d+2g-2)! they
// come from.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hurwitzkit/hurwitz_table.hpp"
#include "hurwitzkit/rational.hpp"

namespace hurwitzkit::simple {

/// Polynomial in d and i: coeffs[a][b] multiplies d^a i^b.
struct Poly2 {
    std::vector<std::vector<Rational>> coeffs;

    static Poly2 constant(const Rational& c) { return Poly2{{{c}}}; }
    Rational eval(const Rational& d, const Rational& i) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(const Rational& c) const;
    bool operator==(const Poly2&) const = default;
};

/// c0 + cd*d + ci*i
struct Affine {
    int c0 = 0;
    int cd = 0;
    int ci = 0;
    int eval(int d, int i) const { return c0 + cd * d + ci * i; }
    bool operator==(const Affine&) const = default;
};

struct Binom {
    Affine top;
    Affine bottom;
    bool operator==(const Binom&) const = default;
};

/// H^g_(1^n) with n = degree(d, i); zero when n < 1.
struct HFactor {
    int g = 0;
    Affine degree;
    bool operator==(const HFactor&) const = default;
};

struct RecTerm {
    Poly2 coefficient;
    std::vector<Binom> binomials;
    std::vector<HFactor> factors;
    bool sum_over_i = false;  // i = 1 .. d-1
    bool operator==(const RecTerm&) const = default;
};

/// lhs(d) * H^g_(1^d) = sum of terms. JSON schema:
///   {"name": str, "lhs": {"genus": g, "coefficient": [[...]]},
///    "terms": [{"coefficient": [[c_00, c_01, ...], [c_10, ...]],   // c_ab d^a i^b, "num/den"
///               "binomials": [{"top": [c0, cd, ci], "bottom": [c0, cd, ci]}],
///               "factors": [{"genus": g, "degree": [c0, cd, ci]}],
///               "sum_over_i": bool}]}
struct RecurrenceSpec {
    std::string name;
    int lhs_genus = 0;
    Poly2 lhs_coefficient;  // in d only
    std::vector<RecTerm> terms;

    nlohmann::json to_json() const;
    static RecurrenceSpec from_json(const nlohmann::json& j);
};

/// lhs - rhs at degree d; every H^g_(1^n) needed must be in the table.
Rational residual(const RecurrenceSpec& spec, const HurwitzTable& table, int d);

struct RecurrenceCheck {
    std::string name;
    int d_min = 0;
    int d_max = 0;
    bool holds = false;
    std::optional<int> first_failure;
    nlohmann::json to_json() const;
};

RecurrenceCheck verify_recurrence(const RecurrenceSpec& spec, const HurwitzTable& table, int d_min, int d_max);

/// D^p H~_g
struct DFactor {
    int g = 0;
    int p = 0;
    auto operator<=>(const DFactor&) const = default;
};

/// coefficient * prod factors; no factors means the constant 1.
struct DTerm {
    Rational coefficient;
    std::vector<DFactor> factors;
};

/// sum of terms = 0 as series in x.
struct DifferentialIdentity {
    std::string name;
    std::vector<DTerm> terms;

    nlohmann::json to_json() const;
    static DifferentialIdentity from_json(const nlohmann::json& j);
};

std::string describe(const std::vector<DFactor>& factors);

/// [x^d] of a product of D^p H~_g by direct convolution over compositions of d.
Rational product_coeff(const std::vector<DFactor>& factors, const HurwitzTable& table, int d);

/// [x^d] of the whole identity (zero when it holds).
Rational identity_coeff(const DifferentialIdentity& identity, const HurwitzTable& table, int d);

/// Rewrites the identity as a recurrence with terms[lhs_term] (one factor
/// D^p0 H~_g0) on the left, multiplied through by (2d+2g0-2)!. Other terms may
/// have one factor of genus <= g0 or two factors whose genera satisfy
/// g1 + g2 <= g0 + 1; anything else throws PreconditionError.
RecurrenceSpec translate(const DifferentialIdentity& identity, std::size_t lhs_term);

}  // namespace hurwitzkit::simple
