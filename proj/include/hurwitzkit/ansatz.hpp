#pragma once

// The change of variables between descendant potentials G_g(t) and Hurwitz
// series H_g(x, p): phi_i, the implicit series s, I_k, the substitution
// Xi: t_k -> phi_k(x, p), the structure-theorem checks, and the fitter that
// recovers the constants K^g_theta (hence primitive Hodge integrals) from
// Hurwitz data.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hurwitzkit/hodge.hpp"
#include "hurwitzkit/hurwitz_table.hpp"
#include "hurwitzkit/partitions.hpp"
#include "hurwitzkit/series.hpp"

namespace hurwitzkit::ansatz {

using algebra::Series;
using algebra::SpacePtr;

/// {x, p1..p_parts}, x-degree <= d_max.
SpacePtr hurwitz_space(int d_max, int parts);
/// {t0..t_max_index}, total degree <= max_degree.
SpacePtr descendant_space(int max_index, int max_degree);

/// phi_i(x, p) = sum_n n^(n+i)/n! p_n x^n.
Series phi(int i, const SpacePtr& space);
/// phi_i(z, p) for a series z without constant term in a hurwitz_space.
Series phi_at(int i, const Series& z);
/// s = x exp(phi_0(s, p)).
Series solve_s(const SpacePtr& space);

/// I_0 = sum_i t_i I_0^i / i!.
Series solve_I0(const SpacePtr& tspace);
/// I_0 .. I_(k_max), with I_k = sum_i t_(k+i) I_0^i / i!.
std::vector<Series> I_series(const SpacePtr& tspace, int k_max);

/// Xi: t_k -> phi_k(x, p). The t-degree cap must be at least the x-degree cap
/// of the target, otherwise PreconditionError.
Series xi_substitute(const Series& f, const SpacePtr& xspace);

/// G_g = sum (-1)^k <tau_0^a_0 tau_1^a_1 ... lambda_k>_g prod t_i^a_i / a_i!
/// over the monomials of the t-space.
Series assemble_G(int g, hodge::HodgeTable& table, const SpacePtr& tspace);
/// Part of G_g of weighted degree 3 - 3g under deg t_i = 1 - i (the lambda-free part).
Series extract_F(const Series& G, int g);
/// Delta = sum_m t_(m+1) d/dt_m - d/dt_0, kept up to t-degree (cap - 1), where it is exact.
Series delta(const Series& G);

/// Genus-0 one-part series phi_(-2)(x, p).
Series h0_one_part(const SpacePtr& space);
/// Genus-0 two-part series sum_(i,j>=1) i^i j^j / (2 i! j! (i+j)) p_i p_j x^(i+j).
/// With literal = true, the ordered coefficient is (i+j-1)!/((i-1)!(j-1)!) i^(i-1) j^(j-1),
/// which exceeds the true one by 2 (i+j)!.
Series h0_two_part(const SpacePtr& space, bool literal = false);
/// (1/24) (log 1/(1 - phi_1(s,p)) - phi_0(s,p)).
Series h1_closed_form(const SpacePtr& space);

/// p_1 -> 1, p_i -> 0: a series in {x}.
Series specialize_simple(const Series& f);

struct Report {
    std::string check;
    nlohmann::json truncation;
    bool passed = false;
    std::optional<std::string> first_mismatch;

    nlohmann::json to_json() const;
};

/// Compares two series in the same space; the first differing monomial (in
/// lexicographic order) is reported.
Report compare_series(std::string check, const Series& lhs, const Series& rhs, nlohmann::json truncation);

/// g >= 1: H_g = Xi G_g. g = 0: H_0 = H_0[1] + H_0[2] + Xi F_0 and (x d/dx)^2 H_0 = phi_0(s, p).
/// g = 1 also checks the closed form of H_1. `hurwitz` must cover d <= d_max, genus g.
std::vector<Report> verify_change_theorem(int g, const HurwitzTable& hurwitz, hodge::HodgeTable& table, int d_max,
                                          int parts);

/// Xi I_k = phi_k(s, p) for 0 <= k <= k_max.
Report verify_xi_I(int k_max, int d_max, int parts);

/// Delta G_g for g >= 1 over t0..t_max_index, degree <= max_degree. Returns the
/// constant left over (zero for g >= 2; 1/24 in genus 1 from <tau_0 lambda_1>_1)
/// and whether every non-constant coefficient vanishes.
struct DeltaResult {
    Rational constant;
    bool nonconstant_vanish = false;
};
DeltaResult delta_check(int g, hodge::HodgeTable& table, int max_index, int max_degree);

struct AnsatzConstant {
    ThetaPartition theta;
    Rational K;
    int e = 0;
    int k = 0;
};

struct AnsatzForm {
    int g = 0;
    std::vector<AnsatzConstant> constants;

    std::optional<Rational> constant(const Partition& theta) const;
    nlohmann::json to_json() const;
    static AnsatzForm from_json(const nlohmann::json& j);
};

/// sum_theta K_theta / Aut(theta) prod phi_theta_i(s,p) / (1 - phi_1(s,p))^e.
Series ansatz_series(const AnsatzForm& form, const SpacePtr& space);

/// The system of fit equations is rank deficient at the requested depth.
class RankDeficient : public Error {
public:
    using Error::Error;
};

/// A surplus equation contradicts the fitted constants.
class InconsistentFit : public Error {
public:
    using Error::Error;
};

struct FitReport {
    int g = 0;
    int d_max = 0;
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::size_t rows_used = 0;
    std::size_t surplus_rows = 0;
    bool surplus_consistent = false;

    nlohmann::json to_json() const;
};

struct FitResult {
    AnsatzForm form;
    FitReport report;
};

/// Solves for K^g_theta from the coefficients of p_alpha x^d, d <= d_max, in
/// H_g. Rows are taken by increasing d then partition order until the rank
/// reaches the number of unknowns; every later row is a surplus check, and at
/// least `min_surplus` are required. Writes <tau_theta lambda_k>_g = (-1)^k K_theta
/// into `table` as fitted primitives.
FitResult fit_constants(int g, const HurwitzTable& hurwitz, int d_max, hodge::HodgeTable& table,
                        std::size_t min_surplus = 10);

/// Genus-expansion identities for g >= 2 over t0..t_max_index, degree <= max_degree:
/// G_g = (1-I_1)^(2-2g) G_g(0, 0, I_2/(1-I_1), ...), the explicit primitive sum,
/// their agreement, the t_0 = 0 slice, and the lambda-free slice.
std::vector<Report> verify_genus_expansion(int g, hodge::HodgeTable& table, int max_index, int max_degree);

}  // namespace hurwitzkit::ansatz
