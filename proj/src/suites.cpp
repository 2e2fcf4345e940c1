#include "hurwitzkit/suites.hpp"

#include <algorithm>

#include "hurwitzkit/cutjoin.hpp"
#include "hurwitzkit/golden.hpp"
#include "hurwitzkit/lagrange.hpp"
#include "hurwitzkit/oracle.hpp"
#include "hurwitzkit/simple_hurwitz.hpp"

namespace hurwitzkit::suites {

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const nlohmann::json& c) { return c.at("status") == "pass"; });
}

nlohmann::json SuiteReport::to_json() const
{
    return {{"suite", suite}, {"status", passed() ? "pass" : "fail"}, {"checks", checks}};
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"change-theorem", "genus-expansion", "recursions", "closed-forms",
                                                "oracle-vs-cutjoin"};
    return names;
}

int default_fit_depth(int g)
{
    return g == 2 ? 6 : g == 3 ? 8 : 3 * g - 1;
}

ansatz::FitResult fit_from_cutjoin(int g, hodge::HodgeTable& table, const Budget& budget)
{
    const int depth = default_fit_depth(g);
    const HurwitzTable hurwitz = cutjoin::hurwitz_via_cutjoin(depth, g, -1, budget);
    return ansatz::fit_constants(g, hurwitz, depth, table);
}

namespace {

nlohmann::json check(std::string name, bool passed, nlohmann::json truncation, nlohmann::json detail = nullptr)
{
    nlohmann::json out{{"check", std::move(name)}, {"status", passed ? "pass" : "fail"},
                       {"truncation", std::move(truncation)}};
    if (!detail.is_null()) {
        out["detail"] = std::move(detail);
    }
    return out;
}

void add_reports(SuiteReport& out, const std::vector<ansatz::Report>& reports)
{
    for (const auto& r : reports) {
        out.checks.push_back(r.to_json());
    }
}

SuiteReport oracle_vs_cutjoin(const Options& o)
{
    const int d_max = o.d_max < 0 ? 5 : o.d_max;
    const int r_max = o.r_max < 0 ? 16 : o.r_max;
    const HurwitzTable a = oracle::connected_hurwitz_upto_r(d_max, r_max, o.budget);
    const HurwitzTable b = cutjoin::hurwitz_via_cutjoin_upto_r(d_max, r_max, o.budget);
    const auto bad = first_disagreement(a, b);
    nlohmann::json detail{{"entries", a.size()}};
    if (bad) {
        detail["first_mismatch"] = {{"g", bad->g}, {"alpha", to_json(bad->alpha)}};
    }
    SuiteReport out{"oracle-vs-cutjoin", {}};
    out.checks.push_back(check("oracle equals cut-and-join", !bad && a.size() == b.size(),
                               {{"d_max", d_max}, {"r_max", r_max}}, detail));
    return out;
}

SuiteReport change_theorem(const Options& o)
{
    const int d_max = o.d_max < 0 ? 8 : o.d_max;
    const HurwitzTable hurwitz = cutjoin::hurwitz_via_cutjoin(std::max(d_max, 6), 2, -1, o.budget);
    hodge::HodgeTable table;
    ansatz::fit_constants(2, hurwitz, default_fit_depth(2), table);
    SuiteReport out{"change-theorem", {}};
    for (int g = 0; g <= 2; ++g) {
        add_reports(out, ansatz::verify_change_theorem(g, hurwitz, table, d_max, 4));
    }
    out.checks.push_back(ansatz::verify_xi_I(4, d_max, 4).to_json());
    for (int g = 1; g <= 2; ++g) {
        const auto delta = ansatz::delta_check(g, table, 8, 6);
        const Rational expected = g == 1 ? Rational(1, 24) : Rational(0);
        out.checks.push_back(check("Delta G_" + std::to_string(g),
                                   delta.nonconstant_vanish && delta.constant == expected,
                                   {{"t_index", 8}, {"t_degree", 6}}, {{"constant", to_string(delta.constant)}}));
    }
    return out;
}

SuiteReport genus_expansion(const Options& o)
{
    const int t_degree = o.d_max < 0 ? 5 : o.d_max;
    hodge::HodgeTable table;
    const auto fit = fit_from_cutjoin(2, table, o.budget);
    SuiteReport out{"genus-expansion", {}};
    out.checks.push_back(check("genus 2 fit", fit.report.surplus_consistent && fit.report.rank == fit.report.unknowns,
                               {{"d_max", fit.report.d_max}}, fit.report.to_json()));
    add_reports(out, ansatz::verify_genus_expansion(2, table, 8, t_degree));
    return out;
}

SuiteReport recursions(const Options& o)
{
    const int d_max = o.d_max < 0 ? 10 : o.d_max;
    const HurwitzTable hurwitz = cutjoin::hurwitz_via_cutjoin(d_max, 3, -1, o.budget);
    SuiteReport out{"recursions", {}};
    for (const auto& spec : golden::recurrences()) {
        out.checks.push_back(simple::verify_recurrence(spec, hurwitz, 1, d_max).to_json());
    }
    for (const auto& id : golden::identities()) {
        const bool symbolic = simple::identity_wexpr(id).is_zero();
        std::optional<int> numeric_failure;
        for (int d = 1; d <= d_max && !numeric_failure; ++d) {
            if (simple::identity_coeff(id, hurwitz, d) != 0) {
                numeric_failure = d;
            }
        }
        const auto translated = simple::verify_recurrence(simple::translate(id, 0), hurwitz, 1, d_max);
        nlohmann::json detail{{"w_identity", symbolic}, {"translated", translated.holds}};
        if (numeric_failure) {
            detail["first_mismatch"] = {{"d", *numeric_failure}};
        }
        out.checks.push_back(check(id.name, symbolic && !numeric_failure && translated.holds, {{"d_max", d_max}},
                                   detail));
    }
    const auto search = simple::search_recursions(simple::genus3_family(), hurwitz, d_max);
    const int expected = golden::data().at("genus3_family_dimension").get<int>();
    out.checks.push_back(check("genus 3 family null space",
                               static_cast<int>(search.basis.size()) == expected && search.all_verified() &&
                                   simple::in_span(search, golden::identity("genus 3 linear identity")),
                               {{"d_max", d_max}},
                               {{"dimension", search.basis.size()}, {"expected", expected},
                                {"all_verified", search.all_verified()}}));
    return out;
}

SuiteReport closed_forms(const Options& o)
{
    const int d_max = o.d_max < 0 ? 8 : o.d_max;
    const int fit_depth = std::max(d_max, default_fit_depth(3));
    const HurwitzTable hurwitz = cutjoin::hurwitz_via_cutjoin(fit_depth, 3, -1, o.budget);
    hodge::HodgeTable table;
    const auto fit2 = ansatz::fit_constants(2, hurwitz, default_fit_depth(2), table);
    const auto fit3 = ansatz::fit_constants(3, hurwitz, default_fit_depth(3), table);
    const nlohmann::json trunc{{"d_max", d_max}};
    SuiteReport out{"closed-forms", {}};

    for (const auto& e : golden::data().at("w_table")) {
        const auto pinned = simple::WExpr::from_json(e.at("expr"));
        out.checks.push_back(check("W-expression: " + e.at("label").get<std::string>(),
                                   pinned == simple::wexpr_for(e.at("g").get<int>(), e.at("n").get<int>()),
                                   nlohmann::json::object()));
    }
    for (int g = 2; g <= 3; ++g) {
        const auto pinned = golden::w_series(g);
        const auto fitted = simple::wexpr_from_ansatz(g == 2 ? fit2.form : fit3.form);
        out.checks.push_back(check("fitted genus " + std::to_string(g) + " ansatz specializes to the w-series",
                                   fitted == pinned, nlohmann::json::object()));
        std::optional<int> bad;
        for (int d = 1; d <= d_max && !bad; ++d) {
            const Rational from_series = simple::extract_coeff(pinned, d) * Rational(factorial(2 * d + 2 * g - 2));
            const auto& form = g == 2 ? fit2.form : fit3.form;
            if (from_series != hurwitz.simple(g, d) || simple::closed_form_simple(form, d) != hurwitz.simple(g, d)) {
                bad = d;
            }
        }
        out.checks.push_back(check("genus " + std::to_string(g) + " closed form equals cut-and-join", !bad, trunc,
                                   bad ? nlohmann::json{{"first_mismatch", {{"d", *bad}}}} : nlohmann::json()));
    }
    std::optional<int> bad_a;
    std::optional<int> bad_p;
    for (int d = 1; d <= d_max; ++d) {
        if (!bad_a && simple::a_form_value(3, golden::a_form_coefficients(), d) != hurwitz.simple(3, d)) {
            bad_a = d;
        }
        if (!bad_p && simple::p_form_value(3, golden::p3_polynomial(), d) != hurwitz.simple(3, d)) {
            bad_p = d;
        }
    }
    out.checks.push_back(check("genus 3 A_k combination", !bad_a, trunc));
    out.checks.push_back(check("genus 3 polynomial form", !bad_p, trunc));
    out.checks.push_back(check("P_3 from the genus 3 W-expression",
                               simple::p_polynomial(simple::base_wexpr(3)) == golden::p3_polynomial(),
                               nlohmann::json::object()));
    std::optional<int> bad_g0;
    for (int d = 3; d <= d_max; ++d) {
        const Rational elsv = Rational(factorial(2 * d - 2)) / Rational(factorial(d)) * power(Rational(d), d - 3);
        if (elsv != hurwitz.simple(0, d)) {
            bad_g0 = d;
            break;
        }
    }
    out.checks.push_back(check("genus 0 closed form", !bad_g0, trunc));
    const int lagrange_d = 12;
    const auto w = algebra::tree_function(lagrange_d);
    const auto space = w.space();
    const auto one = algebra::Series::constant(space, 1);
    bool lagrange_ok = true;
    for (int n = 0; n <= 4 && lagrange_ok; ++n) {
        for (int r = 0; r <= 6 && lagrange_ok; ++r) {
            const auto s = algebra::pow(w, n) * algebra::pow_unit(one - w, Rational(-r));
            for (int d = 1; d <= lagrange_d; ++d) {
                algebra::Monomial m;
                m.exps[0] = static_cast<std::int8_t>(d);
                if (s.coeff(m) != algebra::lagrange_coeff(n, r, d)) {
                    lagrange_ok = false;
                    break;
                }
            }
        }
    }
    out.checks.push_back(check("Lagrange double sum equals series extraction", lagrange_ok,
                               {{"n_max", 4}, {"r_max", 6}, {"d_max", lagrange_d}}));
    return out;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const Options& options)
{
    if (name == "oracle-vs-cutjoin") {
        return oracle_vs_cutjoin(options);
    }
    if (name == "change-theorem") {
        return change_theorem(options);
    }
    if (name == "genus-expansion") {
        return genus_expansion(options);
    }
    if (name == "recursions") {
        return recursions(options);
    }
    if (name == "closed-forms") {
        return closed_forms(options);
    }
    throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace hurwitzkit::suites
