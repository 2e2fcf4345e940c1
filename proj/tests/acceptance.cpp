// One PASS/FAIL line per acceptance criterion. Exit status is 0 exactly when
// the failing criteria are the ones named with --expect-fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "hurwitzkit/ansatz.hpp"
#include "hurwitzkit/cutjoin.hpp"
#include "hurwitzkit/golden.hpp"
#include "hurwitzkit/hodge.hpp"
#include "hurwitzkit/lagrange.hpp"
#include "hurwitzkit/oracle.hpp"
#include "hurwitzkit/simple_hurwitz.hpp"

using namespace hurwitzkit;

namespace {

struct Context {
    HurwitzTable hurwitz = cutjoin::hurwitz_via_cutjoin(12, 3);
    hodge::HodgeTable primitives;
    ansatz::FitResult fit2;
    ansatz::FitResult fit3;
    Context()
    {
        fit2 = ansatz::fit_constants(2, hurwitz, 6, primitives);
        fit3 = ansatz::fit_constants(3, hurwitz, 8, primitives);
    }
};

bool all_passed(const std::vector<ansatz::Report>& reports, std::string& note)
{
    for (const auto& r : reports) {
        if (!r.passed) {
            note = r.to_json().dump();
            return false;
        }
    }
    return true;
}

Rational simple_series_coeff(const Context& c, int g, int n, int d)
{
    return power(Rational(d), n) * c.hurwitz.simple(g, d) / Rational(factorial(2 * d + 2 * g - 2));
}

bool c1(Context&, std::string& note)
{
    const auto a = oracle::connected_hurwitz_upto_r(5, 16);
    const auto b = cutjoin::hurwitz_via_cutjoin_upto_r(5, 16);
    note = std::to_string(a.size()) + " entries";
    return a.size() == b.size() && !first_disagreement(a, b);
}

bool c2(Context& c, std::string& note)
{
    hodge::HodgeTable empty;
    bool ok = hodge::evaluate(hodge::HodgeKey(0, {0, 0, 0}, 0), empty) == 1 &&
              hodge::evaluate(hodge::HodgeKey(1, {1}, 0), empty) == Rational(1, 24) &&
              hodge::evaluate(hodge::HodgeKey(1, {0}, 1), empty) == Rational(1, 24);
    // genus 1 ELSV runs on the two base values alone
    for (int d = 1; d <= 5 && ok; ++d) {
        for (const auto& alpha : enumerate(d)) {
            if (hodge::elsv_hurwitz(1, alpha, empty) != c.hurwitz.at(1, alpha)) {
                note = "genus 1 ELSV differs at (" + alpha.to_string() + ")";
                ok = false;
                break;
            }
        }
    }
    return ok;
}

void genus0_thetas(int n, int remaining, std::vector<int>& theta, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(theta.size()) == n) {
        if (remaining == 0) {
            out.push_back(theta);
        }
        return;
    }
    for (int t = theta.empty() ? 0 : theta.back(); t <= remaining; ++t) {
        theta.push_back(t);
        genus0_thetas(n, remaining - t, theta, out);
        theta.pop_back();
    }
}

bool c3(Context&, std::string& note)
{
    hodge::HodgeTable table;
    hodge::EvalOptions by_string;
    by_string.genus0_closed_form = false;
    int count = 0;
    for (int n = 3; n <= 8; ++n) {
        std::vector<std::vector<int>> keys;
        std::vector<int> theta;
        genus0_thetas(n, n - 3, theta, keys);
        for (const auto& t : keys) {
            ++count;
            if (hodge::evaluate(hodge::HodgeKey(0, t, 0), table, by_string) != hodge::genus0_multinomial(t)) {
                return false;
            }
        }
    }
    note = std::to_string(count) + " brackets";
    return true;
}

bool c4(Context& c, std::string& note)
{
    const int d_max = 10;
    auto space = ansatz::hurwitz_space(d_max, 1);
    for (int g = 2; g <= 3; ++g) {
        const auto specialized = ansatz::specialize_simple(c.hurwitz.genus_series(g, space));
        const auto display = simple::to_x_series(golden::w_series(g), d_max);
        if (!(specialized == display)) {
            note = "genus " + std::to_string(g) + " differs";
            return false;
        }
    }
    note = "x-degree <= 10";
    return true;
}

bool c5(Context& c, std::string& note)
{
    int count = 0;
    for (const auto& e : golden::data().at("w_table")) {
        const int g = e.at("g").get<int>();
        const int n = e.at("n").get<int>();
        const auto pinned = simple::WExpr::from_json(e.at("expr"));
        if (pinned != simple::wexpr_for(g, n)) {
            note = e.at("label").get<std::string>() + " differs from D^n of the base";
            return false;
        }
        const auto s = simple::to_x_series(pinned, 10);
        for (int d = 1; d <= 10; ++d) {
            if (s.coeff({{"x", d}}) != simple_series_coeff(c, g, n, d)) {
                note = e.at("label").get<std::string>() + " differs from cut-and-join at d=" + std::to_string(d);
                return false;
            }
        }
        ++count;
    }
    note = std::to_string(count) + " expressions";
    return true;
}

bool c6(Context& c, std::string& note)
{
    const auto r = simple::search_recursions(simple::genus3_family(), c.hurwitz, 10);
    note = "dimension " + std::to_string(r.basis.size()) + ", rank " + std::to_string(r.rank);
    return r.family.size() == 26 && r.basis.size() == 11 && r.all_verified();
}

bool identity_holds(Context& c, const simple::DifferentialIdentity& id, int d_max)
{
    if (!simple::identity_wexpr(id).is_zero()) {
        return false;
    }
    for (int d = 1; d <= d_max; ++d) {
        if (simple::identity_coeff(id, c.hurwitz, d) != 0) {
            return false;
        }
    }
    return true;
}

bool c7(Context& c, std::string& note)
{
    const auto id = golden::identity("genus 3 linear identity");
    const bool differential = identity_holds(c, id, 10);
    const auto numeric = simple::verify_recurrence(golden::recurrence("genus 3 linear recurrence"), c.hurwitz, 1, 10);
    note = std::string("differential ") + (differential ? "holds" : "fails") + ", numeric " +
           (numeric.holds ? "holds" : "fails");
    return differential && numeric.holds;
}

bool c8(Context& c, std::string& note)
{
    const auto spec = golden::recurrence("genus 3 recurrence with products");
    const auto check = simple::verify_recurrence(spec, c.hurwitz, 1, 8);
    if (check.first_failure) {
        note = "first failure at d=" + std::to_string(*check.first_failure) + ", residual " +
               to_string(simple::residual(spec, c.hurwitz, *check.first_failure));
    }
    return check.holds;
}

bool c9(Context& c, std::string& note)
{
    const auto numeric = simple::verify_recurrence(golden::recurrence("genus 2 linear recurrence"), c.hurwitz, 1, 10);
    const auto id = golden::identity("genus 2 linear identity");
    const bool w = simple::identity_wexpr(id).is_zero();
    note = std::string("numeric ") + (numeric.holds ? "holds" : "fails") + ", W identity " + (w ? "holds" : "fails");
    return numeric.holds && w;
}

bool c10(Context& c, std::string& note)
{
    const bool g0 = simple::verify_recurrence(golden::recurrence("genus 0 quadratic recurrence"), c.hurwitz, 1, 12).holds;
    const bool g1 = simple::verify_recurrence(golden::recurrence("genus 1 quadratic recurrence"), c.hurwitz, 1, 12).holds;
    const bool spots = c.hurwitz.simple(0, 3) == 4 && c.hurwitz.simple(1, 2) == Rational(1, 2);
    note = "d <= 12";
    return g0 && g1 && spots;
}

bool c11(Context& c, std::string& note)
{
    for (int g = 0; g <= 2; ++g) {
        if (!all_passed(ansatz::verify_change_theorem(g, c.hurwitz, c.primitives, 8, 4), note)) {
            return false;
        }
    }
    note = "x-degree <= 8, parts <= 4";
    return true;
}

bool c12(Context& c, std::string& note)
{
    if (!all_passed(ansatz::verify_genus_expansion(2, c.primitives, 8, 5), note)) {
        return false;
    }
    note = "t_0..t_8, degree <= 5";
    return true;
}

bool c13(Context& c, std::string& note)
{
    const auto& r = c.fit2.report;
    const auto& f = c.fit2.form;
    auto K = [&](std::vector<int> parts) { return *f.constant(Partition(std::move(parts))); };
    const bool g2 = r.unknowns == 6 && r.rank == 6 && r.surplus_rows >= 10 && r.surplus_consistent &&
                    K({2}) + K({3}) + K({4}) == 0 && K({2, 2}) / 2 + K({2, 3}) == Rational(1, 1440) &&
                    K({2, 2, 2}) == Rational(7, 240);
    const bool g3 = c.fit3.report.unknowns == 26 && c.fit3.report.rank == 26 && c.fit3.report.surplus_consistent &&
                    simple::wexpr_from_ansatz(c.fit3.form) == golden::w_series(3);
    note = "genus 2 surplus " + std::to_string(r.surplus_rows) + ", genus 3 surplus " +
           std::to_string(c.fit3.report.surplus_rows);
    return g2 && g3;
}

bool c14(Context& c, std::string& note)
{
    for (int d = 1; d <= 8; ++d) {
        if (simple::a_form_value(3, golden::a_form_coefficients(), d) != c.hurwitz.simple(3, d) ||
            simple::p_form_value(3, golden::p3_polynomial(), d) != c.hurwitz.simple(3, d)) {
            note = "closed form differs at d=" + std::to_string(d);
            return false;
        }
    }
    const int d_max = 12;
    const auto w = algebra::tree_function(d_max);
    const auto one = algebra::Series::constant(w.space(), 1);
    for (int n = 0; n <= 6; ++n) {
        for (int r = 0; r <= 8; ++r) {
            const auto s = algebra::pow(w, n) * algebra::pow_unit(one - w, Rational(-r));
            for (int d = 1; d <= d_max; ++d) {
                if (algebra::lagrange_coeff(n, r, d) != s.coeff({{"x", d}})) {
                    note = "Lagrange sum differs";
                    return false;
                }
            }
        }
    }
    note = "d <= 8; Lagrange n <= 6, r <= 8, d <= 12";
    return true;
}

bool c15(Context& c, std::string& note)
{
    int count = 0;
    for (int d = 3; d <= 5; ++d) {
        for (const auto& alpha : enumerate(d)) {
            if (alpha.length() < 3) {
                continue;
            }
            for (int g = 0; g <= 2; ++g) {
                ++count;
                if (hodge::elsv_hurwitz(g, alpha, c.primitives) != c.hurwitz.at(g, alpha)) {
                    note = "differs at g=" + std::to_string(g) + " (" + alpha.to_string() + ")";
                    return false;
                }
            }
        }
    }
    note = std::to_string(count) + " numbers";
    return true;
}

}  // namespace

int main(int argc, char** argv)
{
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--expect-fail" && i + 1 < argc) {
            expected_failures.insert(std::stoi(argv[++i]));
        }
    }
    const std::vector<std::pair<std::string, std::function<bool(Context&, std::string&)>>> criteria{
        {"oracle equals cut-and-join, d <= 5, r <= 16", c1},
        {"base values", c2},
        {"genus 0 string reduction equals the multinomial, n <= 8", c3},
        {"H~_2 and H~_3 w-expressions", c4},
        {"W-table", c5},
        {"genus 3 family null space has dimension 11", c6},
        {"genus 3 linear recursion, d <= 10", c7},
        {"genus 3 recursion with products, d <= 8", c8},
        {"genus 2 recursion, d <= 10, and its differential form", c9},
        {"genus 0 and genus 1 recursions, d <= 12", c10},
        {"change-of-variables theorem", c11},
        {"genus 2 expansion ansatz", c12},
        {"fitting soundness", c13},
        {"genus 3 closed forms", c14},
        {"ELSV against cut-and-join, l >= 3, d <= 5, g <= 2", c15},
    };
    const auto start = std::chrono::steady_clock::now();
    Context context;
    std::set<int> failures;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        std::string note;
        bool passed = false;
        try {
            passed = criteria[i].second(context, note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!passed) {
            failures.insert(id);
        }
        std::printf("%s %2d %s%s%s%s\n", passed ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                    note.empty() ? "" : " [", note.c_str(), note.empty() ? "" : "]");
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu/%zu passed in %.2fs\n", criteria.size() - failures.size(), criteria.size(), seconds);
    if (failures != expected_failures) {
        std::printf("failing set differs from --expect-fail\n");
        return 1;
    }
    return 0;
}
