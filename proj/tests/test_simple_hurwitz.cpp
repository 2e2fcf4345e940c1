#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "hurwitzkit/cutjoin.hpp"
#include "hurwitzkit/golden.hpp"
#include "hurwitzkit/simple_hurwitz.hpp"

using namespace hurwitzkit;
using namespace hurwitzkit::simple;

namespace {

const HurwitzTable& reference()
{
    static const HurwitzTable t = cutjoin::hurwitz_via_cutjoin(10, 3);
    return t;
}

Rational x_coeff(const algebra::Series& s, int d)
{
    return s.coeff({{"x", d}});
}

}  // namespace

TEST_CASE("D on the W-ring")
{
    const WExpr h1 = wexpr_for(1, 0);
    CHECK(h1.has_log());
    const WExpr dh1 = apply_D(h1);
    CHECK(dh1 == WExpr::polynomial({rational(1, 24), rational(-1, 12), rational(1, 24)}));
    CHECK(wexpr_for(1, 1) == dh1);
    CHECK(apply_D(WExpr::log_w()) == WExpr::monomial(2) - WExpr::monomial(1));
    CHECK(apply_D(WExpr::monomial(-1)) == WExpr::constant(1) - WExpr::monomial(1));
    CHECK(apply_D(WExpr::constant(5)).is_zero());
}

TEST_CASE("stable W-expressions are polynomials of degree 2n + 5g - 5")
{
    for (int g = 0; g <= 3; ++g) {
        for (int n = 0; n <= 7; ++n) {
            if (2 * g - 2 + n <= 0) {
                continue;
            }
            const WExpr e = wexpr_for(g, n);
            CHECK(e.is_polynomial());
            CHECK(e.degree() == 2 * n + 5 * g - 5);
        }
    }
    CHECK_THROWS_AS(wexpr_for(0, 0), PreconditionError);
    CHECK_THROWS_AS(wexpr_for(4, 0), PreconditionError);
}

TEST_CASE("products that would need log^2 are rejected")
{
    CHECK_THROWS_AS(wexpr_for(1, 0) * wexpr_for(1, 0), PreconditionError);
    CHECK_NOTHROW(wexpr_for(1, 0) * wexpr_for(2, 1));
}

TEST_CASE("WExpr JSON round trip")
{
    const WExpr e = wexpr_for(1, 0) + wexpr_for(3, 2);
    CHECK(WExpr::from_json(e.to_json()) == e);
    CHECK_THROWS_AS(WExpr::from_json(nlohmann::json{{"laurent", {{"x", "1/2"}}}}), FormatError);
}

TEST_CASE("extract_coeff agrees with series substitution on random Laurent inputs")
{
    std::mt19937 rng(1729);
    std::uniform_int_distribution<int> exponent(-4, 6);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    const int d_max = 10;
    for (int trial = 0; trial < 200; ++trial) {
        WExpr e;
        for (int t = 0; t < 4; ++t) {
            e += WExpr::monomial(exponent(rng), rational(num(rng), den(rng)));
        }
        const auto s = to_x_series(e, d_max);
        for (int d = 1; d <= d_max; ++d) {
            CHECK(extract_coeff(e, d) == x_coeff(s, d));
        }
    }
    CHECK(extract_coeff(WExpr::monomial(1) - WExpr::constant(1), 1) == 1);
    CHECK_THROWS_AS(extract_coeff(WExpr::log_w(), 3), PreconditionError);
}

TEST_CASE("A_k is the x^d coefficient of W^k")
{
    for (int k = 1; k <= 10; ++k) {
        CHECK(A_k(k, 1) == k);
        for (int d = 1; d <= 8; ++d) {
            CHECK(A_k(k, d) == extract_coeff(WExpr::monomial(k), d));
        }
    }
}

TEST_CASE("W-expressions expand to the simple Hurwitz series")
{
    for (int g = 1; g <= 3; ++g) {
        const auto s = to_x_series(wexpr_for(g, 0), 10);
        for (int d = 1; d <= 10; ++d) {
            CHECK(x_coeff(s, d) * Rational(factorial(2 * d + 2 * g - 2)) == reference().simple(g, d));
        }
    }
}

TEST_CASE("recurrence evaluation by hand")
{
    const auto g0 = golden::recurrence("genus 0 quadratic recurrence");
    CHECK(residual(g0, reference(), 3) == 0);
    CHECK(reference().simple(0, 3) == 4);
    const auto g1 = golden::recurrence("genus 1 quadratic recurrence");
    CHECK(residual(g1, reference(), 2) == 0);
    CHECK(reference().simple(1, 2) == rational(1, 2));
    CHECK(verify_recurrence(golden::recurrence("genus 2 linear recurrence"), reference(), 1, 10).holds);
}

TEST_CASE("recurrence JSON round trip and schema errors")
{
    for (const auto& spec : golden::recurrences()) {
        CHECK(RecurrenceSpec::from_json(spec.to_json()).to_json() == spec.to_json());
    }
    CHECK_THROWS_AS(RecurrenceSpec::from_json(nlohmann::json{{"name", "x"}}), FormatError);
}

TEST_CASE("translation matches direct convolution")
{
    // residual of the translated recurrence = (2d + 2g0 - 2)! * lhs coefficient of the identity's
    // x^d coefficient, once the identity is perturbed so that it no longer vanishes
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-7, 7);
    for (const auto& base : golden::identities()) {
        DifferentialIdentity id = base;
        for (std::size_t t = 1; t < id.terms.size(); ++t) {
            id.terms[t].coefficient += coef(rng);
        }
        const int g0 = id.terms[0].factors[0].g;
        const auto spec = translate(id, 0);
        for (int d = 1; d <= 9; ++d) {
            const Rational direct = identity_coeff(id, reference(), d) * Rational(factorial(2 * d + 2 * g0 - 2));
            CHECK(residual(spec, reference(), d) == direct);
        }
    }
}

TEST_CASE("translation rejects terms above the left-hand genus")
{
    DifferentialIdentity id{"bad", {DTerm{1, {DFactor{1, 1}}}, DTerm{1, {DFactor{2, 0}}}}};
    CHECK_THROWS_AS(translate(id, 0), PreconditionError);
    DifferentialIdentity triple{"triple", {DTerm{1, {DFactor{2, 0}}}, DTerm{1, {DFactor{0, 1}, DFactor{0, 1}, DFactor{0, 1}}}}};
    CHECK_THROWS_AS(translate(triple, 0), PreconditionError);
}

TEST_CASE("small families contain the classical identities")
{
    const std::vector<FamilyTerm> g0{{DFactor{0, 2}}, {DFactor{0, 2}, DFactor{0, 2}}, {DFactor{0, 1}}};
    const auto r0 = search_recursions(g0, reference(), 10);
    CHECK(r0.basis.size() == 1);
    CHECK(r0.all_verified());
    CHECK(in_span(r0, golden::identity("genus 0 second-derivative identity")));

    const std::vector<FamilyTerm> g1{{DFactor{1, 1}}, {DFactor{0, 3}, DFactor{0, 3}}};
    const auto r1 = search_recursions(g1, reference(), 10);
    CHECK(r1.basis.size() == 1);
    CHECK(in_span(r1, golden::identity("genus 1 square identity")));

    const std::vector<FamilyTerm> none{{DFactor{2, 0}}, {DFactor{3, 0}}};
    CHECK(search_recursions(none, reference(), 5).basis.empty());
}

TEST_CASE("genus 3 family")
{
    const auto family = genus3_family();
    CHECK(family.size() == 26);
    const auto result = search_recursions(family, reference(), 10);
    CHECK(result.basis.size() == 11);
    CHECK(result.all_verified());
    CHECK(in_span(result, golden::identity("genus 3 linear identity")));
}

TEST_CASE("family files")
{
    const auto family = genus3_family();
    CHECK(family_from_json(family_to_json(family)) == family);
    CHECK_THROWS_AS(family_from_json(nlohmann::json::object()), FormatError);
    CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"([{"factors": []}])")), FormatError);
    CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"([{"factors": [{"g": 0, "p": 0}]}])")), FormatError);
    CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"([{"factors": [{"g": 1, "p": 0}, {"g": 2, "p": 0}]}])")),
                    FormatError);
    CHECK_THROWS_AS(load_family("/nonexistent/family.json"), FormatError);
}

TEST_CASE("closed forms")
{
    const auto p3 = p_polynomial(wexpr_for(3, 0));
    CHECK(p3.size() == 11);
    CHECK(p_polynomial(wexpr_for(2, 0)).size() == 6);
    for (int d = 1; d <= 8; ++d) {
        CHECK(p_form_value(3, p3, d) == reference().simple(3, d));
        CHECK(a_form_value(3, golden::a_form_coefficients(), d) == reference().simple(3, d));
    }
}
