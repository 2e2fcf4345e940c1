#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hurwitzkit/ansatz.hpp"
#include "hurwitzkit/cutjoin.hpp"

using namespace hurwitzkit;
using namespace hurwitzkit::ansatz;

namespace {

const HurwitzTable& reference()
{
    static const HurwitzTable t = cutjoin::hurwitz_via_cutjoin(8, 3);
    return t;
}

void require_all(const std::vector<Report>& reports)
{
    for (const auto& r : reports) {
        CHECK_MESSAGE(r.passed, r.to_json().dump());
    }
}

}  // namespace

TEST_CASE("genus 2 fit")
{
    hodge::HodgeTable table;
    const auto fit = fit_constants(2, reference(), 6, table);
    CHECK(fit.report.unknowns == 6);
    CHECK(fit.report.rank == 6);
    CHECK(fit.report.surplus_rows >= 10);
    CHECK(fit.report.surplus_consistent);
    const auto& f = fit.form;
    CHECK(*f.constant(Partition({2})) == rational(7, 5760));
    CHECK(*f.constant(Partition({3})) == rational(-1, 480));
    CHECK(*f.constant(Partition({4})) == rational(1, 1152));
    CHECK(*f.constant(Partition({2, 2})) == rational(-5, 576));
    CHECK(*f.constant(Partition({2, 3})) == rational(29, 5760));
    CHECK(*f.constant(Partition({2, 2, 2})) == rational(7, 240));
    // written back with the lambda sign (-1)^k
    CHECK(table.find(hodge::HodgeKey(2, {3}, 1))->value == rational(1, 480));
    CHECK(table.find(hodge::HodgeKey(2, {2}, 2))->value == rational(7, 5760));
    CHECK(AnsatzForm::from_json(f.to_json()).to_json() == f.to_json());
}

TEST_CASE("shallow fits are rank deficient")
{
    hodge::HodgeTable table;
    CHECK_THROWS_AS(fit_constants(2, reference(), 3, table), RankDeficient);
}

TEST_CASE("change of variables in genus 0, 1, 2")
{
    hodge::HodgeTable table;
    fit_constants(2, reference(), 6, table);
    for (int g = 0; g <= 2; ++g) {
        require_all(verify_change_theorem(g, reference(), table, 6, 3));
    }
    CHECK(verify_xi_I(3, 6, 3).passed);
}

TEST_CASE("the literal two-part genus 0 coefficient is off by 2(i+j)!")
{
    auto space = hurwitz_space(4, 2);
    const auto literal = h0_two_part(space, true);
    const auto corrected = h0_two_part(space, false);
    // i = j = 1: ratio 2 * 2!
    const Rational a = literal.coeff({{"x", 2}, {"p1", 2}});
    const Rational b = corrected.coeff({{"x", 2}, {"p1", 2}});
    CHECK(b != 0);
    CHECK(a == b * 4);
}

TEST_CASE("Delta G_g")
{
    hodge::HodgeTable table;
    fit_constants(2, reference(), 6, table);
    const auto g1 = delta_check(1, table, 6, 5);
    CHECK(g1.nonconstant_vanish);
    CHECK(g1.constant == rational(1, 24));
    const auto g2 = delta_check(2, table, 6, 5);
    CHECK(g2.nonconstant_vanish);
    CHECK(g2.constant == 0);
}

TEST_CASE("genus 2 expansion identities")
{
    hodge::HodgeTable table;
    fit_constants(2, reference(), 6, table);
    require_all(verify_genus_expansion(2, table, 6, 4));
}

TEST_CASE("genus 3 fit has 26 unknowns")
{
    hodge::HodgeTable table;
    const auto fit = fit_constants(3, reference(), 8, table);
    CHECK(fit.report.unknowns == 26);
    CHECK(fit.report.rank == 26);
    CHECK(fit.report.surplus_consistent);
    CHECK(*fit.form.constant(Partition({7})) == rational(1, 82944));
    CHECK(table.find(hodge::HodgeKey(3, {7}, 0))->value == rational(1, 82944));
}
