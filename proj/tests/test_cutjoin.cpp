#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hurwitzkit/cutjoin.hpp"
#include "hurwitzkit/oracle.hpp"

using namespace hurwitzkit;

namespace {

// Genus-0 Hurwitz formula: r!/|Aut| d^(l-3) prod a^a/a!.
Rational genus0_formula(const Partition& alpha)
{
    const int d = alpha.size();
    const int l = alpha.length();
    Rational v = Rational(factorial(d + l - 2)) / Rational(aut_count(alpha)) * power(Rational(d), l - 3);
    for (int a : alpha.parts()) {
        v *= power(Rational(a), a) / Rational(factorial(a));
    }
    return v;
}

}  // namespace

TEST_CASE("cut-and-join agrees with the oracle")
{
    const auto a = oracle::connected_hurwitz_upto_r(5, 12);
    const auto b = cutjoin::hurwitz_via_cutjoin_upto_r(5, 12);
    CHECK(a.size() == b.size());
    CHECK_FALSE(first_disagreement(a, b).has_value());
}

TEST_CASE("genus 0 matches the closed formula")
{
    const auto t = cutjoin::hurwitz_via_cutjoin(7, 0);
    for (int d = 1; d <= 7; ++d) {
        for (const auto& alpha : enumerate(d)) {
            CHECK_MESSAGE(t.at(0, alpha) == genus0_formula(alpha), alpha.to_string());
        }
    }
}

TEST_CASE("one cut-and-join step from the identity")
{
    auto space = cutjoin::state_space(2, 1);
    const auto e0 = cutjoin::initial_state(space);
    const auto e1 = cutjoin::cutjoin_step(e0, 0);
    // p1^2 x^2 / (2 y^2) -> one join gives p2 x^2 / (2 y)
    CHECK(e1.coeff({{"x", 2}, {"y", -1}, {"p2", 1}}) == rational(1, 2));
}

TEST_CASE("branch-point cap must cover every genus requested")
{
    CHECK_THROWS_AS(cutjoin::hurwitz_via_cutjoin(4, 1, 5), PreconditionError);
    Budget tiny;
    tiny.memory_mb = 1;
    CHECK_THROWS_AS(cutjoin::hurwitz_via_cutjoin(10, 3, -1, tiny), BudgetExceeded);
}

TEST_CASE("table serialisation")
{
    const auto t = cutjoin::hurwitz_via_cutjoin(2, 0);
    const auto csv = t.to_csv();
    CHECK(csv.rfind("g,alpha,r,value\n", 0) == 0);
    CHECK(csv.find("0,\"1,1\",2,1/2") != std::string::npos);
    const auto j = t.to_json();
    CHECK(j.is_array());
    CHECK(j[0].at("method") == "cutjoin");
}
