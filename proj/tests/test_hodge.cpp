#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hurwitzkit/cutjoin.hpp"
#include "hurwitzkit/hodge.hpp"
#include "hurwitzkit/suites.hpp"

using namespace hurwitzkit;
using hodge::HodgeKey;

namespace {

void genus0_keys(int n, int remaining, std::vector<int>& theta, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(theta.size()) == n) {
        if (remaining == 0) {
            out.push_back(theta);
        }
        return;
    }
    const int start = theta.empty() ? 0 : theta.back();
    for (int t = start; t <= remaining; ++t) {
        theta.push_back(t);
        genus0_keys(n, remaining - t, theta, out);
        theta.pop_back();
    }
}

}  // namespace

TEST_CASE("base values")
{
    hodge::HodgeTable table;
    CHECK(hodge::evaluate(HodgeKey(0, {0, 0, 0}, 0), table) == 1);
    CHECK(hodge::evaluate(HodgeKey(1, {1}, 0), table) == rational(1, 24));
    CHECK(hodge::evaluate(HodgeKey(1, {0}, 1), table) == rational(1, 24));
}

TEST_CASE("validity gate")
{
    CHECK(hodge::validity_gate(HodgeKey(0, {0, 0, 0}, 0)) == hodge::Validity::valid);
    CHECK(hodge::validity_gate(HodgeKey(0, {0, 0, 1}, 0)) == hodge::Validity::zero_dimension);
    CHECK(hodge::validity_gate(HodgeKey(0, {}, 0)) != hodge::Validity::valid);
    CHECK(hodge::validity_gate(HodgeKey(1, {}, 0)) == hodge::Validity::zero_unstable);
    CHECK(hodge::validity_gate(HodgeKey(1, {0, 0}, 2)) != hodge::Validity::valid);
    hodge::HodgeTable table;
    CHECK(hodge::evaluate(HodgeKey(0, {0, 0, 1}, 0), table) == 0);
}

TEST_CASE("genus 0 string reduction equals the multinomial for n <= 8")
{
    hodge::HodgeTable table;
    hodge::EvalOptions by_string;
    by_string.genus0_closed_form = false;
    for (int n = 3; n <= 8; ++n) {
        std::vector<std::vector<int>> keys;
        std::vector<int> theta;
        genus0_keys(n, n - 3, theta, keys);
        for (const auto& t : keys) {
            CHECK(hodge::evaluate(HodgeKey(0, t, 0), table, by_string) == hodge::genus0_multinomial(t));
        }
    }
    CHECK(hodge::genus0_multinomial({0, 0, 0, 0, 2}) == 1);
    CHECK(hodge::genus0_multinomial({0, 0, 1, 1, 1, 1}) == 6);
}

TEST_CASE("genus 1 reductions need only the base values")
{
    const hodge::HodgeTable empty;
    CHECK(hodge::evaluate(HodgeKey(1, {1, 1}, 0), empty) == rational(1, 24));
    CHECK(hodge::evaluate(HodgeKey(1, {0, 1}, 1), empty) == rational(1, 24));
    CHECK(hodge::evaluate(HodgeKey(1, {0, 0, 3}, 0), empty) == rational(1, 24));
}

TEST_CASE("missing primitives are reported")
{
    hodge::HodgeTable table;
    CHECK_THROWS_AS(hodge::evaluate(HodgeKey(2, {4}, 0), table), hodge::MissingPrimitive);
    CHECK(hodge::primitive_keys(2).size() == 6);
    CHECK(hodge::primitive_keys(3).size() == 26);
}

TEST_CASE("reduction order does not matter")
{
    hodge::HodgeTable table;
    suites::fit_from_cutjoin(2, table);
    const hodge::HodgeTable fitted = table;
    hodge::EvalOptions string_first;
    hodge::EvalOptions dilaton_first;
    dilaton_first.strategy = hodge::Strategy::dilaton_first;
    const std::vector<HodgeKey> keys{HodgeKey(2, {0, 1, 5}, 0), HodgeKey(2, {1, 1, 1, 4}, 0),
                                     HodgeKey(2, {0, 0, 1, 2, 3}, 0), HodgeKey(2, {0, 1, 1, 2}, 1),
                                     HodgeKey(2, {0, 0, 1, 2}, 2), HodgeKey(2, {1, 1, 1}, 2)};
    for (const auto& key : keys) {
        CHECK(hodge::evaluate(key, fitted, string_first) == hodge::evaluate(key, fitted, dilaton_first));
    }
    CHECK(hodge::evaluate(HodgeKey(2, {4}, 0), fitted) == rational(1, 1152));
}

TEST_CASE("table is write-once and round-trips through JSON")
{
    hodge::HodgeTable table;
    table.set(HodgeKey(2, {4}, 0), rational(1, 1152), hodge::Source::fitted);
    table.set(HodgeKey(2, {4}, 0), rational(1, 1152), hodge::Source::fitted);
    CHECK_THROWS_AS(table.set(HodgeKey(2, {4}, 0), rational(1, 1151), hodge::Source::fitted), PreconditionError);
    const auto copy = hodge::HodgeTable::from_json(table.to_json());
    CHECK(copy.size() == 1);
    CHECK(copy.find(HodgeKey(2, {4}, 0))->value == rational(1, 1152));
    CHECK(HodgeKey(1, {1, 0}, 1).to_string() == "<tau_0 tau_1 lambda_1>_1");
}

TEST_CASE("ELSV reproduces cut-and-join where it applies")
{
    hodge::HodgeTable table;
    suites::fit_from_cutjoin(2, table);
    const auto hurwitz = cutjoin::hurwitz_via_cutjoin(5, 2);
    for (int d = 1; d <= 5; ++d) {
        for (const auto& alpha : enumerate(d)) {
            for (int g = 0; g <= 2; ++g) {
                if (g == 0 && alpha.length() < 3) {
                    CHECK_THROWS_AS(hodge::elsv_hurwitz(g, alpha, table), PreconditionError);
                    continue;
                }
                CHECK_MESSAGE(hodge::elsv_hurwitz(g, alpha, table) == hurwitz.at(g, alpha),
                              "g=" << g << " alpha=" << alpha.to_string());
            }
        }
    }
}
