#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "hurwitzkit/lagrange.hpp"
#include "hurwitzkit/linalg.hpp"
#include "hurwitzkit/series.hpp"

using namespace hurwitzkit;
using namespace hurwitzkit::algebra;

namespace {

SpacePtr two_var_space(int cap)
{
    return make_space({"x", "p1", "p2"}, {{"x", {{"x", 1}}, cap}});
}

// Random series with zero constant term, small rational coefficients.
Series random_series(const SpacePtr& space, std::mt19937& rng, int cap)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> ex(0, 2);
    Series out(space);
    for (int t = 0; t < 6; ++t) {
        Monomial m;
        m.exps[0] = static_cast<std::int8_t>(1 + rng() % cap);
        m.exps[1] = static_cast<std::int8_t>(ex(rng));
        m.exps[2] = static_cast<std::int8_t>(ex(rng));
        out.add_term(m, rational(num(rng), den(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("rational formatting and parsing")
{
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(rational(-6, 4)) == "-3/2");
    CHECK(parse_rational("7/5760") == rational(7, 5760));
    CHECK(parse_rational("-12") == Rational(-12));
    CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
    CHECK_THROWS_AS(parse_rational("abc"), FormatError);
}

TEST_CASE("binomials with negative upper index")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(4, -1) == 0);
    CHECK(power(Rational(2), -3) == rational(1, 8));
}

TEST_CASE("exp and log are inverse on random series")
{
    std::mt19937 rng(20240611);
    const int cap = 6;
    auto space = two_var_space(cap);
    for (int trial = 0; trial < 50; ++trial) {
        const Series f = random_series(space, rng, cap);
        CHECK(log(exp(f)) == f);
        const Series u = Series::constant(space, 1) + f;
        CHECK(exp(log(u)) == u);
    }
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937 rng(7);
    const int cap = 5;
    auto space = two_var_space(cap);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(space, rng, cap);
        const Series b = random_series(space, rng, cap);
        const Series c = random_series(space, rng, cap);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(pow(a + b, 2) == a * a + Rational(2) * a * b + b * b);
    }
}

TEST_CASE("pow_unit agrees with integer powers and composes")
{
    auto space = x_space(8);
    const Series x = Series::variable(space, "x");
    const Series u = Series::constant(space, 1) + x + Rational(3) * x * x;
    CHECK(pow_unit(u, Rational(3)) == pow(u, 3));
    const Series half = pow_unit(u, rational(1, 2));
    CHECK(half * half == u);
    CHECK(pow_unit(u, Rational(-1)) * u == Series::constant(space, 1));
}

TEST_CASE("euler operator and derivative")
{
    auto space = x_space(6);
    const Series x = Series::variable(space, "x");
    const Series f = pow(x, 3) * Rational(2) + x;
    CHECK(euler(f, "x") == pow(x, 3) * Rational(6) + x);
    const Series df = derivative(f, "x");
    CHECK(df.coeff({{"x", 2}}) == 6);
    CHECK(df.coeff({{"x", 0}}) == 1);
}

TEST_CASE("exp requires a vanishing constant term")
{
    auto space = x_space(4);
    CHECK_THROWS_AS(exp(Series::constant(space, 1)), PreconditionError);
    CHECK_THROWS_AS(log(Series::variable(space, "x")), PreconditionError);
}

TEST_CASE("series JSON round trip")
{
    std::mt19937 rng(11);
    auto space = two_var_space(4);
    const Series f = random_series(space, rng, 4);
    CHECK(series_from_json(to_json(f), space) == f);
}

TEST_CASE("tree function coefficients n^(n-1)/n!")
{
    const Series w = tree_function(9);
    for (int n = 1; n <= 9; ++n) {
        CHECK(w.coeff({{"x", n}}) == power(Rational(n), n - 1) / Rational(factorial(n)));
    }
}

TEST_CASE("Lagrange closed form equals series extraction for d <= 12")
{
    const int d_max = 12;
    const Series w = tree_function(d_max);
    const Series one = Series::constant(w.space(), 1);
    for (int n = 0; n <= 5; ++n) {
        for (int r = 0; r <= 7; ++r) {
            const Series s = pow(w, n) * pow_unit(one - w, Rational(-r));
            for (int d = 1; d <= d_max; ++d) {
                CHECK(lagrange_coeff(n, r, d) == s.coeff({{"x", d}}));
            }
        }
    }
    CHECK(lagrange_coeff(3, 1, 2) == 0);
    CHECK_THROWS_AS(lagrange_coeff(1, 1, 0), PreconditionError);
}

TEST_CASE("null space of random rank-deficient matrices")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        // 4 independent-ish rows plus 2 combinations
        RationalMatrix m(0, 7);
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < 4; ++i) {
            std::vector<Rational> row(7);
            for (auto& v : row) {
                v = entry(rng);
            }
            rows.push_back(row);
            m.append_row(row);
        }
        for (int i = 0; i < 2; ++i) {
            std::vector<Rational> row(7);
            for (int j = 0; j < 7; ++j) {
                row[static_cast<std::size_t>(j)] = rows[0][static_cast<std::size_t>(j)] * (i + 2) - rows[3][static_cast<std::size_t>(j)];
            }
            m.append_row(row);
        }
        const auto basis = null_space(m);
        CHECK(basis.size() + rank(m) == 7);
        for (const auto& v : basis) {
            for (const auto& x : m.multiply(v)) {
                CHECK(x == 0);
            }
        }
    }
}

TEST_CASE("solve reports inconsistency")
{
    RationalMatrix m(0, 2);
    m.append_row({Rational(1), Rational(1)});
    m.append_row({Rational(2), Rational(2)});
    CHECK_FALSE(solve(m, {Rational(1), Rational(3)}).consistent);
    const auto ok = solve(m, {Rational(1), Rational(2)});
    CHECK(ok.consistent);
    CHECK_FALSE(ok.unique.has_value());
}
