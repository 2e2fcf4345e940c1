#include "hurwitzkit/lagrange.hpp"

namespace hurwitzkit::algebra {

Rational lagrange_coeff(int n, int r, int d)
{
    if (d < 1 || n < 0 || r < 0) {
        throw PreconditionError("lagrange_coeff: need d >= 1 and n, r >= 0");
    }
    if (d < n) {
        return 0;
    }
    Rational total = 0;
    // [mu^i] (1 - mu)^(-r) = C(r + i - 1, i); this is 1 at i = 0 even for r = 0
    for (int i = 0; i <= d - n; ++i) {
        Integer c = binomial(r + i - 1, i);
        if (c == 0 || n == 0) {
            continue;
        }
        total += Rational(c * n) * power(Rational(d), d - n - i - 1) / Rational(factorial(d - n - i));
    }
    for (int i = 0; i <= d - n - 1; ++i) {
        if (r == 0) {
            break;
        }
        Integer c = binomial(r + i, r);
        total += Rational(c * r) * power(Rational(d), d - n - i - 2) / Rational(factorial(d - n - i - 1));
    }
    return total;
}

SpacePtr x_space(int max_degree)
{
    return make_space({"x"}, {{"x", {{"x", 1}}, max_degree}});
}

Series tree_function(int max_degree)
{
    auto space = x_space(max_degree);
    Series x = Series::variable(space, "x");
    return solve_graded_fixpoint([&](const Series& w) { return x * exp(w); }, space);
}

}  // namespace hurwitzkit::algebra
