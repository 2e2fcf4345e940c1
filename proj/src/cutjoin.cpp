#include "hurwitzkit/cutjoin.hpp"

namespace hurwitzkit::cutjoin {

using algebra::Monomial;
using algebra::Series;

algebra::SpacePtr state_space(int d_max, int r_max)
{
    if (d_max < 1 || r_max < 0) {
        throw PreconditionError("cut-and-join: need d_max >= 1 and r_max >= 0");
    }
    std::vector<std::string> names{"x", "y", "u"};
    for (auto& p : algebra::part_variables(d_max)) {
        names.push_back(p);
    }
    return algebra::make_space(names, {{"x", {{"x", 1}}, d_max}, {"u", {{"u", 1}}, r_max}});
}

Series initial_state(const algebra::SpacePtr& space)
{
    const int d_max = space->caps().at(space->cap_index("x")).max_degree;
    Series out(space);
    for (int n = 0; n <= d_max; ++n) {
        out += Series::monomial(space, {{"x", n}, {"y", -n}, {"p1", n}}, Rational(1) / Rational(factorial(n)));
    }
    return out;
}

Series cutjoin_step(const Series& e_r, int r)
{
    const auto& space = e_r.space();
    const auto& vars = space->vars();
    const std::size_t y = vars.index("y");
    std::vector<std::size_t> p{0};  // p[a] = index of p_a
    for (int a = 1;; ++a) {
        auto v = vars.find("p" + std::to_string(a));
        if (!v) {
            break;
        }
        p.push_back(*v);
    }
    const int n_parts = static_cast<int>(p.size()) - 1;
    const Rational scale = Rational(1, 2 * (r + 1));

    Series out(space);
    for (const auto& [m, c] : e_r.terms()) {
        // cut: p_c -> p_a p_b
        for (int cpart = 2; cpart <= n_parts; ++cpart) {
            const int ec = m.exps[p[cpart]];
            if (ec == 0) {
                continue;
            }
            for (int a = 1; a < cpart; ++a) {
                const int b = cpart - a;
                Monomial next = m;
                next.exps[p[cpart]] -= 1;
                next.exps[p[a]] += 1;
                next.exps[p[b]] += 1;
                out.add_term(next, c * Rational(cpart * ec) * scale);
            }
        }
        // join: p_a p_b -> p_(a+b), one genus up
        for (int a = 1; a <= n_parts; ++a) {
            const int ea = m.exps[p[a]];
            if (ea == 0) {
                continue;
            }
            for (int b = 1; a + b <= n_parts; ++b) {
                const int eb = m.exps[p[b]];
                const int pairs = a == b ? ea * (ea - 1) : ea * eb;
                if (pairs == 0) {
                    continue;
                }
                Monomial next = m;
                next.exps[p[a]] -= 1;
                next.exps[p[b]] -= 1;
                next.exps[p[a + b]] += 1;
                next.exps[y] += 1;
                out.add_term(next, c * Rational(a * b * pairs) * scale);
            }
        }
    }
    return out;
}

CutJoinState run_cutjoin(int d_max, int g_max, int r_max, const Budget& budget)
{
    if (g_max < 0) {
        throw PreconditionError("cut-and-join: g_max must be >= 0");
    }
    auto space = state_space(d_max, r_max);
    // rough size: partitions of d <= d_max times u-orders, ~200 bytes per term
    double terms = 0;
    for (int d = 0; d <= d_max; ++d) {
        terms += partition_number(d).get_d();
    }
    budget.require_memory(terms * (r_max + 1) * 200.0 * 4, "cut-and-join state");

    CutJoinState state{d_max, g_max, r_max, {}};
    state.e.push_back(initial_state(space));
    for (int r = 0; r < r_max; ++r) {
        state.e.push_back(cutjoin_step(state.e.back(), r));
    }
    return state;
}

Series connected_series(const CutJoinState& state)
{
    const auto& space = state.e.front().space();
    const std::size_t u = space->vars().index("u");
    Series total(space);
    for (std::size_t r = 0; r < state.e.size(); ++r) {
        for (const auto& [m, c] : state.e[r].terms()) {
            Monomial shifted = m;
            shifted.exps[u] = static_cast<std::int8_t>(r);
            total.add_term(shifted, c);
        }
    }
    return algebra::log(total, space->cap_index("x"));
}

HurwitzTable hurwitz_via_cutjoin(int d_max, int g_max, int r_max, const Budget& budget)
{
    const int needed = 2 * d_max + 2 * g_max - 2;
    if (r_max < 0) {
        r_max = needed;
    }
    if (r_max < needed) {
        throw PreconditionError("cut-and-join: r_max = " + std::to_string(r_max) + " is below " +
                                std::to_string(needed) + " needed for d_max = " + std::to_string(d_max) +
                                ", g_max = " + std::to_string(g_max));
    }
    auto state = run_cutjoin(d_max, g_max, r_max, budget);
    return table_from_connected_series(connected_series(state), d_max, g_max, "cutjoin");
}

HurwitzTable hurwitz_via_cutjoin_upto_r(int d_max, int r_max, const Budget& budget)
{
    auto state = run_cutjoin(d_max, r_max / 2 + 1, r_max, budget);
    return table_from_connected_series(connected_series(state), d_max, r_max / 2 + 1, "cutjoin");
}

}  // namespace hurwitzkit::cutjoin
