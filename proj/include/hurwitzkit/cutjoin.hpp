#pragma once

// Hurwitz numbers from the cut-and-join equation. E = exp(H) is expanded in
// the branch-point marker u, E = sum_r E_r u^r, and each E_r is obtained from
// E_(r-1) by one application of the cut-and-join operator.
//
// Genus marker convention: H = sum_g H_g y^(g-1), so E_0 = exp(p_1 x / y) and
// the join term (which raises the genus of a connected piece by one) carries
// a factor y.

#include <vector>

#include "hurwitzkit/budget.hpp"
#include "hurwitzkit/hurwitz_table.hpp"
#include "hurwitzkit/series.hpp"

namespace hurwitzkit::cutjoin {

/// Space {x, y, u, p1..p_dmax} with caps x <= d_max and u <= r_max.
algebra::SpacePtr state_space(int d_max, int r_max);

/// exp(p_1 x / y) in the state space.
algebra::Series initial_state(const algebra::SpacePtr& space);

/// E_(r+1) = 1/(r+1) * 1/2 sum_(a,b>=1) [(a+b) p_a p_b d/dp_(a+b) + y a b p_(a+b) d/dp_a d/dp_b] E_r.
algebra::Series cutjoin_step(const algebra::Series& e_r, int r);

struct CutJoinState {
    int d_max = 0;
    int g_max = 0;
    int r_max = 0;
    std::vector<algebra::Series> e;  // E_0 .. E_(r_max)
};

/// Runs the recursion up to u-order r_max.
CutJoinState run_cutjoin(int d_max, int g_max, int r_max, const Budget& budget = Budget());

/// log(sum_r E_r u^r), the connected series.
algebra::Series connected_series(const CutJoinState& state);

/// r_max defaults to the smallest value covering (d_max, g_max), 2 d_max + 2 g_max - 2;
/// a smaller explicit r_max raises PreconditionError.
HurwitzTable hurwitz_via_cutjoin(int d_max, int g_max, int r_max = -1, const Budget& budget = Budget());

/// Every (g, alpha) with |alpha| <= d_max and r <= r_max.
HurwitzTable hurwitz_via_cutjoin_upto_r(int d_max, int r_max, const Budget& budget = Budget());

}  // namespace hurwitzkit::cutjoin
