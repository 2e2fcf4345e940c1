#pragma once

#include "hurwitzkit/rational.hpp"
#include "hurwitzkit/series.hpp"

namespace hurwitzkit::algebra {

/// [x^d] w^n / (1 - w)^r where w = x e^w, via the closed double sum obtained
/// from Lagrange inversion. Returns 0 when d < n. Requires d >= 1.
Rational lagrange_coeff(int n, int r, int d);

/// The tree function w = sum n^(n-1) x^n / n!, solved as the fixed point of
/// w = x e^w in the one-variable space {x}, x-degree <= max_degree.
Series tree_function(int max_degree);

/// One-variable space {x} with cap "x" <= max_degree.
SpacePtr x_space(int max_degree);

}  // namespace hurwitzkit::algebra
