#pragma once

// Brute-force Hurwitz numbers: count tuples of transpositions in S_d by a
// dense dynamic program over the group algebra, then pass to connected
// covers through the logarithm of the all-covers series.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hurwitzkit/budget.hpp"
#include "hurwitzkit/hurwitz_table.hpp"
#include "hurwitzkit/partitions.hpp"
#include "hurwitzkit/rational.hpp"

namespace hurwitzkit::oracle {

/// Lehmer-code ranking of the permutations of {0..d-1}.
class PermutationIndex {
public:
    explicit PermutationIndex(int d);

    int degree() const { return d_; }
    std::size_t size() const { return size_; }
    std::size_t rank(const std::vector<int>& perm) const;
    std::vector<int> unrank(std::size_t rank) const;
    /// Cycle type of the permutation with the given rank.
    Partition cycle_type(std::size_t rank) const;

private:
    int d_;
    std::size_t size_;
    std::vector<std::size_t> radix_;  // (d-1-i)!
};

/// Element of the group algebra Z[S_d], indexed by Lehmer rank.
struct GroupAlgebraVector {
    int d = 0;
    std::vector<Integer> counts;
};

/// Key (r, cycle type) of a factorization count.
using FactorizationKey = std::pair<int, Partition>;

/// N(d, r, alpha) = number of tuples (t_1..t_r) of transpositions whose
/// product has cycle type alpha, for 0 <= r <= r_max. Classes with zero count
/// are still listed.
std::map<FactorizationKey, Integer> count_factorizations(int d, int r_max, const Budget& budget = Budget());

/// Connected Hurwitz numbers for every d <= d_max and genus g <= g_max.
HurwitzTable connected_hurwitz(int d_max, int g_max, const Budget& budget = Budget());

/// Connected Hurwitz numbers for every d <= d_max and every genus whose
/// branch-point count satisfies r <= r_max.
HurwitzTable connected_hurwitz_upto_r(int d_max, int r_max, const Budget& budget = Budget());

}  // namespace hurwitzkit::oracle
