#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "hurwitzkit/oracle.hpp"

using namespace hurwitzkit;

namespace {

struct Brute {
    std::map<std::pair<int, Partition>, Integer> connected;  // (r, alpha) -> transitive tuples
};

Partition cycle_type(const std::vector<int>& perm)
{
    std::vector<bool> seen(perm.size());
    std::vector<int> parts;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        if (len) {
            parts.push_back(len);
        }
    }
    return Partition(parts);
}

int find(std::vector<int>& parent, int a)
{
    while (parent[static_cast<std::size_t>(a)] != a) {
        a = parent[static_cast<std::size_t>(a)];
    }
    return a;
}

// Walks every r-tuple of transpositions directly.
void walk(int d, int r_max, int depth, std::vector<int>& perm, std::vector<std::pair<int, int>>& used, Brute& out)
{
    std::vector<int> parent(static_cast<std::size_t>(d));
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [a, b] : used) {
        parent[static_cast<std::size_t>(find(parent, a))] = find(parent, b);
    }
    int roots = 0;
    for (int i = 0; i < d; ++i) {
        roots += find(parent, i) == i;
    }
    if (roots == 1) {
        out.connected[{depth, cycle_type(perm)}] += 1;
    }
    if (depth == r_max) {
        return;
    }
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
            used.emplace_back(a, b);
            walk(d, r_max, depth + 1, perm, used, out);
            used.pop_back();
            std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        }
    }
}

}  // namespace

TEST_CASE("factorization counts")
{
    const auto counts = oracle::count_factorizations(3, 4);
    CHECK(counts.at({4, Partition({1, 1, 1})}) == 27);
    CHECK(counts.at({0, Partition({1, 1, 1})}) == 1);
    CHECK(counts.at({1, Partition({3})}) == 0);
    CHECK(counts.at({2, Partition({3})}) == 6);
    // every r-tuple lands somewhere
    for (int r = 0; r <= 4; ++r) {
        Integer total = 0;
        for (const auto& [key, n] : counts) {
            if (key.first == r) {
                total += n;
            }
        }
        CHECK(total == power(Rational(3), r).get_num());
    }
}

TEST_CASE("connected numbers match a direct walk over transposition tuples")
{
    for (int d = 1; d <= 4; ++d) {
        const int r_max = d <= 3 ? 7 : 6;
        Brute brute;
        std::vector<int> perm(static_cast<std::size_t>(d));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::pair<int, int>> used;
        walk(d, r_max, 0, perm, used, brute);
        const HurwitzTable table = oracle::connected_hurwitz_upto_r(d, r_max);
        for (const auto& [key, entry] : table.entries()) {
            if (key.alpha.size() != d) {
                continue;
            }
            auto it = brute.connected.find({entry.r, key.alpha});
            const Integer n = it == brute.connected.end() ? Integer(0) : it->second;
            CHECK_MESSAGE(entry.value == Rational(n) / Rational(factorial(d)),
                          "g=" << key.g << " alpha=" << key.alpha.to_string());
        }
    }
}

TEST_CASE("frozen small values")
{
    const HurwitzTable t = oracle::connected_hurwitz(4, 1);
    CHECK(t.at(0, Partition({1, 1, 1})) == 4);
    CHECK(t.at(0, Partition({2})) == rational(1, 2));
    CHECK(t.at(0, Partition({3})) == 1);
    CHECK(t.at(1, Partition({1, 1})) == rational(1, 2));
    CHECK(t.at(0, Partition({1})) == 1);
    CHECK(t.at(1, Partition({1})) == 0);
    CHECK(t.method() == "oracle");
}

TEST_CASE("budget limits")
{
    Budget small;
    small.oracle_max_degree = 3;
    CHECK_THROWS_AS(oracle::connected_hurwitz(4, 0, small), BudgetExceeded);
    Budget tiny;
    tiny.memory_mb = 1;
    tiny.oracle_max_degree = 9;
    // 9! permutations need far more than 1 MB; the check fires before allocating
    CHECK_THROWS_AS(oracle::count_factorizations(9, 12, tiny), BudgetExceeded);
}

TEST_CASE("memory budget from the environment")
{
    ::setenv(kMemoryBudgetVariable, "64", 1);
    CHECK(Budget::from_environment().memory_mb == 64);
    ::setenv(kMemoryBudgetVariable, "lots", 1);
    CHECK_THROWS_AS(Budget::from_environment(), FormatError);
    ::unsetenv(kMemoryBudgetVariable);
    CHECK(Budget::from_environment().memory_mb == Budget().memory_mb);
}
