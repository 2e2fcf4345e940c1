#include "hurwitzkit/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitzkit/series.hpp"

namespace hurwitzkit::oracle {

PermutationIndex::PermutationIndex(int d) : d_(d), radix_(static_cast<std::size_t>(std::max(d, 0)))
{
    if (d < 1) {
        throw PreconditionError("PermutationIndex: degree must be >= 1");
    }
    size_ = 1;
    for (int i = d - 1; i >= 0; --i) {
        radix_[static_cast<std::size_t>(i)] = size_;
        size_ *= static_cast<std::size_t>(d - i);
    }
}

std::size_t PermutationIndex::rank(const std::vector<int>& perm) const
{
    std::size_t out = 0;
    for (int i = 0; i < d_; ++i) {
        std::size_t smaller = 0;
        for (int j = i + 1; j < d_; ++j) {
            if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)]) {
                ++smaller;
            }
        }
        out += smaller * radix_[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<int> PermutationIndex::unrank(std::size_t rank) const
{
    std::vector<int> pool(static_cast<std::size_t>(d_));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(pool.size());
    for (int i = 0; i < d_; ++i) {
        std::size_t digit = rank / radix_[static_cast<std::size_t>(i)];
        rank %= radix_[static_cast<std::size_t>(i)];
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

Partition PermutationIndex::cycle_type(std::size_t rank) const
{
    auto perm = unrank(rank);
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

namespace {

void check_budget(int d, int r_max, const Budget& budget)
{
    if (d > budget.oracle_max_degree) {
        throw BudgetExceeded("oracle degree " + std::to_string(d) + " exceeds the budget of " +
                             std::to_string(budget.oracle_max_degree));
    }
    if (r_max > budget.oracle_max_steps) {
        throw BudgetExceeded("oracle needs " + std::to_string(r_max) + " transpositions, budget is " +
                             std::to_string(budget.oracle_max_steps));
    }
    double perms = 1;
    for (int i = 2; i <= d; ++i) {
        perms *= i;
    }
    const double transpositions = d * (d - 1) / 2.0;
    // two count vectors of mpz plus the multiplication table
    budget.require_memory(perms * (2 * 48.0 + transpositions * sizeof(std::uint32_t)), "oracle group-algebra vector");
}

}  // namespace

std::map<FactorizationKey, Integer> count_factorizations(int d, int r_max, const Budget& budget)
{
    if (r_max < 0) {
        throw PreconditionError("count_factorizations: r_max must be >= 0");
    }
    check_budget(d, r_max, budget);
    PermutationIndex index(d);
    const std::size_t n = index.size();

    std::vector<std::pair<int, int>> transpositions;
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            transpositions.emplace_back(a, b);
        }
    }

    // times[k * T + t] = rank of (transposition t) composed after permutation k
    const std::size_t t_count = transpositions.size();
    std::vector<std::uint32_t> times(n * t_count);
    std::vector<Partition> types(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto perm = index.unrank(k);
        types[k] = index.cycle_type(k);
        for (std::size_t t = 0; t < t_count; ++t) {
            auto [a, b] = transpositions[t];
            auto composed = perm;
            for (int& v : composed) {
                if (v == a) {
                    v = b;
                } else if (v == b) {
                    v = a;
                }
            }
            times[k * t_count + t] = static_cast<std::uint32_t>(index.rank(composed));
        }
    }

    std::map<FactorizationKey, Integer> out;
    auto classes = enumerate(d);
    auto record = [&](int r, const GroupAlgebraVector& v) {
        for (const auto& alpha : classes) {
            out[{r, alpha}] = 0;
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (v.counts[k] != 0) {
                out[{r, types[k]}] += v.counts[k];
            }
        }
    };

    GroupAlgebraVector current{d, std::vector<Integer>(n)};
    current.counts[index.rank([&] {
        std::vector<int> id(static_cast<std::size_t>(d));
        std::iota(id.begin(), id.end(), 0);
        return id;
    }())] = 1;
    record(0, current);
    GroupAlgebraVector next{d, std::vector<Integer>(n)};
    for (int r = 1; r <= r_max; ++r) {
        for (auto& c : next.counts) {
            c = 0;
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (current.counts[k] == 0) {
                continue;
            }
            for (std::size_t t = 0; t < t_count; ++t) {
                next.counts[times[k * t_count + t]] += current.counts[k];
            }
        }
        std::swap(current, next);
        record(r, current);
    }
    return out;
}

namespace {

algebra::Series all_covers_series(int d_max, int r_max, const Budget& budget)
{
    std::vector<std::string> names{"x", "u"};
    for (auto& p : algebra::part_variables(d_max)) {
        names.push_back(p);
    }
    auto space = algebra::make_space(names, {{"x", {{"x", 1}}, d_max}, {"u", {{"u", 1}}, r_max}});
    const auto& vars = space->vars();
    algebra::Series e = algebra::Series::constant(space, 1);
    for (int d = 1; d <= d_max; ++d) {
        auto counts = count_factorizations(d, r_max, budget);
        const Integer d_fact = factorial(d);
        for (const auto& [key, n] : counts) {
            if (n == 0) {
                continue;
            }
            const auto& [r, alpha] = key;
            algebra::Monomial m;
            m.exps[vars.index("x")] = static_cast<std::int8_t>(d);
            m.exps[vars.index("u")] = static_cast<std::int8_t>(r);
            for (int part : alpha.parts()) {
                m.exps[vars.index("p" + std::to_string(part))] += 1;
            }
            e.add_term(m, Rational(n) / Rational(d_fact * factorial(r)));
        }
    }
    return e;
}

}  // namespace

HurwitzTable connected_hurwitz_upto_r(int d_max, int r_max, const Budget& budget)
{
    if (d_max < 1) {
        throw PreconditionError("connected_hurwitz: d_max must be >= 1");
    }
    auto connected = algebra::log(all_covers_series(d_max, r_max, budget), 0);
    return table_from_connected_series(connected, d_max, r_max / 2 + 1, "oracle");
}

HurwitzTable connected_hurwitz(int d_max, int g_max, const Budget& budget)
{
    if (g_max < 0) {
        throw PreconditionError("connected_hurwitz: g_max must be >= 0");
    }
    const int r_max = 2 * d_max + 2 * g_max - 2;
    return connected_hurwitz_upto_r(d_max, r_max, budget).restricted(d_max, g_max);
}

}  // namespace hurwitzkit::oracle
