#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hurwitzkit/partitions.hpp"
#include "hurwitzkit/rational.hpp"
#include "hurwitzkit/series.hpp"

namespace hurwitzkit {

/// Number of simple branch points of a genus-g cover with profile alpha over
/// infinity: r = d + l(alpha) + 2(g - 1).
int branch_points(int g, const Partition& alpha);

struct HurwitzKey {
    int g = 0;
    Partition alpha;
    auto operator<=>(const HurwitzKey&) const = default;
};

struct HurwitzEntry {
    Rational value;
    int r = 0;
};

/// Exact connected Hurwitz numbers H^g_alpha keyed by (g, alpha).
class HurwitzTable {
public:
    explicit HurwitzTable(std::string method = "") : method_(std::move(method)) {}

    const std::string& method() const { return method_; }
    void set(int g, const Partition& alpha, const Rational& value);
    bool contains(int g, const Partition& alpha) const;
    /// Throws PreconditionError if the key is outside the table.
    const Rational& at(int g, const Partition& alpha) const;
    std::optional<Rational> find(int g, const Partition& alpha) const;
    /// H^g_(1^d)
    const Rational& simple(int g, int d) const { return at(g, Partition::ones(d)); }

    const std::map<HurwitzKey, HurwitzEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    int max_degree() const;
    int max_genus() const;

    /// Entries with d <= d_max, g <= g_max.
    HurwitzTable restricted(int d_max, int g_max) const;

    /// H_g(x, p) = sum H^g_alpha / r! p_alpha x^d over the stored entries with
    /// parts <= number of p-variables in the space; space needs "x" and "p1".."pN".
    algebra::Series genus_series(int g, const algebra::SpacePtr& space) const;

    /// One record per entry, sorted by (g, alpha):
    /// {"g", "alpha", "r", "value", "method"}.
    nlohmann::json to_json() const;
    /// CSV with columns g,alpha,r,value.
    std::string to_csv() const;

private:
    std::string method_;
    std::map<HurwitzKey, HurwitzEntry> entries_;
};

/// First key where the two tables disagree on their common keys; nullopt if none.
std::optional<HurwitzKey> first_disagreement(const HurwitzTable& a, const HurwitzTable& b);

/// Reads connected Hurwitz numbers off log of an all-covers series in the
/// variables x, u, p1..pN (and optionally y). Each coefficient of
/// p_alpha x^d u^r (y^(g-1)) contributes H^g_alpha = r! * coefficient for
/// g <= g_max. Coefficients forbidden by parity must vanish.
HurwitzTable table_from_connected_series(const algebra::Series& connected, int d_max, int g_max,
                                         std::string method);

}  // namespace hurwitzkit
