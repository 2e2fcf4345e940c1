#include "hurwitzkit/hurwitz_table.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hurwitzkit {

int branch_points(int g, const Partition& alpha)
{
    return alpha.size() + alpha.length() + 2 * (g - 1);
}

void HurwitzTable::set(int g, const Partition& alpha, const Rational& value)
{
    const int r = branch_points(g, alpha);
    if (g < 0 || r < 0) {
        throw PreconditionError("Hurwitz entry with negative genus or branch-point count");
    }
    if (value < 0) {
        throw PreconditionError("Hurwitz numbers are non-negative");
    }
    entries_[HurwitzKey{g, alpha}] = HurwitzEntry{value, r};
}

bool HurwitzTable::contains(int g, const Partition& alpha) const
{
    return entries_.count(HurwitzKey{g, alpha}) != 0;
}

const Rational& HurwitzTable::at(int g, const Partition& alpha) const
{
    auto it = entries_.find(HurwitzKey{g, alpha});
    if (it == entries_.end()) {
        throw PreconditionError("Hurwitz table has no entry for g=" + std::to_string(g) + ", alpha=(" +
                                alpha.to_string() + ")");
    }
    return it->second.value;
}

std::optional<Rational> HurwitzTable::find(int g, const Partition& alpha) const
{
    auto it = entries_.find(HurwitzKey{g, alpha});
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second.value;
}

int HurwitzTable::max_degree() const
{
    int d = 0;
    for (const auto& [key, entry] : entries_) {
        d = std::max(d, key.alpha.size());
    }
    return d;
}

int HurwitzTable::max_genus() const
{
    int g = 0;
    for (const auto& [key, entry] : entries_) {
        g = std::max(g, key.g);
    }
    return g;
}

HurwitzTable HurwitzTable::restricted(int d_max, int g_max) const
{
    HurwitzTable out(method_);
    for (const auto& [key, entry] : entries_) {
        if (key.alpha.size() <= d_max && key.g <= g_max) {
            out.entries_.emplace(key, entry);
        }
    }
    return out;
}

algebra::Series HurwitzTable::genus_series(int g, const algebra::SpacePtr& space) const
{
    const auto& vars = space->vars();
    const std::size_t x = vars.index("x");
    algebra::Series out(space);
    for (const auto& [key, entry] : entries_) {
        if (key.g != g || entry.value == 0) {
            continue;
        }
        algebra::Monomial m;
        m.exps[x] = static_cast<std::int8_t>(key.alpha.size());
        bool representable = true;
        for (int part : key.alpha.parts()) {
            auto v = vars.find("p" + std::to_string(part));
            if (!v) {
                representable = false;
                break;
            }
            m.exps[*v] += 1;
        }
        if (representable) {
            out.add_term(m, entry.value / Rational(factorial(entry.r)));
        }
    }
    return out;
}

nlohmann::json HurwitzTable::to_json() const
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, entry] : entries_) {
        out.push_back({{"g", key.g},
                       {"alpha", hurwitzkit::to_json(key.alpha)},
                       {"r", entry.r},
                       {"value", to_string(entry.value)},
                       {"method", method_}});
    }
    return out;
}

std::string HurwitzTable::to_csv() const
{
    std::ostringstream out;
    out << "g,alpha,r,value\n";
    for (const auto& [key, entry] : entries_) {
        out << key.g << ",\"" << key.alpha.to_string() << "\"," << entry.r << "," << to_string(entry.value) << "\n";
    }
    return out.str();
}

std::optional<HurwitzKey> first_disagreement(const HurwitzTable& a, const HurwitzTable& b)
{
    for (const auto& [key, entry] : a.entries()) {
        auto other = b.find(key.g, key.alpha);
        if (other && *other != entry.value) {
            return key;
        }
    }
    return std::nullopt;
}

HurwitzTable table_from_connected_series(const algebra::Series& connected, int d_max, int g_max,
                                         std::string method)
{
    const auto& space = *connected.space();
    const auto& vars = space.vars();
    const std::size_t x = vars.index("x");
    const std::size_t u = vars.index("u");
    const auto y = vars.find("y");
    const int r_cap = space.caps().at(space.cap_index("u")).max_degree;

    std::vector<std::pair<int, std::size_t>> part_vars;
    for (int part = 1;; ++part) {
        auto v = vars.find("p" + std::to_string(part));
        if (!v) {
            break;
        }
        part_vars.emplace_back(part, *v);
    }

    HurwitzTable table(std::move(method));
    for (int d = 1; d <= d_max; ++d) {
        for (const auto& alpha : enumerate(d)) {
            for (int g = 0; g <= g_max; ++g) {
                if (branch_points(g, alpha) <= r_cap) {
                    table.set(g, alpha, 0);
                }
            }
        }
    }

    for (const auto& [m, c] : connected.terms()) {
        const int d = m.exps[x];
        const int r = m.exps[u];
        std::vector<int> parts;
        for (auto [part, v] : part_vars) {
            for (int k = 0; k < m.exps[v]; ++k) {
                parts.push_back(part);
            }
        }
        Partition alpha(std::move(parts));
        if (alpha.size() != d) {
            throw Error("connected series has a monomial with |alpha| != d");
        }
        const int excess = r - d - alpha.length();
        if (excess % 2 != 0) {
            throw Error("parity-forbidden coefficient in connected series at alpha=(" + alpha.to_string() +
                        "), r=" + std::to_string(r));
        }
        const int g = excess / 2 + 1;
        if (g < 0) {
            throw Error("connected series has a term below genus 0");
        }
        if (y && m.exps[*y] != g - 1) {
            throw Error("genus marker disagrees with the Riemann-Hurwitz count");
        }
        if (d > d_max || g > g_max) {
            continue;
        }
        table.set(g, alpha, Rational(factorial(r)) * c);
    }
    return table;
}

}  // namespace hurwitzkit
