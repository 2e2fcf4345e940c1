#include "hurwitzkit/hodge.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <nlohmann/json.hpp>

namespace hurwitzkit::hodge {

HodgeKey::HodgeKey(int g_, std::vector<int> theta_, int k_) : g(g_), theta(std::move(theta_)), k(k_)
{
    if (g < 0) {
        throw PreconditionError("HodgeKey: negative genus");
    }
    for (int t : theta) {
        if (t < 0) {
            throw PreconditionError("HodgeKey: negative psi exponent");
        }
    }
    std::sort(theta.begin(), theta.end());
}

int HodgeKey::psi_degree() const
{
    return std::accumulate(theta.begin(), theta.end(), 0);
}

std::string HodgeKey::to_string() const
{
    std::string out = "<";
    for (std::size_t i = 0; i < theta.size(); ++i) {
        out += (i ? " tau_" : "tau_") + std::to_string(theta[i]);
    }
    if (k > 0) {
        out += (theta.empty() ? "lambda_" : " lambda_") + std::to_string(k);
    }
    return out + ">_" + std::to_string(g);
}

std::string to_string(Validity v)
{
    switch (v) {
    case Validity::valid:
        return "valid";
    case Validity::zero_dimension:
        return "zero_dimension";
    case Validity::zero_unstable:
        return "zero_unstable";
    case Validity::zero_lambda_range:
        return "zero_lambda_range";
    }
    return "unknown";
}

Validity validity_gate(const HodgeKey& key)
{
    if (3 * key.g - 3 + key.n() != key.psi_degree() + key.k) {
        return Validity::zero_dimension;
    }
    if (2 * key.g - 2 + key.n() <= 0) {
        return Validity::zero_unstable;
    }
    if (key.k < 0 || key.k > key.g) {
        return Validity::zero_lambda_range;
    }
    return Validity::valid;
}

std::string to_string(Source s)
{
    switch (s) {
    case Source::base:
        return "base";
    case Source::genus0_formula:
        return "genus0_formula";
    case Source::fitted:
        return "fitted";
    case Source::reduced:
        return "reduced";
    }
    return "unknown";
}

namespace {

Source source_from_string(const std::string& s)
{
    for (Source src : {Source::base, Source::genus0_formula, Source::fitted, Source::reduced}) {
        if (to_string(src) == s) {
            return src;
        }
    }
    throw FormatError("unknown Hodge value source '" + s + "'");
}

}  // namespace

MissingPrimitive::MissingPrimitive(HodgeKey key)
    : Error("missing primitive bracket " + key.to_string()), key_(std::move(key))
{
}

HodgeTable::HodgeTable(const HodgeTable& other)
{
    std::shared_lock lock(other.mutex_);
    values_ = other.values_;
}

HodgeTable& HodgeTable::operator=(const HodgeTable& other)
{
    if (this != &other) {
        std::map<HodgeKey, HodgeValue> copy;
        {
            std::shared_lock lock(other.mutex_);
            copy = other.values_;
        }
        std::unique_lock lock(mutex_);
        values_ = std::move(copy);
    }
    return *this;
}

void HodgeTable::set(const HodgeKey& key, const Rational& value, Source source)
{
    std::unique_lock lock(mutex_);
    auto [it, inserted] = values_.emplace(key, HodgeValue{value, source});
    if (!inserted && it->second.value != value) {
        throw PreconditionError("HodgeTable: conflicting value for " + key.to_string() + ": " +
                                hurwitzkit::to_string(it->second.value) + " vs " + hurwitzkit::to_string(value));
    }
}

std::optional<HodgeValue> HodgeTable::find(const HodgeKey& key) const
{
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::map<HodgeKey, HodgeValue> HodgeTable::entries() const
{
    std::shared_lock lock(mutex_);
    return values_;
}

std::size_t HodgeTable::size() const
{
    std::shared_lock lock(mutex_);
    return values_.size();
}

nlohmann::json HodgeTable::to_json() const
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, v] : entries()) {
        out.push_back({{"g", key.g},
                       {"theta", key.theta},
                       {"k", key.k},
                       {"value", hurwitzkit::to_string(v.value)},
                       {"source", to_string(v.source)}});
    }
    return out;
}

HodgeTable HodgeTable::from_json(const nlohmann::json& j)
{
    if (!j.is_array()) {
        throw FormatError("Hodge table JSON must be an array");
    }
    HodgeTable out;
    try {
        for (const auto& rec : j) {
            HodgeKey key(rec.at("g").get<int>(), rec.at("theta").get<std::vector<int>>(), rec.at("k").get<int>());
            out.set(key, parse_rational(rec.at("value").get<std::string>()),
                    source_from_string(rec.at("source").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed Hodge table record: ") + e.what());
    }
    return out;
}

Rational genus0_multinomial(const std::vector<int>& theta)
{
    const int n = static_cast<int>(theta.size());
    Integer denom = 1;
    for (int t : theta) {
        denom *= factorial(t);
    }
    return Rational(factorial(n - 3)) / Rational(denom);
}

namespace {

const HodgeKey& tau0_cubed()
{
    static const HodgeKey key(0, {0, 0, 0}, 0);
    return key;
}

const HodgeKey& tau1_genus1()
{
    static const HodgeKey key(1, {1}, 0);
    return key;
}

const HodgeKey& tau0_lambda1_genus1()
{
    static const HodgeKey key(1, {0}, 1);
    return key;
}

std::optional<Rational> base_value(const HodgeKey& key)
{
    if (key == tau0_cubed()) {
        return Rational(1);
    }
    if (key == tau1_genus1() || key == tau0_lambda1_genus1()) {
        return Rational(1, 24);
    }
    return std::nullopt;
}

HodgeKey without_first(const HodgeKey& key, int value)
{
    std::vector<int> rest = key.theta;
    rest.erase(std::find(rest.begin(), rest.end(), value));
    return HodgeKey(key.g, std::move(rest), key.k);
}

struct Evaluator {
    const HodgeTable& table;
    HodgeTable* writable;
    EvalOptions options;

    Rational string_step(const HodgeKey& key)
    {
        HodgeKey rest = without_first(key, 0);
        Rational total = 0;
        for (std::size_t j = 0; j < rest.theta.size(); ++j) {
            if (rest.theta[j] == 0) {
                continue;
            }
            std::vector<int> lowered = rest.theta;
            lowered[j] -= 1;
            total += run(HodgeKey(key.g, std::move(lowered), key.k));
        }
        return total;
    }

    Rational dilaton_step(const HodgeKey& key)
    {
        HodgeKey rest = without_first(key, 1);
        return Rational(2 * key.g - 2 + rest.n()) * run(rest);
    }

    Rational run(const HodgeKey& key)
    {
        if (validity_gate(key) != Validity::valid) {
            return 0;
        }
        if (auto b = base_value(key)) {
            return *b;
        }
        if (key.g == 0 && options.genus0_closed_form) {
            return genus0_multinomial(key.theta);
        }
        if (auto cached = table.find(key)) {
            return cached->value;
        }
        const bool has0 = std::find(key.theta.begin(), key.theta.end(), 0) != key.theta.end();
        const bool has1 = std::find(key.theta.begin(), key.theta.end(), 1) != key.theta.end();
        Rational value;
        if (has0 && (options.strategy == Strategy::string_first || !has1)) {
            value = string_step(key);
        } else if (has1) {
            value = dilaton_step(key);
        } else {
            throw MissingPrimitive(key);
        }
        if (writable && options.memoize) {
            writable->set(key, value, Source::reduced);
        }
        return value;
    }
};

}  // namespace

Rational evaluate(const HodgeKey& key, HodgeTable& table, const EvalOptions& options)
{
    Evaluator ev{table, &table, options};
    return ev.run(key);
}

Rational evaluate(const HodgeKey& key, const HodgeTable& table, EvalOptions options)
{
    Evaluator ev{table, nullptr, options};
    return ev.run(key);
}

namespace {

void compositions(int total, int slots, std::vector<int>& current, const std::function<void()>& visit)
{
    if (slots == 0) {
        if (total == 0) {
            visit();
        }
        return;
    }
    for (int v = 0; v <= total; ++v) {
        current.push_back(v);
        compositions(total - v, slots - 1, current, visit);
        current.pop_back();
    }
}

}  // namespace

Rational elsv_hurwitz(int g, const Partition& alpha, const HodgeTable& table)
{
    const int m = alpha.length();
    if (g == 0 && m < 3) {
        throw PreconditionError("elsv_hurwitz: the formula does not apply to genus 0 with fewer than 3 parts");
    }
    if (m == 0) {
        throw PreconditionError("elsv_hurwitz: empty partition");
    }
    const int r = alpha.size() + m + 2 * (g - 1);
    Rational prefactor = Rational(factorial(r)) / Rational(aut_count(alpha));
    for (int a : alpha.parts()) {
        prefactor *= power(Rational(a), a) / Rational(factorial(a));
    }
    // a local copy keeps memoised reductions out of the caller's table
    HodgeTable scratch(table);
    Rational sum = 0;
    std::vector<int> b;
    for (int k = 0; k <= g; ++k) {
        const int total = 3 * g - 3 + m - k;
        if (total < 0) {
            continue;
        }
        compositions(total, m, b, [&] {
            Rational bracket = evaluate(HodgeKey(g, b, k), scratch);
            if (bracket == 0) {
                return;
            }
            Rational term = bracket;
            for (int i = 0; i < m; ++i) {
                term *= power(Rational(alpha.parts()[static_cast<std::size_t>(i)]), b[static_cast<std::size_t>(i)]);
            }
            sum += k % 2 ? -term : term;
        });
    }
    return prefactor * sum;
}

std::vector<HodgeKey> primitive_keys(int g)
{
    if (g < 2) {
        throw PreconditionError("primitive_keys: genus must be >= 2");
    }
    std::vector<HodgeKey> out;
    for (int k = 0; k <= g; ++k) {
        for (int n = 1; n <= 3 * g - 3 - k; ++n) {
            const int total = 3 * g - 3 + n - k;
            for (const auto& p : enumerate(total, PartitionConstraint::min_part_2_with_length(n))) {
                out.emplace_back(g, std::vector<int>(p.parts().begin(), p.parts().end()), k);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hurwitzkit::hodge
