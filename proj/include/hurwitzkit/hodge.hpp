#pragma once

// Descendant and Hodge integrals <tau_theta_1 ... tau_theta_n lambda_k>_g.
// Non-primitive brackets are reduced by the string and dilaton equations to
// the genus-0 multinomial, the genus-1 bases, or primitive brackets (every
// theta_i >= 2) stored in a HodgeTable.

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hurwitzkit/partitions.hpp"
#include "hurwitzkit/rational.hpp"

namespace hurwitzkit::hodge {

struct HodgeKey {
    int g = 0;
    std::vector<int> theta;  // sorted, entries >= 0
    int k = 0;

    HodgeKey() = default;
    HodgeKey(int g, std::vector<int> theta, int k);

    int n() const { return static_cast<int>(theta.size()); }
    int psi_degree() const;
    std::string to_string() const;  // "<tau_0 tau_1 lambda_1>_1"
    auto operator<=>(const HodgeKey&) const = default;
};

enum class Validity { valid, zero_dimension, zero_unstable, zero_lambda_range };

std::string to_string(Validity v);

/// 3g-3+n = sum theta + k, 2g-2+n > 0, 0 <= k <= g (checked in that order).
Validity validity_gate(const HodgeKey& key);

enum class Source { base, genus0_formula, fitted, reduced };

std::string to_string(Source s);

/// A primitive bracket required by a reduction is not in the table.
class MissingPrimitive : public Error {
public:
    explicit MissingPrimitive(HodgeKey key);
    const HodgeKey& key() const { return key_; }

private:
    HodgeKey key_;
};

struct HodgeValue {
    Rational value;
    Source source = Source::reduced;
};

/// Primitive brackets plus memoised reductions. Reads may run concurrently;
/// writes take an exclusive lock.
class HodgeTable {
public:
    HodgeTable() = default;
    HodgeTable(const HodgeTable& other);
    HodgeTable& operator=(const HodgeTable& other);

    /// Write-once: re-inserting a key with a different value throws PreconditionError.
    void set(const HodgeKey& key, const Rational& value, Source source);
    std::optional<HodgeValue> find(const HodgeKey& key) const;
    std::map<HodgeKey, HodgeValue> entries() const;
    std::size_t size() const;

    /// Records sorted by key: {"g", "theta", "k", "value", "source"}.
    nlohmann::json to_json() const;
    static HodgeTable from_json(const nlohmann::json& j);

private:
    mutable std::shared_mutex mutex_;
    std::map<HodgeKey, HodgeValue> values_;
};

enum class Strategy { string_first, dilaton_first };

struct EvalOptions {
    Strategy strategy = Strategy::string_first;
    /// Use the multinomial closed form in genus 0; otherwise reduce by string.
    bool genus0_closed_form = true;
    /// Store reduced values in the table.
    bool memoize = true;
};

/// Value of the bracket; 0 when the validity gate fails.
Rational evaluate(const HodgeKey& key, HodgeTable& table, const EvalOptions& options = {});
/// Same, without writing to the table.
Rational evaluate(const HodgeKey& key, const HodgeTable& table, EvalOptions options = {});

/// (n-3)! / prod theta_i! for a valid genus-0 key.
Rational genus0_multinomial(const std::vector<int>& theta);

/// H^g_alpha from the ELSV formula. Throws PreconditionError for (g, l(alpha)) in {(0,1), (0,2)}.
Rational elsv_hurwitz(int g, const Partition& alpha, const HodgeTable& table);

/// Primitive keys (every theta_i >= 2) of genus g >= 2 allowed by the validity gate.
std::vector<HodgeKey> primitive_keys(int g);

}  // namespace hurwitzkit::hodge
