#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hurwitzkit/rational.hpp"

namespace hurwitzkit {

/// A partition, stored with parts in non-decreasing order.
class Partition {
public:
    Partition() = default;
    /// Any order accepted; parts must be positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (1^d)
    static Partition ones(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

    std::span<const int> parts() const { return parts_; }
    int size() const { return size_; }  // d
    int length() const { return static_cast<int>(parts_.size()); }  // m
    int multiplicity(int part) const;
    int min_part() const { return parts_.empty() ? 0 : parts_.front(); }
    int max_part() const { return parts_.empty() ? 0 : parts_.back(); }

    std::string to_string() const;  // "1,1,2"

    auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Partition with every part >= 2.
class ThetaPartition {
public:
    explicit ThetaPartition(Partition p);
    const Partition& partition() const { return p_; }
    operator const Partition&() const { return p_; }
    auto operator<=>(const ThetaPartition&) const = default;

private:
    Partition p_;
};

/// prod_j (multiplicity of j)!
Integer aut_count(const Partition& p);

/// Number of permutations of cycle type p: d! / (prod parts * prod mult!).
Integer class_size(const Partition& p);

struct PartitionConstraint {
    enum class Kind { all, min_part_2, min_part_2_with_length } kind = Kind::all;
    int length = 0;

    static PartitionConstraint all() { return {Kind::all, 0}; }
    static PartitionConstraint min_part_2() { return {Kind::min_part_2, 0}; }
    static PartitionConstraint min_part_2_with_length(int l) { return {Kind::min_part_2_with_length, l}; }
};

/// All partitions of d satisfying the constraint, sorted lexicographically.
std::vector<Partition> enumerate(int d, PartitionConstraint constraint = PartitionConstraint::all());

/// p(d) by Euler's pentagonal recurrence.
Integer partition_number(int d);

/// Index set of the genus-g structure constants: theta |= n with
/// l(theta) = e - 2(g-1), for 2g-1 <= e <= 5g-5 and e-1 <= n <= e+g-1.
std::vector<ThetaPartition> ansatz_thetas(int g);

/// lambda index attached to theta in genus g: sum(1 - theta_j) + 3g - 3.
int lambda_index(int g, const Partition& theta);

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);
/// Parses "1,1,2" (any order, whitespace ignored).
Partition parse_partition(const std::string& text);

}  // namespace hurwitzkit
