#include "hurwitzkit/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hurwitzkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p <= 0) {
            throw PreconditionError("partition parts must be positive");
        }
    }
    std::sort(parts_.begin(), parts_.end());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

ThetaPartition::ThetaPartition(Partition p) : p_(std::move(p))
{
    if (p_.length() > 0 && p_.min_part() < 2) {
        throw PreconditionError("theta partition needs every part >= 2, got (" + p_.to_string() + ")");
    }
}

Integer aut_count(const Partition& p)
{
    Integer out = 1;
    auto parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        out *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return out;
}

Integer class_size(const Partition& p)
{
    Integer denom = aut_count(p);
    for (int part : p.parts()) {
        denom *= part;
    }
    return factorial(p.size()) / denom;
}

namespace {

void generate(int remaining, int min_part, std::vector<int>& current, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = min_part; part <= remaining; ++part) {
        // the rest must still be splittable into parts >= part
        if (remaining - part != 0 && remaining - part < part) {
            continue;
        }
        current.push_back(part);
        generate(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate(int d, PartitionConstraint constraint)
{
    if (d < 0) {
        throw PreconditionError("enumerate: negative size");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    int min_part = constraint.kind == PartitionConstraint::Kind::all ? 1 : 2;
    generate(d, min_part, current, out);
    if (constraint.kind == PartitionConstraint::Kind::min_part_2_with_length) {
        std::erase_if(out, [&](const Partition& p) { return p.length() != constraint.length; });
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer partition_number(int d)
{
    std::vector<Integer> p(static_cast<std::size_t>(d) + 1);
    p[0] = 1;
    for (int n = 1; n <= d; ++n) {
        Integer acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) {
                break;
            }
            const Integer& a = p[static_cast<std::size_t>(n - g1)];
            if (k % 2) {
                acc += a;
            } else {
                acc -= a;
            }
            if (g2 <= n) {
                const Integer& b = p[static_cast<std::size_t>(n - g2)];
                if (k % 2) {
                    acc += b;
                } else {
                    acc -= b;
                }
            }
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p[static_cast<std::size_t>(d)];
}

std::vector<ThetaPartition> ansatz_thetas(int g)
{
    if (g < 2) {
        throw PreconditionError("ansatz_thetas: genus must be >= 2");
    }
    std::vector<ThetaPartition> out;
    for (int e = 2 * g - 1; e <= 5 * g - 5; ++e) {
        for (int n = e - 1; n <= e + g - 1; ++n) {
            for (auto& p : enumerate(n, PartitionConstraint::min_part_2_with_length(e - 2 * (g - 1)))) {
                out.emplace_back(std::move(p));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int lambda_index(int g, const Partition& theta)
{
    int k = 3 * g - 3;
    for (int t : theta.parts()) {
        k += 1 - t;
    }
    return k;
}

nlohmann::json to_json(const Partition& p)
{
    return nlohmann::json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

Partition partition_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) {
        throw FormatError("partition JSON must be an array of integers");
    }
    return Partition(j.get<std::vector<int>>());
}

Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) {
            continue;
        }
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) {
                throw FormatError("bad partition entry '" + item + "'");
            }
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw FormatError("bad partition entry '" + item + "'");
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const PreconditionError& e) {
        throw FormatError(e.what());
    }
}

}  // namespace hurwitzkit
