#include "hurwitzkit/golden.hpp"

#include <nlohmann/json.hpp>

namespace hurwitzkit::golden {

const nlohmann::json& data()
{
    static const nlohmann::json parsed = nlohmann::json::parse(
#include "golden_data.inc"
    );
    return parsed;
}

std::vector<simple::RecurrenceSpec> recurrences()
{
    std::vector<simple::RecurrenceSpec> out;
    for (const auto& j : data().at("recurrences")) {
        out.push_back(simple::RecurrenceSpec::from_json(j));
    }
    return out;
}

simple::RecurrenceSpec recurrence(const std::string& name)
{
    for (auto& spec : recurrences()) {
        if (spec.name == name) {
            return spec;
        }
    }
    throw PreconditionError("no pinned recurrence named '" + name + "'");
}

std::vector<simple::DifferentialIdentity> identities()
{
    std::vector<simple::DifferentialIdentity> out;
    for (const auto& j : data().at("differential_identities")) {
        out.push_back(simple::DifferentialIdentity::from_json(j));
    }
    return out;
}

simple::DifferentialIdentity identity(const std::string& name)
{
    for (auto& id : identities()) {
        if (id.name == name) {
            return id;
        }
    }
    throw PreconditionError("no pinned identity named '" + name + "'");
}

simple::WExpr w_series(int g)
{
    const auto& table = data().at("w_series");
    const std::string key = std::to_string(g);
    if (!table.contains(key)) {
        throw PreconditionError("no pinned w-series for genus " + key);
    }
    simple::WExpr out;
    for (const auto& t : table.at(key)) {
        out += simple::w_power_over(t.at("l").get<int>(), t.at("e").get<int>()) *
               parse_rational(t.at("c").get<std::string>());
    }
    return out;
}

std::map<int, Rational> a_form_coefficients()
{
    std::map<int, Rational> out;
    for (const auto& [k, v] : data().at("a_form").at("coefficients").items()) {
        out[std::stoi(k)] = parse_rational(v.get<std::string>());
    }
    return out;
}

std::vector<Rational> p3_polynomial()
{
    std::vector<Rational> out;
    for (const auto& c : data().at("p_form").at("polynomial")) {
        out.push_back(parse_rational(c.get<std::string>()));
    }
    return out;
}

}  // namespace hurwitzkit::golden
