#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hurwitzkit/cutjoin.hpp"
#include "hurwitzkit/hodge.hpp"
#include "hurwitzkit/oracle.hpp"
#include "hurwitzkit/simple_hurwitz.hpp"
#include "hurwitzkit/suites.hpp"

namespace hurwitzkit::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

class MalformedFamily : public Error {
public:
    using Error::Error;
};

void emit(const JobConfig& config, const std::string& text)
{
    if (config.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(config.out);
    if (!file) {
        throw Error("cannot write " + config.out);
    }
    file << text;
}

void emit_json(const JobConfig& config, const nlohmann::json& j)
{
    if (config.format != "json") {
        throw UsageError("command '" + config.command + "' only supports --format json");
    }
    emit(config, j.dump(2) + "\n");
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw UsageError("bad list entry '" + item + "'");
            }
        } catch (const std::logic_error&) {
            throw UsageError("bad list entry '" + item + "'");
        }
    }
    return out;
}

Rational hurwitz_value(const JobConfig& c, const Partition& alpha, const Budget& budget)
{
    const int d = alpha.size();
    const std::string method = c.method.empty() ? "cutjoin" : c.method;
    if (method == "oracle") {
        return oracle::connected_hurwitz(d, c.g, budget).at(c.g, alpha);
    }
    if (method == "cutjoin") {
        return cutjoin::hurwitz_via_cutjoin(d, c.g, -1, budget).at(c.g, alpha);
    }
    if (method == "elsv") {
        hodge::HodgeTable table;
        if (c.g >= 2) {
            suites::fit_from_cutjoin(c.g, table, budget);
        }
        return hodge::elsv_hurwitz(c.g, alpha, table);
    }
    if (method == "closed-form") {
        if (alpha != Partition::ones(d)) {
            throw UsageError("closed-form covers simple numbers only (alpha = 1,...,1)");
        }
        if (c.g == 0) {
            return Rational(factorial(2 * d - 2)) / Rational(factorial(d)) * power(Rational(d), d - 3);
        }
        if (c.g == 1) {
            // D H~_1 is log-free: H^1_(1^d) = (2d)! [x^d] D H~_1 / d
            return simple::extract_coeff(simple::wexpr_for(1, 1), d) * Rational(factorial(2 * d)) / Rational(d);
        }
        hodge::HodgeTable table;
        return simple::closed_form_simple(suites::fit_from_cutjoin(c.g, table, budget).form, d);
    }
    throw UsageError("unknown method '" + method + "' (oracle, cutjoin, elsv, closed-form)");
}

int cmd_hurwitz(const JobConfig& c, const Budget& budget)
{
    if (c.alpha.empty()) {
        throw UsageError("hurwitz needs --alpha");
    }
    const Partition alpha = parse_partition(c.alpha);
    const Rational value = hurwitz_value(c, alpha, budget);
    const int r = branch_points(c.g, alpha);
    if (c.format == "csv") {
        emit(c, "g,alpha,r,value\n" + std::to_string(c.g) + ",\"" + alpha.to_string() + "\"," + std::to_string(r) +
                    "," + to_string(value) + "\n");
        return kOk;
    }
    emit_json(c, {{"g", c.g},
                  {"alpha", to_json(alpha)},
                  {"r", r},
                  {"value", to_string(value)},
                  {"method", c.method.empty() ? "cutjoin" : c.method}});
    return kOk;
}

int cmd_table(const JobConfig& c, const Budget& budget)
{
    const int d_max = c.d_max.value_or(5);
    const std::string method = c.method.empty() ? "cutjoin" : c.method;
    HurwitzTable table;
    if (c.r_max) {
        if (method == "oracle") {
            table = oracle::connected_hurwitz_upto_r(d_max, *c.r_max, budget);
        } else if (method == "cutjoin") {
            table = cutjoin::hurwitz_via_cutjoin_upto_r(d_max, *c.r_max, budget);
        } else {
            throw UsageError("table supports --method oracle or cutjoin");
        }
        if (c.g_max) {
            table = table.restricted(d_max, *c.g_max);
        }
    } else {
        const int g_max = c.g_max.value_or(1);
        if (method == "oracle") {
            table = oracle::connected_hurwitz(d_max, g_max, budget);
        } else if (method == "cutjoin") {
            table = cutjoin::hurwitz_via_cutjoin(d_max, g_max, -1, budget);
        } else {
            throw UsageError("table supports --method oracle or cutjoin");
        }
    }
    if (c.format == "csv") {
        emit(c, table.to_csv());
    } else {
        emit_json(c, table.to_json());
    }
    return kOk;
}

int cmd_fit(const JobConfig& c, const Budget& budget)
{
    if (c.g < 2) {
        throw UsageError("fit needs --g >= 2");
    }
    const int depth = c.d_max.value_or(suites::default_fit_depth(c.g));
    const HurwitzTable hurwitz = cutjoin::hurwitz_via_cutjoin(depth, c.g, -1, budget);
    hodge::HodgeTable table;
    const auto fit = ansatz::fit_constants(c.g, hurwitz, depth, table);
    emit_json(c, {{"form", fit.form.to_json()}, {"report", fit.report.to_json()}, {"primitives", table.to_json()}});
    return kOk;
}

int cmd_hodge(const JobConfig& c, const Budget& budget)
{
    const hodge::HodgeKey key(c.g, parse_int_list(c.theta), c.k);
    hodge::HodgeTable table;
    Rational value;
    try {
        value = hodge::evaluate(key, table);
    } catch (const hodge::MissingPrimitive&) {
        suites::fit_from_cutjoin(c.g, table, budget);
        value = hodge::evaluate(key, table);
    }
    emit_json(c, {{"bracket", key.to_string()},
                  {"g", key.g},
                  {"theta", key.theta},
                  {"k", key.k},
                  {"value", to_string(value)}});
    return kOk;
}

int cmd_verify(const JobConfig& c, const Budget& budget)
{
    std::vector<std::string> names;
    if (c.suite == "all") {
        names = suites::suite_names();
    } else {
        names.push_back(c.suite);
    }
    suites::Options options{c.d_max.value_or(-1), c.r_max.value_or(-1), budget};
    nlohmann::json reports = nlohmann::json::array();
    bool passed = true;
    for (const auto& name : names) {
        if (std::find(suites::suite_names().begin(), suites::suite_names().end(), name) ==
            suites::suite_names().end()) {
            throw UsageError("unknown suite '" + name + "'");
        }
        const auto report = suites::run_suite(name, options);
        passed = passed && report.passed();
        reports.push_back(report.to_json());
    }
    emit_json(c, {{"status", passed ? "pass" : "fail"}, {"suites", reports}});
    return passed ? kOk : kVerificationFailed;
}

int cmd_search(const JobConfig& c, const Budget& budget)
{
    std::vector<simple::FamilyTerm> family;
    if (c.family.empty()) {
        family = simple::genus3_family();
    } else {
        try {
            family = simple::load_family(c.family);
        } catch (const FormatError& e) {
            throw MalformedFamily(e.what());
        }
    }
    int g_max = 0;
    for (const auto& term : family) {
        for (const auto& f : term) {
            g_max = std::max(g_max, f.g);
        }
    }
    const int d_check = c.d_max.value_or(10);
    const HurwitzTable hurwitz = cutjoin::hurwitz_via_cutjoin(d_check, g_max, -1, budget);
    const auto result = simple::search_recursions(family, hurwitz, d_check);
    nlohmann::json j = result.to_json();
    j["family"] = simple::family_to_json(family);
    emit_json(c, j);
    return result.all_verified() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const JobConfig& config)
{
    if (config.format != "json" && config.format != "csv") {
        std::cerr << "error: --format must be json or csv\n";
        return kUsage;
    }
    try {
        const Budget budget = Budget::from_environment();
        if (config.command == "hurwitz") {
            return cmd_hurwitz(config, budget);
        }
        if (config.command == "table") {
            return cmd_table(config, budget);
        }
        if (config.command == "fit") {
            return cmd_fit(config, budget);
        }
        if (config.command == "hodge") {
            return cmd_hodge(config, budget);
        }
        if (config.command == "verify") {
            return cmd_verify(config, budget);
        }
        if (config.command == "search") {
            return cmd_search(config, budget);
        }
        std::cerr << "error: unknown command '" << config.command << "'\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const MalformedFamily& e) {
        std::cerr << "malformed family file: " << e.what() << "\n";
        return kMalformedFamily;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}

}  // namespace hurwitzkit::cli
