#include "hurwitzkit/simple_hurwitz.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "hurwitzkit/lagrange.hpp"
#include "hurwitzkit/linalg.hpp"

namespace hurwitzkit::simple {

WExpr wexpr_from_ansatz(const ansatz::AnsatzForm& form)
{
    WExpr out;
    for (const auto& c : form.constants) {
        const Partition& theta = c.theta.partition();
        out += w_power_over(theta.length(), c.e) * (c.K / Rational(aut_count(theta)));
    }
    return out;
}

Rational closed_form_simple(const ansatz::AnsatzForm& form, int d)
{
    Rational total = 0;
    for (const auto& c : form.constants) {
        const Partition& theta = c.theta.partition();
        total += c.K / Rational(aut_count(theta)) * algebra::lagrange_coeff(theta.length(), c.e, d);
    }
    return Rational(factorial(2 * d + 2 * form.g - 2)) * total;
}

std::vector<Rational> p_polynomial(const WExpr& h)
{
    if (!h.is_polynomial()) {
        throw PreconditionError("p_polynomial: needs a polynomial in W");
    }
    std::vector<Rational> out;
    for (const auto& [k, c] : h.laurent()) {
        if (k == 0) {
            continue;
        }
        // k C(k + r, k) = k prod_(m=1)^k (r + m) / m
        std::vector<Rational> poly{Rational(k)};
        for (int m = 1; m <= k; ++m) {
            std::vector<Rational> step(poly.size() + 1);
            for (std::size_t a = 0; a < poly.size(); ++a) {
                step[a] += poly[a];
                step[a + 1] += poly[a] / Rational(m);
            }
            poly = std::move(step);
        }
        if (out.size() < poly.size()) {
            out.resize(poly.size());
        }
        for (std::size_t a = 0; a < poly.size(); ++a) {
            out[a] += c * poly[a];
        }
    }
    while (!out.empty() && out.back() == 0) {
        out.pop_back();
    }
    return out;
}

Rational p_form_value(int g, const std::vector<Rational>& p, int d)
{
    Rational total = 0;
    for (int r = 0; r <= d - 1; ++r) {
        Rational pr = 0;
        Rational rp = 1;
        for (const auto& c : p) {
            pr += c * rp;
            rp *= r;
        }
        total += power(Rational(d), d - r - 2) / Rational(factorial(d - r - 1)) * pr;
    }
    return Rational(factorial(2 * d + 2 * g - 2)) * total;
}

Rational a_form_value(int g, const std::map<int, Rational>& c, int d)
{
    Rational total = 0;
    for (const auto& [k, v] : c) {
        total += v * A_k(k, d);
    }
    return Rational(factorial(2 * d + 2 * g - 2)) * total;
}

std::vector<FamilyTerm> family_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) {
        throw FormatError("family file must be a JSON list of {\"factors\": [...]} terms");
    }
    std::vector<FamilyTerm> out;
    for (const auto& tj : j) {
        if (!tj.is_object() || !tj.contains("factors") || !tj.at("factors").is_array() || tj.at("factors").empty()) {
            throw FormatError("each family term must be {\"factors\": [{\"g\": int, \"p\": int}, ...]}");
        }
        FamilyTerm term;
        for (const auto& f : tj.at("factors")) {
            if (!f.is_object() || !f.contains("g") || !f.contains("p") || !f.at("g").is_number_integer() ||
                !f.at("p").is_number_integer()) {
                throw FormatError("family factor must be {\"g\": int, \"p\": int}");
            }
            DFactor factor{f.at("g").get<int>(), f.at("p").get<int>()};
            if (factor.g < 0 || factor.g > 3 || factor.p < 0 || (factor.g == 0 && factor.p == 0)) {
                throw FormatError("family factor D^" + std::to_string(factor.p) + " H" + std::to_string(factor.g) +
                                  " has no W-expression");
            }
            term.push_back(factor);
        }
        // H~_g (g >= 1, p = 0) carries log W; two of them would need log^2 W
        if (std::count_if(term.begin(), term.end(), [](const DFactor& f) { return f.g >= 1 && f.p == 0; }) > 1) {
            throw FormatError("a family term may contain at most one undifferentiated H_g with g >= 1");
        }
        out.push_back(std::move(term));
    }
    return out;
}

nlohmann::json family_to_json(const std::vector<FamilyTerm>& family)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : family) {
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : t) {
            fs.push_back({{"g", f.g}, {"p", f.p}});
        }
        out.push_back({{"factors", fs}});
    }
    return out;
}

std::vector<FamilyTerm> load_family(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot read family file " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("family file is not valid JSON: " + std::string(e.what()));
    }
    return family_from_json(j);
}

std::vector<FamilyTerm> genus3_family()
{
    std::vector<FamilyTerm> out;
    // (D^p H_i)(D^q H_j), p + q = 4, i + j = 3, without a bare H_0
    for (auto [i, j] : {std::pair{0, 3}, std::pair{1, 2}}) {
        for (int p = 0; p <= 4; ++p) {
            if (i == 0 && p == 0) {
                continue;
            }
            out.push_back({DFactor{i, p}, DFactor{j, 4 - p}});
        }
    }
    for (int p = 0; p <= 3; ++p) {
        out.push_back({DFactor{3, p}});
    }
    for (int p = 0; p <= 5; ++p) {
        out.push_back({DFactor{2, p}});
    }
    for (int p = 1; p <= 7; ++p) {
        out.push_back({DFactor{1, p}});
    }
    return out;
}

bool SearchResult::all_verified() const
{
    for (const auto& f : numeric_failures) {
        if (f) {
            return false;
        }
    }
    return true;
}

nlohmann::json SearchResult::to_json() const
{
    nlohmann::json vectors = nlohmann::json::array();
    for (std::size_t b = 0; b < basis.size(); ++b) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : basis[b].terms) {
            if (t.coefficient != 0) {
                terms.push_back({{"term", describe(t.factors)}, {"coefficient", to_string(t.coefficient)}});
            }
        }
        nlohmann::json v = {{"terms", terms}, {"numeric_check", numeric_failures[b] ? "fail" : "pass"}};
        if (numeric_failures[b]) {
            v["first_mismatch"] = {{"d", *numeric_failures[b]}};
        }
        vectors.push_back(v);
    }
    return {{"family_size", family.size()},
            {"rank", rank},
            {"dimension", basis.size()},
            {"d_check", d_check},
            {"basis", vectors}};
}

namespace {

WExpr term_wexpr(const FamilyTerm& term)
{
    WExpr out = WExpr::constant(1);
    for (const auto& f : term) {
        out = out * wexpr_for(f.g, f.p);
    }
    return out;
}

// Rows indexed by (is_log, exponent).
algebra::RationalMatrix coefficient_matrix(const std::vector<WExpr>& columns)
{
    std::set<std::pair<int, int>> rows;
    for (const auto& e : columns) {
        for (const auto& kv : e.laurent()) {
            rows.emplace(0, kv.first);
        }
        for (const auto& kv : e.logpart()) {
            rows.emplace(1, kv.first);
        }
    }
    algebra::RationalMatrix m(0, columns.size());
    for (const auto& [is_log, k] : rows) {
        std::vector<Rational> row(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const auto& terms = is_log ? columns[c].logpart() : columns[c].laurent();
            auto it = terms.find(k);
            if (it != terms.end()) {
                row[c] = it->second;
            }
        }
        m.append_row(row);
    }
    return m;
}

}  // namespace

SearchResult search_recursions(const std::vector<FamilyTerm>& family, const HurwitzTable& table, int d_check)
{
    std::vector<WExpr> columns;
    for (const auto& t : family) {
        columns.push_back(term_wexpr(t));
    }
    const auto m = coefficient_matrix(columns);
    SearchResult result;
    result.family = family;
    result.d_check = d_check;
    result.rank = algebra::rank(m);
    for (const auto& v : algebra::null_space(m)) {
        DifferentialIdentity id;
        id.name = "family relation " + std::to_string(result.basis.size() + 1);
        for (std::size_t c = 0; c < family.size(); ++c) {
            id.terms.push_back(DTerm{v[c], family[c]});
        }
        std::optional<int> failure;
        for (int d = 1; d <= d_check; ++d) {
            if (identity_coeff(id, table, d) != 0) {
                failure = d;
                break;
            }
        }
        result.basis.push_back(std::move(id));
        result.numeric_failures.push_back(failure);
    }
    return result;
}

bool in_span(const SearchResult& result, const DifferentialIdentity& identity)
{
    std::vector<Rational> target(result.family.size());
    for (const auto& t : identity.terms) {
        auto it = std::find(result.family.begin(), result.family.end(), t.factors);
        if (it == result.family.end()) {
            return false;
        }
        target[static_cast<std::size_t>(it - result.family.begin())] += t.coefficient;
    }
    algebra::RationalMatrix m(0, result.family.size());
    for (const auto& b : result.basis) {
        std::vector<Rational> row;
        for (const auto& t : b.terms) {
            row.push_back(t.coefficient);
        }
        m.append_row(row);
    }
    const std::size_t before = algebra::rank(m);
    m.append_row(target);
    return algebra::rank(m) == before;
}

WExpr identity_wexpr(const DifferentialIdentity& identity)
{
    WExpr out;
    for (const auto& t : identity.terms) {
        out += term_wexpr(t.factors) * t.coefficient;
    }
    return out;
}

}  // namespace hurwitzkit::simple
