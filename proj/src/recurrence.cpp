#include "hurwitzkit/recurrence.hpp"

#include <nlohmann/json.hpp>

namespace hurwitzkit::simple {

Rational Poly2::eval(const Rational& d, const Rational& i) const
{
    Rational total = 0;
    Rational dpow = 1;
    for (const auto& row : coeffs) {
        Rational ipow = 1;
        for (const auto& c : row) {
            total += c * dpow * ipow;
            ipow *= i;
        }
        dpow *= d;
    }
    return total;
}

Poly2 Poly2::operator*(const Poly2& o) const
{
    Poly2 out;
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
        for (std::size_t b = 0; b < coeffs[a].size(); ++b) {
            for (std::size_t c = 0; c < o.coeffs.size(); ++c) {
                for (std::size_t e = 0; e < o.coeffs[c].size(); ++e) {
                    if (out.coeffs.size() <= a + c) {
                        out.coeffs.resize(a + c + 1);
                    }
                    auto& row = out.coeffs[a + c];
                    if (row.size() <= b + e) {
                        row.resize(b + e + 1);
                    }
                    row[b + e] += coeffs[a][b] * o.coeffs[c][e];
                }
            }
        }
    }
    return out;
}

Poly2 Poly2::operator*(const Rational& c) const
{
    Poly2 out = *this;
    for (auto& row : out.coeffs) {
        for (auto& v : row) {
            v *= c;
        }
    }
    return out;
}

namespace {

nlohmann::json poly_to_json(const Poly2& p)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : p.coeffs) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row) {
            r.push_back(to_string(c));
        }
        out.push_back(r);
    }
    return out;
}

Poly2 poly_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) {
        throw FormatError("polynomial coefficients must be a nested array");
    }
    Poly2 p;
    for (const auto& row : j) {
        if (!row.is_array()) {
            throw FormatError("polynomial coefficients must be a nested array");
        }
        std::vector<Rational> r;
        for (const auto& c : row) {
            r.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
        }
        p.coeffs.push_back(std::move(r));
    }
    return p;
}

nlohmann::json affine_to_json(const Affine& a)
{
    return nlohmann::json::array({a.c0, a.cd, a.ci});
}

Affine affine_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 3) {
        throw FormatError("affine form must be [c0, cd, ci]");
    }
    return Affine{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

// x^p expanded for x = (cd*d + ci*i)
Poly2 affine_power(int cd, int ci, int p)
{
    Poly2 base;
    base.coeffs = {{0, ci}, {cd}};
    Poly2 out = Poly2::constant(1);
    for (int k = 0; k < p; ++k) {
        out = out * base;
    }
    return out;
}

Rational simple_value(const HurwitzTable& table, int g, int n)
{
    return n < 1 ? Rational(0) : table.simple(g, n);
}

Rational term_value(const RecTerm& t, const HurwitzTable& table, int d, int i)
{
    Rational v = t.coefficient.eval(d, i);
    if (v == 0) {
        return 0;
    }
    for (const auto& b : t.binomials) {
        v *= Rational(binomial(b.top.eval(d, i), b.bottom.eval(d, i)));
        if (v == 0) {
            return 0;
        }
    }
    for (const auto& f : t.factors) {
        v *= simple_value(table, f.g, f.degree.eval(d, i));
        if (v == 0) {
            return 0;
        }
    }
    return v;
}

}  // namespace

nlohmann::json RecurrenceSpec::to_json() const
{
    nlohmann::json terms_json = nlohmann::json::array();
    for (const auto& t : terms) {
        nlohmann::json bs = nlohmann::json::array();
        for (const auto& b : t.binomials) {
            bs.push_back({{"top", affine_to_json(b.top)}, {"bottom", affine_to_json(b.bottom)}});
        }
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : t.factors) {
            fs.push_back({{"genus", f.g}, {"degree", affine_to_json(f.degree)}});
        }
        terms_json.push_back({{"coefficient", poly_to_json(t.coefficient)},
                              {"binomials", bs},
                              {"factors", fs},
                              {"sum_over_i", t.sum_over_i}});
    }
    return {{"name", name},
            {"lhs", {{"genus", lhs_genus}, {"coefficient", poly_to_json(lhs_coefficient)}}},
            {"terms", terms_json}};
}

RecurrenceSpec RecurrenceSpec::from_json(const nlohmann::json& j)
{
    try {
        RecurrenceSpec spec;
        spec.name = j.value("name", "");
        spec.lhs_genus = j.at("lhs").at("genus").get<int>();
        spec.lhs_coefficient = poly_from_json(j.at("lhs").at("coefficient"));
        for (const auto& tj : j.at("terms")) {
            RecTerm t;
            t.coefficient = poly_from_json(tj.at("coefficient"));
            for (const auto& b : tj.value("binomials", nlohmann::json::array())) {
                t.binomials.push_back(Binom{affine_from_json(b.at("top")), affine_from_json(b.at("bottom"))});
            }
            for (const auto& f : tj.value("factors", nlohmann::json::array())) {
                t.factors.push_back(HFactor{f.at("genus").get<int>(), affine_from_json(f.at("degree"))});
            }
            t.sum_over_i = tj.value("sum_over_i", false);
            spec.terms.push_back(std::move(t));
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed recurrence: ") + e.what());
    }
}

Rational residual(const RecurrenceSpec& spec, const HurwitzTable& table, int d)
{
    Rational lhs = spec.lhs_coefficient.eval(d, 0) * simple_value(table, spec.lhs_genus, d);
    Rational rhs = 0;
    for (const auto& t : spec.terms) {
        if (t.sum_over_i) {
            for (int i = 1; i <= d - 1; ++i) {
                rhs += term_value(t, table, d, i);
            }
        } else {
            rhs += term_value(t, table, d, 0);
        }
    }
    return lhs - rhs;
}

nlohmann::json RecurrenceCheck::to_json() const
{
    nlohmann::json j = {{"check", name}, {"truncation", {{"d_min", d_min}, {"d_max", d_max}}},
                        {"status", holds ? "pass" : "fail"}};
    if (first_failure) {
        j["first_mismatch"] = {{"d", *first_failure}};
    }
    return j;
}

RecurrenceCheck verify_recurrence(const RecurrenceSpec& spec, const HurwitzTable& table, int d_min, int d_max)
{
    RecurrenceCheck out{spec.name, d_min, d_max, true, std::nullopt};
    for (int d = d_min; d <= d_max; ++d) {
        if (residual(spec, table, d) != 0) {
            out.holds = false;
            out.first_failure = d;
            break;
        }
    }
    return out;
}

std::string describe(const std::vector<DFactor>& factors)
{
    if (factors.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) {
            out += "*";
        }
        out += "(";
        if (f.p == 1) {
            out += "D ";
        } else if (f.p > 1) {
            out += "D^" + std::to_string(f.p) + " ";
        }
        out += "H" + std::to_string(f.g) + ")";
    }
    return out;
}

nlohmann::json DifferentialIdentity::to_json() const
{
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : terms) {
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : t.factors) {
            fs.push_back({{"g", f.g}, {"p", f.p}});
        }
        ts.push_back({{"coefficient", to_string(t.coefficient)}, {"factors", fs}});
    }
    return {{"name", name}, {"terms", ts}};
}

DifferentialIdentity DifferentialIdentity::from_json(const nlohmann::json& j)
{
    try {
        DifferentialIdentity id;
        id.name = j.value("name", "");
        for (const auto& tj : j.at("terms")) {
            DTerm t;
            t.coefficient = parse_rational(tj.at("coefficient").get<std::string>());
            for (const auto& f : tj.at("factors")) {
                t.factors.push_back(DFactor{f.at("g").get<int>(), f.at("p").get<int>()});
            }
            id.terms.push_back(std::move(t));
        }
        return id;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed identity: ") + e.what());
    }
}

namespace {

// [x^n] D^p H~_g
Rational factor_coeff(const DFactor& f, const HurwitzTable& table, int n)
{
    return power(Rational(n), f.p) * table.simple(f.g, n) / Rational(factorial(2 * n + 2 * f.g - 2));
}

Rational convolve(const std::vector<DFactor>& factors, std::size_t k, const HurwitzTable& table, int d)
{
    if (k + 1 == factors.size()) {
        return factor_coeff(factors[k], table, d);
    }
    const int rest = static_cast<int>(factors.size() - k - 1);
    Rational total = 0;
    for (int n = 1; n <= d - rest; ++n) {
        Rational head = factor_coeff(factors[k], table, n);
        if (head != 0) {
            total += head * convolve(factors, k + 1, table, d - n);
        }
    }
    return total;
}

}  // namespace

Rational product_coeff(const std::vector<DFactor>& factors, const HurwitzTable& table, int d)
{
    if (d < 1) {
        throw PreconditionError("product_coeff: d must be >= 1");
    }
    if (factors.empty()) {
        return 0;
    }
    return convolve(factors, 0, table, d);
}

Rational identity_coeff(const DifferentialIdentity& identity, const HurwitzTable& table, int d)
{
    Rational total = 0;
    for (const auto& t : identity.terms) {
        if (t.coefficient != 0) {
            total += t.coefficient * product_coeff(t.factors, table, d);
        }
    }
    return total;
}

RecurrenceSpec translate(const DifferentialIdentity& identity, std::size_t lhs_term)
{
    if (lhs_term >= identity.terms.size() || identity.terms[lhs_term].factors.size() != 1) {
        throw PreconditionError("translate: the left-hand term must be a single factor");
    }
    const DTerm& lhs = identity.terms[lhs_term];
    const int g0 = lhs.factors[0].g;
    RecurrenceSpec spec;
    spec.name = identity.name;
    spec.lhs_genus = g0;
    spec.lhs_coefficient = affine_power(1, 0, lhs.factors[0].p) * lhs.coefficient;
    const Affine n_total{2 * g0 - 2, 2, 0};  // 2d + 2g0 - 2

    for (std::size_t c = 0; c < identity.terms.size(); ++c) {
        const DTerm& t = identity.terms[c];
        if (c == lhs_term || t.coefficient == 0 || t.factors.empty()) {
            continue;  // constants have no x^d coefficient for d >= 1
        }
        RecTerm rt;
        if (t.factors.size() == 1) {
            const DFactor& f = t.factors[0];
            const int shift = 2 * (g0 - f.g);
            if (shift < 0) {
                throw PreconditionError("translate: term " + describe(t.factors) + " has genus above the left side");
            }
            // (2d+2g0-2)! / (2d+2g-2)! = shift! * C(2d+2g0-2, shift)
            rt.coefficient = affine_power(1, 0, f.p) * (-t.coefficient * Rational(factorial(shift)));
            if (shift > 0) {
                rt.binomials.push_back(Binom{n_total, Affine{shift, 0, 0}});
            }
            rt.factors.push_back(HFactor{f.g, Affine{0, 1, 0}});
        } else if (t.factors.size() == 2) {
            const DFactor& a = t.factors[0];
            const DFactor& b = t.factors[1];
            const int delta = 2 * g0 - 2 * a.g - 2 * b.g + 2;
            if (delta < 0) {
                throw PreconditionError("translate: product " + describe(t.factors) + " has genus above the left side");
            }
            // N!/(A! B!) = C(N, A) * delta! * C(N - A, delta) with N - A = B + delta
            rt.coefficient =
                affine_power(0, 1, a.p) * affine_power(1, -1, b.p) * (-t.coefficient * Rational(factorial(delta)));
            rt.binomials.push_back(Binom{n_total, Affine{2 * a.g - 2, 0, 2}});
            if (delta > 0) {
                rt.binomials.push_back(Binom{Affine{2 * g0 - 2 * a.g, 2, -2}, Affine{delta, 0, 0}});
            }
            rt.factors.push_back(HFactor{a.g, Affine{0, 0, 1}});
            rt.factors.push_back(HFactor{b.g, Affine{0, 1, -1}});
            rt.sum_over_i = true;
        } else {
            throw PreconditionError("translate: products of more than two factors are not supported");
        }
        spec.terms.push_back(std::move(rt));
    }
    return spec;
}

}  // namespace hurwitzkit::simple
