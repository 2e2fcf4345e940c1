#include "hurwitzkit/ansatz.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hurwitzkit/lagrange.hpp"
#include "hurwitzkit/linalg.hpp"

namespace hurwitzkit::ansatz {

using algebra::Monomial;

SpacePtr hurwitz_space(int d_max, int parts)
{
    if (d_max < 1 || parts < 1) {
        throw PreconditionError("hurwitz_space: need d_max >= 1 and parts >= 1");
    }
    std::vector<std::string> names{"x"};
    for (auto& p : algebra::part_variables(std::min(parts, d_max))) {
        names.push_back(p);
    }
    return algebra::make_space(names, {{"x", {{"x", 1}}, d_max}});
}

SpacePtr descendant_space(int max_index, int max_degree)
{
    if (max_index < 0 || max_degree < 0) {
        throw PreconditionError("descendant_space: negative bound");
    }
    auto names = algebra::descendant_variables(max_index);
    std::vector<std::pair<std::string, int>> weights;
    for (const auto& n : names) {
        weights.emplace_back(n, 1);
    }
    return algebra::make_space(names, {{"t", weights, max_degree}});
}

namespace {

int part_count(const SpacePtr& space)
{
    int n = 0;
    while (space->vars().contains("p" + std::to_string(n + 1))) {
        ++n;
    }
    return n;
}

int x_cap(const SpacePtr& space)
{
    return space->caps().at(space->cap_index("x")).max_degree;
}

Rational phi_coefficient(int n, int i)
{
    return power(Rational(n), n + i) / Rational(factorial(n));
}

// terms of f whose exponent of `var` is zero
Series without_variable(const Series& f, std::size_t var)
{
    Series out(f.space());
    for (const auto& [m, c] : f.terms()) {
        if (m.exps[var] == 0) {
            out.add_term(m, c);
        }
    }
    return out;
}

int weighted_t_degree(const Monomial& m, std::size_t nvars)
{
    int w = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
        w += (1 - static_cast<int>(i)) * m.exps[i];
    }
    return w;
}

}  // namespace

Series phi(int i, const SpacePtr& space)
{
    Series out(space);
    const int n_max = std::min(part_count(space), x_cap(space));
    for (int n = 1; n <= n_max; ++n) {
        out += Series::monomial(space, {{"x", n}, {"p" + std::to_string(n), 1}}, phi_coefficient(n, i));
    }
    return out;
}

Series phi_at(int i, const Series& z)
{
    const auto& space = z.space();
    if (z.constant_term() != 0) {
        throw PreconditionError("phi_at: argument must have zero constant term");
    }
    Series out(space);
    Series zn = Series::constant(space, 1);
    const int n_max = std::min(part_count(space), x_cap(space));
    for (int n = 1; n <= n_max; ++n) {
        zn = zn * z;
        if (zn.is_zero()) {
            break;
        }
        out += Series::variable(space, "p" + std::to_string(n)) * zn * phi_coefficient(n, i);
    }
    return out;
}

Series solve_s(const SpacePtr& space)
{
    const Series x = Series::variable(space, "x");
    return algebra::solve_graded_fixpoint([&](const Series& s) { return x * algebra::exp(phi_at(0, s)); }, space,
                                          space->cap_index("x"));
}

Series solve_I0(const SpacePtr& tspace)
{
    const int max_index = static_cast<int>(tspace->vars().size()) - 1;
    std::vector<Series> t;
    for (int i = 0; i <= max_index; ++i) {
        t.push_back(Series::variable(tspace, "t" + std::to_string(i)));
    }
    return algebra::solve_graded_fixpoint(
        [&](const Series& i0) {
            Series out(tspace);
            Series term = Series::constant(tspace, 1);  // I_0^i / i!
            for (int i = 0; i <= max_index; ++i) {
                if (i > 0) {
                    term = term * i0 * Rational(1, i);
                    if (term.is_zero()) {
                        break;
                    }
                }
                out += t[static_cast<std::size_t>(i)] * term;
            }
            return out;
        },
        tspace);
}

std::vector<Series> I_series(const SpacePtr& tspace, int k_max)
{
    const int max_index = static_cast<int>(tspace->vars().size()) - 1;
    if (k_max > max_index) {
        throw PreconditionError("I_series: k_max exceeds the largest t index");
    }
    const Series i0 = solve_I0(tspace);
    std::vector<Series> powers{Series::constant(tspace, 1)};  // I_0^i / i!
    for (int i = 1; i <= max_index; ++i) {
        powers.push_back(powers.back() * i0 * Rational(1, i));
    }
    std::vector<Series> out;
    for (int k = 0; k <= k_max; ++k) {
        Series ik(tspace);
        for (int i = 0; k + i <= max_index; ++i) {
            ik += Series::variable(tspace, "t" + std::to_string(k + i)) * powers[static_cast<std::size_t>(i)];
        }
        out.push_back(std::move(ik));
    }
    return out;
}

Series xi_substitute(const Series& f, const SpacePtr& xspace)
{
    const auto& tspace = f.space();
    const int t_cap = tspace->caps().at(tspace->cap_index("t")).max_degree;
    if (t_cap < x_cap(xspace)) {
        throw PreconditionError("xi_substitute: t-degree cap " + std::to_string(t_cap) +
                                " is below the x-degree cap " + std::to_string(x_cap(xspace)));
    }
    std::vector<std::optional<Series>> images;
    for (std::size_t k = 0; k < tspace->vars().size(); ++k) {
        images.emplace_back(phi(static_cast<int>(k), xspace));
    }
    return algebra::substitute(f, xspace, images);
}

Series assemble_G(int g, hodge::HodgeTable& table, const SpacePtr& tspace)
{
    if (g < 0) {
        throw PreconditionError("assemble_G: negative genus");
    }
    const int max_index = static_cast<int>(tspace->vars().size()) - 1;
    const int max_degree = tspace->caps().at(tspace->cap_index("t")).max_degree;
    Series out(tspace);
    std::vector<int> counts(static_cast<std::size_t>(max_index) + 1, 0);

    auto emit = [&] {
        std::vector<int> theta;
        Integer denom = 1;
        Monomial m;
        for (int i = 0; i <= max_index; ++i) {
            const int a = counts[static_cast<std::size_t>(i)];
            for (int j = 0; j < a; ++j) {
                theta.push_back(i);
            }
            denom *= factorial(a);
            m.exps[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(a);
        }
        hodge::HodgeKey key(g, std::move(theta), 0);
        key.k = 3 * g - 3 + key.n() - key.psi_degree();
        if (hodge::validity_gate(key) != hodge::Validity::valid) {
            return;
        }
        Rational v = hodge::evaluate(key, table);
        if (v == 0) {
            return;
        }
        out.add_term(m, (key.k % 2 ? -v : v) / Rational(denom));
    };

    // indices 0 and 1 last: k = 3g - 3 - s2 + a_0 must lie in [0, g]
    auto finish = [&](int used, int s2) {
        const int a1_max = max_index >= 1 ? max_degree - used : 0;
        for (int a1 = 0; a1 <= a1_max; ++a1) {
            if (max_index >= 1) {
                counts[1] = a1;
            }
            const int lo = std::max(0, s2 - 3 * g + 3);
            const int hi = std::min(s2 - 2 * g + 3, max_degree - used - a1);
            for (int a0 = lo; a0 <= hi; ++a0) {
                counts[0] = a0;
                emit();
            }
            counts[0] = 0;
        }
        if (max_index >= 1) {
            counts[1] = 0;
        }
    };
    // indices >= 2 first; s2 = sum (i - 1) a_i over them
    std::function<void(int, int, int)> choose = [&](int index, int used, int s2) {
        if (index < 2) {
            finish(used, s2);
            return;
        }
        for (int a = 0; used + a <= max_degree && s2 + a * (index - 1) <= 3 * g - 3 + max_degree; ++a) {
            counts[static_cast<std::size_t>(index)] = a;
            choose(index - 1, used + a, s2 + a * (index - 1));
        }
        counts[static_cast<std::size_t>(index)] = 0;
    };
    choose(max_index, 0, 0);
    return out;
}

Series extract_F(const Series& G, int g)
{
    Series out(G.space());
    const std::size_t nvars = G.space()->vars().size();
    for (const auto& [m, c] : G.terms()) {
        if (weighted_t_degree(m, nvars) == 3 - 3 * g) {
            out.add_term(m, c);
        }
    }
    return out;
}

Series delta(const Series& G)
{
    const auto& space = G.space();
    const std::size_t nvars = space->vars().size();
    const std::size_t cap = space->cap_index("t");
    const int top = space->caps()[cap].max_degree - 1;
    Series out(space);
    for (const auto& [m, c] : G.terms()) {
        for (std::size_t i = 0; i + 1 < nvars; ++i) {
            if (m.exps[i] == 0) {
                continue;
            }
            Monomial next = m;
            next.exps[i] -= 1;
            next.exps[i + 1] += 1;
            if (space->degree(next, cap) <= top) {
                out.add_term(next, c * Rational(m.exps[i]));
            }
        }
        if (m.exps[0] > 0) {
            Monomial next = m;
            next.exps[0] -= 1;
            if (space->degree(next, cap) <= top) {
                out.add_term(next, -c * Rational(m.exps[0]));
            }
        }
    }
    return out;
}

Series h0_one_part(const SpacePtr& space)
{
    return phi(-2, space);
}

Series h0_two_part(const SpacePtr& space, bool literal)
{
    Series out(space);
    const int n_max = std::min(part_count(space), x_cap(space));
    for (int i = 1; i <= n_max; ++i) {
        for (int j = 1; j <= n_max && i + j <= x_cap(space); ++j) {
            Rational c;
            if (literal) {
                c = Rational(factorial(i + j - 1) * power(Rational(i), i - 1).get_num() *
                             power(Rational(j), j - 1).get_num()) /
                    Rational(factorial(i - 1) * factorial(j - 1));
            } else {
                c = power(Rational(i), i) * power(Rational(j), j) /
                    Rational(2 * factorial(i) * factorial(j) * (i + j));
            }
            std::vector<std::pair<std::string, int>> exps{{"x", i + j}};
            if (i == j) {
                exps.emplace_back("p" + std::to_string(i), 2);
            } else {
                exps.emplace_back("p" + std::to_string(i), 1);
                exps.emplace_back("p" + std::to_string(j), 1);
            }
            out += Series::monomial(space, exps, c);
        }
    }
    return out;
}

Series h1_closed_form(const SpacePtr& space)
{
    const Series s = solve_s(space);
    const Series one = Series::constant(space, 1);
    return (-algebra::log(one - phi_at(1, s)) - phi_at(0, s)) * Rational(1, 24);
}

Series specialize_simple(const Series& f)
{
    const auto& space = f.space();
    auto target = algebra::x_space(x_cap(space));
    std::vector<std::optional<Series>> images;
    for (const auto& name : space->vars().names()) {
        if (name == "x") {
            images.emplace_back(Series::variable(target, "x"));
        } else if (name == "p1") {
            images.emplace_back(Series::constant(target, 1));
        } else {
            images.emplace_back(Series::zero(target));
        }
    }
    return algebra::substitute(f, target, images);
}

nlohmann::json Report::to_json() const
{
    nlohmann::json out{{"check", check}, {"truncation", truncation}, {"status", passed ? "pass" : "fail"}};
    if (first_mismatch) {
        out["first_mismatch"] = *first_mismatch;
    }
    return out;
}

Report compare_series(std::string check, const Series& lhs, const Series& rhs, nlohmann::json truncation)
{
    Report report{std::move(check), std::move(truncation), true, std::nullopt};
    const Series diff = lhs - rhs;
    if (!diff.is_zero()) {
        report.passed = false;
        const auto [m, c] = diff.sorted_terms().front();
        report.first_mismatch = algebra::to_string(lhs.space()->vars(), m) + ": lhs " + to_string(lhs.coeff(m)) +
                                ", rhs " + to_string(rhs.coeff(m));
    }
    return report;
}

std::vector<Report> verify_change_theorem(int g, const HurwitzTable& hurwitz, hodge::HodgeTable& table, int d_max,
                                          int parts)
{
    if (g < 0) {
        throw PreconditionError("verify_change_theorem: negative genus");
    }
    if (!hurwitz.contains(g, Partition::ones(d_max))) {
        throw PreconditionError("verify_change_theorem: Hurwitz table does not reach d = " + std::to_string(d_max) +
                                " in genus " + std::to_string(g));
    }
    const auto xspace = hurwitz_space(d_max, parts);
    const nlohmann::json trunc{{"x_degree", d_max}, {"parts", std::min(parts, d_max)}};
    const Series h = hurwitz.genus_series(g, xspace);
    const int max_index = std::max(0, 3 * g - 3 + d_max);
    const auto tspace = descendant_space(max_index, d_max);
    const Series G = assemble_G(g, table, tspace);

    std::vector<Report> out;
    if (g >= 1) {
        out.push_back(compare_series("H_" + std::to_string(g) + " = Xi G_" + std::to_string(g), h,
                                     xi_substitute(G, xspace), trunc));
        if (g == 1) {
            out.push_back(compare_series("H_1 = (log 1/(1-phi_1(s,p)) - phi_0(s,p))/24", h, h1_closed_form(xspace),
                                         trunc));
        }
        return out;
    }
    const Series F0 = extract_F(G, 0);
    out.push_back(compare_series("H_0 = H_0[1] + H_0[2] + Xi F_0", h,
                                 h0_one_part(xspace) + h0_two_part(xspace) + xi_substitute(F0, xspace), trunc));
    const Series dd = algebra::euler(algebra::euler(h, "x"), "x");
    out.push_back(compare_series("(x d/dx)^2 H_0 = phi_0(s,p)", dd, phi_at(0, solve_s(xspace)), trunc));
    return out;
}

Report verify_xi_I(int k_max, int d_max, int parts)
{
    const auto xspace = hurwitz_space(d_max, parts);
    const auto tspace = descendant_space(k_max + d_max - 1, d_max);
    const auto I = I_series(tspace, k_max);
    const Series s = solve_s(xspace);
    const nlohmann::json trunc{
        {"x_degree", d_max}, {"parts", std::min(parts, d_max)}, {"k_max", k_max}, {"t_index", k_max + d_max - 1}};
    for (int k = 0; k <= k_max; ++k) {
        Report r = compare_series("Xi I_k = phi_k(s,p)", xi_substitute(I[static_cast<std::size_t>(k)], xspace),
                                  phi_at(k, s), trunc);
        if (!r.passed) {
            r.first_mismatch = "k = " + std::to_string(k) + ", " + *r.first_mismatch;
            return r;
        }
    }
    return Report{"Xi I_k = phi_k(s,p)", trunc, true, std::nullopt};
}

DeltaResult delta_check(int g, hodge::HodgeTable& table, int max_index, int max_degree)
{
    const auto tspace = descendant_space(max_index, max_degree);
    const Series d = delta(assemble_G(g, table, tspace));
    DeltaResult out;
    out.constant = d.constant_term();
    out.nonconstant_vanish = (d - Series::constant(tspace, out.constant)).is_zero();
    return out;
}

std::optional<Rational> AnsatzForm::constant(const Partition& theta) const
{
    for (const auto& c : constants) {
        if (c.theta.partition() == theta) {
            return c.K;
        }
    }
    return std::nullopt;
}

nlohmann::json AnsatzForm::to_json() const
{
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : constants) {
        list.push_back({{"theta", hurwitzkit::to_json(c.theta.partition())},
                        {"K", to_string(c.K)},
                        {"e", c.e},
                        {"k", c.k}});
    }
    return {{"g", g}, {"constants", list}};
}

AnsatzForm AnsatzForm::from_json(const nlohmann::json& j)
{
    AnsatzForm form;
    try {
        form.g = j.at("g").get<int>();
        for (const auto& c : j.at("constants")) {
            ThetaPartition theta(partition_from_json(c.at("theta")));
            form.constants.push_back(AnsatzConstant{theta, parse_rational(c.at("K").get<std::string>()),
                                                    c.at("e").get<int>(), c.at("k").get<int>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed ansatz form: ") + e.what());
    } catch (const PreconditionError& e) {
        throw FormatError(std::string("malformed ansatz form: ") + e.what());
    }
    return form;
}

namespace {

// phi_j(s, p) and (1 - phi_1(s, p))^(-e), computed once per space
class AnsatzColumns {
public:
    explicit AnsatzColumns(const SpacePtr& space) : space_(space), s_(solve_s(space)) {}

    const Series& phi_s(int j)
    {
        auto it = phi_.find(j);
        if (it == phi_.end()) {
            it = phi_.emplace(j, phi_at(j, s_)).first;
        }
        return it->second;
    }

    const Series& inverse_power(int e)
    {
        auto it = inv_.find(e);
        if (it == inv_.end()) {
            Series base = Series::constant(space_, 1) - phi_s(1);
            it = inv_.emplace(e, algebra::pow_unit(base, Rational(-e))).first;
        }
        return it->second;
    }

    Series column(int g, const Partition& theta)
    {
        const int e = theta.length() + 2 * (g - 1);
        Series out = inverse_power(e) * (Rational(1) / Rational(aut_count(theta)));
        for (int part : theta.parts()) {
            out = out * phi_s(part);
        }
        return out;
    }

private:
    SpacePtr space_;
    Series s_;
    std::map<int, Series> phi_;
    std::map<int, Series> inv_;
};

Monomial alpha_monomial(const SpacePtr& space, const Partition& alpha)
{
    Monomial m;
    m.exps[space->vars().index("x")] = static_cast<std::int8_t>(alpha.size());
    for (int part : alpha.parts()) {
        m.exps[space->vars().index("p" + std::to_string(part))] += 1;
    }
    return m;
}

}  // namespace

Series ansatz_series(const AnsatzForm& form, const SpacePtr& space)
{
    AnsatzColumns cols(space);
    Series out(space);
    for (const auto& c : form.constants) {
        if (c.K != 0) {
            out += cols.column(form.g, c.theta.partition()) * c.K;
        }
    }
    return out;
}

nlohmann::json FitReport::to_json() const
{
    return {{"g", g},
            {"d_max", d_max},
            {"unknowns", unknowns},
            {"rank", rank},
            {"rows_used", rows_used},
            {"surplus_rows", surplus_rows},
            {"surplus_consistent", surplus_consistent}};
}

FitResult fit_constants(int g, const HurwitzTable& hurwitz, int d_max, hodge::HodgeTable& table,
                        std::size_t min_surplus)
{
    const auto thetas = ansatz_thetas(g);
    const auto space = hurwitz_space(d_max, d_max);
    AnsatzColumns cols(space);
    std::vector<Series> columns;
    for (const auto& theta : thetas) {
        columns.push_back(cols.column(g, theta.partition()));
    }
    const std::size_t unknowns = thetas.size();

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int d = 1; d <= d_max; ++d) {
        for (const auto& alpha : enumerate(d)) {
            const Monomial m = alpha_monomial(space, alpha);
            std::vector<Rational> row;
            for (const auto& col : columns) {
                row.push_back(col.coeff(m));
            }
            rows.push_back(std::move(row));
            rhs.push_back(hurwitz.at(g, alpha) / Rational(factorial(branch_points(g, alpha))));
        }
    }

    // shortest prefix of rows with full column rank
    algebra::RationalMatrix prefix(0, unknowns);
    std::vector<Rational> prefix_rhs;
    std::size_t used = 0;
    std::size_t current_rank = 0;
    while (used < rows.size() && current_rank < unknowns) {
        prefix.append_row(rows[used]);
        prefix_rhs.push_back(rhs[used]);
        ++used;
        current_rank = algebra::rank(prefix);
    }
    if (current_rank < unknowns) {
        throw RankDeficient("genus " + std::to_string(g) + " fit has rank " + std::to_string(current_rank) + " < " +
                            std::to_string(unknowns) + " unknowns at d_max = " + std::to_string(d_max) +
                            "; request a deeper truncation");
    }
    auto solution = algebra::solve(prefix, prefix_rhs);
    if (!solution.unique) {
        throw InconsistentFit("genus " + std::to_string(g) + " fit: leading equations are inconsistent");
    }
    const auto& K = *solution.unique;

    FitReport report{g, d_max, unknowns, current_rank, used, 0, true};
    for (std::size_t i = used; i < rows.size(); ++i) {
        Rational lhs = 0;
        bool trivial = true;
        for (std::size_t j = 0; j < unknowns; ++j) {
            if (rows[i][j] != 0) {
                trivial = false;
                lhs += rows[i][j] * K[j];
            }
        }
        if (lhs != rhs[i]) {
            throw InconsistentFit("genus " + std::to_string(g) + " fit: surplus equation " + std::to_string(i) +
                                  " fails (" + to_string(lhs) + " vs " + to_string(rhs[i]) + ")");
        }
        if (!trivial) {
            ++report.surplus_rows;
        }
    }
    if (report.surplus_rows < min_surplus) {
        throw RankDeficient("genus " + std::to_string(g) + " fit has only " + std::to_string(report.surplus_rows) +
                            " surplus equations at d_max = " + std::to_string(d_max) + ", need " +
                            std::to_string(min_surplus));
    }

    FitResult result{AnsatzForm{g, {}}, report};
    for (std::size_t j = 0; j < unknowns; ++j) {
        const Partition& theta = thetas[j].partition();
        const int k = lambda_index(g, theta);
        result.form.constants.push_back(AnsatzConstant{thetas[j], K[j], theta.length() + 2 * (g - 1), k});
        hodge::HodgeKey key(g, std::vector<int>(theta.parts().begin(), theta.parts().end()), k);
        table.set(key, k % 2 ? -K[j] : K[j], hodge::Source::fitted);
    }
    return result;
}

std::vector<Report> verify_genus_expansion(int g, hodge::HodgeTable& table, int max_index, int max_degree)
{
    if (g < 2) {
        throw PreconditionError("verify_genus_expansion: genus must be >= 2");
    }
    const auto tspace = descendant_space(max_index, max_degree);
    const nlohmann::json trunc{{"t_index", max_index}, {"t_degree", max_degree}};
    const Series G = assemble_G(g, table, tspace);
    const auto I = I_series(tspace, max_index);
    const Series one = Series::constant(tspace, 1);
    const Series one_minus_I1 = one - I[1];
    const Series inv = algebra::pow_unit(one_minus_I1, Rational(-1));

    // primitive part G_g(0, 0, t_2, t_3, ...)
    const Series primitive = without_variable(without_variable(G, 0), 1);

    auto dilaton_form = [&](const Series& denominator_inverse, const Series& prefactor,
                            const std::function<Series(int)>& image) {
        std::vector<std::optional<Series>> images(tspace->vars().size());
        for (int j = 2; j <= max_index; ++j) {
            images[static_cast<std::size_t>(j)] = image(j) * denominator_inverse;
        }
        return prefactor * algebra::substitute(primitive, tspace, images);
    };

    const Series rhs1 = dilaton_form(inv, algebra::pow_unit(one_minus_I1, Rational(2 - 2 * g)),
                                     [&](int j) { return I[static_cast<std::size_t>(j)]; });

    Series rhs2(tspace);
    Series rhs2_lambda_free(tspace);
    for (const auto& key : hodge::primitive_keys(g)) {
        if (key.theta.back() > max_index) {
            continue;
        }
        const Rational v = hodge::evaluate(key, table);
        Series term = algebra::pow_unit(one_minus_I1, Rational(-(2 * g - 2 + key.n()))) * (key.k % 2 ? -v : v);
        std::map<int, int> mult;
        for (int t : key.theta) {
            ++mult[t];
        }
        for (auto [j, l] : mult) {
            term = term * algebra::pow(I[static_cast<std::size_t>(j)], l) * (Rational(1) / Rational(factorial(l)));
        }
        rhs2 += term;
        if (key.k == 0) {
            rhs2_lambda_free += term;
        }
    }

    std::vector<Report> out;
    out.push_back(compare_series("G_g = (1-I_1)^(2-2g) G_g(0,0,I_2/(1-I_1),...)", G, rhs1, trunc));
    out.push_back(compare_series("G_g = sum over primitive brackets", G, rhs2, trunc));
    out.push_back(compare_series("both genus-expansion forms agree", rhs1, rhs2, trunc));

    // t_0 = 0: I_0 = 0 and I_k = t_k, leaving the repeated-dilaton form
    Report slice{"t_0 = 0 slice: repeated dilaton form", trunc, true, std::nullopt};
    if (!without_variable(I[0], 0).is_zero()) {
        slice.passed = false;
        slice.first_mismatch = "I_0 does not vanish at t_0 = 0";
    }
    for (int k = 1; slice.passed && k <= max_index; ++k) {
        if (!(without_variable(I[static_cast<std::size_t>(k)], 0) ==
              Series::variable(tspace, "t" + std::to_string(k)))) {
            slice.passed = false;
            slice.first_mismatch = "I_" + std::to_string(k) + " differs from t_" + std::to_string(k) + " at t_0 = 0";
        }
    }
    if (slice.passed) {
        const Series one_minus_t1 = one - Series::variable(tspace, "t1");
        const Series repeated =
            dilaton_form(algebra::pow_unit(one_minus_t1, Rational(-1)), algebra::pow_unit(one_minus_t1, Rational(2 - 2 * g)),
                         [&](int j) { return Series::variable(tspace, "t" + std::to_string(j)); });
        Report r = compare_series(slice.check, without_variable(G, 0), repeated, trunc);
        slice.passed = r.passed;
        slice.first_mismatch = r.first_mismatch;
    }
    out.push_back(slice);
    out.push_back(compare_series("lambda-free slice F_g matches the k = 0 ansatz", extract_F(G, g), rhs2_lambda_free,
                                 trunc));
    return out;
}

}  // namespace hurwitzkit::ansatz
