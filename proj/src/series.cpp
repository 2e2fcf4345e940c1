#include "hurwitzkit/series.hpp"

#include <algorithm>
#include <limits>

#include <nlohmann/json.hpp>

namespace hurwitzkit::algebra {

namespace {

void check_var_count(std::size_t n)
{
    if (n > kMaxVariables) {
        throw PreconditionError("too many variables (" + std::to_string(n) + " > " +
                                std::to_string(kMaxVariables) + ")");
    }
}

std::int8_t narrow_exponent(int e)
{
    if (e < std::numeric_limits<std::int8_t>::min() || e > std::numeric_limits<std::int8_t>::max()) {
        throw PreconditionError("monomial exponent out of range: " + std::to_string(e));
    }
    return static_cast<std::int8_t>(e);
}

}  // namespace

// --- VarSet -----------------------------------------------------------------

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names))
{
    check_var_count(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) {
                throw PreconditionError("duplicate variable '" + names_[i] + "'");
            }
        }
    }
}

std::optional<std::size_t> VarSet::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t VarSet::index(std::string_view name) const
{
    if (auto i = find(name)) {
        return *i;
    }
    throw SpaceMismatch("unknown variable '" + std::string(name) + "'");
}

std::vector<std::string> part_variables(int count)
{
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) {
        out.push_back("p" + std::to_string(i));
    }
    return out;
}

std::vector<std::string> descendant_variables(int max_index)
{
    std::vector<std::string> out;
    for (int i = 0; i <= max_index; ++i) {
        out.push_back("t" + std::to_string(i));
    }
    return out;
}

// --- Monomial ---------------------------------------------------------------

bool Monomial::is_constant() const
{
    return std::all_of(exps.begin(), exps.end(), [](std::int8_t e) { return e == 0; });
}

std::string to_string(const VarSet& vars, const Monomial& m)
{
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (m.exps[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += vars.name(i);
        if (m.exps[i] != 1) {
            out += '^' + std::to_string(int(m.exps[i]));
        }
    }
    return out.empty() ? "1" : out;
}

Monomial operator+(const Monomial& a, const Monomial& b)
{
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        int e = int(a.exps[i]) + int(b.exps[i]);
        if (e < -128 || e > 127) {
            throw PreconditionError("monomial exponent overflow");
        }
        out.exps[i] = static_cast<std::int8_t>(e);
    }
    return out;
}

// --- SeriesSpace ------------------------------------------------------------

SeriesSpace::SeriesSpace(VarSet vars, std::vector<DegreeCap> caps) : vars_(std::move(vars)), caps_(std::move(caps))
{
    for (const auto& cap : caps_) {
        if (cap.weights.size() != vars_.size()) {
            throw PreconditionError("cap '" + cap.label + "' has the wrong number of weights");
        }
        for (int w : cap.weights) {
            if (w < 0) {
                throw PreconditionError("cap '" + cap.label + "' has a negative weight");
            }
        }
    }
}

DegreeCap SeriesSpace::make_cap(std::string label, const std::vector<std::pair<std::string, int>>& weights,
                                int max_degree) const
{
    DegreeCap cap{std::move(label), std::vector<int>(vars_.size(), 0), max_degree};
    for (const auto& [name, w] : weights) {
        cap.weights[vars_.index(name)] = w;
    }
    return cap;
}

std::size_t SeriesSpace::cap_index(std::string_view label) const
{
    for (std::size_t i = 0; i < caps_.size(); ++i) {
        if (caps_[i].label == label) {
            return i;
        }
    }
    throw PreconditionError("unknown truncation cap '" + std::string(label) + "'");
}

int SeriesSpace::degree(const Monomial& m, std::size_t cap) const
{
    const auto& w = caps_.at(cap).weights;
    int d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        d += w[i] * m.exps[i];
    }
    return d;
}

bool SeriesSpace::admits(const Monomial& m) const
{
    for (std::size_t c = 0; c < caps_.size(); ++c) {
        if (degree(m, c) > caps_[c].max_degree) {
            return false;
        }
    }
    return true;
}

void SeriesSpace::check_exponents(const Monomial& m) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (m.exps[i] >= 0) {
            continue;
        }
        for (const auto& cap : caps_) {
            if (cap.weights[i] > 0) {
                throw PreconditionError("negative exponent on capped variable '" + vars_.name(i) + "'");
            }
        }
    }
    for (std::size_t i = vars_.size(); i < kMaxVariables; ++i) {
        if (m.exps[i] != 0) {
            throw SpaceMismatch("monomial uses a variable outside the space");
        }
    }
}

std::shared_ptr<const SeriesSpace> SeriesSpace::after_derivative(std::size_t var) const
{
    auto caps = caps_;
    for (auto& cap : caps) {
        cap.max_degree -= cap.weights.at(var);
    }
    return std::make_shared<const SeriesSpace>(vars_, std::move(caps));
}

std::shared_ptr<const SeriesSpace> SeriesSpace::with_cap(std::string_view label, int max_degree) const
{
    auto caps = caps_;
    caps.at(cap_index(label)).max_degree = max_degree;
    return std::make_shared<const SeriesSpace>(vars_, std::move(caps));
}

bool SeriesSpace::operator==(const SeriesSpace& other) const
{
    if (!(vars_ == other.vars_) || caps_.size() != other.caps_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < caps_.size(); ++i) {
        if (caps_[i].weights != other.caps_[i].weights || caps_[i].max_degree != other.caps_[i].max_degree) {
            return false;
        }
    }
    return true;
}

SpacePtr make_space(std::vector<std::string> names,
                    const std::vector<std::tuple<std::string, std::vector<std::pair<std::string, int>>, int>>& caps)
{
    SeriesSpace proto{VarSet(std::move(names)), {}};
    std::vector<DegreeCap> built;
    for (const auto& [label, weights, max_degree] : caps) {
        built.push_back(proto.make_cap(label, weights, max_degree));
    }
    return std::make_shared<const SeriesSpace>(proto.vars(), std::move(built));
}

// --- Series -----------------------------------------------------------------

Series::Series(SpacePtr space) : space_(std::move(space))
{
    if (!space_) {
        throw PreconditionError("series requires a space");
    }
}

Series Series::constant(SpacePtr space, const Rational& c)
{
    Series s(std::move(space));
    s.add_term(Monomial{}, c);
    return s;
}

Series Series::variable(SpacePtr space, std::string_view name)
{
    Monomial m;
    m.exps[space->vars().index(name)] = 1;
    Series s(std::move(space));
    s.add_term(m, 1);
    return s;
}

Series Series::monomial(SpacePtr space, const std::vector<std::pair<std::string, int>>& exps, const Rational& c)
{
    Monomial m;
    for (const auto& [name, e] : exps) {
        auto i = space->vars().index(name);
        m.exps[i] = narrow_exponent(m.exps[i] + e);
    }
    Series s(std::move(space));
    s.add_term(m, c);
    return s;
}

Rational Series::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::coeff(const std::vector<std::pair<std::string, int>>& exps) const
{
    Monomial m;
    for (const auto& [name, e] : exps) {
        auto i = space_->vars().index(name);
        m.exps[i] = narrow_exponent(m.exps[i] + e);
    }
    return coeff(m);
}

Rational Series::constant_term() const
{
    return coeff(Monomial{});
}

void Series::add_term(const Monomial& m, const Rational& c)
{
    space_->check_exponents(m);
    if (c == 0 || !space_->admits(m)) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

std::vector<std::pair<Monomial, Rational>> Series::sorted_terms() const
{
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void Series::require_same_space(const Series& other) const
{
    if (space_ != other.space_ && !(*space_ == *other.space_)) {
        throw SpaceMismatch("series arithmetic across different spaces");
    }
}

Series& Series::operator+=(const Series& other)
{
    require_same_space(other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

Series& Series::operator-=(const Series& other)
{
    require_same_space(other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

Series& Series::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    a.require_same_space(b);
    const SeriesSpace& space = *a.space_;
    const std::size_t ncaps = space.caps().size();

    struct Entry {
        const Monomial* m;
        const Rational* c;
        std::array<int, 4> deg{};
    };
    if (ncaps > 4) {
        throw PreconditionError("at most four truncation caps are supported");
    }
    auto flatten = [&](const Series& s) {
        std::vector<Entry> out;
        out.reserve(s.terms_.size());
        for (const auto& [m, c] : s.terms_) {
            Entry e{&m, &c, {}};
            for (std::size_t k = 0; k < ncaps; ++k) {
                e.deg[k] = space.degree(m, k);
            }
            out.push_back(e);
        }
        std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.deg[0] < y.deg[0]; });
        return out;
    };
    auto ea = flatten(a);
    auto eb = flatten(b);

    Series out(a.space_);
    out.terms_.reserve(std::max(a.size(), b.size()) * 2);
    Rational product;
    const std::size_t nvars = space.vars().size();
    for (const auto& x : ea) {
        for (const auto& y : eb) {
            bool keep = true;
            for (std::size_t k = 0; k < ncaps; ++k) {
                if (x.deg[k] + y.deg[k] > space.caps()[k].max_degree) {
                    keep = false;
                    break;
                }
            }
            if (!keep) {
                if (ncaps > 0 && x.deg[0] + y.deg[0] > space.caps()[0].max_degree) {
                    break;  // eb is sorted by cap-0 degree
                }
                continue;
            }
            Monomial m;
            for (std::size_t i = 0; i < nvars; ++i) {
                int e = int(x.m->exps[i]) + int(y.m->exps[i]);
                if (e < -128 || e > 127) {
                    throw PreconditionError("monomial exponent overflow");
                }
                m.exps[i] = static_cast<std::int8_t>(e);
            }
            mpq_mul(product.get_mpq_t(), x.c->get_mpq_t(), y.c->get_mpq_t());
            auto [it, inserted] = out.terms_.try_emplace(m, product);
            if (!inserted) {
                it->second += product;
            }
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool Series::operator==(const Series& other) const
{
    require_same_space(other);
    return terms_ == other.terms_;
}

Series Series::slice(std::size_t cap, int n) const
{
    Series out(space_);
    for (const auto& [m, c] : terms_) {
        if (space_->degree(m, cap) == n) {
            out.terms_.emplace(m, c);
        }
    }
    return out;
}

std::vector<Series> Series::slices(std::size_t cap) const
{
    const int top = space_->caps().at(cap).max_degree;
    std::vector<Series> out(static_cast<std::size_t>(std::max(top, 0) + 1), Series(space_));
    for (const auto& [m, c] : terms_) {
        int d = space_->degree(m, cap);
        out.at(static_cast<std::size_t>(d)).terms_.emplace(m, c);
    }
    return out;
}

Series series_arith(const Series& a, const Series& b, ArithOp op, const Rational& scalar)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::scale:
        return a * scalar;
    }
    throw PreconditionError("unknown arithmetic operation");
}

// --- graded transcendental operations ---------------------------------------

namespace {

// Every non-constant term must have positive degree in `cap`, so the weighted
// Euler derivation is invertible on the augmentation ideal.
void require_positive_grading(const Series& f, std::size_t cap, const char* what)
{
    if (cap >= f.space()->caps().size()) {
        throw PreconditionError(std::string(what) + ": no such truncation cap");
    }
    for (const auto& [m, c] : f.terms()) {
        if (!m.is_constant() && f.space()->degree(m, cap) <= 0) {
            throw PreconditionError(std::string(what) + ": term of non-positive degree in grading '" +
                                    f.space()->caps()[cap].label + "'");
        }
    }
}

}  // namespace

Series exp(const Series& f, std::size_t cap)
{
    if (f.constant_term() != 0) {
        throw PreconditionError("exp: constant term must be 0");
    }
    require_positive_grading(f, cap, "exp");
    auto fs = f.slices(cap);
    const int top = static_cast<int>(fs.size()) - 1;
    std::vector<Series> out;
    out.push_back(Series::constant(f.space(), 1));
    for (int n = 1; n <= top; ++n) {
        Series acc(f.space());
        for (int k = 1; k <= n; ++k) {
            if (fs[k].is_zero() || out[n - k].is_zero()) {
                continue;
            }
            acc += (fs[k] * out[n - k]) * Rational(k);
        }
        acc *= Rational(1, n);
        out.push_back(std::move(acc));
    }
    Series result(f.space());
    for (auto& s : out) {
        result += s;
    }
    return result;
}

Series log(const Series& f, std::size_t cap)
{
    if (f.constant_term() != 1) {
        throw PreconditionError("log: constant term must be 1");
    }
    require_positive_grading(f, cap, "log");
    auto fs = f.slices(cap);
    const int top = static_cast<int>(fs.size()) - 1;
    std::vector<Series> out(static_cast<std::size_t>(top + 1), Series(f.space()));
    for (int n = 1; n <= top; ++n) {
        Series acc(f.space());
        for (int k = 1; k < n; ++k) {
            if (out[k].is_zero() || fs[n - k].is_zero()) {
                continue;
            }
            acc += (out[k] * fs[n - k]) * Rational(k);
        }
        out[n] = fs[n] - acc * Rational(1, n);
    }
    Series result(f.space());
    for (auto& s : out) {
        result += s;
    }
    return result;
}

Series pow_unit(const Series& f, const Rational& a, std::size_t cap)
{
    if (f.constant_term() != 1) {
        throw PreconditionError("pow_unit: constant term must be 1");
    }
    require_positive_grading(f, cap, "pow_unit");
    auto fs = f.slices(cap);
    const int top = static_cast<int>(fs.size()) - 1;
    std::vector<Series> out;
    out.push_back(Series::constant(f.space(), 1));
    for (int n = 1; n <= top; ++n) {
        Series acc(f.space());
        for (int k = 1; k <= n; ++k) {
            if (fs[k].is_zero() || out[n - k].is_zero()) {
                continue;
            }
            Rational w = (a + 1) * k - n;
            if (w != 0) {
                acc += (fs[k] * out[n - k]) * w;
            }
        }
        acc *= Rational(1, n);
        out.push_back(std::move(acc));
    }
    Series result(f.space());
    for (auto& s : out) {
        result += s;
    }
    return result;
}

Series pow(const Series& f, int n)
{
    if (n < 0) {
        throw PreconditionError("pow: negative exponent (use pow_unit)");
    }
    Series result = Series::constant(f.space(), 1);
    Series base = f;
    while (n > 0) {
        if (n & 1) {
            result = result * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

Series series_exp_log(const Series& f, ExpLogOp op, std::size_t cap)
{
    return op == ExpLogOp::exp ? exp(f, cap) : log(f, cap);
}

// --- calculus and substitution ----------------------------------------------

Series derivative(const Series& f, std::string_view var)
{
    const std::size_t v = f.space()->vars().index(var);
    Series out(f.space()->after_derivative(v));
    for (const auto& [m, c] : f.terms()) {
        if (m.exps[v] == 0) {
            continue;
        }
        Monomial d = m;
        d.exps[v] = narrow_exponent(m.exps[v] - 1);
        out.add_term(d, c * m.exps[v]);
    }
    return out;
}

Series euler(const Series& f, std::string_view var)
{
    const std::size_t v = f.space()->vars().index(var);
    Series out(f.space());
    for (const auto& [m, c] : f.terms()) {
        if (m.exps[v] != 0) {
            out.add_term(m, c * m.exps[v]);
        }
    }
    return out;
}

Series shift(const Series& f, std::string_view var, int k)
{
    const std::size_t v = f.space()->vars().index(var);
    Series out(f.space());
    for (const auto& [m, c] : f.terms()) {
        Monomial s = m;
        s.exps[v] = narrow_exponent(m.exps[v] + k);
        out.add_term(s, c);
    }
    return out;
}

Series restrict_to(const Series& f, SpacePtr target)
{
    if (!(f.space()->vars() == target->vars())) {
        throw SpaceMismatch("restrict_to: different variables");
    }
    Series out(std::move(target));
    for (const auto& [m, c] : f.terms()) {
        out.add_term(m, c);
    }
    return out;
}

Series substitute(const Series& f, SpacePtr target, std::span<const std::optional<Series>> images)
{
    const std::size_t nvars = f.space()->vars().size();
    if (images.size() != nvars) {
        throw PreconditionError("substitute: need one image slot per variable");
    }
    for (const auto& img : images) {
        if (img && !(*img->space() == *target)) {
            throw SpaceMismatch("substitute: image outside the target space");
        }
    }
    // powers[v][e] = images[v]^e, grown on demand
    std::vector<std::vector<Series>> powers(nvars);
    auto power_of = [&](std::size_t v, int e) -> const Series& {
        if (!images[v]) {
            throw PreconditionError("substitute: no image for variable '" + f.space()->vars().name(v) + "'");
        }
        if (e < 0) {
            throw PreconditionError("substitute: negative exponent on '" + f.space()->vars().name(v) + "'");
        }
        auto& pv = powers[v];
        if (pv.empty()) {
            pv.push_back(Series::constant(target, 1));
        }
        while (static_cast<int>(pv.size()) <= e) {
            pv.push_back(pv.back() * *images[v]);
        }
        return pv[static_cast<std::size_t>(e)];
    };

    Series out(target);
    for (const auto& [m, c] : f.sorted_terms()) {
        std::optional<Series> term;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (m.exps[v] == 0) {
                continue;
            }
            const Series& pw = power_of(v, m.exps[v]);
            term = term ? (*term * pw) : pw;
            if (term->is_zero()) {
                break;
            }
        }
        if (!term) {
            out += Series::constant(target, c);
        } else if (!term->is_zero()) {
            out += *term * c;
        }
    }
    return out;
}

Series substitute(const Series& f, SpacePtr target, const std::vector<std::pair<std::string, Series>>& images)
{
    std::vector<std::optional<Series>> slots(f.space()->vars().size());
    for (const auto& [name, img] : images) {
        slots[f.space()->vars().index(name)] = img;
    }
    return substitute(f, std::move(target), slots);
}

Series solve_graded_fixpoint(const std::function<Series(const Series&)>& rhs, SpacePtr space, std::size_t cap)
{
    if (cap >= space->caps().size()) {
        throw PreconditionError("solve_graded_fixpoint: no such truncation cap");
    }
    const int top = space->caps()[cap].max_degree;
    Series current(space);
    for (int n = 1; n <= top + 1; ++n) {
        Series next = rhs(current);
        if (next.constant_term() != 0) {
            throw DivergenceError("fixed-point functional produced a constant term");
        }
        // slices below n were fixed by earlier iterations and must not move
        for (int k = 0; k < n && k <= top; ++k) {
            if (!(next.slice(cap, k) == current.slice(cap, k))) {
                throw DivergenceError("fixed-point functional changed graded slice " + std::to_string(k) +
                                      " at iteration " + std::to_string(n));
            }
        }
        current = std::move(next);
    }
    return current;
}

// --- JSON -------------------------------------------------------------------

nlohmann::json to_json(const Series& f)
{
    nlohmann::json out = nlohmann::json::array();
    const auto& vars = f.space()->vars();
    for (const auto& [m, c] : f.sorted_terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (m.exps[i] != 0) {
                exps[vars.name(i)] = int(m.exps[i]);
            }
        }
        out.push_back({{"exponents", exps}, {"coeff", hurwitzkit::to_string(c)}});
    }
    return out;
}

Series series_from_json(const nlohmann::json& j, SpacePtr space)
{
    if (!j.is_array()) {
        throw FormatError("series JSON must be a list");
    }
    Series out(space);
    for (const auto& term : j) {
        if (!term.contains("exponents") || !term.contains("coeff")) {
            throw FormatError("series term needs 'exponents' and 'coeff'");
        }
        Monomial m;
        for (const auto& [name, e] : term.at("exponents").items()) {
            m.exps[space->vars().index(name)] = narrow_exponent(e.get<int>());
        }
        out.add_term(m, parse_rational(term.at("coeff").get<std::string>()));
    }
    return out;
}

}  // namespace hurwitzkit::algebra
