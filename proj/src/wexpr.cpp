#include "hurwitzkit/wexpr.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "hurwitzkit/lagrange.hpp"

namespace hurwitzkit::simple {

WExpr::WExpr(Terms laurent, Terms logpart) : laurent_(std::move(laurent)), logpart_(std::move(logpart))
{
    prune();
}

WExpr WExpr::monomial(int exponent, const Rational& c)
{
    return WExpr({{exponent, c}}, {});
}

WExpr WExpr::log_w()
{
    return WExpr({}, {{0, Rational(1)}});
}

WExpr WExpr::polynomial(const std::vector<Rational>& ascending)
{
    Terms t;
    for (std::size_t i = 0; i < ascending.size(); ++i) {
        t[static_cast<int>(i)] = ascending[i];
    }
    return WExpr(std::move(t), {});
}

void WExpr::prune()
{
    std::erase_if(laurent_, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(logpart_, [](const auto& kv) { return kv.second == 0; });
}

bool WExpr::is_polynomial() const
{
    return logpart_.empty() && (laurent_.empty() || laurent_.begin()->first >= 0);
}

int WExpr::degree() const
{
    if (is_zero()) {
        throw PreconditionError("WExpr::degree of zero");
    }
    int d = laurent_.empty() ? logpart_.rbegin()->first : laurent_.rbegin()->first;
    if (!logpart_.empty()) {
        d = std::max(d, logpart_.rbegin()->first);
    }
    return d;
}

int WExpr::min_exponent() const
{
    if (is_zero()) {
        throw PreconditionError("WExpr::min_exponent of zero");
    }
    int d = laurent_.empty() ? logpart_.begin()->first : laurent_.begin()->first;
    if (!logpart_.empty()) {
        d = std::min(d, logpart_.begin()->first);
    }
    return d;
}

WExpr& WExpr::operator+=(const WExpr& o)
{
    for (const auto& [k, c] : o.laurent_) {
        laurent_[k] += c;
    }
    for (const auto& [k, c] : o.logpart_) {
        logpart_[k] += c;
    }
    prune();
    return *this;
}

WExpr& WExpr::operator-=(const WExpr& o)
{
    return *this += o * Rational(-1);
}

WExpr& WExpr::operator*=(const Rational& c)
{
    for (auto& [k, v] : laurent_) {
        v *= c;
    }
    for (auto& [k, v] : logpart_) {
        v *= c;
    }
    prune();
    return *this;
}

namespace {

WExpr::Terms multiply_terms(const WExpr::Terms& a, const WExpr::Terms& b)
{
    WExpr::Terms out;
    for (const auto& [i, x] : a) {
        for (const auto& [j, y] : b) {
            out[i + j] += x * y;
        }
    }
    return out;
}

void accumulate(WExpr::Terms& into, const WExpr::Terms& from)
{
    for (const auto& [k, c] : from) {
        into[k] += c;
    }
}

}  // namespace

WExpr operator*(const WExpr& a, const WExpr& b)
{
    if (a.has_log() && b.has_log()) {
        throw PreconditionError("WExpr product would contain log(W)^2");
    }
    WExpr::Terms logpart = multiply_terms(a.laurent_, b.logpart_);
    accumulate(logpart, multiply_terms(a.logpart_, b.laurent_));
    return WExpr(multiply_terms(a.laurent_, b.laurent_), std::move(logpart));
}

std::string WExpr::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Terms& terms, bool log) {
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            out << (first ? "" : " + ") << "(" << hurwitzkit::to_string(it->second) << ")";
            if (it->first != 0) {
                out << "*W^" << it->first;
            }
            if (log) {
                out << "*log(W)";
            }
            first = false;
        }
    };
    emit(laurent_, false);
    emit(logpart_, true);
    return out.str();
}

nlohmann::json WExpr::to_json() const
{
    auto dump = [](const Terms& t) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [k, c] : t) {
            j[std::to_string(k)] = hurwitzkit::to_string(c);
        }
        return j;
    };
    return {{"laurent", dump(laurent_)}, {"log", dump(logpart_)}};
}

WExpr WExpr::from_json(const nlohmann::json& j)
{
    auto load = [](const nlohmann::json& obj) {
        Terms t;
        if (!obj.is_object()) {
            throw FormatError("WExpr slot must be an object of exponent -> \"num/den\"");
        }
        for (const auto& [k, v] : obj.items()) {
            try {
                t[std::stoi(k)] = parse_rational(v.get<std::string>());
            } catch (const std::logic_error&) {
                throw FormatError("bad WExpr exponent '" + k + "'");
            } catch (const nlohmann::json::exception&) {
                throw FormatError("WExpr coefficients must be strings");
            }
        }
        return t;
    };
    Terms laurent = j.contains("laurent") ? load(j.at("laurent")) : Terms{};
    Terms logpart = j.contains("log") ? load(j.at("log")) : Terms{};
    return WExpr(std::move(laurent), std::move(logpart));
}

WExpr apply_D(const WExpr& e, int times)
{
    WExpr cur = e;
    const WExpr w2_minus_w = WExpr::monomial(2) - WExpr::monomial(1);
    for (int t = 0; t < times; ++t) {
        WExpr::Terms laurent;
        // D W^j = j (W^(j+2) - W^(j+1))
        auto d_laurent = [](const WExpr::Terms& in, WExpr::Terms& out) {
            for (const auto& [j, c] : in) {
                if (j == 0) {
                    continue;
                }
                out[j + 2] += c * j;
                out[j + 1] -= c * j;
            }
        };
        d_laurent(cur.laurent(), laurent);
        WExpr::Terms logpart;
        d_laurent(cur.logpart(), logpart);
        // D (log W * q) = (W^2 - W) q + log W * D q
        WExpr next(std::move(laurent), std::move(logpart));
        next += WExpr(cur.logpart(), {}) * w2_minus_w;
        cur = std::move(next);
    }
    return cur;
}

WExpr w_power_over(int l, int e)
{
    if (l < 0) {
        throw PreconditionError("w_power_over: negative power of w");
    }
    WExpr out = WExpr::monomial(e - l);
    const WExpr w_minus_1 = WExpr::monomial(1) - WExpr::constant(1);
    for (int i = 0; i < l; ++i) {
        out = out * w_minus_1;
    }
    return out;
}

WExpr base_wexpr(int g)
{
    const WExpr w_minus_1 = WExpr::monomial(1) - WExpr::constant(1);
    switch (g) {
    case 0:
        return (WExpr::constant(1) - WExpr::monomial(-2)) * Rational(1, 2);
    case 1:
        return (WExpr::log_w() - WExpr::constant(1) + WExpr::monomial(-1)) * Rational(1, 24);
    case 2:
        return w_minus_1 * w_minus_1 * WExpr::monomial(2) * WExpr::polynomial({-6, 7}) * Rational(1, 1440);
    case 3:
        return w_minus_1 * w_minus_1 * WExpr::monomial(4) *
               WExpr::polynomial({720, -6696, 19250, -21840, 8575}) * Rational(1, 725760);
    default:
        throw PreconditionError("no base W-expression for genus " + std::to_string(g));
    }
}

namespace {

WExpr checked(int g, int n, WExpr e)
{
    if (2 * g - 2 + n > 0 && !e.is_zero() && !e.is_polynomial()) {
        throw Error("D^" + std::to_string(n) + " H~_" + std::to_string(g) + " is not a polynomial in W");
    }
    return e;
}

}  // namespace

WExpr wexpr_for(int g, int n)
{
    if (n < 0 || g < 0) {
        throw PreconditionError("wexpr_for: negative argument");
    }
    if (g == 0) {
        if (n == 0) {
            throw PreconditionError("wexpr_for: H~_0 itself is not available, only D^n H~_0 for n >= 1");
        }
        return checked(g, n, apply_D(base_wexpr(0), n - 1));
    }
    return checked(g, n, apply_D(base_wexpr(g), n));
}

Rational A_k(int k, int d)
{
    if (d < 1) {
        throw PreconditionError("A_k: d must be >= 1");
    }
    Rational sum = 0;
    for (int r = 0; r <= d - 1; ++r) {
        sum += Rational(binomial(k + r, k)) * power(Rational(d), d - r - 1) / Rational(factorial(d - r - 1));
    }
    return Rational(k) / Rational(d) * sum;
}

Rational extract_coeff(const WExpr& e, int d)
{
    if (e.has_log()) {
        throw PreconditionError("extract_coeff: log-bearing expression");
    }
    if (d < 1) {
        throw PreconditionError("extract_coeff: d must be >= 1");
    }
    Rational total = 0;
    for (const auto& [j, c] : e.laurent()) {
        if (j >= 0) {
            // W^j = w^0 / (1 - w)^j
            total += c * algebra::lagrange_coeff(0, j, d);
        } else {
            // W^j = (1 - w)^(-j) = sum_k C(-j, k) (-1)^k w^k
            for (int k = 0; k <= -j; ++k) {
                Rational term = Rational(binomial(-j, k)) * algebra::lagrange_coeff(k, 0, d);
                total += k % 2 ? Rational(-c * term) : Rational(c * term);
            }
        }
    }
    return total;
}

algebra::Series to_x_series(const WExpr& e, int max_degree)
{
    const auto space = algebra::x_space(max_degree);
    const algebra::Series w = algebra::tree_function(max_degree);
    const algebra::Series one = algebra::Series::constant(space, 1);
    const algebra::Series one_minus_w = one - w;
    const algebra::Series W = algebra::pow_unit(one_minus_w, Rational(-1));
    auto power_of_W = [&](int j) { return j >= 0 ? algebra::pow(W, j) : algebra::pow(one_minus_w, -j); };
    algebra::Series out(space);
    for (const auto& [j, c] : e.laurent()) {
        out += power_of_W(j) * c;
    }
    if (e.has_log()) {
        const algebra::Series log_W = -algebra::log(one_minus_w);
        algebra::Series q(space);
        for (const auto& [j, c] : e.logpart()) {
            q += power_of_W(j) * c;
        }
        out += log_W * q;
    }
    return out;
}

}  // namespace hurwitzkit::simple
