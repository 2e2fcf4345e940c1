#pragma once

// The ring Q[W, 1/W] + Q[W, 1/W] log W in which the simple Hurwitz series
// live after the substitution w = 1 - 1/W, with D = x d/dx = W^2 (W - 1) d/dW.

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "hurwitzkit/rational.hpp"
#include "hurwitzkit/series.hpp"

namespace hurwitzkit::simple {

class WExpr {
public:
    using Terms = std::map<int, Rational>;  // exponent of W -> coefficient

    WExpr() = default;
    WExpr(Terms laurent, Terms logpart);

    static WExpr constant(const Rational& c) { return monomial(0, c); }
    static WExpr monomial(int exponent, const Rational& c = 1);
    /// log W
    static WExpr log_w();
    /// Polynomial in W from ascending coefficients.
    static WExpr polynomial(const std::vector<Rational>& ascending);

    const Terms& laurent() const { return laurent_; }
    const Terms& logpart() const { return logpart_; }
    bool is_zero() const { return laurent_.empty() && logpart_.empty(); }
    bool has_log() const { return !logpart_.empty(); }
    /// Log-free with no negative exponents.
    bool is_polynomial() const;
    /// Largest exponent of W in either slot; requires a nonzero expression.
    int degree() const;
    int min_exponent() const;

    WExpr& operator+=(const WExpr& o);
    WExpr& operator-=(const WExpr& o);
    WExpr& operator*=(const Rational& c);
    friend WExpr operator+(WExpr a, const WExpr& b) { return a += b; }
    friend WExpr operator-(WExpr a, const WExpr& b) { return a -= b; }
    friend WExpr operator*(WExpr a, const Rational& c) { return a *= c; }
    friend WExpr operator*(const Rational& c, WExpr a) { return a *= c; }
    /// Throws PreconditionError if both factors carry log W (log^2 W is outside the ring).
    friend WExpr operator*(const WExpr& a, const WExpr& b);
    bool operator==(const WExpr& o) const = default;

    std::string to_string() const;
    nlohmann::json to_json() const;
    static WExpr from_json(const nlohmann::json& j);

private:
    void prune();
    Terms laurent_;
    Terms logpart_;
};

/// D = W^2 (W - 1) d/dW, with D log W = W^2 - W.
WExpr apply_D(const WExpr& e, int times = 1);

/// D^n H~_g from the base expressions (D H~_0, H~_1, H~_2, H~_3) by repeated D.
/// Throws PreconditionError for (0, 0) and for g > 3.
WExpr wexpr_for(int g, int n);

/// Base expression for H~_g (g = 1, 2, 3) or D H~_0 (g = 0).
WExpr base_wexpr(int g);

/// [x^d] of e with W = 1/(1 - w), w = x e^w, via the Lagrange closed form.
/// Throws PreconditionError on log-bearing input; requires d >= 1.
Rational extract_coeff(const WExpr& e, int d);

/// A_k(d) = (k/d) sum_(r=0)^(d-1) C(k+r, k) d^(d-r-1)/(d-r-1)!.
Rational A_k(int k, int d);

/// e as a truncated series in x (log W = -log(1 - w) allowed).
algebra::Series to_x_series(const WExpr& e, int max_degree);

/// w^l / (1 - w)^e = (W - 1)^l W^(e - l).
WExpr w_power_over(int l, int e);

}  // namespace hurwitzkit::simple
