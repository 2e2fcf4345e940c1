#pragma once

// Truncated multivariate formal power series over the rationals.
//
// A series lives in a SeriesSpace: a fixed list of named variables plus a set
// of weighted degree caps. A monomial is retained iff its weighted degree is
// within every cap. Caps must use non-negative weights, and a variable with a
// positive weight in some cap may never carry a negative exponent; under those
// two rules the retained monomials form the complement of an ideal, so every
// ring operation on truncated values is exact on the retained part.
// Variables with zero weight everywhere (e.g. the genus marker y) may carry
// negative exponents.

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hurwitzkit/rational.hpp"

namespace hurwitzkit::algebra {

inline constexpr std::size_t kMaxVariables = 32;

/// Mixing arithmetic between different spaces.
class SpaceMismatch : public Error {
public:
    using Error::Error;
};

/// A fixed-point functional failed to stabilise a graded slice.
class DivergenceError : public Error {
public:
    using Error::Error;
};

class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    bool operator==(const VarSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

/// "p1", ..., "pN".
std::vector<std::string> part_variables(int count);
/// "t0", ..., "tM".
std::vector<std::string> descendant_variables(int max_index);

struct Monomial {
    std::array<std::int8_t, kMaxVariables> exps{};

    int operator[](std::size_t i) const { return exps[i]; }
    bool is_constant() const;
    auto operator<=>(const Monomial&) const = default;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept
    {
        std::uint64_t words[kMaxVariables / 8];
        std::memcpy(words, m.exps.data(), sizeof(words));
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : words) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

/// "x^3*p1*p2^2"; "1" for the constant monomial.
std::string to_string(const VarSet& vars, const Monomial& m);

/// Component-wise sum; throws if an exponent leaves the int8 range.
Monomial operator+(const Monomial& a, const Monomial& b);

struct DegreeCap {
    std::string label;
    std::vector<int> weights;  // one per variable, all >= 0
    int max_degree = 0;
};

class SeriesSpace {
public:
    SeriesSpace(VarSet vars, std::vector<DegreeCap> caps);

    /// Builds a cap from {variable name -> weight}; unspecified weights are 0.
    DegreeCap make_cap(std::string label, const std::vector<std::pair<std::string, int>>& weights,
                       int max_degree) const;

    const VarSet& vars() const { return vars_; }
    const std::vector<DegreeCap>& caps() const { return caps_; }
    std::size_t cap_index(std::string_view label) const;
    int degree(const Monomial& m, std::size_t cap) const;
    bool admits(const Monomial& m) const;
    /// Throws PreconditionError when a negative exponent sits on a capped variable.
    void check_exponents(const Monomial& m) const;

    /// Same variables, caps lowered so that the result of differentiating in
    /// `var` is exact on every retained monomial.
    std::shared_ptr<const SeriesSpace> after_derivative(std::size_t var) const;
    /// Same variables and caps except the named one, whose bound becomes `max_degree`.
    std::shared_ptr<const SeriesSpace> with_cap(std::string_view label, int max_degree) const;

    bool operator==(const SeriesSpace& other) const;

private:
    VarSet vars_;
    std::vector<DegreeCap> caps_;
};

using SpacePtr = std::shared_ptr<const SeriesSpace>;

SpacePtr make_space(std::vector<std::string> names,
                    const std::vector<std::tuple<std::string, std::vector<std::pair<std::string, int>>, int>>& caps);

class Series {
public:
    using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

    explicit Series(SpacePtr space);

    static Series zero(SpacePtr space) { return Series(std::move(space)); }
    static Series constant(SpacePtr space, const Rational& c);
    static Series variable(SpacePtr space, std::string_view name);
    /// c * prod name^exp; silently zero when the monomial is truncated away.
    static Series monomial(SpacePtr space, const std::vector<std::pair<std::string, int>>& exps,
                           const Rational& c = 1);

    const SpacePtr& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Monomial& m) const;
    Rational coeff(const std::vector<std::pair<std::string, int>>& exps) const;
    Rational constant_term() const;

    /// Adds c to the coefficient of m (dropped if m is outside the truncation).
    void add_term(const Monomial& m, const Rational& c);

    /// Terms sorted lexicographically by exponent vector.
    std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const Rational& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }
    friend Series operator-(Series a) { return a *= Rational(-1); }
    friend Series operator*(const Series& a, const Series& b);

    bool operator==(const Series& other) const;

    /// Degree-`n` part with respect to cap `cap`.
    Series slice(std::size_t cap, int n) const;
    /// Splits into homogeneous parts 0..max_degree of cap `cap`.
    std::vector<Series> slices(std::size_t cap) const;

private:
    void require_same_space(const Series& other) const;

    SpacePtr space_;
    TermMap terms_;
};

enum class ArithOp { add, mul, scale };

/// Dispatching form of the ring operations; `scalar` is used only for `scale`.
Series series_arith(const Series& a, const Series& b, ArithOp op, const Rational& scalar = 1);

/// Truncated exponential. Requires zero constant term and every other term of
/// positive degree in `cap`.
Series exp(const Series& f, std::size_t cap = 0);
/// Truncated logarithm. Requires constant term 1 and every other term of
/// positive degree in `cap`.
Series log(const Series& f, std::size_t cap = 0);
/// f^a for a rational exponent; same preconditions as log.
Series pow_unit(const Series& f, const Rational& a, std::size_t cap = 0);
/// f^n for a non-negative integer n (no constant-term requirement).
Series pow(const Series& f, int n);

enum class ExpLogOp { exp, log };
Series series_exp_log(const Series& f, ExpLogOp op, std::size_t cap = 0);

/// d/dvar. The result lives in space()->after_derivative(var).
Series derivative(const Series& f, std::string_view var);
/// var * d/dvar (degree preserving, same space).
Series euler(const Series& f, std::string_view var);
/// Multiplies by var^k (k may be negative for uncapped variables).
Series shift(const Series& f, std::string_view var, int k);

/// Drops terms not admitted by `target` (same variables required).
Series restrict_to(const Series& f, SpacePtr target);

/// Ring homomorphism: variable i of f's space is sent to images[i] (a series in
/// `target`). Variables that occur in f must have an image.
Series substitute(const Series& f, SpacePtr target, std::span<const std::optional<Series>> images);
/// Convenience overload keyed by variable name; unnamed variables of f must not occur.
Series substitute(const Series& f, SpacePtr target, const std::vector<std::pair<std::string, Series>>& images);

/// Solves S = rhs(S) for the unique solution with zero constant term, one
/// graded slice (of cap `cap`) per iteration. rhs must strictly raise degree.
Series solve_graded_fixpoint(const std::function<Series(const Series&)>& rhs, SpacePtr space,
                             std::size_t cap = 0);

/// JSON list of {"exponents": {var: int}, "coeff": "num/den"} in lexicographic order.
nlohmann::json to_json(const Series& f);
Series series_from_json(const nlohmann::json& j, SpacePtr space);

}  // namespace hurwitzkit::algebra
