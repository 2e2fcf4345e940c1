#pragma once

// Pinned reference constants (data/golden.json, compiled into the library).

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hurwitzkit/recurrence.hpp"
#include "hurwitzkit/wexpr.hpp"

namespace hurwitzkit::golden {

const nlohmann::json& data();

std::vector<simple::RecurrenceSpec> recurrences();
simple::RecurrenceSpec recurrence(const std::string& name);

std::vector<simple::DifferentialIdentity> identities();
simple::DifferentialIdentity identity(const std::string& name);

/// sum c w^l / (1 - w)^e from the pinned display of H~_g (g = 2, 3).
simple::WExpr w_series(int g);

/// c_k with H~_3 = sum c_k W^k.
std::map<int, Rational> a_form_coefficients();

/// Ascending coefficients of the pinned P_3(r).
std::vector<Rational> p3_polynomial();

}  // namespace hurwitzkit::golden
