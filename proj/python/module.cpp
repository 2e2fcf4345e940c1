#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "hurwitzkit/cutjoin.hpp"
#include "hurwitzkit/hodge.hpp"
#include "hurwitzkit/oracle.hpp"
#include "hurwitzkit/simple_hurwitz.hpp"
#include "hurwitzkit/suites.hpp"
#include "hurwitzkit/wexpr.hpp"

namespace py = pybind11;
using namespace hurwitzkit;

// Values cross the boundary as "num/den" strings and structured results as
// JSON text; the Python wrapper turns them into Fractions and dicts.

namespace {

HurwitzTable table_for(const std::string& method, int d_max, int g_max)
{
    const Budget budget = Budget::from_environment();
    if (method == "oracle") {
        return oracle::connected_hurwitz(d_max, g_max, budget);
    }
    if (method == "cutjoin") {
        return cutjoin::hurwitz_via_cutjoin(d_max, g_max, -1, budget);
    }
    throw PreconditionError("unknown method '" + method + "' (oracle, cutjoin)");
}

std::string hurwitz_number(int g, const std::vector<int>& alpha, const std::string& method)
{
    const Partition p(alpha);
    if (method == "elsv") {
        hodge::HodgeTable table;
        if (g >= 2) {
            suites::fit_from_cutjoin(g, table, Budget::from_environment());
        }
        return to_string(hodge::elsv_hurwitz(g, p, table));
    }
    return to_string(table_for(method, p.size(), g).at(g, p));
}

std::string hodge_integral(int g, const std::vector<int>& theta, int k)
{
    hodge::HodgeTable table;
    const hodge::HodgeKey key(g, theta, k);
    try {
        return to_string(hodge::evaluate(key, table));
    } catch (const hodge::MissingPrimitive&) {
        suites::fit_from_cutjoin(g, table, Budget::from_environment());
        return to_string(hodge::evaluate(key, table));
    }
}

std::string run_suite(const std::string& name, int d_max, int r_max)
{
    suites::Options options;
    options.d_max = d_max;
    options.r_max = r_max;
    options.budget = Budget::from_environment();
    return suites::run_suite(name, options).to_json().dump();
}

std::string search(const std::string& family_json, int d_check)
{
    const auto family = family_json.empty() ? simple::genus3_family()
                                            : simple::family_from_json(nlohmann::json::parse(family_json));
    const auto table = cutjoin::hurwitz_via_cutjoin(d_check, 3, -1, Budget::from_environment());
    return simple::search_recursions(family, table, d_check).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    // translators run newest first, so the base class goes in first
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_MemoryError);

    m.def("hurwitz_number", &hurwitz_number, py::arg("g"), py::arg("alpha"), py::arg("method") = "cutjoin");
    m.def(
        "hurwitz_table",
        [](int d_max, int g_max, const std::string& method) { return table_for(method, d_max, g_max).to_json().dump(); },
        py::arg("d_max"), py::arg("g_max"), py::arg("method") = "cutjoin");
    m.def("hodge_integral", &hodge_integral, py::arg("g"), py::arg("theta"), py::arg("k") = 0);
    m.def(
        "wexpr",
        [](int g, int n) { return simple::wexpr_for(g, n).to_json().dump(); }, py::arg("g"), py::arg("n"));
    m.def(
        "wexpr_string", [](int g, int n) { return simple::wexpr_for(g, n).to_string(); }, py::arg("g"),
        py::arg("n"));
    m.def(
        "simple_series_coeff",
        [](int g, int n, int d) { return to_string(simple::extract_coeff(simple::wexpr_for(g, n), d)); },
        py::arg("g"), py::arg("n"), py::arg("d"));
    m.def("suite_names", &suites::suite_names);
    m.def("run_suite", &run_suite, py::arg("name"), py::arg("d_max") = -1, py::arg("r_max") = -1);
    m.def("search", &search, py::arg("family_json") = "", py::arg("d_check") = 10);
}
