#pragma once

#include <cstddef>
#include <string>

namespace hurwitzkit {

/// Resource limits for the brute-force and series computations.
struct Budget {
    int oracle_max_degree = 7;
    int oracle_max_steps = 20;
    std::size_t memory_mb = 2048;

    /// Defaults, with memory_mb overridden by HURWITZKIT_MEMORY_MB when set.
    static Budget from_environment();

    /// Throws BudgetExceeded when `bytes` exceeds memory_mb.
    void require_memory(double bytes, const std::string& what) const;
};

inline constexpr const char* kMemoryBudgetVariable = "HURWITZKIT_MEMORY_MB";

}  // namespace hurwitzkit
