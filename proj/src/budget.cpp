#include "hurwitzkit/budget.hpp"

#include <cstdlib>
#include <sstream>

#include "hurwitzkit/rational.hpp"

namespace hurwitzkit {

Budget Budget::from_environment()
{
    Budget b;
    if (const char* raw = std::getenv(kMemoryBudgetVariable)) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || v == 0) {
            throw FormatError(std::string(kMemoryBudgetVariable) + " must be a positive integer (MiB), got '" +
                              raw + "'");
        }
        b.memory_mb = static_cast<std::size_t>(v);
    }
    return b;
}

void Budget::require_memory(double bytes, const std::string& what) const
{
    const double limit = static_cast<double>(memory_mb) * 1024.0 * 1024.0;
    if (bytes > limit) {
        std::ostringstream msg;
        msg << what << " needs about " << static_cast<long long>(bytes / (1024.0 * 1024.0)) << " MiB, budget is "
            << memory_mb << " MiB (" << kMemoryBudgetVariable << ")";
        throw BudgetExceeded(msg.str());
    }
}

}  // namespace hurwitzkit
