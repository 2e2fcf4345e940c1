#pragma once

#include <optional>
#include <string>

namespace hurwitzkit::cli {

enum ExitCode : int {
    kOk = 0,
    kError = 1,
    kVerificationFailed = 2,
    kBudgetExceeded = 3,
    kMalformedFamily = 4,
    kUsage = 64,
};

struct JobConfig {
    std::string command;
    int g = 0;
    std::string alpha;
    std::string theta;
    int k = 0;
    std::string method;
    std::optional<int> d_max;
    std::optional<int> g_max;
    std::optional<int> r_max;
    std::string suite = "all";
    std::string family;
    std::string format = "json";
    std::string out;
};

/// Runs one command; output goes to config.out or stdout.
int run(const JobConfig& config);

}  // namespace hurwitzkit::cli
