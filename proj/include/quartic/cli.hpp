#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quartic/common.hpp"

namespace quartic {

/// Parsed command line for one invocation. dispatch() validates the numbers
/// against the selected operation's contract before running it.
struct RunConfig {
    std::string subcommand;
    std::string system_path;  // file path, "-" for standard input, or inline JSON
    std::string output_path;  // empty = standard output

    std::optional<i64> P;
    std::optional<i64> R;
    std::vector<int> t_values;
    std::optional<double> X;
    std::optional<i64> search_bound;
    std::optional<i64> prime_bound;
    std::optional<i64> s;
    std::optional<double> tau;  // dissection parameter, validated when given
    std::optional<std::string> entangled;  // "a,b,c,d"
    std::optional<double> predict_X;       // count --predict

    int threads = 0;
    Budget budget;
};

struct DispatchResult {
    int status = 0;  // 0 ok, 2 precondition, 3 budget, 4 theorem violation
    bool has_document = false;
    nlohmann::json document;
    std::string error;
};

/// Runs one subcommand. Emits exactly one JSON document on success;
/// diagnostics go to standard error inside the call.
DispatchResult dispatch(const RunConfig& config);

}  // namespace quartic
