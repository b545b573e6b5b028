#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace toric::cli {

enum class Format { Json, Table };

struct RunConfig {
    std::string input;
    std::string command;
    Format format = Format::Json;
    std::size_t fiber_cap = 1'000'000;
    std::size_t spair_budget = 1'000'000;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> max_enumeration;
    bool paranoid = false;
};

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,
    kMalformedInput = 2,
    kNotPointed = 3,
    kResourceCap = 4,
};

/// Entry point shared by the executable and the tests. `args` includes the
/// program name. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
