#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fusionobs::cli {

enum class Format { Json, Csv };

enum ExitCode : int {
    kOk = 0,
    kInvalidRing = 1,
    kParseError = 2,
    kNegativeVerdict = 3,
    kBoundsExceeded = 4,
};

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;  // "-" reads standard input
    std::optional<std::string> output;
    std::optional<Format> format;     // per-command default when unset
    bool verify_oracle = false;
    std::size_t rank = 2;
    std::int64_t max_entry = 2;
    bool identity = false;
    std::size_t jobs = 1;
    std::optional<std::int64_t> ne_case;
    std::size_t degree = 4;
    std::int64_t max_m = 6;
    std::int64_t max_n = 6;
};

inline constexpr std::int64_t kMaxClassifyRange = 16;

const std::vector<std::string>& commands();

/// Runs one command. Reports go to `out` (or config.output), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace fusionobs::cli
