#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ducci::cli {

enum class Format { json, csv, plain };

struct RunConfig {
    std::string subcommand;
    std::uint64_t p = 3;
    std::optional<std::string> seed;  // RationalState text
    std::optional<std::string> state; // PState text (step only)
    std::size_t n = 3;
    std::int64_t bound = 1;
    std::size_t k = 10;
    std::uint64_t max_steps = 1'000'000;
    std::uint64_t samples = 10'000;
    std::uint64_t seeds = 1'000;
    std::vector<std::uint64_t> primes;
    std::uint64_t census_cap = 100'000'000;
    std::uint64_t step_cap = 10'000;
    unsigned workers = 0;
    std::vector<std::string> claims;
    Format format = Format::json;
    bool meta = true;
};

/// Bad flags or values. The message is printed and the process exits with 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Help was requested; the text is carried as the message and the exit status is 0.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;

/// argv[0] is the program name. Validates every value before returning.
RunConfig parse_args(const std::vector<std::string>& argv);

/// Runs the subcommand and writes the report to `out`. Returns the exit status.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + dispatch with the exit-status mapping.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace ducci::cli
