#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ducci/census.hpp"
#include "ducci/dynamics.hpp"

namespace ducci {

enum class Verdict { confirmed, refuted, out_of_scope };

const char* to_string(Verdict v);

/// A replayable witness. `kind` names the API path that reproduces it:
///   "seed"  - `seed` is a RationalState text; replay with trajectory / find_cycle.
///   "state" - `seed` is a PState text; replay with ducci_p_symbolic_step / project_mod2.
///   "scale" - `seed` is a RationalState text and `scalar` the factor; replay with scale_seed.
struct Counterexample {
    std::string kind;
    std::uint64_t p;
    std::string seed;
    std::optional<std::string> scalar;
    std::vector<std::string> trace; // "label: value" lines
};

struct ClaimReport {
    std::string id;
    std::string statement;
    Verdict verdict = Verdict::confirmed;
    std::optional<Counterexample> counterexample;
    std::uint64_t samples_tested = 0;
    std::vector<std::string> notes;
};

struct VerifyConfig {
    std::vector<std::uint64_t> primes{3};
    std::vector<std::size_t> lengths{2, 3, 4};
    std::int64_t bound = 1;                 // exponent window for state sweeps and the census
    std::int64_t sweep_value_bound = 3;     // integer seeds in [0, v]^n for the C2, C3 and classical sweeps
    std::uint64_t homogeneity_samples = 10'000;
    std::uint64_t periodicity_samples = 1'000;
    std::int64_t random_value_bound = 1000; // |numerator|, denominator for random seeds
    std::size_t random_max_length = 6;
    std::uint64_t max_steps = kDefaultMaxSteps;
    std::uint64_t census_cap = 1'000'000;
    std::uint64_t rng_seed = 0x5eed;
    std::vector<std::string> claims{"C1", "C2", "C3", "C4", "C5", "C6"};
};

inline const std::vector<std::string>& known_claims() {
    static const std::vector<std::string> ids{"C1", "C2", "C3", "C4", "C5", "C6"};
    return ids;
}

/// One report per requested claim, in C1..C6 order. "C2" also yields "C2-corrected".
/// Throws std::invalid_argument on an unknown claim id or an empty prime/length list.
std::vector<ClaimReport> verify_claims(const VerifyConfig& config);

// Individual verifiers, exposed for tests.
ClaimReport verify_zero_fixed_point(const VerifyConfig& config);
ClaimReport verify_homogeneity_literal(const VerifyConfig& config);
ClaimReport verify_homogeneity_corrected(const VerifyConfig& config);
ClaimReport verify_integral_seeds_vanish(const VerifyConfig& config);
ClaimReport verify_eventual_periodicity(const VerifyConfig& config);
ClaimReport verify_mod2_reduction(const VerifyConfig& config);
ClaimReport verify_power_of_two_collapse(const VerifyConfig& config);

/// Uniform random rational seed: length in [1, max_length], |num| and den in [.., value_bound].
RationalState random_seed(std::mt19937_64& rng, Prime p, std::size_t max_length,
                          std::int64_t value_bound);

} // namespace ducci
