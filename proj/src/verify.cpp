#include "ducci/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "ducci/errors.hpp"

namespace ducci {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted";
    case Verdict::out_of_scope: return "out-of-scope";
    }
    return "unknown";
}

namespace {

std::vector<Prime> primes_of(const VerifyConfig& config) {
    if (config.primes.empty()) throw std::invalid_argument("verify: empty prime list");
    std::vector<Prime> out;
    for (auto p : config.primes) out.emplace_back(p);
    return out;
}

const std::vector<std::size_t>& lengths_of(const VerifyConfig& config) {
    if (config.lengths.empty()) throw std::invalid_argument("verify: empty length list");
    for (auto n : config.lengths)
        if (n == 0) throw std::invalid_argument("verify: tuple lengths must be >= 1");
    return config.lengths;
}

// Calls fn(seed) for every integer seed in [0, v]^n, entry 0 varying fastest.
// fn returns false to stop early.
template <class Fn>
void for_each_integer_seed(std::size_t n, std::int64_t v, Prime p, Fn&& fn) {
    std::vector<std::int64_t> digits(n, 0);
    while (true) {
        RationalState seed{{}, p};
        for (auto d : digits) seed.entries.emplace_back(static_cast<long>(d));
        if (!fn(seed)) return;
        std::size_t i = 0;
        while (i < n && digits[i] == v) digits[i++] = 0;
        if (i == n) return;
        ++digits[i];
    }
}

bool is_power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

std::string label(const std::string& name, const std::string& value) { return name + ": " + value; }

// The representable part of Z_p: remove every factor p from the denominator.
Rational integral_part(const Rational& x, Prime p) {
    BigInt den;
    const BigInt big_p(static_cast<unsigned long>(p.value()));
    mpz_remove(den.get_mpz_t(), x.denominator().get_mpz_t(), big_p.get_mpz_t());
    return Rational(x.numerator(), den);
}

} // namespace

RationalState random_seed(std::mt19937_64& rng, Prime p, std::size_t max_length, std::int64_t value_bound) {
    std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(1, max_length));
    std::uniform_int_distribution<std::int64_t> numerator(-value_bound, value_bound);
    std::uniform_int_distribution<std::int64_t> denominator(1, std::max<std::int64_t>(1, value_bound));
    RationalState seed{{}, p};
    const std::size_t n = length(rng);
    for (std::size_t i = 0; i < n; ++i)
        seed.entries.emplace_back(BigInt(static_cast<long>(numerator(rng))), BigInt(static_cast<long>(denominator(rng))));
    return seed;
}

// C1
ClaimReport verify_zero_fixed_point(const VerifyConfig& config) {
    ClaimReport report{"C1", "D_p maps the all-zero tuple to itself", Verdict::confirmed, std::nullopt, 0, {}};
    for (Prime p : primes_of(config)) {
        for (std::size_t n : lengths_of(config)) {
            RationalState zero{std::vector<Rational>(n), p};
            const PState image = ducci_p_seed_step(zero);
            const PState symbolic = ducci_p_symbolic_step(PState{std::vector<PElement>(n, PElement::zero()), p});
            ++report.samples_tested;
            if (!image.is_all_zero() || !symbolic.is_all_zero()) {
                report.verdict = Verdict::refuted;
                report.counterexample = Counterexample{"seed", p.value(), to_string(zero), std::nullopt,
                                                       {label("image", to_string(image))}};
                return report;
            }
        }
    }
    return report;
}

// C2, literal form: D_p(a*alpha) = a * D_p(alpha) as exact rationals.
ClaimReport verify_homogeneity_literal(const VerifyConfig& config) {
    ClaimReport report{"C2", "D_p(a*alpha) = a*D_p(alpha) for every scalar a", Verdict::confirmed, std::nullopt, 0, {}};

    auto check = [&](const Rational& a, const RationalState& alpha) {
        ++report.samples_tested;
        const PState lhs = ducci_p_seed_step(scale_seed(a, alpha));
        const RationalState lhs_value = materialize(lhs);
        const RationalState rhs_value = scale_seed(a, materialize(ducci_p_seed_step(alpha)));
        if (lhs_value == rhs_value) return true;
        report.verdict = Verdict::refuted;
        report.counterexample = Counterexample{
            "scale", alpha.prime.value(), to_string(alpha), a.to_string(),
            {label("D_p(a*alpha)", to_string(lhs) + " = " + to_string(lhs_value)),
             label("a*D_p(alpha)", to_string(rhs_value))}};
        return false;
    };

    const auto primes = primes_of(config);
    for (Prime p : primes)
        if (!check(Rational(2), RationalState{{Rational(1), Rational(0)}, p})) return report;

    std::vector<Rational> scalars{Rational(2), Rational(3), Rational(-1), Rational(BigInt(1), BigInt(2))};
    for (Prime p : primes)
        for (const Rational& a : scalars)
            for (std::size_t n : lengths_of(config)) {
                bool keep_going = true;
                for_each_integer_seed(n, config.sweep_value_bound, p, [&](const RationalState& alpha) {
                    keep_going = check(a, alpha);
                    return keep_going;
                });
                if (!keep_going) return report;
            }
    return report;
}

// C2, corrected form: D_p(a*alpha) = |a|_p * D_p(alpha), i.e. a shift by ord_p(a).
ClaimReport verify_homogeneity_corrected(const VerifyConfig& config) {
    ClaimReport report{"C2-corrected", "D_p(a*alpha) = |a|_p * D_p(alpha) for every nonzero scalar a",
                       Verdict::confirmed, std::nullopt, 0, {}};
    const auto primes = primes_of(config);
    std::mt19937_64 rng(config.rng_seed ^ 0xc2);
    std::uniform_int_distribution<std::int64_t> num(-config.random_value_bound, config.random_value_bound);
    std::uniform_int_distribution<std::int64_t> den(1, std::max<std::int64_t>(1, config.random_value_bound));
    for (std::uint64_t i = 0; i < config.homogeneity_samples; ++i) {
        const Prime p = primes[i % primes.size()];
        Rational a;
        while (a.is_zero()) a = Rational(BigInt(static_cast<long>(num(rng))), BigInt(static_cast<long>(den(rng))));
        const RationalState alpha = random_seed(rng, p, config.random_max_length, config.random_value_bound);
        ++report.samples_tested;
        const PState lhs = ducci_p_seed_step(scale_seed(a, alpha));
        const PState rhs = shift_state(ord(a, p), ducci_p_seed_step(alpha));
        if (lhs != rhs) {
            report.verdict = Verdict::refuted;
            report.counterexample = Counterexample{"scale", p.value(), to_string(alpha), a.to_string(),
                                                   {label("D_p(a*alpha)", to_string(lhs)),
                                                    label("|a|_p*D_p(alpha)", to_string(rhs))}};
            return report;
        }
    }
    return report;
}

namespace {

std::vector<std::string> orbit_trace(const RationalState& seed, const CycleReport& cycle, std::size_t max_states = 12) {
    std::vector<std::string> trace;
    const std::size_t shown = std::min<std::size_t>(max_states, cycle.preperiod + cycle.period + 1);
    const Trajectory t = trajectory(seed, shown - 1);
    trace.push_back(label("alpha^(0)", to_string(seed)));
    for (std::size_t k = 1; k < t.size(); ++k)
        trace.push_back(label("alpha^(" + std::to_string(k) + ")", to_string(t.images[k - 1])));
    trace.push_back(label("preperiod", std::to_string(cycle.preperiod)));
    trace.push_back(label("period", std::to_string(cycle.period)));
    return trace;
}

std::optional<CycleReport> try_find_cycle(const RationalState& seed, std::uint64_t max_steps) {
    try {
        return find_cycle(seed, max_steps);
    } catch (const BudgetError&) {
        return std::nullopt;
    }
}

bool leaves_unit_values(const RationalState& seed, const CycleReport& cycle) {
    // Does some alpha^(k), k >= 1, hold a value outside {0, 1}?
    const Trajectory t = trajectory(seed, cycle.preperiod + cycle.period);
    for (const PState& s : t.images)
        for (PElement e : s.entries)
            if (!e.is_zero() && e.exponent() != 0) return true;
    return false;
}

} // namespace

// C3: seeds in Z_p (denominators prime to p) are absorbed by the zero tuple.
ClaimReport verify_integral_seeds_vanish(const VerifyConfig& config) {
    ClaimReport report{"C3", "every seed in Z_p^n reaches the all-zero tuple, a fixed point of period 1",
                       Verdict::confirmed, std::nullopt, 0, {}};
    std::uint64_t failures = 0;
    std::uint64_t budget_skips = 0;
    std::uint64_t non_unit = 0;

    auto check = [&](const RationalState& seed) {
        const auto found = try_find_cycle(seed, config.max_steps);
        if (!found) {
            ++budget_skips;
            return;
        }
        const CycleReport& cycle = *found;
        ++report.samples_tested;
        if (leaves_unit_values(seed, cycle)) ++non_unit;
        if (cycle.period == 1 && cycle.witness.is_all_zero()) return;
        ++failures;
        if (!report.counterexample) {
            report.verdict = Verdict::refuted;
            report.counterexample = Counterexample{"seed", seed.prime.value(), to_string(seed), std::nullopt,
                                                   orbit_trace(seed, cycle)};
        }
    };

    const auto primes = primes_of(config);
    // (0, 1, p): two unit differences and one of norm 1/p.
    for (Prime p : primes) check(RationalState{{Rational(0), Rational(1), Rational(static_cast<long>(p.value()))}, p});
    for (Prime p : primes)
        for (std::size_t n : lengths_of(config))
            for_each_integer_seed(n, config.sweep_value_bound, p, [&](const RationalState& s) {
                check(s);
                return true;
            });
    std::mt19937_64 rng(config.rng_seed ^ 0xc3);
    for (std::uint64_t i = 0; i < config.periodicity_samples; ++i) {
        const Prime p = primes[i % primes.size()];
        RationalState seed = random_seed(rng, p, config.random_max_length, config.random_value_bound);
        for (Rational& x : seed.entries) x = integral_part(x, p);
        check(seed);
    }

    report.notes.push_back(std::to_string(failures) + " of " + std::to_string(report.samples_tested) +
                           " integral seeds end on a cycle other than the zero fixed point");
    report.notes.push_back(std::to_string(non_unit) + " of " + std::to_string(report.samples_tested) +
                           " integral seeds have an iterate with an entry outside {0, 1}");
    if (budget_skips)
        report.notes.push_back(std::to_string(budget_skips) + " seeds skipped: no repeat within max_steps");
    return report;
}

// C4: every trajectory is eventually periodic.
ClaimReport verify_eventual_periodicity(const VerifyConfig& config) {
    ClaimReport report{"C4", "every p-adic Ducci sequence is eventually periodic", Verdict::confirmed, std::nullopt,
                       0, {}};
    const auto primes = primes_of(config);
    std::mt19937_64 rng(config.rng_seed ^ 0xc4);
    std::uint64_t budget_skips = 0;
    std::uint64_t literal_checks = 0;
    std::uint64_t literal_failures = 0;
    std::uint64_t negative_difference = 0;
    std::uint64_t max_period = 0;
    std::uint64_t max_preperiod = 0;

    for (std::uint64_t i = 0; i < config.periodicity_samples; ++i) {
        const Prime p = primes[i % primes.size()];
        const RationalState seed = random_seed(rng, p, config.random_max_length, config.random_value_bound);
        const auto found = try_find_cycle(seed, config.max_steps);
        if (!found) {
            ++budget_skips;
            continue;
        }
        const CycleReport& cycle = *found;
        ++report.samples_tested;
        max_period = std::max(max_period, cycle.period);
        max_preperiod = std::max(max_preperiod, cycle.preperiod);
        if (cycle.preperiod < cycle.period) ++negative_difference;

        bool ok = replay_check(cycle, seed);
        for (std::uint64_t k = 0; ok && k < cycle.period && k < 3; ++k)
            ok = cycle_structure_check(cycle, seed, k, 2);
        for (std::uint64_t k = 0; k < cycle.period && k < 3; ++k) {
            ++literal_checks;
            if (!cycle_structure_literal_check(cycle, seed, k, 2)) ++literal_failures;
        }
        if (!ok && !report.counterexample) {
            report.verdict = Verdict::refuted;
            report.counterexample = Counterexample{"seed", p.value(), to_string(seed), std::nullopt,
                                                   orbit_trace(seed, cycle)};
        }
    }
    report.notes.push_back("largest period " + std::to_string(max_period) + ", largest preperiod " +
                           std::to_string(max_preperiod));
    report.notes.push_back("cycle length is reported as the period s; r - s is negative for " +
                           std::to_string(negative_difference) + " of " + std::to_string(report.samples_tested) +
                           " seeds");
    report.notes.push_back("index relation alpha^(r+s+i*h) = alpha^(r+i) (h = 2) fails in " +
                           std::to_string(literal_failures) + " of " + std::to_string(literal_checks) +
                           " checks; alpha^(r+i+h*s) = alpha^(r+i) is what periodicity gives");
    if (budget_skips)
        report.notes.push_back(std::to_string(budget_skips) + " seeds skipped: no repeat within max_steps");
    return report;
}

// C5: parity of D_p(s) equals the XOR Ducci image of the parity of s.
ClaimReport verify_mod2_reduction(const VerifyConfig& config) {
    ClaimReport report{"C5", "project_mod2 commutes with the step: project(D_p(s)) = xor_ducci(project(s))",
                       Verdict::confirmed, std::nullopt, 0, {}};
    std::vector<Prime> odd;
    for (Prime p : primes_of(config))
        if (p.is_odd()) odd.push_back(p);
        else report.notes.push_back("p = 2 skipped: powers of 2 are even, so the parity argument does not apply");
    if (odd.empty()) {
        report.verdict = Verdict::out_of_scope;
        return report;
    }

    std::uint64_t failures = 0;
    auto check = [&](const PState& s) {
        ++report.samples_tested;
        const PState image = ducci_p_symbolic_step(s);
        const BitState projected_image = project_mod2(image);
        const BitState xor_image = xor_ducci(project_mod2(s));
        if (projected_image == xor_image) return;
        ++failures;
        if (report.counterexample) return;
        report.verdict = Verdict::refuted;
        report.counterexample = Counterexample{
            "state", s.prime.value(), to_string(s), std::nullopt,
            {label("D_p(state)", to_string(image)), label("project_mod2(D_p(state))", to_string(projected_image)),
             label("project_mod2(state)", to_string(project_mod2(s))),
             label("xor_ducci(project_mod2(state))", to_string(xor_image))}};
    };

    // (p, p^2): distinct nonzero powers, the case the parity argument overlooks.
    for (Prime p : odd) check(PState{{PElement::pow(1), PElement::pow(2)}, p});
    std::uint64_t swept = 0;
    for (Prime p : odd)
        for (std::size_t n : lengths_of(config)) {
            std::uint64_t count;
            try {
                count = census_state_count(n, config.bound, config.census_cap);
            } catch (const BudgetError&) {
                report.notes.push_back("n = " + std::to_string(n) + " sweep skipped: state space over the cap");
                continue;
            }
            for (std::uint64_t index = 0; index < count; ++index) check(census_state(index, n, p, config.bound));
            swept += count;
        }
    report.notes.push_back(std::to_string(failures) + " of " + std::to_string(report.samples_tested) +
                           " P-states violate the congruence (" + std::to_string(swept) + " from the exhaustive sweep)");
    return report;
}

// C6: for n a power of two every trajectory reaches the zero tuple.
ClaimReport verify_power_of_two_collapse(const VerifyConfig& config) {
    ClaimReport report{"C6", "for n a power of two every p-adic Ducci sequence reaches the all-zero tuple",
                       Verdict::confirmed, std::nullopt, 0, {}};
    std::vector<std::size_t> lengths;
    for (std::size_t n : lengths_of(config))
        if (is_power_of_two(n)) lengths.push_back(n);
    if (lengths.empty()) {
        report.verdict = Verdict::out_of_scope;
        report.notes.push_back("no power-of-two tuple length requested");
        return report;
    }
    for (Prime p : primes_of(config))
        for (std::size_t n : lengths) {
            std::optional<CensusRecord> record;
            try {
                record = enumerate_census(n, p, config.bound, config.census_cap);
            } catch (const BudgetError&) {
                report.notes.push_back("n = " + std::to_string(n) + " census skipped: state space over the cap");
                continue;
            }
            const CensusRecord& census = *record;
            report.samples_tested += census.state_count;
            std::string scope = "p = " + std::to_string(p.value()) + ", n = " + std::to_string(n) +
                                ", exponents in [-" + std::to_string(config.bound) + ", " +
                                std::to_string(config.bound) + "]: ";
            if (census.all_collapse_to_zero) {
                report.notes.push_back(scope + "all " + std::to_string(census.state_count) +
                                       " states collapse, max preperiod " + std::to_string(census.max_preperiod));
                continue;
            }
            report.notes.push_back(scope + std::to_string(census.attractors.size()) + " attractors");
            if (!report.counterexample) {
                const auto it = std::find_if(census.attractors.begin(), census.attractors.end(),
                                             [](const Attractor& a) { return a.period > 1; });
                const Attractor& bad = it != census.attractors.end() ? *it : census.attractors.back();
                report.verdict = Verdict::refuted;
                std::vector<std::string> trace;
                PState s = parse_pstate(bad.representative, p);
                for (std::uint64_t k = 0; k <= bad.period; ++k, s = ducci_p_symbolic_step(s))
                    trace.push_back(label("D_p^" + std::to_string(k), to_string(s)));
                trace.push_back(label("period", std::to_string(bad.period)));
                trace.push_back(label("basin_size", std::to_string(bad.basin_size)));
                report.counterexample = Counterexample{"state", p.value(), bad.representative, std::nullopt,
                                                       std::move(trace)};
            }
        }
    // Classical map on the same lengths, for contrast.
    for (std::size_t n : lengths) {
        if (n < 2) continue;
        try {
            const auto classical = classical_collapse_check(n, config.sweep_value_bound, 10'000, config.census_cap);
            report.notes.push_back("classical map, n = " + std::to_string(n) + ", seeds in [0, " +
                                   std::to_string(config.sweep_value_bound) + "]^n: " +
                                   std::to_string(classical.violations.size()) + " violations, max steps " +
                                   std::to_string(classical.max_steps_to_zero));
        } catch (const BudgetError&) {
        }
    }
    report.notes.push_back("verdict covers only the enumerated windows");
    return report;
}

std::vector<ClaimReport> verify_claims(const VerifyConfig& config) {
    for (const auto& id : config.claims)
        if (std::find(known_claims().begin(), known_claims().end(), id) == known_claims().end())
            throw std::invalid_argument("unknown claim '" + id + "' (expected C1..C6)");
    primes_of(config);
    lengths_of(config);

    auto wanted = [&](const char* id) {
        return std::find(config.claims.begin(), config.claims.end(), id) != config.claims.end();
    };
    std::vector<ClaimReport> reports;
    if (wanted("C1")) reports.push_back(verify_zero_fixed_point(config));
    if (wanted("C2")) {
        reports.push_back(verify_homogeneity_literal(config));
        reports.push_back(verify_homogeneity_corrected(config));
    }
    if (wanted("C3")) reports.push_back(verify_integral_seeds_vanish(config));
    if (wanted("C4")) reports.push_back(verify_eventual_periodicity(config));
    if (wanted("C5")) reports.push_back(verify_mod2_reduction(config));
    if (wanted("C6")) reports.push_back(verify_power_of_two_collapse(config));
    return reports;
}

} // namespace ducci
