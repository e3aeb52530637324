#include "ducci/census.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "ducci/errors.hpp"

namespace ducci {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kOnPath = kUnvisited - 1;
constexpr std::uint64_t kMaxIndexable = kOnPath - 1;

} // namespace

FunctionalGraphSummary analyze_functional_graph(std::span<const std::uint32_t> successor) {
    const std::size_t count = successor.size();
    if (count > kMaxIndexable) throw BudgetError("functional graph too large to index with 32 bits");

    std::vector<std::uint32_t> depth(count, kUnvisited);
    std::vector<std::uint32_t> cycle_of(count, 0);
    std::vector<std::uint32_t> path;
    FunctionalGraphSummary summary;

    for (std::uint32_t start = 0; start < count; ++start) {
        if (depth[start] != kUnvisited) continue;
        path.clear();
        std::uint32_t x = start;
        while (depth[x] == kUnvisited) {
            depth[x] = kOnPath;
            path.push_back(x);
            x = successor[x];
        }

        std::uint32_t base_depth;
        std::uint32_t cycle;
        std::size_t tail_len = path.size();
        if (depth[x] == kOnPath) {
            // Closed a new cycle at x.
            std::size_t cycle_begin = 0;
            for (std::size_t j = path.size(); j-- > 0;)
                if (path[j] == x) {
                    cycle_begin = j;
                    break;
                }
            FunctionalGraphSummary::Cycle c;
            c.period = static_cast<std::uint32_t>(path.size() - cycle_begin);
            c.members.assign(path.begin() + static_cast<std::ptrdiff_t>(cycle_begin), path.end());
            std::rotate(c.members.begin(), std::min_element(c.members.begin(), c.members.end()), c.members.end());
            c.basin_size = 0;
            cycle = static_cast<std::uint32_t>(summary.cycles.size());
            summary.cycles.push_back(std::move(c));
            for (std::size_t j = cycle_begin; j < path.size(); ++j) {
                depth[path[j]] = 0;
                cycle_of[path[j]] = cycle;
            }
            tail_len = cycle_begin;
            base_depth = 0;
        } else {
            base_depth = depth[x];
            cycle = cycle_of[x];
        }
        for (std::size_t j = 0; j < tail_len; ++j) {
            depth[path[j]] = base_depth + static_cast<std::uint32_t>(tail_len - j);
            cycle_of[path[j]] = cycle;
        }
        if (tail_len > 0) summary.max_preperiod = std::max(summary.max_preperiod, depth[path[0]]);
        summary.cycles[cycle].basin_size += path.size();
    }

    std::sort(summary.cycles.begin(), summary.cycles.end(),
              [](const auto& a, const auto& b) { return a.members.front() < b.members.front(); });
    return summary;
}

namespace {

struct Radix {
    std::uint64_t base;
    std::uint64_t count;
};

Radix census_radix(std::size_t n, std::int64_t bound, std::uint64_t cap) {
    if (n == 0) throw std::invalid_argument("census: n must be >= 1");
    if (bound < 0) throw std::invalid_argument("census: bound must be >= 0");
    if (bound > (1LL << 30)) throw BudgetError("census: bound too large");
    const auto base = static_cast<std::uint64_t>(2 * bound + 2);
    const std::uint64_t limit = std::min<std::uint64_t>(cap, kMaxIndexable);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (count > limit / base)
            throw BudgetError("census: state space (2B+2)^n exceeds the enumeration cap of " +
                              std::to_string(cap));
        count *= base;
    }
    return {base, count};
}

PElement digit_element(std::uint64_t digit, std::int64_t bound) {
    if (digit == 0) return PElement::zero();
    return PElement::pow(static_cast<std::int64_t>(digit) - 1 - bound);
}

std::uint64_t element_digit(PElement el, std::int64_t bound) {
    if (el.is_zero()) return 0;
    return static_cast<std::uint64_t>(el.exponent() + bound + 1);
}

template <class Fn>
void parallel_for(std::uint64_t count, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, count / 4096)));
    if (workers <= 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min(count, w * chunk);
        const std::uint64_t hi = std::min(count, lo + chunk);
        threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : threads) t.join();
}

std::vector<PeriodCount> period_counts(const FunctionalGraphSummary& summary) {
    std::map<std::uint64_t, std::uint64_t> by_period;
    for (const auto& c : summary.cycles) by_period[c.period] += c.period;
    std::vector<PeriodCount> out;
    for (auto [period, members] : by_period) out.push_back({period, members});
    return out;
}

template <class TextOf>
std::vector<Attractor> attractors(const FunctionalGraphSummary& summary, TextOf&& text_of) {
    std::vector<Attractor> out;
    out.reserve(summary.cycles.size());
    for (const auto& c : summary.cycles) {
        std::string best;
        for (std::uint32_t m : c.members) {
            std::string t = text_of(m);
            if (best.empty() || t < best) best = std::move(t);
        }
        out.push_back({c.period, std::move(best), c.basin_size});
    }
    std::sort(out.begin(), out.end(), [](const Attractor& a, const Attractor& b) {
        return a.period != b.period ? a.period < b.period : a.representative < b.representative;
    });
    return out;
}

bool only_zero_fixed_point(const FunctionalGraphSummary& summary) {
    return summary.cycles.size() == 1 && summary.cycles[0].period == 1 && summary.cycles[0].members[0] == 0;
}

} // namespace

std::uint64_t census_state_count(std::size_t n, std::int64_t bound, std::uint64_t cap) {
    return census_radix(n, bound, cap).count;
}

PState census_state(std::uint64_t index, std::size_t n, Prime p, std::int64_t bound) {
    const auto base = static_cast<std::uint64_t>(2 * bound + 2);
    PState s{{}, p};
    s.entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.entries.push_back(digit_element(index % base, bound));
        index /= base;
    }
    return s;
}

CensusRecord enumerate_census(std::size_t n, Prime p, std::int64_t bound, std::uint64_t cap, unsigned workers) {
    const Radix radix = census_radix(n, bound, cap);
    std::vector<std::uint32_t> successor(radix.count);

    parallel_for(radix.count, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> digits(n);
        for (std::uint64_t index = lo; index < hi; ++index) {
            std::uint64_t rest = index;
            for (std::size_t i = 0; i < n; ++i) {
                digits[i] = rest % radix.base;
                rest /= radix.base;
            }
            std::uint64_t next = 0;
            for (std::size_t i = n; i-- > 0;) {
                const PElement d = ultrametric_difference(digit_element(digits[i], bound),
                                                          digit_element(digits[(i + 1) % n], bound));
                next = next * radix.base + element_digit(d, bound);
            }
            successor[index] = static_cast<std::uint32_t>(next);
        }
    });

    const FunctionalGraphSummary summary = analyze_functional_graph(successor);
    CensusRecord record{n, p, bound, radix.count, period_counts(summary), {}, summary.max_preperiod,
                        only_zero_fixed_point(summary)};
    record.attractors = attractors(summary, [&](std::uint32_t m) { return to_string(census_state(m, n, p, bound)); });
    return record;
}

XorCensus xor_period_census(std::size_t n) {
    if (n == 0) throw std::invalid_argument("xor_period_census: n must be >= 1");
    if (n > kMaxXorCensusLength)
        throw BudgetError("xor_period_census: n = " + std::to_string(n) + " exceeds the 2^24 state budget");
    const std::uint32_t count = 1u << n;
    const std::uint32_t mask = count - 1;
    std::vector<std::uint32_t> successor(count);
    // Bit i holds entry i; rotating right lines entry i+1 up with entry i.
    for (std::uint32_t x = 0; x < count; ++x) {
        const std::uint32_t next_entry = ((x >> 1) | ((x & 1u) << (n - 1))) & mask;
        successor[x] = x ^ next_entry;
    }
    const FunctionalGraphSummary summary = analyze_functional_graph(successor);
    XorCensus census{n, count, period_counts(summary), {}, summary.max_preperiod, only_zero_fixed_point(summary)};
    census.attractors = attractors(summary, [&](std::uint32_t m) {
        std::string bits(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1u) bits[i] = '1';
        return bits;
    });
    return census;
}

ClassicalCollapseReport classical_collapse_check(std::size_t n, std::int64_t value_bound, std::uint64_t step_cap,
                                                 std::uint64_t cap) {
    if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("classical_collapse_check: n must be a power of two");
    if (value_bound < 1) throw std::invalid_argument("classical_collapse_check: value bound must be >= 1");
    const auto base = static_cast<std::uint64_t>(value_bound) + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / base) throw BudgetError("classical_collapse_check: seed count exceeds the cap");
        total *= base;
    }

    ClassicalCollapseReport report{n, value_bound, step_cap, total, 0, {}, {}};
    std::vector<std::int64_t> seed(n, 0);
    for (std::uint64_t index = 0; index < total; ++index) {
        std::uint64_t rest = index;
        for (std::size_t i = 0; i < n; ++i) {
            seed[i] = static_cast<std::int64_t>(rest % base);
            rest /= base;
        }
        std::vector<std::int64_t> s = seed;
        std::uint64_t steps = 0;
        auto is_zero = [](const std::vector<std::int64_t>& v) {
            return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
        };
        while (!is_zero(s) && steps < step_cap) {
            s = ducci_classical(s);
            ++steps;
        }
        if (!is_zero(s)) {
            report.violations.push_back(seed);
            continue;
        }
        if (report.slowest_seed.empty() || steps > report.max_steps_to_zero) {
            report.slowest_seed = seed;
            report.max_steps_to_zero = steps;
        }
    }
    return report;
}

} // namespace ducci
