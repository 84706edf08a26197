#include "evochain/montecarlo.hpp"

#include <cmath>
#include <string>

#include "evochain/errors.hpp"
#include "evochain/rng.hpp"

namespace evochain {

namespace {

void check_state(const MarkovChain& chain, int v) {
    if (v < 0 || v >= chain.matrix().dim())
        throw IndexOutOfRangeError("state index " + std::to_string(v) + " out of range for " +
                                   std::to_string(chain.matrix().dim()) + " states");
}

void check_positive(long value, const char* what) {
    if (value < 1)
        throw Error(std::string(what) + " must be at least 1");
}

// Inverse CDF over one row in ascending column order. Nonpositive entries
// never match; the last positive column absorbs whatever mass the row sum
// leaves uncovered. One uniform variate per step.
int step_from_row(const StructureMatrix& m, int row, double u) {
    double cumulative = 0.0;
    int last_positive = -1;
    for (int j = 0; j < m.dim(); ++j) {
        double p = m.at(row, j);
        if (p <= 0.0)
            continue;
        last_positive = j;
        cumulative += p;
        if (u < cumulative)
            return j;
    }
    if (last_positive == -1)
        throw DegenerateRowError("state " + m.labels()[row] +
                                 " has no positive transition probability");
    return last_positive;
}

double binomial_std_error(double value, long trials) {
    return std::sqrt(value * (1.0 - value) / static_cast<double>(trials));
}

}  // namespace

Trajectory simulate(const MarkovChain& chain, int start, int steps, std::uint64_t seed) {
    check_state(chain, start);
    if (steps < 0)
        throw Error("step count must be nonnegative");

    Trajectory traj;
    traj.seed = seed;
    traj.start = start;
    traj.states.reserve(static_cast<size_t>(steps) + 1);
    traj.states.push_back(start);

    SplitMix64 rng(seed);
    int current = start;
    for (int t = 0; t < steps; ++t) {
        current = step_from_row(chain.matrix(), current, rng.next_unit());
        traj.states.push_back(current);
    }
    return traj;
}

std::vector<std::vector<EmpiricalEstimate>> empirical_transition(const MarkovChain& chain, int m,
                                                                 long trials,
                                                                 std::uint64_t seed) {
    check_positive(m, "step count");
    check_positive(trials, "trial count");

    const StructureMatrix& p = chain.matrix();
    const int n = p.dim();
    std::vector<std::vector<long>> counts(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (long t = 0; t < trials; ++t) {
            SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i),
                                       static_cast<std::uint64_t>(t)));
            int current = i;
            for (int s = 0; s < m; ++s)
                current = step_from_row(p, current, rng.next_unit());
            ++counts[i][current];
        }
    }

    std::vector<std::vector<EmpiricalEstimate>> estimates(n, std::vector<EmpiricalEstimate>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double value = static_cast<double>(counts[i][j]) / static_cast<double>(trials);
            estimates[i][j] = EmpiricalEstimate{value, trials, binomial_std_error(value, trials)};
        }
    }
    return estimates;
}

EmpiricalEstimate estimate_return_frequency(const MarkovChain& chain, int j, int horizon,
                                            long trials, std::uint64_t seed) {
    check_state(chain, j);
    check_positive(horizon, "horizon");
    check_positive(trials, "trial count");

    const StructureMatrix& p = chain.matrix();
    long returned = 0;
    for (long t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(j),
                                   static_cast<std::uint64_t>(t)));
        int current = j;
        for (int s = 0; s < horizon; ++s) {
            current = step_from_row(p, current, rng.next_unit());
            if (current == j) {
                ++returned;
                break;
            }
        }
    }
    double value = static_cast<double>(returned) / static_cast<double>(trials);
    return EmpiricalEstimate{value, trials, binomial_std_error(value, trials)};
}

}  // namespace evochain
