#ifndef EVOCHAIN_MONTECARLO_HPP
#define EVOCHAIN_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "evochain/matrix.hpp"

namespace evochain {

/// One sampled path; states.size() == steps + 1 and states[0] == start.
struct Trajectory {
    std::uint64_t seed = 0;
    int start = 0;
    std::vector<int> states;
};

/// Bernoulli-style estimate with its binomial standard error
/// sqrt(value * (1 - value) / trials).
struct EmpiricalEstimate {
    double value = 0.0;
    long trials = 0;
    double std_error = 0.0;
};

/// Sample a trajectory of `steps` transitions starting at `start`. Each step
/// draws one uniform variate from SplitMix64(seed) and inverts the row CDF
/// in ascending column order; the last positive column absorbs residual
/// mass, so row sums of 1 +/- tol cannot push the draw out of range.
/// Throws DegenerateRowError when a visited row has no positive entry.
Trajectory simulate(const MarkovChain& chain, int start, int steps, std::uint64_t seed);

/// Entry (i, j): fraction of `trials` runs started at i that sit at j after
/// m steps. Trial t of row i uses the derived seed derive_seed(seed, i, t),
/// making every trial independent of trial order.
std::vector<std::vector<EmpiricalEstimate>> empirical_transition(const MarkovChain& chain, int m,
                                                                 long trials,
                                                                 std::uint64_t seed);

/// Fraction of `trials` runs started at j that return to j within `horizon`
/// steps — a lower bound on the true return probability. Trial t uses
/// derive_seed(seed, j, t).
EmpiricalEstimate estimate_return_frequency(const MarkovChain& chain, int j, int horizon,
                                            long trials, std::uint64_t seed);

}  // namespace evochain

#endif
