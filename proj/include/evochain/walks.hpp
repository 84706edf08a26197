#ifndef EVOCHAIN_WALKS_HPP
#define EVOCHAIN_WALKS_HPP

#include <vector>

#include "evochain/triad.hpp"

namespace evochain {

/// Hard guards for the exponential walk enumeration. Exceeding either one
/// raises TooLargeError rather than truncating: a partial sum would be
/// worthless as an oracle.
inline constexpr int kMaxWalkLength = 16;
inline constexpr int kMaxWalkDim = 12;

/// Comparison of the summed walk weights against one entry of a matrix power.
struct WalkReport {
    int from = 0;
    int to = 0;
    int length = 0;
    std::vector<Walk> walks;
    double weight_sum = 0.0;
    double matrix_entry = 0.0;
    double abs_error = 0.0;
    bool passed = false;
};

/// All walks of exactly `length` edges from `from` to `to`, depth-first in
/// ascending neighbor order (deterministic). length == 0 yields one
/// single-vertex walk when from == to and nothing otherwise.
std::vector<Walk> enumerate_walks(const WeightedDigraph& g, int from, int to, int length);

/// Product of the edge weights along the walk; a single-vertex walk has
/// weight 1. Throws InvalidWalkError when the walk is empty, leaves the
/// vertex range, or uses a missing edge.
double markov_weight(const WeightedDigraph& g, const Walk& w);

/// Sum of markov_weight over enumerate_walks(g, from, to, length), added in
/// enumeration order.
double walk_weight_sum(const WeightedDigraph& g, int from, int to, int length);

/// One report per (from, to, n) with 1 <= n <= n_max, comparing the walk
/// weight sum against entry (from, to) of the n-th power of the weight
/// matrix. A report passes when abs_error <= tol.
std::vector<WalkReport> verify_walk_theorem(const WeightedDigraph& g, int n_max, double tol);

}  // namespace evochain

#endif
