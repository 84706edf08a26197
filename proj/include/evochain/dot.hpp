#ifndef EVOCHAIN_DOT_HPP
#define EVOCHAIN_DOT_HPP

#include <string>

#include "evochain/triad.hpp"

namespace evochain {

/// Weight formatted with at most 6 significant digits, trailing zeros
/// trimmed ("0.5", "0.333333", "1"). Shared by the DOT export and the
/// rendered reports so the two stay consistent.
std::string format_weight(double value);

/// GraphViz DOT text: one node per vertex in index order, one labeled edge
/// per graph edge in (from, to) order. Quotes and backslashes in labels are
/// escaped, so the output is valid DOT for any accepted label.
std::string to_dot(const WeightedDigraph& g);

}  // namespace evochain

#endif
