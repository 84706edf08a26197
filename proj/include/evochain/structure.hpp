#ifndef EVOCHAIN_STRUCTURE_HPP
#define EVOCHAIN_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "evochain/triad.hpp"

namespace evochain {

/// Vertex subset, kept sorted ascending without duplicates. Operations
/// accept any ordering and normalize; members must be in range.
using StateSet = std::vector<int>;

/// Threshold below which a power-matrix entry counts as structurally zero.
inline constexpr double kPositivityThreshold = 1e-12;

/// Communication class annotated with the classification results.
/// recurrent always equals closed (finite-chain rule); period is present iff
/// the class contains a cycle, and is shared by all members.
struct CommClass {
    StateSet members;
    bool closed = false;
    bool recurrent = false;
    std::optional<int> period;
    bool degenerate_zero_row = false;  // singleton whose vertex has no out-edges

    bool operator==(const CommClass& other) const = default;
};

struct ClassPartition {
    std::vector<CommClass> classes;   // ordered by smallest member
    StateSet transient_states;
    StateSet recurrent_states;

    bool operator==(const ClassPartition& other) const = default;
};

struct Classification {
    StateSet transient;
    StateSet recurrent;
};

/// Strongly connected components under mutual accessibility (with the 0-step
/// convention, so every vertex communicates with itself). Classes are ordered
/// by smallest member; members ascend.
std::vector<StateSet> communication_classes(const WeightedDigraph& g);

/// Whether `to` is reachable from `from` in >= 0 steps.
bool is_accessible(const WeightedDigraph& g, int from, int to);

/// One-step test: no edge leaves c. Throws EmptySetError on an empty set.
bool is_closed(const WeightedDigraph& g, const StateSet& c);

/// Reachability closure of c under out-edges; the smallest closed superset.
StateSet forward_closure(const WeightedDigraph& g, const StateSet& c);

/// Every nonempty closed subset, sorted by (size, lexicographic members).
/// Closed sets are exactly the unions of communication classes that are
/// successor-closed in the condensation; each candidate is verified against
/// the one-step definition. Throws DimensionTooLargeError when the vertex
/// count exceeds cap_dimension.
std::vector<StateSet> enumerate_closed_sets(const WeightedDigraph& g, int cap_dimension = 20);

/// Restriction of the structure matrix to the rows and columns in c, labels
/// preserved. Requires c closed in the exact-nonzero graph of the algebra;
/// throws NotClosedError otherwise.
EvolutionAlgebra subalgebra(const EvolutionAlgebra& alg, const StateSet& c);

/// True iff the exact-nonzero graph has a single communication class, i.e.
/// no proper closed subset exists.
bool is_simple(const EvolutionAlgebra& alg);

/// Least n with every entry of P^n structurally positive, searched up to the
/// Wielandt bound (dim-1)^2+1 over boolean zero-pattern powers (immune to
/// floating underflow). Absent when the chain is reducible or periodic.
std::optional<int> primitivity_index(const MarkovChain& chain);

/// recurrent = members of closed classes, transient = the rest.
Classification classify_generators(const WeightedDigraph& g);

/// gcd of the lengths of all closed walks through j; absent when j lies on
/// no cycle. Computed per strongly connected component from a breadth-first
/// level labeling: gcd over intra-component edges (u,v) of level(u)+1-level(v).
std::optional<int> period(const WeightedDigraph& g, int j);

/// Generators i with M[i][i] within tol of 1 and every other row-i entry
/// within tol of 0 (e_i^2 = e_i, the absorbing states).
StateSet idempotents(const EvolutionAlgebra& alg, double tol = kDefaultTol);

/// Communication classes with closed/recurrent/period/degeneracy annotations
/// plus the transient/recurrent split of the vertex set.
ClassPartition canonical_partition(const WeightedDigraph& g);

}  // namespace evochain

#endif
