#include "evochain/structure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <sstream>

namespace evochain {

namespace {

void check_vertex(const WeightedDigraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw IndexOutOfRangeError("vertex index " + std::to_string(v) + " out of range for " +
                                   std::to_string(g.vertex_count()) + " vertices");
}

// Sorted-unique copy with range validation.
StateSet normalize(const WeightedDigraph& g, const StateSet& c) {
    StateSet s = c;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        check_vertex(g, v);
    return s;
}

void tarjan_dfs(const WeightedDigraph& g, int vertex, std::vector<int>& dfs_numbers,
                std::vector<int>& dfs_minima, std::vector<int>& stack_indices,
                std::vector<int>& stack, int& current_dfs_number,
                std::vector<StateSet>& sccs) {
    int vertex_dfs_number = current_dfs_number++;
    dfs_numbers[vertex] = dfs_minima[vertex] = vertex_dfs_number;
    stack_indices[vertex] = static_cast<int>(stack.size());
    stack.push_back(vertex);

    for (const Edge& e : g.out_edges(vertex)) {
        int succ = e.to;
        int succ_dfs_number = dfs_numbers[succ];
        if (succ_dfs_number == -1) {
            tarjan_dfs(g, succ, dfs_numbers, dfs_minima, stack_indices, stack,
                       current_dfs_number, sccs);
            dfs_minima[vertex] = std::min(dfs_minima[vertex], dfs_minima[succ]);
        } else if (succ_dfs_number < vertex_dfs_number && stack_indices[succ] != -1) {
            dfs_minima[vertex] = std::min(dfs_minima[vertex], succ_dfs_number);
        }
    }

    if (dfs_minima[vertex] == vertex_dfs_number) {
        StateSet scc(stack.begin() + stack_indices[vertex], stack.end());
        for (int v : scc)
            stack_indices[v] = -1;
        stack.resize(stack.size() - scc.size());
        std::sort(scc.begin(), scc.end());
        sccs.push_back(std::move(scc));
    }
}

// True when the class has no edge to a vertex outside it.
bool class_is_closed(const WeightedDigraph& g, const StateSet& members,
                     const std::vector<char>& in_class) {
    for (int v : members) {
        for (const Edge& e : g.out_edges(v)) {
            if (!in_class[e.to])
                return false;
        }
    }
    return true;
}

// Period of one strongly connected component: BFS level labeling from its
// least member over intra-component edges, then gcd of level(u)+1-level(v).
// Returns nullopt when the component contains no edge (no cycle).
std::optional<int> component_period(const WeightedDigraph& g, const StateSet& members) {
    std::vector<char> in_class(g.vertex_count(), 0);
    for (int v : members)
        in_class[v] = 1;

    std::vector<int> level(g.vertex_count(), -1);
    std::deque<int> queue;
    level[members.front()] = 0;
    queue.push_back(members.front());
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const Edge& e : g.out_edges(u)) {
            if (in_class[e.to] && level[e.to] == -1) {
                level[e.to] = level[u] + 1;
                queue.push_back(e.to);
            }
        }
    }

    int gcd = 0;
    for (int u : members) {
        for (const Edge& e : g.out_edges(u)) {
            if (in_class[e.to])
                gcd = std::gcd(gcd, level[u] + 1 - level[e.to]);
        }
    }
    if (gcd == 0)
        return std::nullopt;
    return gcd;
}

}  // namespace

std::vector<StateSet> communication_classes(const WeightedDigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> dfs_numbers(n, -1);
    std::vector<int> dfs_minima(n, -1);
    std::vector<int> stack_indices(n, -1);
    std::vector<int> stack;
    stack.reserve(n);
    int current_dfs_number = 0;

    std::vector<StateSet> sccs;
    for (int v = 0; v < n; ++v) {
        if (dfs_numbers[v] == -1)
            tarjan_dfs(g, v, dfs_numbers, dfs_minima, stack_indices, stack,
                       current_dfs_number, sccs);
    }
    std::sort(sccs.begin(), sccs.end(),
              [](const StateSet& a, const StateSet& b) { return a.front() < b.front(); });
    return sccs;
}

bool is_accessible(const WeightedDigraph& g, int from, int to) {
    check_vertex(g, from);
    check_vertex(g, to);
    if (from == to)
        return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Edge& e : g.out_edges(v)) {
            if (e.to == to)
                return true;
            if (!seen[e.to]) {
                seen[e.to] = 1;
                stack.push_back(e.to);
            }
        }
    }
    return false;
}

bool is_closed(const WeightedDigraph& g, const StateSet& c) {
    StateSet s = normalize(g, c);
    if (s.empty())
        throw EmptySetError("is_closed requires a nonempty state set");
    std::vector<char> in_set(g.vertex_count(), 0);
    for (int v : s)
        in_set[v] = 1;
    return class_is_closed(g, s, in_set);
}

StateSet forward_closure(const WeightedDigraph& g, const StateSet& c) {
    StateSet s = normalize(g, c);
    if (s.empty())
        throw EmptySetError("forward_closure requires a nonempty state set");
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack;
    for (int v : s) {
        seen[v] = 1;
        stack.push_back(v);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Edge& e : g.out_edges(v)) {
            if (!seen[e.to]) {
                seen[e.to] = 1;
                stack.push_back(e.to);
            }
        }
    }
    StateSet out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v])
            out.push_back(v);
    }
    return out;
}

std::vector<StateSet> enumerate_closed_sets(const WeightedDigraph& g, int cap_dimension) {
    const int n = g.vertex_count();
    if (n > cap_dimension) {
        std::ostringstream os;
        os << "vertex count " << n << " exceeds closed-set enumeration cap " << cap_dimension;
        throw DimensionTooLargeError(os.str());
    }

    std::vector<StateSet> classes = communication_classes(g);
    const int m = static_cast<int>(classes.size());
    if (m > 62)
        throw DimensionTooLargeError("too many communication classes for subset enumeration");
    std::vector<int> class_of(n, -1);
    for (int c = 0; c < m; ++c) {
        for (int v : classes[c])
            class_of[v] = c;
    }

    // Condensation successors as bitmasks (self excluded).
    std::vector<std::uint64_t> succ(m, 0);
    for (const Edge& e : g.edges()) {
        int a = class_of[e.from];
        int b = class_of[e.to];
        if (a != b)
            succ[a] |= (std::uint64_t{1} << b);
    }

    // A union of classes is closed iff it is successor-closed in the condensation.
    std::vector<StateSet> result;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
        bool closed = true;
        for (int c = 0; c < m && closed; ++c) {
            if ((subset >> c) & 1u)
                closed = (succ[c] & ~subset) == 0;
        }
        if (!closed)
            continue;
        StateSet members;
        for (int c = 0; c < m; ++c) {
            if ((subset >> c) & 1u)
                members.insert(members.end(), classes[c].begin(), classes[c].end());
        }
        std::sort(members.begin(), members.end());
        if (!is_closed(g, members))
            throw Error("internal error: enumerated set fails the closedness definition");
        result.push_back(std::move(members));
    }

    std::sort(result.begin(), result.end(), [](const StateSet& a, const StateSet& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return result;
}

EvolutionAlgebra subalgebra(const EvolutionAlgebra& alg, const StateSet& c) {
    WeightedDigraph g = graph_from_algebra(alg);
    StateSet s = normalize(g, c);
    if (s.empty())
        throw EmptySetError("subalgebra requires a nonempty generator set");
    if (!is_closed(g, s)) {
        std::ostringstream os;
        os << "generator set {";
        for (size_t i = 0; i < s.size(); ++i)
            os << (i ? "," : "") << alg.matrix.labels()[s[i]];
        os << "} is not closed; restriction would drop coefficients";
        throw NotClosedError(os.str());
    }
    const int k = static_cast<int>(s.size());
    std::vector<std::vector<double>> rows(k, std::vector<double>(k));
    std::vector<std::string> labels;
    labels.reserve(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            rows[i][j] = alg.matrix.at(s[i], s[j]);
        labels.push_back(alg.matrix.labels()[s[i]]);
    }
    return EvolutionAlgebra{StructureMatrix(rows, std::move(labels))};
}

bool is_simple(const EvolutionAlgebra& alg) {
    return communication_classes(graph_from_algebra(alg)).size() == 1;
}

std::optional<int> primitivity_index(const MarkovChain& chain) {
    const StructureMatrix& m = chain.matrix();
    const int n = m.dim();
    const int blocks = (n + 63) / 64;
    const std::uint64_t tail_mask =
        (n % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n % 64)) - 1);

    // Row bitsets of the structural zero pattern.
    std::vector<std::uint64_t> adj(static_cast<size_t>(n) * blocks, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) > kPositivityThreshold)
                adj[static_cast<size_t>(i) * blocks + j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }

    auto all_positive = [&](const std::vector<std::uint64_t>& rows) {
        for (int i = 0; i < n; ++i) {
            for (int b = 0; b < blocks; ++b) {
                std::uint64_t expect = (b == blocks - 1) ? tail_mask : ~std::uint64_t{0};
                if (rows[static_cast<size_t>(i) * blocks + b] != expect)
                    return false;
            }
        }
        return true;
    };

    const int bound = (n - 1) * (n - 1) + 1;
    std::vector<std::uint64_t> power = adj;
    std::vector<std::uint64_t> next(power.size());
    for (int step = 1; step <= bound; ++step) {
        if (all_positive(power))
            return step;
        std::fill(next.begin(), next.end(), 0);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                if ((power[static_cast<size_t>(i) * blocks + k / 64] >> (k % 64)) & 1u) {
                    for (int b = 0; b < blocks; ++b)
                        next[static_cast<size_t>(i) * blocks + b] |=
                            adj[static_cast<size_t>(k) * blocks + b];
                }
            }
        }
        power.swap(next);
    }
    return std::nullopt;
}

Classification classify_generators(const WeightedDigraph& g) {
    Classification out;
    std::vector<char> in_class(g.vertex_count(), 0);
    for (const StateSet& scc : communication_classes(g)) {
        std::fill(in_class.begin(), in_class.end(), 0);
        for (int v : scc)
            in_class[v] = 1;
        StateSet& bucket = class_is_closed(g, scc, in_class) ? out.recurrent : out.transient;
        bucket.insert(bucket.end(), scc.begin(), scc.end());
    }
    std::sort(out.transient.begin(), out.transient.end());
    std::sort(out.recurrent.begin(), out.recurrent.end());
    return out;
}

std::optional<int> period(const WeightedDigraph& g, int j) {
    check_vertex(g, j);
    for (const StateSet& scc : communication_classes(g)) {
        if (std::binary_search(scc.begin(), scc.end(), j))
            return component_period(g, scc);
    }
    return std::nullopt;  // unreachable: every vertex is in some class
}

StateSet idempotents(const EvolutionAlgebra& alg, double tol) {
    const StructureMatrix& m = alg.matrix;
    StateSet out;
    for (int i = 0; i < m.dim(); ++i) {
        if (std::abs(m.at(i, i) - 1.0) > tol)
            continue;
        bool rest_zero = true;
        for (int j = 0; j < m.dim() && rest_zero; ++j) {
            if (j != i && std::abs(m.at(i, j)) > tol)
                rest_zero = false;
        }
        if (rest_zero)
            out.push_back(i);
    }
    return out;
}

ClassPartition canonical_partition(const WeightedDigraph& g) {
    ClassPartition partition;
    std::vector<char> in_class(g.vertex_count(), 0);
    for (StateSet& scc : communication_classes(g)) {
        std::fill(in_class.begin(), in_class.end(), 0);
        for (int v : scc)
            in_class[v] = 1;

        CommClass cls;
        cls.closed = class_is_closed(g, scc, in_class);
        cls.recurrent = cls.closed;
        cls.period = component_period(g, scc);
        cls.degenerate_zero_row = scc.size() == 1 && g.out_edges(scc.front()).empty();
        cls.members = std::move(scc);

        StateSet& bucket = cls.recurrent ? partition.recurrent_states : partition.transient_states;
        bucket.insert(bucket.end(), cls.members.begin(), cls.members.end());
        partition.classes.push_back(std::move(cls));
    }
    std::sort(partition.transient_states.begin(), partition.transient_states.end());
    std::sort(partition.recurrent_states.begin(), partition.recurrent_states.end());
    return partition;
}

}  // namespace evochain
