#include "evochain/walks.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "evochain/errors.hpp"

namespace evochain {

namespace {

void check_guards(const WeightedDigraph& g, int length) {
    if (length < 0 || length > kMaxWalkLength) {
        std::ostringstream os;
        os << "walk length " << length << " outside enumerable range [0, " << kMaxWalkLength
           << "]";
        throw TooLargeError(os.str());
    }
    if (g.vertex_count() > kMaxWalkDim) {
        std::ostringstream os;
        os << "graph with " << g.vertex_count() << " vertices exceeds walk enumeration limit of "
           << kMaxWalkDim;
        throw TooLargeError(os.str());
    }
}

void check_endpoint(const WeightedDigraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw IndexOutOfRangeError("walk endpoint " + std::to_string(v) + " out of range for " +
                                   std::to_string(g.vertex_count()) + " vertices");
}

void extend_walks(const WeightedDigraph& g, int target, int remaining, std::vector<int>& path,
                  std::vector<Walk>& out) {
    if (remaining == 0) {
        if (path.back() == target)
            out.push_back(Walk{path});
        return;
    }
    for (const Edge& e : g.out_edges(path.back())) {
        path.push_back(e.to);
        extend_walks(g, target, remaining - 1, path, out);
        path.pop_back();
    }
}

// Same depth-first traversal as extend_walks, accumulating the running edge
// products so the sum is taken in enumeration order without materializing
// the walks.
void accumulate_weights(const WeightedDigraph& g, int vertex, int target, int remaining,
                        double product, double& sum) {
    if (remaining == 0) {
        if (vertex == target)
            sum += product;
        return;
    }
    for (const Edge& e : g.out_edges(vertex))
        accumulate_weights(g, e.to, target, remaining - 1, product * e.weight, sum);
}

}  // namespace

std::vector<Walk> enumerate_walks(const WeightedDigraph& g, int from, int to, int length) {
    check_guards(g, length);
    check_endpoint(g, from);
    check_endpoint(g, to);
    std::vector<Walk> out;
    std::vector<int> path{from};
    extend_walks(g, to, length, path, out);
    return out;
}

double markov_weight(const WeightedDigraph& g, const Walk& w) {
    if (w.vertices.empty())
        throw InvalidWalkError("a walk needs at least one vertex");
    for (int v : w.vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw InvalidWalkError("walk vertex " + std::to_string(v) + " out of range");
    }
    double product = 1.0;
    for (size_t t = 0; t + 1 < w.vertices.size(); ++t) {
        const Edge* e = g.find_edge(w.vertices[t], w.vertices[t + 1]);
        if (e == nullptr) {
            std::ostringstream os;
            os << "walk uses missing edge " << g.labels()[w.vertices[t]] << " -> "
               << g.labels()[w.vertices[t + 1]];
            throw InvalidWalkError(os.str());
        }
        product *= e->weight;
    }
    return product;
}

double walk_weight_sum(const WeightedDigraph& g, int from, int to, int length) {
    check_guards(g, length);
    check_endpoint(g, from);
    check_endpoint(g, to);
    double sum = 0.0;
    accumulate_weights(g, from, to, length, 1.0, sum);
    return sum;
}

std::vector<WalkReport> verify_walk_theorem(const WeightedDigraph& g, int n_max, double tol) {
    check_guards(g, n_max);
    if (!(tol > 0.0))
        throw Error("verification tolerance must be positive");

    const StructureMatrix weights = algebra_from_graph(g).matrix;
    std::vector<WalkReport> reports;
    for (int n = 1; n <= n_max; ++n) {
        StructureMatrix power = matrix_power(weights, static_cast<std::uint64_t>(n)).matrix;
        for (int i = 0; i < g.vertex_count(); ++i) {
            for (int j = 0; j < g.vertex_count(); ++j) {
                WalkReport r;
                r.from = i;
                r.to = j;
                r.length = n;
                r.walks = enumerate_walks(g, i, j, n);
                r.weight_sum = 0.0;
                for (const Walk& w : r.walks)
                    r.weight_sum += markov_weight(g, w);
                r.matrix_entry = power.at(i, j);
                r.abs_error = std::abs(r.weight_sum - r.matrix_entry);
                r.passed = r.abs_error <= tol;
                reports.push_back(std::move(r));
            }
        }
    }
    return reports;
}

}  // namespace evochain
