#include "evochain/triad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace evochain {

WeightedDigraph::WeightedDigraph(std::vector<std::string> vertex_labels, std::vector<Edge> edges)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)) {
    const int n = static_cast<int>(labels_.size());
    if (n == 0)
        throw NonSquareError("graph must have at least one vertex");
    detail::validate_labels(labels_, n);
    for (const Edge& e : edges_) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
            std::ostringstream os;
            os << "edge (" << e.from << "," << e.to << ") out of range for " << n << " vertices";
            throw IndexOutOfRangeError(os.str());
        }
        if (e.weight == 0.0)
            throw InvalidEdgeError("zero-weight edge (" + labels_[e.from] + "," + labels_[e.to] + ")");
        if (!std::isfinite(e.weight))
            throw NonFiniteEntryError("non-finite edge weight (" + labels_[e.from] + "," + labels_[e.to] + ")");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    });
    for (size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].from == edges_[i].from && edges_[i - 1].to == edges_[i].to)
            throw InvalidEdgeError("duplicate edge (" + labels_[edges_[i].from] + "," +
                                   labels_[edges_[i].to] + ")");
    }
    row_offsets_.assign(n + 1, 0);
    for (const Edge& e : edges_)
        ++row_offsets_[e.from + 1];
    for (int v = 0; v < n; ++v)
        row_offsets_[v + 1] += row_offsets_[v];
}

std::span<const Edge> WeightedDigraph::out_edges(int v) const {
    if (v < 0 || v >= vertex_count())
        throw IndexOutOfRangeError("vertex index " + std::to_string(v) + " out of range");
    return std::span<const Edge>(edges_.data() + row_offsets_[v],
                                 edges_.data() + row_offsets_[v + 1]);
}

const Edge* WeightedDigraph::find_edge(int from, int to) const {
    for (const Edge& e : out_edges(from)) {
        if (e.to == to)
            return &e;
        if (e.to > to)
            break;
    }
    return nullptr;
}

EvolutionAlgebra algebra_from_chain(const MarkovChain& chain) {
    return EvolutionAlgebra{chain.matrix()};
}

MarkovChain chain_from_algebra(const EvolutionAlgebra& alg, double tol) {
    return MarkovChain(alg.matrix, tol);
}

WeightedDigraph graph_from_algebra(const EvolutionAlgebra& alg, double zero_tol,
                                   double negative_noise_tol) {
    if (zero_tol < 0.0)
        zero_tol = 0.0;
    const StructureMatrix& m = alg.matrix;
    std::vector<Edge> edges;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            double v = m.at(i, j);
            if (std::abs(v) <= zero_tol)
                continue;
            if (v < 0.0 && v >= -negative_noise_tol)
                continue;
            edges.push_back(Edge{i, j, v});
        }
    }
    return WeightedDigraph(m.labels(), std::move(edges));
}

EvolutionAlgebra algebra_from_graph(const WeightedDigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (const Edge& e : g.edges())
        rows[e.from][e.to] = e.weight;
    return EvolutionAlgebra{StructureMatrix(rows, g.labels())};
}

bool is_markov(const EvolutionAlgebra& alg, double tol) {
    return is_row_stochastic(alg.matrix, tol);
}

bool is_graphicable(const EvolutionAlgebra& alg, double tol) {
    const StructureMatrix& m = alg.matrix;
    for (double v : m.entries()) {
        if (std::abs(v) > tol && std::abs(v - 1.0) > tol)
            return false;
    }
    return true;
}

}  // namespace evochain
