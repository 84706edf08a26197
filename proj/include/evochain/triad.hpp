#ifndef EVOCHAIN_TRIAD_HPP
#define EVOCHAIN_TRIAD_HPP

#include <span>
#include <string>
#include <vector>

#include "evochain/matrix.hpp"

namespace evochain {

/// An evolution algebra is determined by its structure matrix under the row
/// convention: row i lists the coefficients of e_i^2, and distinct
/// generators multiply to zero. Any real coefficients are admitted.
struct EvolutionAlgebra {
    StructureMatrix matrix;

    bool operator==(const EvolutionAlgebra& other) const = default;
};

struct Edge {
    int from;
    int to;
    double weight;

    bool operator==(const Edge& other) const = default;
};

/// Directed graph with real nonzero edge weights and at most one edge per
/// ordered vertex pair. Loops are permitted. Edges are kept sorted by
/// (from, to), so per-vertex adjacency is in ascending target order.
class WeightedDigraph {
public:
    WeightedDigraph(std::vector<std::string> vertex_labels, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Out-edges of v in ascending target order.
    std::span<const Edge> out_edges(int v) const;

    /// Pointer to the edge (from, to), or nullptr when absent.
    const Edge* find_edge(int from, int to) const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;        // sorted by (from, to)
    std::vector<int> row_offsets_;   // size vertex_count()+1
};

/// A walk is a vertex sequence in which every consecutive pair is an edge;
/// a single vertex is the empty walk of length 0.
struct Walk {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Walk& other) const = default;
};

/// The algebra whose structure matrix is the chain's transition matrix.
EvolutionAlgebra algebra_from_chain(const MarkovChain& chain);

/// The chain sharing the algebra's matrix and labels. Throws NotMarkovError
/// when the matrix is not row-stochastic within tol.
MarkovChain chain_from_algebra(const EvolutionAlgebra& alg, double tol = kDefaultTol);

/// Edge (i,j) with weight M[i][j] whenever |M[i][j]| > zero_tol, except that
/// negative entries in [-negative_noise_tol, 0) are treated as stochasticity
/// noise and produce no edge. Defaults give the exact-nonzero graph.
WeightedDigraph graph_from_algebra(const EvolutionAlgebra& alg, double zero_tol = 0.0,
                                   double negative_noise_tol = 0.0);

/// M[i][j] = weight of edge (i,j), 0 when absent.
EvolutionAlgebra algebra_from_graph(const WeightedDigraph& g);

/// Whether the algebra is associated with a Markov chain, i.e. its matrix is
/// row-stochastic within tol.
bool is_markov(const EvolutionAlgebra& alg, double tol = kDefaultTol);

/// Whether every structure coefficient is within tol of 0 or of 1.
bool is_graphicable(const EvolutionAlgebra& alg, double tol = kDefaultTol);

}  // namespace evochain

#endif
