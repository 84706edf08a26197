#ifndef EVOCHAIN_MATRIX_HPP
#define EVOCHAIN_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evochain/errors.hpp"

namespace evochain {

/// Default stochasticity tolerance used across the library.
inline constexpr double kDefaultTol = 1e-9;

/// Labels name the generators/states/vertices of one matrix. They must be
/// nonempty, unique within a matrix, and contain no commas or whitespace so
/// they survive CSV and DOT round trips unquoted.
bool is_valid_label(const std::string& label);

/// "e1".."en".
std::vector<std::string> default_labels(int n);

namespace detail {
/// Throws InvalidLabelError/DuplicateLabelError unless `labels` is a valid
/// label set of size n.
void validate_labels(const std::vector<std::string>& labels, int n);
}  // namespace detail

/// A labeled square real matrix, stored row-major. Row i holds the expansion
/// of the i-th generator's square: entry (i,j) is the coefficient of e_j in
/// e_i^2, which for a Markov matrix equals the transition probability p_ij.
class StructureMatrix {
public:
    /// Validates squareness, finiteness and the label invariants.
    /// An empty label list selects the default scheme "e1".."en".
    explicit StructureMatrix(const std::vector<std::vector<double>>& rows,
                             std::vector<std::string> labels = {});

    /// Lets a braced row list initialize a matrix directly, e.g.
    /// StructureMatrix({{0.5, 0.5}, {0.0, 1.0}}).
    StructureMatrix(std::initializer_list<std::vector<double>> rows)
        : StructureMatrix(std::vector<std::vector<double>>(rows)) {}

    static StructureMatrix identity(int n, std::vector<std::string> labels = {});

    int dim() const { return dim_; }
    double at(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<double>& entries() const { return entries_; }
    std::vector<double> row(int i) const;

    /// Exact comparison: same dimension, bitwise-equal entries, same labels.
    bool operator==(const StructureMatrix& other) const = default;

private:
    StructureMatrix() = default;

    int dim_ = 0;
    std::vector<double> entries_;  // row-major, dim_*dim_
    std::vector<std::string> labels_;
};

/// Plain i-j-k product with a fixed accumulation order. Labels are taken
/// from the left operand.
StructureMatrix multiply(const StructureMatrix& a, const StructureMatrix& b);

/// True iff every entry lies in [-tol, 1+tol] and every row sum lies in
/// [1-tol, 1+tol].
bool is_row_stochastic(const StructureMatrix& m, double tol = kDefaultTol);

struct PowerResult {
    std::uint64_t exponent;
    StructureMatrix matrix;
};

/// M^n by left-to-right binary exponentiation (square, then multiply on a
/// set bit), so results are reproducible bit for bit on one platform.
/// n = 0 yields the identity with M's labels.
PowerResult matrix_power(const StructureMatrix& m, std::uint64_t n);

/// A structure matrix certified row-stochastic within tol at construction.
class MarkovChain {
public:
    /// Throws NotMarkovError (with the first offending row and its sum)
    /// when the matrix is not row-stochastic within tol.
    explicit MarkovChain(StructureMatrix matrix, double tol = kDefaultTol);

    const StructureMatrix& matrix() const { return matrix_; }
    double tol() const { return tol_; }

    bool operator==(const MarkovChain& other) const = default;

private:
    StructureMatrix matrix_;
    double tol_;
};

}  // namespace evochain

#endif
