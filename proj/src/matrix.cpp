#include "evochain/matrix.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace evochain {

bool is_valid_label(const std::string& label) {
    if (label.empty())
        return false;
    for (unsigned char c : label) {
        if (c == ',' || std::isspace(c))
            return false;
    }
    return true;
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i)
        labels.push_back("e" + std::to_string(i));
    return labels;
}

namespace detail {

void validate_labels(const std::vector<std::string>& labels, int n) {
    if (static_cast<int>(labels.size()) != n) {
        std::ostringstream os;
        os << "expected " << n << " labels, got " << labels.size();
        throw InvalidLabelError(os.str());
    }
    std::unordered_set<std::string> seen;
    for (const std::string& label : labels) {
        if (!is_valid_label(label))
            throw InvalidLabelError("invalid label \"" + label +
                                    "\" (labels must be nonempty, without commas or whitespace)");
        if (!seen.insert(label).second)
            throw DuplicateLabelError("duplicate label \"" + label + "\"");
    }
}

}  // namespace detail

StructureMatrix::StructureMatrix(const std::vector<std::vector<double>>& rows,
                                 std::vector<std::string> labels) {
    if (rows.empty())
        throw NonSquareError("matrix must have at least one row");
    dim_ = static_cast<int>(rows.size());
    entries_.reserve(static_cast<size_t>(dim_) * dim_);
    for (int i = 0; i < dim_; ++i) {
        if (static_cast<int>(rows[i].size()) != dim_) {
            std::ostringstream os;
            os << "row " << i + 1 << " has " << rows[i].size() << " entries, expected " << dim_;
            throw NonSquareError(os.str());
        }
        for (double v : rows[i]) {
            if (!std::isfinite(v)) {
                std::ostringstream os;
                os << "non-finite entry in row " << i + 1;
                throw NonFiniteEntryError(os.str());
            }
            entries_.push_back(v);
        }
    }
    if (labels.empty())
        labels = default_labels(dim_);
    detail::validate_labels(labels, dim_);
    labels_ = std::move(labels);
}

StructureMatrix StructureMatrix::identity(int n, std::vector<std::string> labels) {
    if (n <= 0)
        throw NonSquareError("identity dimension must be positive");
    StructureMatrix m;
    m.dim_ = n;
    m.entries_.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        m.entries_[static_cast<size_t>(i) * n + i] = 1.0;
    if (labels.empty())
        labels = default_labels(n);
    detail::validate_labels(labels, n);
    m.labels_ = std::move(labels);
    return m;
}

std::vector<double> StructureMatrix::row(int i) const {
    return std::vector<double>(entries_.begin() + static_cast<size_t>(i) * dim_,
                               entries_.begin() + static_cast<size_t>(i + 1) * dim_);
}

StructureMatrix multiply(const StructureMatrix& a, const StructureMatrix& b) {
    if (a.dim() != b.dim())
        throw NonSquareError("dimension mismatch in matrix product");
    const int n = a.dim();
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += a.at(i, k) * b.at(k, j);
            rows[i][j] = acc;
        }
    }
    return StructureMatrix(rows, a.labels());
}

bool is_row_stochastic(const StructureMatrix& m, double tol) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            double v = m.at(i, j);
            if (v < -tol || v > 1.0 + tol)
                return false;
            sum += v;
        }
        if (std::abs(sum - 1.0) > tol)
            return false;
    }
    return true;
}

PowerResult matrix_power(const StructureMatrix& m, std::uint64_t n) {
    StructureMatrix result = StructureMatrix::identity(m.dim(), m.labels());
    if (n > 0) {
        int top = 63 - std::countl_zero(n);
        for (int bit = top; bit >= 0; --bit) {
            result = multiply(result, result);
            if ((n >> bit) & 1u)
                result = multiply(result, m);
        }
    }
    return PowerResult{n, std::move(result)};
}

MarkovChain::MarkovChain(StructureMatrix matrix, double tol)
    : matrix_(std::move(matrix)), tol_(tol) {
    const int n = matrix_.dim();
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        bool entry_ok = true;
        for (int j = 0; j < n; ++j) {
            double v = matrix_.at(i, j);
            if (v < -tol_ || v > 1.0 + tol_)
                entry_ok = false;
            sum += v;
        }
        if (!entry_ok || std::abs(sum - 1.0) > tol_) {
            std::ostringstream os;
            os << "row " << i + 1 << " (" << matrix_.labels()[i] << ") is not stochastic: ";
            if (!entry_ok)
                os << "entry outside [0,1]; ";
            os << "row sum " << sum;
            throw NotMarkovError(i, sum, os.str());
        }
    }
}

}  // namespace evochain
