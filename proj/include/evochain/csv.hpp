#ifndef EVOCHAIN_CSV_HPP
#define EVOCHAIN_CSV_HPP

#include <string>

#include "evochain/matrix.hpp"

namespace evochain {

/// Parse a square matrix from CSV text: rows of comma-separated decimal
/// numbers, one row per line, with an optional leading "labels: a,b,c" line.
/// Whitespace around cells is ignored, blank lines are skipped, and the
/// decimal separator is "." regardless of locale. ParseError carries the
/// 1-based line and column of the offending cell.
StructureMatrix parse_matrix_csv(const std::string& text);

/// Read and parse a matrix file; throws IoError when the file cannot be read.
StructureMatrix load_matrix_csv(const std::string& path);

/// Render a matrix to CSV with a "labels:" line. Numbers use the shortest
/// representation that parses back to the identical double, so
/// parse_matrix_csv(render_matrix_csv(m)) == m exactly.
std::string render_matrix_csv(const StructureMatrix& m);

}  // namespace evochain

#endif
