#ifndef EVOCHAIN_REPORT_HPP
#define EVOCHAIN_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "evochain/matrix.hpp"
#include "evochain/structure.hpp"

namespace evochain {

struct AnalysisOptions {
    double tol = kDefaultTol;
    double zero_tol = 0.0;
    int closed_sets_cap = 20;
    /// When positive, run the walk-theorem check up to this length and
    /// include its summary in the report.
    int verify_walks_max_length = 0;
};

/// One closed set with its restricted squaring laws rendered as text,
/// e.g. "e3^2 = 0.5 e3 + 0.5 e6".
struct ClosedSetReport {
    StateSet members;
    std::vector<std::string> laws;
};

struct WalkCheckSummary {
    int max_length = 0;
    int reports = 0;
    int failed = 0;
    double max_abs_error = 0.0;
};

/// Everything the analyze command prints, computed once from the input
/// matrix. All set-valued fields hold 0-based indices into labels().
struct AnalysisReport {
    explicit AnalysisReport(StructureMatrix m) : matrix(std::move(m)) {}

    StructureMatrix matrix;
    AnalysisOptions options;

    bool markov = false;
    int non_markov_row = -1;       // 0-based first offending row when !markov
    double non_markov_row_sum = 0.0;

    bool graphicable = false;
    bool simple = false;
    std::optional<int> primitivity;  // populated only for Markov input

    ClassPartition partition;
    StateSet idempotent_generators;

    bool closed_sets_enumerated = false;  // false when dim exceeds the cap
    std::vector<ClosedSetReport> closed_sets;

    std::optional<WalkCheckSummary> walk_check;
};

/// Run the full structural analysis. The graph is built with the requested
/// zero tolerance; for Markov input, negative entries within tol are treated
/// as stochasticity noise rather than edges.
AnalysisReport analyze(const StructureMatrix& m, const AnalysisOptions& options = {});

/// Human-readable rendering; line set and order are fixed for golden tests.
std::string render_text(const AnalysisReport& r);

/// Machine-readable JSON rendering with stable key names and ordering
/// (schema tag "evochain.analysis/1"), terminated by a newline.
std::string render_structured(const AnalysisReport& r);

}  // namespace evochain

#endif
