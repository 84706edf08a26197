#include "evochain/report.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <sstream>

#include "evochain/dot.hpp"
#include "evochain/triad.hpp"
#include "evochain/walks.hpp"

namespace evochain {

namespace {

using ordered_json = nlohmann::ordered_json;

// "e3^2 = 0.5 e3 + 0.5 e6" over the members of one closed set, taking the
// coefficients from the graph so suppressed (zero/noise) entries never
// reappear in the laws.
std::string render_law(const WeightedDigraph& g, int i, const StateSet& members) {
    std::string line = g.labels()[i] + "^2 = ";
    bool first = true;
    for (int j : members) {
        const Edge* e = g.find_edge(i, j);
        if (e == nullptr)
            continue;
        if (first) {
            if (e->weight < 0)
                line += "-";
        } else {
            line += e->weight < 0 ? " - " : " + ";
        }
        double magnitude = std::abs(e->weight);
        if (magnitude != 1.0)
            line += format_weight(magnitude) + " ";
        line += g.labels()[j];
        first = false;
    }
    if (first)
        line += "0";
    return line;
}

std::string join_labels(const StructureMatrix& m, const StateSet& states, const char* sep) {
    std::string out;
    for (size_t k = 0; k < states.size(); ++k) {
        if (k)
            out += sep;
        out += m.labels()[states[k]];
    }
    return out;
}

std::string set_text(const StructureMatrix& m, const StateSet& states) {
    return "{" + join_labels(m, states, ", ") + "}";
}

std::string states_or_none(const StructureMatrix& m, const StateSet& states) {
    return states.empty() ? "none" : join_labels(m, states, ", ");
}

std::vector<std::string> label_array(const StructureMatrix& m, const StateSet& states) {
    std::vector<std::string> out;
    out.reserve(states.size());
    for (int v : states)
        out.push_back(m.labels()[v]);
    return out;
}

}  // namespace

AnalysisReport analyze(const StructureMatrix& m, const AnalysisOptions& options) {
    AnalysisReport r(m);
    r.options = options;

    EvolutionAlgebra algebra{m};
    r.markov = is_markov(algebra, options.tol);
    if (!r.markov) {
        try {
            MarkovChain probe(m, options.tol);
        } catch (const NotMarkovError& e) {
            r.non_markov_row = e.row;
            r.non_markov_row_sum = e.row_sum;
        }
    }

    WeightedDigraph graph =
        graph_from_algebra(algebra, options.zero_tol, r.markov ? options.tol : 0.0);
    r.graphicable = is_graphicable(algebra, options.tol);
    r.partition = canonical_partition(graph);
    r.simple = r.partition.classes.size() == 1;
    if (r.markov)
        r.primitivity = primitivity_index(MarkovChain(m, options.tol));
    r.idempotent_generators = idempotents(algebra, options.tol);

    if (m.dim() <= options.closed_sets_cap) {
        r.closed_sets_enumerated = true;
        for (StateSet& members : enumerate_closed_sets(graph, options.closed_sets_cap)) {
            ClosedSetReport cs;
            for (int i : members)
                cs.laws.push_back(render_law(graph, i, members));
            cs.members = std::move(members);
            r.closed_sets.push_back(std::move(cs));
        }
    }

    if (options.verify_walks_max_length > 0) {
        WalkCheckSummary summary;
        summary.max_length = options.verify_walks_max_length;
        for (const WalkReport& rep :
             verify_walk_theorem(graph, options.verify_walks_max_length, options.tol)) {
            ++summary.reports;
            if (!rep.passed)
                ++summary.failed;
            summary.max_abs_error = std::max(summary.max_abs_error, rep.abs_error);
        }
        r.walk_check = summary;
    }
    return r;
}

std::string render_text(const AnalysisReport& r) {
    const StructureMatrix& m = r.matrix;
    std::ostringstream out;

    if (!r.markov) {
        out << "!! not a Markov matrix: row " << r.non_markov_row + 1 << " ("
            << m.labels()[r.non_markov_row] << ") sums to " << format_weight(r.non_markov_row_sum)
            << "; Markov-only fields omitted\n";
    }

    out << "dimension: " << m.dim() << "\n";
    out << "labels: ";
    for (int i = 0; i < m.dim(); ++i)
        out << (i ? ", " : "") << m.labels()[i];
    out << "\n";
    out << "markov: " << (r.markov ? "yes" : "no") << "\n";
    out << "graphicable: " << (r.graphicable ? "yes" : "no") << "\n";
    out << "simple: " << (r.simple ? "yes" : "no") << "\n";
    if (r.markov) {
        out << "primitivity index: ";
        if (r.primitivity)
            out << *r.primitivity;
        else
            out << "none";
        out << "\n";
    }
    out << "idempotents: " << states_or_none(m, r.idempotent_generators) << "\n";
    out << "transient states: " << states_or_none(m, r.partition.transient_states) << "\n";
    out << "recurrent states: " << states_or_none(m, r.partition.recurrent_states) << "\n";

    out << "communication classes:\n";
    for (const CommClass& cls : r.partition.classes) {
        out << "  " << set_text(m, cls.members) << ": "
            << (cls.closed ? "closed recurrent" : "transient") << ", ";
        if (cls.period)
            out << "period " << *cls.period;
        else
            out << "no period";
        if (cls.degenerate_zero_row)
            out << " (zero row)";
        out << "\n";
    }

    if (r.closed_sets_enumerated) {
        out << "closed sets (" << r.closed_sets.size() << "):\n";
        for (const ClosedSetReport& cs : r.closed_sets) {
            out << "  " << set_text(m, cs.members) << "\n";
            for (const std::string& law : cs.laws)
                out << "    " << law << "\n";
        }
    } else {
        out << "closed sets: skipped (dimension " << m.dim() << " exceeds cap "
            << r.options.closed_sets_cap << ")\n";
    }

    if (r.walk_check) {
        const WalkCheckSummary& w = *r.walk_check;
        out << "walk theorem check (lengths 1.." << w.max_length << "): "
            << w.reports - w.failed << "/" << w.reports << " passed, max |error| "
            << format_weight(w.max_abs_error) << "\n";
    }
    return out.str();
}

std::string render_structured(const AnalysisReport& r) {
    const StructureMatrix& m = r.matrix;
    ordered_json j;
    j["schema"] = "evochain.analysis/1";
    j["dimension"] = m.dim();
    j["labels"] = m.labels();
    j["options"]["tol"] = r.options.tol;
    j["options"]["zero_tol"] = r.options.zero_tol;
    j["options"]["closed_sets_cap"] = r.options.closed_sets_cap;
    j["markov"] = r.markov;
    if (!r.markov) {
        j["non_markov"]["row"] = r.non_markov_row + 1;
        j["non_markov"]["label"] = m.labels()[r.non_markov_row];
        j["non_markov"]["row_sum"] = r.non_markov_row_sum;
    }
    j["graphicable"] = r.graphicable;
    j["simple"] = r.simple;
    if (r.markov) {
        if (r.primitivity)
            j["primitivity_index"] = *r.primitivity;
        else
            j["primitivity_index"] = nullptr;
    }
    j["idempotents"] = label_array(m, r.idempotent_generators);
    j["transient_states"] = label_array(m, r.partition.transient_states);
    j["recurrent_states"] = label_array(m, r.partition.recurrent_states);

    j["communication_classes"] = ordered_json::array();
    for (const CommClass& cls : r.partition.classes) {
        ordered_json entry;
        entry["members"] = label_array(m, cls.members);
        entry["closed"] = cls.closed;
        entry["recurrent"] = cls.recurrent;
        if (cls.period)
            entry["period"] = *cls.period;
        else
            entry["period"] = nullptr;
        entry["zero_row"] = cls.degenerate_zero_row;
        j["communication_classes"].push_back(std::move(entry));
    }

    j["closed_sets"]["enumerated"] = r.closed_sets_enumerated;
    j["closed_sets"]["cap"] = r.options.closed_sets_cap;
    j["closed_sets"]["sets"] = ordered_json::array();
    for (const ClosedSetReport& cs : r.closed_sets) {
        ordered_json entry;
        entry["members"] = label_array(m, cs.members);
        entry["laws"] = cs.laws;
        j["closed_sets"]["sets"].push_back(std::move(entry));
    }

    if (r.walk_check) {
        j["walk_check"]["max_length"] = r.walk_check->max_length;
        j["walk_check"]["reports"] = r.walk_check->reports;
        j["walk_check"]["failed"] = r.walk_check->failed;
        j["walk_check"]["max_abs_error"] = r.walk_check->max_abs_error;
    }

    return j.dump(2) + "\n";
}

}  // namespace evochain
