#include "evochain/dot.hpp"

#include <cstdio>

namespace evochain {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string format_weight(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::string to_dot(const WeightedDigraph& g) {
    std::string out = "digraph markov_graph {\n";
    for (const std::string& label : g.labels())
        out += "  " + quote(label) + ";\n";
    for (const Edge& e : g.edges()) {
        out += "  " + quote(g.labels()[e.from]) + " -> " + quote(g.labels()[e.to]) +
               " [label=" + quote(format_weight(e.weight)) + "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace evochain
