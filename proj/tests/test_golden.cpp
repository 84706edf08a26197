#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "evochain/dot.hpp"
#include "evochain/report.hpp"
#include "evochain/triad.hpp"
#include "testutil.hpp"

using namespace evochain;

namespace {

std::string golden_path(const std::string& name) {
    return std::string(EVOCHAIN_GOLDEN_DIR) + "/" + name;
}

bool regen_requested() {
    return std::getenv("EVOCHAIN_REGEN_GOLDEN") != nullptr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file: ", path,
                    " (set EVOCHAIN_REGEN_GOLDEN=1 to generate)");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void check_golden(const std::string& name, const std::string& actual) {
    if (regen_requested()) {
        std::ofstream out(golden_path(name), std::ios::binary);
        REQUIRE_MESSAGE(out.good(), "cannot write golden file: ", golden_path(name));
        out << actual;
        return;
    }
    std::string expected = read_file(golden_path(name));
    CHECK_MESSAGE(actual == expected, "output drifted from ", name);
}

const char* kFixtures[] = {"absorbing3", "markov4",   "nonmarkov3", "reducible6",
                           "mixed7",     "periodic3", "partition8"};

}  // namespace

TEST_CASE("rendered reports and graphs are byte-stable") {
    for (const char* stem : kFixtures) {
        CAPTURE(stem);
        StructureMatrix m = testutil::load_fixture(std::string(stem) + ".csv");
        AnalysisReport r = analyze(m);
        check_golden(std::string(stem) + ".analyze.txt", render_text(r));
        check_golden(std::string(stem) + ".analyze.json", render_structured(r));

        EvolutionAlgebra alg{m};
        WeightedDigraph g =
            graph_from_algebra(alg, 0.0, is_markov(alg, kDefaultTol) ? kDefaultTol : 0.0);
        check_golden(std::string(stem) + ".dot", to_dot(g));
    }
}

TEST_CASE("rendering twice yields identical bytes") {
    StructureMatrix m = testutil::load_fixture("mixed7.csv");
    AnalysisReport a = analyze(m);
    AnalysisReport b = analyze(m);
    CHECK(render_text(a) == render_text(b));
    CHECK(render_structured(a) == render_structured(b));
}
