#include <doctest.h>

#include <cmath>

#include "evochain/montecarlo.hpp"
#include "evochain/rng.hpp"
#include "testutil.hpp"

using namespace evochain;

TEST_CASE("the mixing function and generator are pinned") {
    // frozen outputs; a change here would invalidate every recorded result
    SplitMix64 rng(0);
    std::uint64_t first = rng.next();
    CHECK(first == 16294208416658607535ULL);
    CHECK(rng.next() == 7960286522194355700ULL);
    CHECK(mix64(0) == 16294208416658607535ULL);
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));

    SplitMix64 unit(42);
    double u = unit.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}

TEST_CASE("an absorbing single state never moves") {
    MarkovChain chain(StructureMatrix({{1.0}}));
    Trajectory traj = simulate(chain, 0, 5, 987654321ULL);
    CHECK(traj.states == std::vector<int>(6, 0));
    CHECK(traj.start == 0);
    CHECK(traj.seed == 987654321ULL);
}

TEST_CASE("a permutation chain is deterministic for every seed") {
    MarkovChain chain(StructureMatrix({{0.0, 1.0}, {1.0, 0.0}}));
    for (std::uint64_t seed : {0ULL, 7ULL, 12345ULL}) {
        Trajectory traj = simulate(chain, 0, 3, seed);
        CHECK(traj.states == std::vector<int>{0, 1, 0, 1});
    }
}

TEST_CASE("identical seeds reproduce identical trajectories") {
    MarkovChain chain(testutil::load_fixture("markov4.csv"));
    Trajectory a = simulate(chain, 0, 200, 42);
    Trajectory b = simulate(chain, 0, 200, 42);
    Trajectory c = simulate(chain, 0, 200, 43);
    CHECK(a.states == b.states);
    CHECK(a.states != c.states);
}

TEST_CASE("every sampled transition has positive probability") {
    MarkovChain chain(testutil::load_fixture("partition8.csv"));
    Trajectory traj = simulate(chain, 0, 500, 7);
    REQUIRE(traj.states.size() == 501);
    CHECK(traj.states[0] == 0);
    for (size_t t = 0; t + 1 < traj.states.size(); ++t)
        CHECK(chain.matrix().at(traj.states[t], traj.states[t + 1]) > 0.0);
}

TEST_CASE("trajectories of the absorbing chain end in the absorbing state") {
    MarkovChain chain(testutil::load_fixture("absorbing3.csv"));
    Trajectory traj = simulate(chain, 0, 100, 42);
    REQUIRE(traj.states.size() == 101);
    for (size_t t = 50; t < traj.states.size(); ++t)
        CHECK(traj.states[t] == 2);
}

TEST_CASE("simulation argument validation") {
    MarkovChain chain(StructureMatrix({{1.0}}));
    CHECK_THROWS_AS(simulate(chain, 1, 5, 0), IndexOutOfRangeError);
    CHECK_THROWS_AS(simulate(chain, -1, 5, 0), IndexOutOfRangeError);
    CHECK_THROWS_AS(simulate(chain, 0, -1, 0), Error);

    // a zero row can only enter through a huge tolerance; it must be caught
    MarkovChain loose(StructureMatrix({{0.0, 1.0}, {0.0, 0.0}}), 2.0);
    CHECK_THROWS_AS(simulate(loose, 0, 3, 1), DegenerateRowError);
}

TEST_CASE("empirical transition of the identity chain is exact") {
    MarkovChain chain(StructureMatrix::identity(3));
    auto est = empirical_transition(chain, 4, 50, 9);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(est[i][j].value == (i == j ? 1.0 : 0.0));
            CHECK(est[i][j].std_error == 0.0);
            CHECK(est[i][j].trials == 50);
        }
    }
}

TEST_CASE("empirical transition approximates the two-step matrix") {
    MarkovChain chain(testutil::load_fixture("absorbing3.csv"));
    StructureMatrix p2 = matrix_power(chain.matrix(), 2).matrix;
    auto est = empirical_transition(chain, 2, 20000, 20260814);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double band = 4.0 * est[i][j].std_error;
            CHECK(std::abs(est[i][j].value - p2.at(i, j)) <= band + 1e-12);
        }
    }
}

TEST_CASE("estimates are reproducible and seed-sensitive") {
    MarkovChain chain(testutil::load_fixture("markov4.csv"));
    auto a = empirical_transition(chain, 3, 2000, 5);
    auto b = empirical_transition(chain, 3, 2000, 5);
    auto c = empirical_transition(chain, 3, 2000, 6);
    bool all_equal_ab = true;
    bool any_diff_ac = false;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            all_equal_ab = all_equal_ab && a[i][j].value == b[i][j].value;
            any_diff_ac = any_diff_ac || a[i][j].value != c[i][j].value;
        }
    }
    CHECK(all_equal_ab);
    CHECK(any_diff_ac);
}

TEST_CASE("standard errors follow the binomial formula") {
    MarkovChain chain(testutil::load_fixture("absorbing3.csv"));
    auto est = empirical_transition(chain, 2, 1000, 77);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double v = est[i][j].value;
            CHECK(est[i][j].std_error ==
                  doctest::Approx(std::sqrt(v * (1.0 - v) / 1000.0)).epsilon(1e-15));
        }
    }
}

TEST_CASE("return frequency of an absorbing state is exactly one") {
    MarkovChain chain(testutil::load_fixture("absorbing3.csv"));
    EmpiricalEstimate est = estimate_return_frequency(chain, 2, 10, 500, 3);
    CHECK(est.value == 1.0);
    CHECK(est.std_error == 0.0);
    CHECK(est.trials == 500);
}

TEST_CASE("return frequency separates recurrent from transient states") {
    MarkovChain mixed(testutil::load_fixture("mixed7.csv"));
    EmpiricalEstimate recurrent = estimate_return_frequency(mixed, 1, 200, 5000, 11);
    CHECK(recurrent.value >= 0.99);

    MarkovChain partition(testutil::load_fixture("partition8.csv"));
    EmpiricalEstimate transient = estimate_return_frequency(partition, 0, 200, 5000, 11);
    CHECK(transient.value < 1.0 - 4.0 * transient.std_error);
}

TEST_CASE("estimator argument validation") {
    MarkovChain chain(StructureMatrix({{1.0}}));
    CHECK_THROWS_AS(empirical_transition(chain, 0, 10, 1), Error);
    CHECK_THROWS_AS(empirical_transition(chain, 1, 0, 1), Error);
    CHECK_THROWS_AS(estimate_return_frequency(chain, 2, 10, 10, 1), IndexOutOfRangeError);
    CHECK_THROWS_AS(estimate_return_frequency(chain, 0, 0, 10, 1), Error);
    CHECK_THROWS_AS(estimate_return_frequency(chain, 0, 10, 0, 1), Error);
}
