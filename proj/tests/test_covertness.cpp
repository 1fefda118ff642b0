#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "covertroute/covertness.hpp"
#include "covertroute/random.hpp"

using namespace covertroute;

namespace {

// Two nodes on the x axis plus wardens at explicit positions.
Scenario two_node_scenario(double link_len, std::vector<Warden> wardens) {
    Scenario s;
    s.dimension = 100.0;
    s.alpha = 2.0;
    s.nodes = {{0, {0.0, 0.0}, 1.0}, {1, {link_len, 0.0}, 1.0}};
    s.wardens = std::move(wardens);
    s.source = 0;
    s.dest = 1;
    return s;
}

} // namespace

TEST_CASE("link exposure by direct substitution") {
    SUBCASE("single warden") {
        const Scenario s = two_node_scenario(2.0, {{{4.0, 0.0}, 1.0}});
        CHECK(link_exposure(s, 0, 1) == doctest::Approx(0.25));
    }
    SUBCASE("two wardens add") {
        const Scenario s =
            two_node_scenario(1.0, {{{0.0, 1.0}, 1.0}, {{0.0, -2.0}, 1.0}});
        CHECK(link_exposure(s, 0, 1) == doctest::Approx(1.25));
    }
    SUBCASE("no wardens") {
        const Scenario s = two_node_scenario(1.0, {});
        CHECK(link_exposure(s, 0, 1) == 0.0);
    }
    SUBCASE("warden on top of the transmitter") {
        const Scenario s = two_node_scenario(1.0, {{{0.0, 0.0}, 1.0}});
        CHECK(std::isinf(link_exposure(s, 0, 1)));
    }
    SUBCASE("adding a warden never decreases exposure") {
        Scenario s = two_node_scenario(3.0, {{{5.0, 5.0}, 1.0}});
        const double before = link_exposure(s, 0, 1);
        s.wardens.push_back({{20.0, 20.0}, 2.0});
        CHECK(link_exposure(s, 0, 1) >= before);
    }
}

TEST_CASE("covertness thresholds") {
    const CovertBudget b1(0.01);
    CHECK(b1.gamma1(10000) == doctest::Approx(0.002));
    CHECK(b1.gamma2(10000) == doctest::Approx(4e-6));
    CHECK(b1.gamma2(10000) == doctest::Approx(b1.gamma1(10000) * b1.gamma1(10000)));
    CHECK(CovertBudget(0.04).gamma1(400) == doctest::Approx(0.02));
    CHECK(b1.delta == doctest::Approx(2.0 * b1.epsilon() * b1.epsilon()));
    CHECK_THROWS_AS(b1.gamma1(0), ValidationError);
    CHECK_THROWS_AS(CovertBudget(0.0), ValidationError);
}

TEST_CASE("quadratic bounds") {
    CHECK(bound_sk({0.1, 0.2}, 4) == doctest::Approx(0.09));
    CHECK(bound_ik({0.1, 0.2}, 4) == doctest::Approx(0.05));
    CHECK(bound_sk({0.3}, 7) == doctest::Approx(bound_ik({0.3}, 7)));
    CHECK(bound_sk({0.0, 0.0, 0.0}, 100) == 0.0);
    CHECK(bound_ik({0.0, 0.0, 0.0}, 100) == 0.0);
}

TEST_CASE("exact relative entropy, single key") {
    CHECK(exact_kl_sk({1.0}, 2) == doctest::Approx(0.30685281944005469).epsilon(1e-12));
    CHECK(exact_kl_sk({0.0, 0.0}, 50) == 0.0);
    // High-precision evaluation of 50*(0.04 - ln 1.04).
    CHECK(exact_kl_sk({0.04}, 100) ==
          doctest::Approx(0.038964342335935187).epsilon(1e-12));
    // Grand sum across hops and wardens: the split does not matter.
    CHECK(exact_kl_sk({0.01, 0.03}, 100) ==
          doctest::Approx(exact_kl_sk({0.04}, 100)).epsilon(1e-12));
}

TEST_CASE("exact relative entropy, independent keys") {
    CHECK(exact_kl_ik({1.0, 1.0}, 2) ==
          doctest::Approx(0.61370563888010938).epsilon(1e-12));
    CHECK(exact_kl_ik({0.5}, 4) ==
          doctest::Approx(0.18906978378367124).epsilon(1e-12));
    CHECK(exact_kl_ik({0.7}, 9) == doctest::Approx(exact_kl_sk({0.7}, 9)));
}

TEST_CASE("bound soundness on randomized inputs") {
    Xoshiro256StarStar rng(2024);
    for (int c = 0; c < 500; ++c) {
        const int h = 1 + static_cast<int>(rng.uniform(0.0, 6.0));
        std::vector<double> terms(h);
        for (auto& t : terms) t = std::pow(10.0, rng.uniform(-4.0, 0.5));
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng.uniform(0.0, 1e6));
        CHECK(exact_kl_sk(terms, n) <= bound_sk(terms, n));
        CHECK(exact_kl_ik(terms, n) <= bound_ik(terms, n));
        // One-ulp slack: the single-hop case is an exact tie up to rounding.
        CHECK(bound_ik(terms, n) <= bound_sk(terms, n) * (1.0 + 1e-15));

        // Monotone in every term.
        std::vector<double> larger = terms;
        larger[0] *= 1.5;
        CHECK(exact_kl_sk(larger, n) >= exact_kl_sk(terms, n));
        CHECK(exact_kl_ik(larger, n) >= exact_kl_ik(terms, n));
        CHECK(bound_sk(larger, n) >= bound_sk(terms, n));
        CHECK(bound_ik(larger, n) >= bound_ik(terms, n));
    }
}

TEST_CASE("B_IK equals B_SK only with a single active term") {
    CHECK(bound_ik({0.0, 0.4, 0.0}, 8) == doctest::Approx(bound_sk({0.0, 0.4, 0.0}, 8)));
    CHECK(bound_ik({0.1, 0.4}, 8) < bound_sk({0.1, 0.4}, 8));
}

TEST_CASE("Gaussian oracle basics") {
    SUBCASE("rank-one perturbation of the identity") {
        const GaussianPair pair{{1.0, 1.0}, {1.0, 0.0}, 1};
        CHECK(kl_gaussian_oracle(pair) ==
              doctest::Approx(0.15342640972002736).epsilon(1e-12));
    }
    SUBCASE("identical distributions") {
        const GaussianPair pair{{2.0, 3.0, 0.5}, {0.0, 0.0, 0.0}, 5};
        CHECK(kl_gaussian_oracle(pair) == doctest::Approx(0.0));
    }
    SUBCASE("replication multiplies") {
        const GaussianPair once{{1.0, 2.0}, {0.5, 0.25}, 1};
        const GaussianPair many{{1.0, 2.0}, {0.5, 0.25}, 7};
        CHECK(kl_gaussian_oracle(many) ==
              doctest::Approx(7.0 * kl_gaussian_oracle(once)));
    }
    SUBCASE("singular S rejected") {
        CHECK_THROWS_AS(kl_gaussian_oracle({{1.0, 0.0}, {0.0, 0.0}, 1}),
                        ValidationError);
    }
    SUBCASE("matches the scalar closed form") {
        // diag S, u arbitrary: T = sum u_i^2/s_i, D = rep/2 (T - ln(1+T)).
        const GaussianPair pair{{1.5, 0.7, 2.0}, {0.4, 0.3, 0.9}, 3};
        double t = 0.0;
        for (int i = 0; i < 3; ++i)
            t += pair.u[i] * pair.u[i] / pair.sigma_diag[i];
        CHECK(kl_gaussian_oracle(pair) ==
              doctest::Approx(1.5 * (t - std::log1p(t))).epsilon(1e-12));
    }
}
