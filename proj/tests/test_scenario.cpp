#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "covertroute/random.hpp"
#include "covertroute/scenario.hpp"

using namespace covertroute;

TEST_CASE("euclidean distance") {
    CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(distance({1, 1}, {1, 1}) == 0.0);
    CHECK(distance({0, 0}, {1, 1}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("generate_random is deterministic") {
    const Scenario a = generate_random(7, 5, 3, 100, 3, 1, 1);
    const Scenario b = generate_random(7, 5, 3, 100, 3, 1, 1);
    CHECK(scenario_to_json(a) == scenario_to_json(b));
}

TEST_CASE("generate_random empty case") {
    const Scenario s = generate_random(7, 0, 0, 100, 3, 1, 1);
    REQUIRE(s.nodes.size() == 2);
    CHECK(s.wardens.empty());
    CHECK(s.node(s.source).position.x == 0.0);
    CHECK(s.node(s.source).position.y == 0.0);
    CHECK(s.node(s.dest).position.x == 100.0);
    CHECK(s.node(s.dest).position.y == 100.0);
}

TEST_CASE("all generated coordinates stay inside the square") {
    // Exhaustive bound check over seeds 1..1000.
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        const Scenario s = generate_random(seed, 10, 10, 100, 2, 1, 1);
        for (const auto& n : s.nodes) {
            CHECK(n.position.x >= 0.0);
            CHECK(n.position.x <= 100.0);
            CHECK(n.position.y >= 0.0);
            CHECK(n.position.y <= 100.0);
        }
        for (const auto& w : s.wardens) {
            CHECK(w.position.x >= 0.0);
            CHECK(w.position.x <= 100.0);
            CHECK(w.position.y >= 0.0);
            CHECK(w.position.y <= 100.0);
        }
    }
}

TEST_CASE("relay and warden draws nest across counts") {
    const Scenario small = generate_random(42, 3, 2, 100, 2, 1, 1);
    const Scenario big = generate_random(42, 8, 7, 100, 2, 1, 1);
    for (std::size_t i = 0; i < small.nodes.size(); ++i) {
        CHECK(small.nodes[i].position.x == big.nodes[i].position.x);
        CHECK(small.nodes[i].position.y == big.nodes[i].position.y);
    }
    for (std::size_t k = 0; k < small.wardens.size(); ++k) {
        CHECK(small.wardens[k].position.x == big.wardens[k].position.x);
        CHECK(small.wardens[k].position.y == big.wardens[k].position.y);
    }
}

TEST_CASE("save/load round-trip") {
    const Scenario s = generate_random(11, 6, 4, 250, 2.5, 0.7, 1.3);
    const auto path =
        (std::filesystem::temp_directory_path() / "covertroute_rt.json").string();
    save_scenario(s, path);
    const Scenario loaded = load_scenario(path);
    CHECK(scenario_to_json(loaded) == scenario_to_json(s));
    std::remove(path.c_str());
}

TEST_CASE("validation gates") {
    Scenario s = generate_random(1, 2, 1, 100, 2, 1, 1);

    SUBCASE("alpha below 2") {
        s.alpha = 1.5;
        CHECK_THROWS_WITH_AS(s.validate(), "alpha < 2", ValidationError);
    }
    SUBCASE("duplicate node id") {
        s.nodes[2].id = s.nodes[3].id;
        CHECK_THROWS_AS(s.validate(), ValidationError);
    }
    SUBCASE("coincident node positions") {
        s.nodes[2].position = s.nodes[3].position;
        CHECK_THROWS_AS(s.validate(), ValidationError);
    }
    SUBCASE("source equals dest") {
        s.dest = s.source;
        CHECK_THROWS_AS(s.validate(), ValidationError);
    }
    SUBCASE("nonpositive noise") {
        s.nodes[0].noise_var = 0.0;
        CHECK_THROWS_AS(s.validate(), ValidationError);
    }
    SUBCASE("json with bad alpha") {
        std::string text = scenario_to_json(s);
        CHECK_THROWS_AS(scenario_from_json("{\"dimension\":1}"), ValidationError);
    }
}

TEST_CASE("uniform draws are exact 53-bit multiples in [0,1)") {
    Xoshiro256StarStar rng(123);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(u * 9007199254740992.0 == std::floor(u * 9007199254740992.0));
    }
}
