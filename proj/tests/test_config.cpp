#include <doctest.h>

#include "qtide/config.hpp"

using namespace qtide;

TEST_CASE("empty document yields the reference defaults") {
    for (const char* source : {"", "   \n\t", "{}"}) {
        ScenarioConfig cfg = load_config(source);
        CHECK(cfg.cube_edge_m == 0.01);
        CHECK(cfg.density_kg_m3 == 1.0e4);
        CHECK(cfg.principal_n == 100);
    }
}

TEST_CASE("partial documents override only their keys") {
    ScenarioConfig cfg = load_config(R"({"circuit": {"L_m": 0.02}, "atom": {"n": 50}})");
    CHECK(cfg.cube_edge_m == 0.02);
    CHECK(cfg.density_kg_m3 == 1.0e4);
    CHECK(cfg.principal_n == 50);
    CHECK(cfg.drop_separation_m == 1.0);
}

TEST_CASE("unknown keys are rejected by name") {
    CHECK_THROWS_WITH_AS(load_config(R"({"circut": {}})"),
                         doctest::Contains("circut"), ParseError);
    CHECK_THROWS_WITH_AS(load_config(R"({"circuit": {"edge": 1}})"),
                         doctest::Contains("circuit.edge"), ParseError);
    CHECK_THROWS_WITH_AS(load_config(R"({"drop": {"step": 0.1}})"),
                         doctest::Contains("drop.step"), ParseError);
}

TEST_CASE("malformed JSON raises ParseError") {
    CHECK_THROWS_AS(load_config("{"), ParseError);
    CHECK_THROWS_AS(load_config("[1,2]"), ParseError);
    CHECK_THROWS_AS(load_config(R"({"atom": {"n": "hundred"}})"), ParseError);
    CHECK_THROWS_AS(load_config(R"({"atom": {"n": 99.5}})"), ParseError);
}

TEST_CASE("nonpositive physical values raise ValidationError") {
    CHECK_THROWS_AS(load_config(R"({"circuit": {"L_m": -1}})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"circuit": {"rho_kg_m3": 0}})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"atom": {"n": 0}})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"drop": {"step_s": -0.1}})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"drop": {"duration_s": 1e-9}})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"cavendish": {"noise_rms": -1}})"), ValidationError);
}

TEST_CASE("serialize/load round trip is the identity") {
    ScenarioConfig cfg;
    cfg.cube_edge_m = 0.035;
    cfg.principal_n = 7;
    cfg.noise_rms = 1.5e-13;
    ScenarioConfig reloaded = load_config(serialize_config(cfg));
    CHECK(reloaded == cfg);

    // serialize(load(x)) is a normal form: serializing again is stable.
    const std::string once = serialize_config(load_config(R"({"atom": {"n": 12}})"));
    const std::string twice = serialize_config(load_config(once));
    CHECK(once == twice);
}
