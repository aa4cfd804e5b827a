#include <doctest.h>

#include "cluster_forge/corpus.hpp"
#include "cluster_forge/io.hpp"

using namespace cf;

TEST_CASE("seed JSON") {
    auto s = parse_seed(R"({"n":2,"m":0,"d":[1,1],"B":[[0,1],[-1,0]],"coeff_rank":2,"p":[[1,0],[0,1]]})", "a2");
    CHECK(s.ex == fixture("a2"));
    CHECK(s.p == principal_coefficients(2));
    auto back = parse_seed(seed_to_json(s.ex, s.p).dump(), "again");
    CHECK(back.ex == s.ex);
    CHECK(back.p == s.p);
    // d and p are optional
    auto b = parse_seed(R"({"n":2,"B":[[0,-1],[2,0]],"d":[2,1]})", "b2");
    CHECK(b.ex == fixture("b2"));
    CHECK(b.p.empty());

    auto msg = [](const std::string& text) {
        try {
            parse_seed(text, "f.json");
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(msg("{").find("f.json: malformed JSON") == 0);
    CHECK(msg(R"({"B":[[0]]})").find("missing field 'n'") != std::string::npos);
    CHECK(msg(R"({"n":2,"B":[[0,1],[1,0]]})").find("skew-symmetrizable") != std::string::npos);
    CHECK(msg(R"({"n":2,"B":[[0,1]]})").find("'B'") != std::string::npos);
    CHECK(msg(R"({"n":1,"B":[[0.5]]})").find("integer") != std::string::npos);
    CHECK(msg(R"({"n":1,"B":[[0]],"coeff_rank":1,"p":[[1,2]]})").find("coeff_rank") != std::string::npos);
    CHECK_THROWS_AS(read_seed("/nonexistent/seed.json"), InputError);
    CHECK(read_seed("fixture:a3").ex.n == 3);
}

TEST_CASE("fan JSON round trip") {
    for (auto name : {"a2", "a3", "b2", "a3-frozen"}) {
        auto a = enumerate_gfan(fixture(name), fixture_frozen(name));
        auto j = fan_to_json(a);
        auto b = fan_from_json(j, name);
        CHECK(fan_to_json(b) == j);
        CHECK(b.cones.size() == a.cones.size());
    }
    auto j = fan_to_json(enumerate_gfan(fixture("a2")));
    CHECK(j["maximal_cones"].size() == 5);
    CHECK(j["rays"] == json::parse("[[-1,0],[-1,1],[0,-1],[0,1],[1,0]]"));
    j["rays"][0] = {7, 7};
    CHECK_THROWS_AS(fan_from_json(j, "tampered"), InputError);
    auto mk = fan_to_json(enumerate_gfan(fixture("markov"), {}, 3));
    CHECK(mk["finite"] == false);
}

TEST_CASE("fixture files match the built-in fixtures") {
    for (auto& name : fixture_names()) {
        if (name == "a3-frozen") continue;  // a3.json with --freeze 1
        auto s = read_seed(std::string(CF_SOURCE_DIR) + "/fixtures/" + name + ".json");
        CHECK(s.ex == fixture(name));
    }
}
