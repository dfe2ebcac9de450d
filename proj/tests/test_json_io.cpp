#include "helpers.hpp"

using namespace testing_support;

TEST_SUITE("cli") {

TEST_CASE("form and space encodings") {
    const Field q = rationals();
    auto j = io::toJson(poly(q, {1, 0, -1}));
    CHECK(j.dump() == R"({"degree":2,"coeffs":["1","0","-1"]})");
    FormSpace v = example(q);
    auto s = io::toJson(v);
    CHECK(s["degree"] == 4);
    CHECK(s["field"] == "Q");
    CHECK(s["basis"].size() == 3);
    CHECK(io::spaceFromJson(s) == v);
    auto parsed = io::spaceFromJson(io::Json::parse(
        R"({"degree":2,"field":"Fp:7","basis":[{"degree":2,"coeffs":[2,4,6]},{"degree":2,"coeffs":["1","2","3"]}]})"));
    CHECK(parsed.dim() == 1);
    CHECK(parsed.forms().front() == poly(fp(7), {1, 2, 3}));
}

TEST_CASE("ideal encoding round trip") {
    const Field f = Field::standard();
    GradedIdeal i = ancestorIdeal(randomSpace(3, 6, f, 3));
    auto j = io::toJson(i);
    CHECK(j["window"].size() == 2);
    CHECK(io::idealFromJson(j) == i);
    CHECK(io::toJson(GradedIdeal::zero(f))["tailGcd"].is_null());
    CHECK(io::idealFromJson(io::toJson(GradedIdeal::unit(f))) == GradedIdeal::unit(f));
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(io::spaceFromJson(io::Json::parse(R"({"degree":2})")), PreconditionError);
    CHECK_THROWS_AS(io::spaceFromJson(io::Json::parse(R"({"degree":2,"field":"Q","basis":[{"degree":2,"coeffs":[1]}]})")),
                    PreconditionError);
    CHECK_THROWS_AS(io::spaceFromJson(io::Json::parse(R"({"degree":1,"field":"Fp:9","basis":[]})")), PreconditionError);
}

TEST_CASE("reports") {
    auto r = io::toJson(dims(seq("1,2,3,4,3,2(1)"), 4, 5));
    CHECK(r["dimGrassH"] == 5);
    CHECK(r["codimGrassH"] == 3);
    CHECK(r["discrepancies"].size() > 0);
    auto h = io::toJson(hasse(4, 5));
    CHECK(h["nodes"].size() == 6);
    const Field q = rationals();
    auto w = DualSpace::span(q, 3, {DualForm(mono(q, 3, 0)), DualForm(mono(q, 0, 3))});
    auto g = io::toJson(gad(w), tauDelta(w), mu(w));
    CHECK(g["mu"] == 2);
    CHECK(g["gad"]["weights"].size() == 2);
}

}
