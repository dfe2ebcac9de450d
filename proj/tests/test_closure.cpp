#include "helpers.hpp"

using namespace testing_support;

namespace {

OSequence ramp(int upTo, std::vector<int> rest, int constant) {
    std::vector<int> p;
    for (int v = 1; v <= upTo; ++v) p.push_back(v);
    p.insert(p.end(), rest.begin(), rest.end());
    return OSequence(std::move(p), constant);
}

/// Ideal whose degree-i part is spanned by the first i + 1 - N_i monomials in lex order; N vanishes from degree j + 1.
GradedIdeal lexSegment(const Field& f, const OSequence& n, int j) {
    std::vector<FormSpace> comps;
    for (int i = 0; i <= j + 1; ++i) {
        std::vector<BinaryForm> gens;
        for (int a = 0; a < i + 1 - n[i]; ++a) gens.push_back(mono(f, i - a, a));
        comps.push_back(FormSpace::span(f, i, gens));
    }
    return GradedIdeal::fromComponents(f, 0, comps, BinaryForm::constant(Scalar::one(f)));
}

int top(const GradedIdeal& a, const GradedIdeal& b) { return std::max(a.settledDegree(), b.settledDegree()) + 1; }

}  // namespace

TEST_SUITE("closure") {

TEST_CASE("nose interpolation") {
    const OSequence np = ramp(13, {11, 9, 7, 4}, 0);
    const OSequence n = ramp(13, {12, 11, 8, 4}, 0);
    const OSequence n1 = stepN(np, n, 13, 16);
    CHECK(n1 == ramp(13, {12, 10, 8, 4}, 0));
    CHECK(stepN(n1, n, 13, 16) == n);
    CHECK_THROWS_AS(stepN(n, n, 13, 16), PreconditionError);
    CHECK_THROWS_AS(stepN(n, np, 13, 16), PreconditionError);
}

TEST_CASE("tail interpolation") {
    CHECK(stepT(seq("1,2,3,4,2,1(0)"), seq("1,2,3,4,2(0)"), 3, 4) == seq("1,2,3,4,2(0)"));
    CHECK_THROWS_AS(stepT(seq("1,2,3,4,2(0)"), seq("1,2,3,4,2(0)"), 3, 4), PreconditionError);
    const OSequence next = stepT(seq("1,2,3,4,2(1)"), seq("1,2,3,4,2(0)"), 3, 4);
    CHECK(next == seq("1,2,3,4,2(0)"));
}

TEST_CASE("nose construction from lex segments") {
    const Field f = Field::standard();
    for (int j = 2; j <= 6; ++j)
        for (int d = 1; d <= j; ++d) {
            auto list = enumerateAcceptable(d, j);
            for (const auto& hp : list)
                for (const auto& h : list) {
                    if (comparePartial(hp, h, d, j) != Order::Greater) continue;
                    const OSequence np = noseTail(hp, j).nose;
                    const OSequence n = noseTail(h, j).nose;
                    if (np == n) continue;
                    GradedIdeal ip = lexSegment(f, np, j);
                    REQUIRE(hilbertFunction(ip) == np);
                    auto trace = buildN(ip, n, d, j);
                    CHECK(hilbertFunction(trace.result) == n);
                    CHECK(containsInRange(ip, trace.result, 0, j + 1));
                    CHECK_FALSE(trace.steps.empty());
                    CHECK(trace.steps.back().after == n);
                }
        }
}

TEST_CASE("two-step nose trace") {
    const Field f = Field::standard();
    const OSequence np = ramp(13, {11, 9, 7, 4}, 0);
    const OSequence n = ramp(13, {12, 11, 8, 4}, 0);
    auto trace = buildN(lexSegment(f, np, 16), n, 13, 16);
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].after == ramp(13, {12, 10, 8, 4}, 0));
    CHECK(trace.steps[1].after == n);
    CHECK(buildN(lexSegment(f, n, 16), n, 13, 16).result == lexSegment(f, n, 16));
}

TEST_CASE("tail construction") {
    const Field f = Field::standard();
    FormSpace generic = randomSpace(3, 4, f, 77);
    GradedIdeal ip = intersectPowerOfMaximal(ancestorIdeal(spanOf(f, 4, {mono(f, 4, 0), mono(f, 3, 1), mono(f, 0, 4)})), 4);
    auto trace = buildT(ip, noseTail(hilbertFunction(ancestorIdeal(generic)), 4).tail, 3, 4);
    CHECK(hilbertFunction(trace.result) == noseTail(hilbertFunction(ancestorIdeal(generic)), 4).tail);
    CHECK(containsInRange(trace.result, ip, 4, top(trace.result, ip)));
    CHECK(buildT(ip, hilbertFunction(ip), 3, 4).result == ip);

    FormSpace u = randomSpace(3, 3, f, 5);
    std::vector<BinaryForm> gens;
    for (const auto& g : u.forms()) gens.push_back(mulForm(mono(f, 1, 0), g));
    GradedIdeal divisible = intersectPowerOfMaximal(ancestorIdeal(spanOf(f, 4, gens)), 4);
    REQUIRE(hilbertFunction(divisible).constant() == 1);
    auto refined = buildT(divisible, seq("1,2,3,4,2(0)"), 3, 4);
    CHECK(hilbertFunction(refined.result) == seq("1,2,3,4,2(0)"));
    CHECK(containsInRange(refined.result, divisible, 4, top(refined.result, divisible)));
}

TEST_CASE("tail construction needs a linear factor over the rationals") {
    const Field q = rationals();
    BinaryForm irreducible = poly(q, {1, 0, 1});
    GradedIdeal ip = intersectPowerOfMaximal(GradedIdeal::generatedBy({irreducible}), 3);
    CHECK_THROWS_AS(buildT(ip, seq("1,2,3,2,1(0)"), 2, 3), PreconditionError);
}

TEST_CASE("full construction") {
    const Field f = Field::standard();
    GradedIdeal ip = realizeStaircase(seq("1(2)"), 4, 5, f).ideal;
    for (const auto& h : enumerateAcceptable(4, 5)) {
        auto trace = buildH(ip, h, 5);
        const GradedIdeal& i = trace.result;
        CHECK(hilbertFunction(i) == h);
        CHECK(i.component(5) == ip.component(5));
        CHECK(containsInRange(addPowerOfMaximal(ip, 6), addPowerOfMaximal(i, 6), 0, top(i, ip)));
        CHECK(containsInRange(intersectPowerOfMaximal(i, 5), intersectPowerOfMaximal(ip, 5), 0, top(i, ip)));
    }
    GradedIdeal same = realizeStaircase(seq("1,2,3,4,3,2,1(0)"), 4, 5, f).ideal;
    CHECK(buildH(same, seq("1,2,3,4,3,2,1(0)"), 5).result == same);
    GradedIdeal a = realizeStaircase(seq("1,2,3,4,4,3,2,1(0)"), 3, 5, f).ideal;
    CHECK_THROWS_AS(buildH(a, seq("1,2,3,4,5,3(1)"), 5), PreconditionError);
}

}
