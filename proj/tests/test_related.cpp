#include "helpers.hpp"

using namespace testing_support;

TEST_SUITE("related") {

TEST_CASE("chains") {
    const Field q = rationals();
    FormSpace v = example(q);
    CHECK(applyChain(v, {-1, 1}) == spanOf(q, 4, {mono(q, 4, 0), mono(q, 3, 1)}));
    CHECK(applyChain(v, {}) == v);
    CHECK(applyChain(v, {1, -1}) == v);
    CHECK_THROWS_AS(applyChain(v, {-5}), PreconditionError);
}

TEST_CASE("chain normalization") {
    CHECK(normalizeChain({2, 3}) == Chain{5});
    CHECK(normalizeChain({3, -1, 2}) == Chain{4});
    CHECK(normalizeChain({-1, 2, -3}) == Chain{-1, 2, -3});
    CHECK(normalizeChain({1, 0, 1}) == Chain{2});
}

TEST_CASE("normalization preserves the composite shift") {
    const Field f = Field::standard();
    std::mt19937_64 rng(50);
    int done = 0;
    while (done < 60) {
        const int j = 2 + static_cast<int>(rng() % 6);
        FormSpace v = randomSpace(1 + static_cast<int>(rng() % static_cast<unsigned>(j + 1)), j, f, rng);
        Chain c;
        int deg = j;
        bool ok = true;
        for (int k = 0; k < 4; ++k) {
            int s = 1 + static_cast<int>(rng() % 3);
            if (rng() % 2) s = -s;
            deg += s;
            ok = ok && deg >= 0;
            c.push_back(s);
        }
        if (!ok) continue;
        ++done;
        CHECK(applyChain(v, c) == applyChain(v, normalizeChain(c)));
    }
}

TEST_CASE("related classes") {
    const Field q = rationals();
    auto classes = relatedClasses(example(q));
    REQUIRE(classes.size() == 3);
    std::vector<std::string> hs;
    for (const auto& c : classes) hs.push_back(hilbertFunction(c.ancestor).toString());
    CHECK(std::find(hs.begin(), hs.end(), "1,2,3,3,2,1(0)") != hs.end());
    CHECK(std::find(hs.begin(), hs.end(), "1,2(3)") != hs.end());
    CHECK(std::find(hs.begin(), hs.end(), "(0)") != hs.end());

    auto single = relatedClasses(FormSpace::principal(poly(q, {1, 1, 0}), 5));
    CHECK(single.size() == 1);
    CHECK_THROWS_AS(relatedClasses(FormSpace(q, 3)), PreconditionError);
}

TEST_CASE("class count bound") {
    const Field f = Field::standard();
    std::mt19937_64 rng(51);
    for (int s = 0; s < 40; ++s) {
        const int j = 3 + static_cast<int>(rng() % 6);
        FormSpace v = randomSpace(1 + static_cast<int>(rng() % static_cast<unsigned>(j)), j, f, rng);
        auto classes = relatedClasses(v);
        CHECK(static_cast<int>(classes.size()) <= (1 << tau(v)) - 1);
        for (const auto& c : classes) CHECK(equivalent(applyChain(v, c.chain), c.representative));
    }
}

TEST_CASE("mutual relation forces equivalence in two variables") {
    const Field f = Field::standard();
    std::mt19937_64 rng(52);
    for (int s = 0; s < 100; ++s) {
        const int j = 2 + static_cast<int>(rng() % 6);
        FormSpace v = randomSpace(1 + static_cast<int>(rng() % static_cast<unsigned>(j + 1)), j, f, rng);
        const int shiftBy = -j + static_cast<int>(rng() % static_cast<unsigned>(j + 3));
        FormSpace w = shift(v, shiftBy);
        if (w.isZero()) continue;
        const bool back = shift(w, -shiftBy) == v;
        if (back && tau(w) == tau(v)) CHECK(equivalent(v, w));
        if (equivalent(v, w)) CHECK(back);
    }
}

TEST_CASE("three-variable example") {
    auto report = bermanCheck();
    CHECK(report.holds());
    CHECK(report.recoversV);
    MonomialSpace3 full{2, {}};
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) full.monomials.insert({a, b, 2 - a - b});
    CHECK(shiftDown3(shiftUp3(full, 2), 2) == full);
}

}
