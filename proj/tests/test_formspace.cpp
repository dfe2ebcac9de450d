#include "helpers.hpp"

using namespace testing_support;

TEST_SUITE("formspace") {

TEST_CASE("shifts of the running example") {
    const Field q = rationals();
    FormSpace v = example(q);
    CHECK(shift(v, -1) == spanOf(q, 3, {mono(q, 3, 0)}));
    CHECK(shift(FormSpace::full(q, 4), 1).isFull());
    CHECK(shift(spanOf(q, 3, {mono(q, 3, 0), mono(q, 0, 3)}), -1).isZero());
    CHECK(shift(v, 2).isFull());
    CHECK(shift(v, 0) == v);
}

TEST_CASE("shift down agrees with brute force over F_3") {
    const Field f = fp(3);
    std::mt19937_64 rng(2);
    for (int s = 0; s < 25; ++s) {
        const int j = 2 + static_cast<int>(rng() % 3);
        FormSpace v = randomSpace(1 + static_cast<int>(rng() % static_cast<unsigned>(j + 1)), j, f, rng);
        std::vector<BinaryForm> members;
        forEachSubspace(f, j, 1, [&](const Matrix& m) {
            BinaryForm g(f, m.row(0));
            if (v.contains(mulForm(mono(f, 1, 0), g)) && v.contains(mulForm(mono(f, 0, 1), g))) members.push_back(g);
        });
        CHECK(shiftDown(v) == FormSpace::span(f, j - 1, members));
    }
}

TEST_CASE("tau") {
    const Field q = rationals();
    CHECK(tau(example(q)) == 2);
    CHECK(tau(FormSpace::full(q, 5)) == 1);
    CHECK(tau(FormSpace(q, 5)) == 0);
    CHECK(tau(spanOf(q, 3, {mono(q, 3, 0), mono(q, 0, 3)})) == 2);
}

TEST_CASE("gcd of a space") {
    const Field q = rationals();
    CHECK(gcdOfSpace(spanOf(q, 3, {mono(q, 2, 1), mono(q, 1, 2)})) == mono(q, 1, 1));
    CHECK(gcdOfSpace(example(q)).degree() == 0);
    BinaryForm f = poly(q, {1, 1, 0, 0});
    CHECK(gcdOfSpace(spanOf(q, 3, {f})) == f);
}

TEST_CASE("ancestor, level and generated ideals") {
    const Field q = rationals();
    CHECK(ancestorIdeal(example(q)) == GradedIdeal::generatedBy({mono(q, 3, 0), mono(q, 0, 4)}));
    BinaryForm f = poly(q, {1, 0, -1});
    CHECK(ancestorIdeal(FormSpace::principal(f, 5)) == GradedIdeal::generatedBy({f}));
    GradedIdeal ci = ancestorIdeal(spanOf(q, 3, {mono(q, 3, 0), mono(q, 0, 3)}));
    CHECK(hilbertFunction(ci) == seq("1,2,3,2,1(0)"));

    FormSpace g = spanOf(q, 3, {poly(q, {0, 1, 1, 0}), mono(q, 3, 0), mono(q, 0, 3)});
    CHECK(levelIdeal(g) == GradedIdeal::generatedBy({poly(q, {1, 1, 1}), mono(q, 3, 0)}));
    CHECK(hilbertFunction(levelIdeal(g)) == seq("1,2,2,1(0)"));
    CHECK(levelIdeal(FormSpace::full(q, 4)) == GradedIdeal::generatedBy({BinaryForm::constant(Scalar::one(q))}));
    CHECK(hilbertFunction(levelIdeal(example(q))) == seq("1,2,3,3,2(0)"));

    CHECK(hilbertFunction(generatedIdeal(example(q))) == seq("1,2,3,4,2,1(0)"));
    CHECK(hilbertFunction(generatedIdeal(FormSpace::full(q, 3))) == seq("1,2,3(0)"));
    CHECK(hilbertFunction(generatedIdeal(FormSpace::principal(f, 5))) == seq("1,2,3,4,5(2)"));
}

TEST_CASE("equivalence") {
    const Field q = rationals();
    FormSpace v = example(q);
    CHECK(equivalent(v, shift(v, 1)));
    CHECK_FALSE(equivalent(v, shift(v, 2)));
    CHECK(equivalent(v, v));
    CHECK_FALSE(equivalent(v, shift(v, -1)));
}

TEST_CASE("random spaces") {
    const Field f = Field::standard();
    CHECK(randomSpace(0, 5, f, 1).isZero());
    CHECK(randomSpace(6, 5, f, 1).isFull());
    CHECK(randomSpace(3, 6, f, 42) == randomSpace(3, 6, f, 42));
    int generic = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        if (tau(randomSpace(4, 5, f, seed)) == 3) ++generic;
    CHECK(generic >= 48);
}

TEST_CASE("dimension identity for shifts") {
    const Field f = Field::standard();
    std::mt19937_64 rng(4);
    for (int s = 0; s < 50; ++s) {
        const int j = 1 + static_cast<int>(rng() % 8);
        FormSpace v = randomSpace(static_cast<int>(rng() % static_cast<unsigned>(j + 2)), j, f, rng);
        CHECK(shiftDown(v).dim() + shiftUp(v).dim() == 2 * v.dim());
    }
}

}
