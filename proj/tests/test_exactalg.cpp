#include "helpers.hpp"

using namespace testing_support;

TEST_SUITE("exactalg") {

TEST_CASE("field parsing and arithmetic") {
    CHECK(Field::parse("Q").isRationals());
    CHECK(Field::parse("Fp:7").characteristic() == 7);
    CHECK(Field::standard().toString() == "Fp:101");
    CHECK_THROWS_AS(Field::parse("Fp:8"), PreconditionError);
    CHECK_THROWS_AS(Field::parse("R"), PreconditionError);

    const Field q = rationals();
    Scalar a = Scalar::parse(q, "2/3");
    Scalar b = Scalar::parse(q, "-1/6");
    CHECK((a + b).toString() == "1/2");
    CHECK((a * b).toString() == "-1/9");
    CHECK((a / b).toString() == "-4");

    const Field f7 = fp(7);
    CHECK(Scalar(f7, 3).inverse() == Scalar(f7, 5));
    CHECK(Scalar(f7, -1).toString() == "6");
    CHECK(Scalar(f7, 3).pow(6).isOne());
    CHECK_THROWS_AS(Scalar::zero(f7).inverse(), PreconditionError);
}

TEST_CASE("rref") {
    const Field q = rationals();
    Matrix id = Matrix::identity(q, 2);
    CHECK(id.rref() == id);
    CHECK(id.rank() == 2);
    CHECK(id.rref().pivotColumns() == std::vector<std::size_t>{0, 1});

    Matrix z(q, 3, 3);
    CHECK(z.rank() == 0);
    CHECK(z.rref().rows() == 0);

    Matrix m = mat(q, 2, {{1, 2}, {2, 4}});
    CHECK(m.rref() == mat(q, 2, {{1, 2}}));
    CHECK(m.rank() == 1);

    Matrix n = mat(q, 3, {{0, 2, 4}, {1, 1, 1}});
    CHECK(n.rref() == mat(q, 3, {{1, 0, -1}, {0, 1, 2}}));
}

TEST_CASE("row space sum and intersection") {
    const Field q = rationals();
    Matrix e1 = mat(q, 2, {{1, 0}});
    Matrix e2 = mat(q, 2, {{0, 1}});
    CHECK(rowSpaceSum(e1, e2).rank() == 2);
    CHECK(rowSpaceSum(e1, e1) == e1);
    CHECK(rowSpaceSum(mat(q, 3, {{1, 1, 0}}), mat(q, 3, {{0, 1, 1}})).rank() == 2);

    CHECK(rowSpaceIntersect(e1, e1) == e1);
    CHECK(rowSpaceIntersect(e1, e2).rows() == 0);
    Matrix p1 = mat(q, 3, {{1, 0, 0}, {0, 1, 0}});
    Matrix p2 = mat(q, 3, {{1, 1, 1}, {0, 1, 2}});
    Matrix line = rowSpaceIntersect(p1, p2);
    CHECK(line.rank() == 1);
    CHECK(p1.rowSpaceContains(line.row(0)));
    CHECK(p2.rowSpaceContains(line.row(0)));
}

TEST_CASE("kernel") {
    const Field q = rationals();
    CHECK(kernel(Matrix::identity(q, 3)).rows() == 0);
    CHECK(kernel(Matrix(q, 2, 3)).rank() == 3);
    Matrix k = kernel(mat(q, 3, {{1, 1, 1}}));
    CHECK(k.rank() == 2);
    for (const auto& v : k.rowVectors()) CHECK((v[0] + v[1] + v[2]).isZero());
}

TEST_CASE("dimension formula for random subspaces over F_5") {
    const Field f = fp(5);
    std::mt19937_64 rng(3);
    for (int s = 0; s < 60; ++s) {
        Matrix a(f, 1 + rng() % 4, 6), b(f, 1 + rng() % 4, 6);
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < 6; ++c) a.at(r, c) = Scalar(f, static_cast<long>(rng() % 5));
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < 6; ++c) b.at(r, c) = Scalar(f, static_cast<long>(rng() % 5));
        Matrix sum = rowSpaceSum(a, b);
        Matrix meet = rowSpaceIntersect(a, b);
        CHECK(sum.rank() + meet.rank() == a.rank() + b.rank());
        for (const auto& v : meet.rowVectors()) {
            CHECK(a.rowSpaceContains(v));
            CHECK(b.rowSpaceContains(v));
        }
        Matrix k = kernel(a);
        CHECK(k.rank() + a.rank() == 6);
        Matrix prod = a * k.transpose();
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c) CHECK(prod.at(r, c).isZero());
    }
}

TEST_CASE("subspace enumeration matches the Gaussian binomial") {
    long count = 0;
    forEachSubspace(fp(3), 4, 2, [&](const Matrix& m) {
        CHECK(m.rank() == 2);
        ++count;
    });
    CHECK(count == 130);
}

}
