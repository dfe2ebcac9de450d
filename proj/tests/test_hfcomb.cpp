#include "helpers.hpp"

#include <map>
#include <set>

using namespace testing_support;

namespace {

OSequence ramp(int upTo, std::vector<int> rest, int constant) {
    std::vector<int> p;
    for (int v = 1; v <= upTo; ++v) p.push_back(v);
    p.insert(p.end(), rest.begin(), rest.end());
    return OSequence(std::move(p), constant);
}

}  // namespace

TEST_SUITE("hfcomb") {

TEST_CASE("sequence text form") {
    CHECK(seq("1,2,3,4,3,2,1(1)") == seq("1,2,3,4,3,2(1)"));
    CHECK(seq("1,2(2)").toString() == "1(2)");
    CHECK(seq("R").isPolynomialRing());
    CHECK(seq("1,2,3,3,2,1(0)")[10] == 0);
    CHECK(seq("1,2,3,3,2,1(0)").order() == 3);
    CHECK_THROWS_AS(seq("1,2,x"), PreconditionError);
    CHECK(Partition::parse("[3,3,2,1]").dual() == Partition({4, 3, 2}));
    CHECK(Partition({1, 1, 1, 1}).dual() == Partition({4}));
    CHECK(Partition({2, 2}).dual() == Partition({2, 2}));
    CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
}

TEST_CASE("difference sequences") {
    auto e = differenceSequence(seq("1,2,3,3,2,1(0)"));
    CHECK(std::vector<int>(e.begin(), e.begin() + 7) == std::vector<int>{-1, -1, -1, 0, 1, 1, 1});
    CHECK(diffAt(seq("(1)"), 3) == 0);
    const OSequence h = ramp(12, {11, 9, 6, 3}, 0);
    CHECK(diffAt(h, 12) == 1);
    CHECK(diffAt(h, 13) == 2);
    CHECK(diffAt(h, 14) == 3);
    CHECK(diffAt(h, 15) == 3);
    CHECK(diffAt(h, 16) == 3);
    CHECK(diffAt(h, 17) == 0);
}

TEST_CASE("acceptability") {
    CHECK(isAcceptable(seq("1,2,3,4,3,2,1(0)"), 4, 5));
    CHECK(isAcceptable(seq("1,2,3,4,4,3,2,1(0)"), 3, 5));
    CHECK_FALSE(isAcceptable(seq("1,2,3,4,4,3,1(0)"), 3, 5));
    CHECK_FALSE(isAcceptable(seq("1,2,3,4,3,2,1(0)"), 3, 5));
}

TEST_CASE("partitions of the table rows") {
    auto pq = partitionsPQ(seq("1,2,3,4,4,2(0)"), 4, 5);
    CHECK(pq.P == Partition({3, 1}));
    CHECK(pq.Q == Partition({2}));
    const OSequence h = ramp(12, {11, 9, 6, 3}, 0);
    auto big = partitionsPQ(h, 9, 14);
    CHECK(big.P == Partition({4, 3, 2}));
    CHECK(big.Q == Partition({3, 3}));
    auto b = bettiPartitions(h, 9, 14);
    CHECK(b.A == Partition({3, 3, 2, 1}));
    CHECK(b.B == Partition({2, 2, 2}));
    CHECK(b.C == Partition({4, 4, 3, 2, 1, 1, 1}));
    auto t1 = bettiPartitions(seq("1,2,3,4,3,2,1(0)"), 4, 5);
    CHECK(t1.A == Partition({2, 2}));
    CHECK(t1.B == Partition({2}));
    CHECK(t1.C == Partition({3, 3, 1}));
    CHECK(t1.D == Partition({3, 1, 1}));
    auto principal = partitionsPQ(seq("1(2)"), 4, 5);
    CHECK(principal.P == Partition({1, 1, 1, 1}));
    CHECK(principal.Q.empty());
}

TEST_CASE("ell") {
    CHECK(ell(Partition({3, 3, 2, 1})) == 2);
    CHECK(ell(Partition({4, 4, 3, 2, 1, 1, 1})) == 17);
    CHECK(ell(Partition({5})) == 0);
    CHECK(ell(Partition({2, 2, 2})) == 0);
}

TEST_CASE("inverse of the partition map") {
    CHECK(hilbertFromPartitions(Partition({3, 1}), Partition({2}), 5, 0) == seq("1,2,3,4,4,2(0)"));
    CHECK(hilbertFromPartitions(Partition({2, 2}), Partition({1}), 5, 1) == seq("1,2,3,4,3,2(1)"));
    for (int j = 1; j <= 7; ++j)
        for (int d = 1; d <= j; ++d)
            for (const auto& h : enumerateAcceptable(d, j)) {
                auto pq = partitionsPQ(h, d, j);
                CHECK(hilbertFromPartitions(pq.P, pq.Q, j, h.constant()) == h);
            }
}

TEST_CASE("nose and tail") {
    auto nt = noseTail(seq("1,2,3,4,3,2,1(0)"), 5);
    CHECK(nt.nose == seq("1,2,3,4,3,2(0)"));
    CHECK(nt.tail == seq("1,2,3,4,5,2,1(0)"));
    CHECK(joinNoseTail(nt.nose, nt.tail, 5) == seq("1,2,3,4,3,2,1(0)"));
    auto big = noseTail(ramp(12, {11, 9, 6, 3}, 0), 14);
    CHECK(big.nose == ramp(12, {11, 9, 6}, 0));
    CHECK(big.tail == ramp(14, {6, 3}, 0));
}

TEST_CASE("dimension reports") {
    auto r = dims(ramp(12, {11, 9, 6, 3}, 0), 9, 14);
    CHECK(r.dimGrassH == 37);
    CHECK(r.codimGrassH() == 17);
    CHECK(r.dimGrassTau == 39);
    CHECK(r.discrepancies().empty());
    auto h3 = dims(seq("1(2)"), 4, 5);
    CHECK(h3.dimGrassH == 2);
    CHECK(h3.codimGrassH() == 6);
    auto h2 = dims(seq("1,2,3,4,3,2(1)"), 4, 5);
    CHECK(h2.dimGrassH == 5);
    CHECK(h2.checks.at(1).agrees());
    CHECK_FALSE(h2.discrepancies().empty());
    CHECK(dims(seq("1,2,3,4,3,2,1(0)"), 4, 5).codimGrassH() == 2);
}

TEST_CASE("generic sequence for each tau") {
    CHECK(hTau(4, 5, 2) == seq("1,2,3,4,3,2,1(0)"));
    CHECK(hTau(4, 5, 3) == seq("1,2,3,4,4,2(0)"));
    CHECK(hTau(4, 5, 1) == seq("1(2)"));
    for (int j = 1; j <= 7; ++j)
        for (int d = 1; d <= j; ++d)
            for (int t = 1; t <= std::min(d, j + 2 - d); ++t) {
                auto h = hTau(d, j, t);
                CHECK(isAcceptable(h, d, j));
                CHECK(tauOf(h, j) == t);
            }
}

TEST_CASE("partial orders") {
    CHECK((comparePartial(seq("1,2,3,4,4,3,2,1(0)"), seq("1,2,3,4,5,3(1)"), 3, 5) == Order::Incomparable));
    CHECK((comparePartial(seq("1,2,3,4,3,2,1(0)"), seq("1,2,3,4,3,2,1(0)"), 4, 5) == Order::Equal));
    CHECK((comparePartial(seq("1(2)"), seq("1,2,3,4,4,2(0)"), 4, 5) == Order::Greater));
    CHECK((compareMajorization(Partition({4, 2, 2, 2}), Partition({3, 3, 3, 1})) == Order::Incomparable));
    CHECK((compareMajorization(Partition({3, 3, 2, 1}), Partition({3, 3, 2, 1})) == Order::Equal));
    CHECK((compareMajorization(Partition({3, 1}), Partition({2, 2})) == Order::Greater));
    CHECK((compareHarderNarasimhan(Partition({3, 1}), Partition({2, 2})) == Order::Greater));
}

TEST_CASE("dualizing reverses majorization") {
    std::vector<Partition> parts;
    std::function<void(int, int, std::vector<int>&)> gen = [&](int n, int top, std::vector<int>& cur) {
        if (n == 0) {
            parts.emplace_back(cur);
            return;
        }
        for (int v = std::min(n, top); v >= 1; --v) {
            cur.push_back(v);
            gen(n - v, v, cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    gen(7, 7, cur);
    for (const auto& a : parts)
        for (const auto& b : parts) {
            const Order o = compareMajorization(a, b);
            const Order dual = compareMajorization(b.dual(), a.dual());
            CHECK((o == dual));
        }
}

TEST_CASE("enumeration") {
    auto list = enumerateAcceptable(4, 5);
    CHECK(list.size() == 6);
    CHECK(enumerateAcceptable(1, 1).size() == 1);
    auto three = enumerateAcceptable(3, 5);
    CHECK(std::find(three.begin(), three.end(), seq("1,2,3,4,4,3,2,1(0)")) != three.end());
    CHECK(std::find(three.begin(), three.end(), seq("1,2,3,4,5,3(1)")) != three.end());
}

TEST_CASE("every realizable Hilbert function over F_3 for (d,j) = (4,5)") {
    const Field f = fp(3);
    std::map<std::string, long> strata;
    forEachSubspace(f, 6, 4, [&](const Matrix& m) {
        ++strata[hilbertFunction(ancestorIdeal(FormSpace(f, 5, m))).toString()];
    });
    std::set<std::string> listed;
    for (const auto& h : enumerateAcceptable(4, 5)) listed.insert(h.toString());
    std::set<std::string> seen;
    long total = 0;
    for (const auto& [h, n] : strata) {
        seen.insert(h);
        total += n;
    }
    CHECK(total == 11011);
    CHECK(seen == listed);
    CHECK(strata["1(2)"] == 13);
    CHECK(strata["1,2,3,4,3,2(1)"] == 324);
    CHECK(strata["1,2,3,3,3,2(1)"] == 144);
    CHECK(strata["1,2,3,3,3,2,1(0)"] > 0);
}

TEST_CASE("every realizable Hilbert function over F_2 for small degrees") {
    const Field f = fp(2);
    for (int j = 1; j <= 5; ++j)
        for (int d = 1; d <= j; ++d) {
            std::set<std::string> seen;
            forEachSubspace(f, j + 1, d, [&](const Matrix& m) {
                seen.insert(hilbertFunction(ancestorIdeal(FormSpace(f, j, m))).toString());
            });
            std::set<std::string> listed;
            for (const auto& h : enumerateAcceptable(d, j)) listed.insert(h.toString());
            CHECK(seen == listed);
        }
}

TEST_CASE("counting") {
    CHECK(countByTau(4, 5, 2, 0) == 2);
    CHECK(countByTau(4, 5, 3, 0) == 1);
    CHECK(countByTau(4, 5, 1, 2) == 1);
    CHECK(partitionsInBox(2, 2, 2) == 2);
    CHECK(partitionsLargestPart(2, 4) == 2);
    for (int j = 1; j <= 7; ++j)
        for (int d = 1; d <= j; ++d) {
            std::map<std::pair<int, int>, std::uint64_t> tally;
            for (const auto& h : enumerateAcceptable(d, j)) ++tally[{tauOf(h, j), h.constant()}];
            for (const auto& [key, n] : tally) CHECK(countByTau(d, j, key.first, key.second) == n);
        }
}

TEST_CASE("staircase realization") {
    const Field f = Field::standard();
    auto st = realizeStaircase(ramp(12, {11, 9, 6, 3}, 0), 9, 14, f);
    CHECK(st.exponents == std::vector<std::pair<int, int>>{{12, 0}, {7, 5}, {3, 10}, {0, 14}});
    auto t1 = realizeStaircase(seq("1,2,3,4,3,2,1(0)"), 4, 5, f);
    CHECK(t1.exponents == std::vector<std::pair<int, int>>{{4, 0}, {0, 4}});
    CHECK(hilbertFunction(t1.ideal) == seq("1,2,3,4,3,2,1(0)"));
    auto pr = realizeStaircase(seq("1(2)"), 4, 5, f);
    CHECK(pr.ideal == GradedIdeal::generatedBy({mono(f, 2, 0)}));
}

TEST_CASE("Hasse diagrams") {
    auto h45 = hasse(4, 5);
    CHECK(h45.nodes.size() == 6);
    CHECK(h45.edges.size() == 6);
    CHECK(hasse(1, 4).edges.empty());
    CHECK(hasse(1, 4).nodes.size() == 1);
    auto h35 = hasse(3, 5);
    std::string dot = toDot(h35);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("label=\"1,2,3,4,4,3,2,1(0)\"") != std::string::npos);
}

}
