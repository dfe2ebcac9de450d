#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ancestor/graded_ideal.hpp"
#include "ancestor/osequence.hpp"

namespace anc {

/// e_i = H_(i-1) - H_i, with e_0 = -1.
int diffAt(const OSequence& h, int i);
/// e_0 .. e_(s+1); all later entries vanish.
std::vector<int> differenceSequence(const OSequence& h);

/// Whether H is the Hilbert function of the ancestor ideal of some d-dimensional V in R_j.
bool isAcceptable(const OSequence& h, int d, int j);
void requireAcceptable(const OSequence& h, int d, int j);
int tauOf(const OSequence& h, int j);

/// N: nose sequence, agreeing with H up to degree j and zero after.
bool isPermissibleNose(const OSequence& n, int d, int j);
/// T: tail sequence, i + 1 below degree j and agreeing with H from degree j on.
bool isPermissibleTail(const OSequence& t, int d, int j);

struct PartitionPair {
    Partition P;
    Partition Q;
};
/// P = (e_j + 1, ..., e_mu + 1) partitions d; Q = (e_(j+1), ..., e_s) partitions j + 1 - d - c.
PartitionPair partitionsPQ(const OSequence& h, int d, int j);

struct BettiPartitions {
    Partition A;  ///< dual of P: j + 1 - a_u are the generator degrees
    Partition B;  ///< dual of Q: j + 1 + b_u are the relation degrees
    Partition C;  ///< (A + 1) with j + 2 - d - tau ones appended
    Partition D;  ///< (B + 1) with d - tau ones appended
};
BettiPartitions bettiPartitions(const OSequence& h, int d, int j);

/// Sum over u <= v of max(0, a_u - a_v - 1).
int ell(const Partition& a);

/// Inverse of partitionsPQ for degree j and eventual constant c.
OSequence hilbertFromPartitions(const Partition& p, const Partition& q, int j, int c);

struct NoseTail {
    OSequence nose;
    OSequence tail;
};
NoseTail noseTail(const OSequence& h, int j);
/// H with nose N below degree j and tail T from degree j on.
OSequence joinNoseTail(const OSequence& nose, const OSequence& tail, int j);

/// One codimension formula evaluated against the dimension count it should match.
struct CodimCheck {
    std::string locus;     ///< "Grass_H", "LA_N" or "GA_T"
    std::string ambient;   ///< "Grass" or "Grass_tau"
    std::string formula;
    int value;
    int expected;
    bool agrees() const { return value == expected; }
};

struct StratumReport {
    OSequence h;
    int d;
    int j;
    int tau;
    int c;
    int mu;
    PartitionPair pq;
    BettiPartitions betti;
    int dimGrass;     ///< d (j + 1 - d)
    int dimGrassTau;
    int dimGrassH;
    int dimLevel;     ///< locus of spaces sharing the nose
    int dimTail;      ///< locus of spaces sharing the tail
    int codimGrassH() const { return dimGrass - dimGrassH; }
    std::vector<CodimCheck> checks;
    std::vector<CodimCheck> discrepancies() const;
};
StratumReport dims(const OSequence& h, int d, int j);

/// Hilbert function of the generic ancestor ideal with the given tau.
OSequence hTau(int d, int j, int tau);

enum class Order { Less, Equal, Greater, Incomparable };
std::string toString(Order o);

/// Greater means h1 is more special: h1_i <= h2_i for i <= j and h1_i >= h2_i for i >= j.
Order comparePartial(const OSequence& h1, const OSequence& h2, int d, int j);
/// Greater means p1 majorizes p2: |p1| >= |p2| and prefix sums dominate on the common length.
Order compareMajorization(const Partition& p1, const Partition& p2);
/// Comparison of the concave polygons through the partial sums, shorter partitions padded by zero parts.
Order compareHarderNarasimhan(const Partition& p1, const Partition& p2);

/// All acceptable H for (d, j), ordered by codimension then text.
std::vector<OSequence> enumerateAcceptable(int d, int j);
/// Number of partitions of n into at most b parts, each at most a.
std::uint64_t partitionsInBox(int a, int b, int n);
/// Number of partitions of n with largest part exactly k.
std::uint64_t partitionsLargestPart(int k, int n);
/// Number of acceptable H with the given tau and eventual constant c.
std::uint64_t countByTau(int d, int j, int tau, int c);

struct Staircase {
    std::vector<std::pair<int, int>> exponents;  ///< (x exponent, y exponent) of each generator
    GradedIdeal ideal;
    FormSpace space;
};
/// Monomial ideal with Hilbert function H, and its degree-j part.
Staircase realizeStaircase(const OSequence& h, int d, int j, const Field& field);

struct HasseDiagram {
    int d;
    int j;
    std::vector<OSequence> nodes;
    /// Cover relations (general, special) as node indices.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};
HasseDiagram hasse(int d, int j);
std::string toDot(const HasseDiagram& diagram);

}  // namespace anc
