#pragma once

#include <string>
#include <vector>

#include "ancestor/graded_ideal.hpp"
#include "ancestor/osequence.hpp"

namespace anc {

// Constructive specialization: starting from an ideal I' with a more special
// Hilbert function, move one elementary step at a time towards a target
// sequence while keeping the required containments with I'.

struct BuildStep {
    std::string phase;  ///< "nose" or "tail"
    OSequence before;
    OSequence after;
    std::vector<int> changedDegrees;
};

struct BuildTrace {
    std::vector<BuildStep> steps;
    GradedIdeal result;
};

/// Next nose sequence between N' and N (requires N' <= N termwise, N' != N).
OSequence stepN(const OSequence& nPrime, const OSequence& n, int d, int j);
/// Next tail sequence between T' and T (requires T' >= T termwise, T' != T).
OSequence stepT(const OSequence& tPrime, const OSequence& t, int d, int j);

/// Ideal I contained in I' with Hilbert function N, for I' with a nose sequence.
BuildTrace buildN(const GradedIdeal& iPrime, const OSequence& n, int d, int j);
/// Ideal I containing I' with Hilbert function T, for I' with a tail sequence.
BuildTrace buildT(const GradedIdeal& iPrime, const OSequence& t, int d, int j);
/// Ideal I with Hilbert function H, I + M^(j+1) inside I' + M^(j+1)
/// and I' intersect M^j inside I intersect M^j.
BuildTrace buildH(const GradedIdeal& iPrime, const OSequence& h, int j);

}  // namespace anc
