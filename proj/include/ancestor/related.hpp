#pragma once

#include <array>
#include <set>
#include <vector>

#include "ancestor/graded_ideal.hpp"

namespace anc {

/// Shift indices applied left to right: (s_1, ..., s_k) maps V to R_(s_k) ... R_(s_1) V.
using Chain = std::vector<int>;

FormSpace applyChain(const FormSpace& v, const Chain& chain);
/// Merges same-sign neighbours and collapses s, t, u with sign s = sign u and |t| <= |s|, |u|.
Chain normalizeChain(const Chain& chain);

struct RelatedClass {
    Chain chain;                  ///< how the representative is reached from V
    FormSpace representative;
    GradedIdeal ancestor;
};
/// One representative for each nonzero class of spaces related to V.
std::vector<RelatedClass> relatedClasses(const FormSpace& v);

/// Monomial spaces in three variables, used to exhibit related spaces with different ancestor ideals.
using Monomial3 = std::array<int, 3>;
struct MonomialSpace3 {
    int degree;
    std::set<Monomial3> monomials;
    bool operator==(const MonomialSpace3&) const = default;
};
MonomialSpace3 shiftUp3(const MonomialSpace3& v, int s);
MonomialSpace3 shiftDown3(const MonomialSpace3& v, int s);

struct BermanReport {
    MonomialSpace3 v;
    MonomialSpace3 w;              ///< R_2 V
    bool recoversV;                ///< R_(-2) W = V
    bool witnessInDownShift;       ///< x^2 y^2 z^2 in R_(-1) W
    bool witnessInUpShift;         ///< x^2 y^2 z^2 in R_1 V
    bool holds() const { return recoversV && witnessInDownShift && !witnessInUpShift; }
};
BermanReport bermanCheck();

}  // namespace anc
