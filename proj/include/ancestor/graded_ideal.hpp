#pragma once

#include <optional>
#include <vector>

#include "ancestor/formspace.hpp"
#include "ancestor/osequence.hpp"

namespace anc {

/// Homogeneous ideal of k[x,y] stored on a finite window of degrees.
///
/// Components below lo() are zero. Components lo()..hi() are stored.
/// Above hi() the ideal agrees with the principal ideal of tailGcd(),
/// or is zero when there is no tail form (the zero ideal).
class GradedIdeal {
public:
    static GradedIdeal zero(const Field& field);
    static GradedIdeal unit(const Field& field);
    static GradedIdeal fromComponents(const Field& field, int lo, std::vector<FormSpace> components,
                                      std::optional<BinaryForm> tailGcd);
    /// The ideal generated by nonzero forms.
    static GradedIdeal generatedBy(const std::vector<BinaryForm>& generators);

    const Field& field() const { return field_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(components_.size()) - 1; }
    const std::optional<BinaryForm>& tailGcd() const { return tail_; }
    bool isZero() const { return !tail_.has_value(); }
    FormSpace component(int i) const;
    /// Every degree at or above this one is a multiple of the tail form's component.
    int settledDegree() const;

    /// Throws PreconditionError unless R_1 I_(i-1) lies in I_i everywhere.
    void validate() const;
    bool operator==(const GradedIdeal& o) const;

private:
    GradedIdeal(const Field& field, int lo, std::vector<FormSpace> components, std::optional<BinaryForm> tail);

    Field field_;
    int lo_;
    std::vector<FormSpace> components_;
    std::optional<BinaryForm> tail_;
};

/// Whether small_i lies in big_i for every degree i in [from, to].
bool containsInRange(const GradedIdeal& big, const GradedIdeal& small, int from, int to);
/// I + M^k.
GradedIdeal addPowerOfMaximal(const GradedIdeal& ideal, int k);
/// I intersected with M^k.
GradedIdeal intersectPowerOfMaximal(const GradedIdeal& ideal, int k);
/// Ideal equal to a below degree j and to b from degree j on; both must agree in degree j.
GradedIdeal glueAt(const GradedIdeal& a, const GradedIdeal& b, int j);

OSequence hilbertFunction(const GradedIdeal& ideal);
/// Degrees of minimal generators, with multiplicity, ascending.
std::vector<int> generatorDegrees(const GradedIdeal& ideal);
/// Degrees of minimal relations, with multiplicity, ascending.
std::vector<int> relationDegrees(const GradedIdeal& ideal);
/// Generators in degrees at most j and relations in degrees at least j + 2.
bool isAncestorIdealOf(const GradedIdeal& ideal, int j);
/// Lower bound on the number of generators of any ideal with Hilbert function H.
int nuMin(const OSequence& h);

struct CommonFactorSplit {
    BinaryForm factor;
    GradedIdeal quotient;
};
/// I = f * I' with f the common divisor of I; needs a nonconstant common divisor.
CommonFactorSplit commonFactorSplit(const GradedIdeal& ideal);
/// The space { g : f g in V }, for V all of whose elements are divisible by f.
FormSpace divideSpace(const FormSpace& v, const BinaryForm& f);

}  // namespace anc
