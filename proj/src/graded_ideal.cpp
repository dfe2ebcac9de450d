#include "ancestor/graded_ideal.hpp"

#include <algorithm>

namespace anc {

GradedIdeal::GradedIdeal(const Field& field, int lo, std::vector<FormSpace> components, std::optional<BinaryForm> tail)
    : field_(field), lo_(lo), components_(std::move(components)), tail_(std::move(tail)) {}

GradedIdeal GradedIdeal::zero(const Field& field) { return GradedIdeal(field, 0, {}, std::nullopt); }

GradedIdeal GradedIdeal::unit(const Field& field) {
    return GradedIdeal(field, 0, {}, BinaryForm::constant(Scalar::one(field)));
}

GradedIdeal GradedIdeal::fromComponents(const Field& field, int lo, std::vector<FormSpace> components,
                                        std::optional<BinaryForm> tailGcd) {
    if (lo < 0) throw PreconditionError("negative window start");
    for (std::size_t k = 0; k < components.size(); ++k) {
        if (components[k].degree() != lo + static_cast<int>(k)) throw PreconditionError("component degree mismatch");
        if (components[k].field() != field) throw PreconditionError("field mismatch");
    }
    if (tailGcd) {
        if (tailGcd->isZero()) throw PreconditionError("zero tail form");
        tailGcd = tailGcd->monic();
    } else {
        for (const auto& c : components)
            if (!c.isZero()) throw PreconditionError("nonzero ideal needs a tail form");
        return zero(field);
    }
    GradedIdeal ideal(field, lo, std::move(components), std::move(tailGcd));
    if (!ideal.components_.empty()) {
        const int hi = ideal.hi();
        if (!(ideal.components_.back() == FormSpace::principal(*ideal.tail_, hi)))
            throw PreconditionError("top component disagrees with the tail form");
    }
    return ideal;
}

GradedIdeal GradedIdeal::generatedBy(const std::vector<BinaryForm>& generators) {
    if (generators.empty()) throw PreconditionError("no generators");
    const Field field = generators.front().field();
    BinaryForm g = generators.front();
    int top = 0;
    int low = generators.front().degree();
    for (const auto& f : generators) {
        if (f.isZero()) throw PreconditionError("zero generator");
        g = gcdForm(g, f);
        top = std::max(top, f.degree());
        low = std::min(low, f.degree());
    }
    const int c = g.degree();
    std::vector<FormSpace> comps;
    for (int i = low;; ++i) {
        FormSpace cur = comps.empty() ? FormSpace(field, i) : shiftUp(comps.back());
        for (const auto& f : generators)
            if (f.degree() == i) cur = sumSpaces(cur, FormSpace::span(field, i, {f}));
        comps.push_back(cur);
        if (i >= top && cur.dim() == i + 1 - c) break;
    }
    return fromComponents(field, low, std::move(comps), g);
}

FormSpace GradedIdeal::component(int i) const {
    if (i < 0) throw PreconditionError("negative degree");
    if (i < lo_ || !tail_) return FormSpace(field_, i);
    if (i <= hi()) return components_[static_cast<std::size_t>(i - lo_)];
    return FormSpace::principal(*tail_, i);
}

int GradedIdeal::settledDegree() const {
    int c = tail_ ? tail_->degree() : 0;
    return std::max(hi() + 1, c);
}

void GradedIdeal::validate() const {
    for (int i = std::max(1, lo_); i <= settledDegree() + 1; ++i)
        if (!component(i).contains(shiftUp(component(i - 1))))
            throw PreconditionError("not an ideal in degree " + std::to_string(i));
}

bool GradedIdeal::operator==(const GradedIdeal& o) const {
    if (field_ != o.field_) return false;
    if (tail_.has_value() != o.tail_.has_value()) return false;
    if (tail_ && !(*tail_ == *o.tail_)) return false;
    const int top = std::max(settledDegree(), o.settledDegree());
    for (int i = 0; i <= top; ++i)
        if (!(component(i) == o.component(i))) return false;
    return true;
}

bool containsInRange(const GradedIdeal& big, const GradedIdeal& small, int from, int to) {
    for (int i = std::max(0, from); i <= to; ++i)
        if (!big.component(i).contains(small.component(i))) return false;
    return true;
}

GradedIdeal addPowerOfMaximal(const GradedIdeal& ideal, int k) {
    const Field field = ideal.field();
    std::vector<FormSpace> comps;
    int lo = k;
    for (int i = 0; i < k; ++i) {
        FormSpace c = ideal.component(i);
        if (comps.empty() && c.isZero()) continue;
        if (comps.empty()) lo = i;
        comps.push_back(c);
    }
    comps.push_back(FormSpace::full(field, k));
    return GradedIdeal::fromComponents(field, lo, std::move(comps), BinaryForm::constant(Scalar::one(field)));
}

GradedIdeal intersectPowerOfMaximal(const GradedIdeal& ideal, int k) {
    if (ideal.isZero()) return ideal;
    std::vector<FormSpace> comps;
    const int top = std::max(ideal.settledDegree(), k);
    for (int i = k; i <= top; ++i) comps.push_back(ideal.component(i));
    return GradedIdeal::fromComponents(ideal.field(), k, std::move(comps), ideal.tailGcd());
}

GradedIdeal glueAt(const GradedIdeal& a, const GradedIdeal& b, int j) {
    if (!(a.component(j) == b.component(j))) throw InternalError("glued ideals disagree in the shared degree");
    const int top = std::max(b.settledDegree(), j);
    std::vector<FormSpace> comps;
    for (int i = 0; i <= top; ++i) comps.push_back(i < j ? a.component(i) : b.component(i));
    if (!b.tailGcd()) return GradedIdeal::zero(a.field());
    return GradedIdeal::fromComponents(a.field(), 0, std::move(comps), b.tailGcd());
}

OSequence hilbertFunction(const GradedIdeal& ideal) {
    if (ideal.isZero()) return OSequence::polynomialRing();
    std::vector<int> prefix;
    const int top = ideal.settledDegree();
    for (int i = 0; i <= top; ++i) prefix.push_back(i + 1 - ideal.component(i).dim());
    return OSequence(std::move(prefix), ideal.tailGcd()->degree());
}

namespace {

std::vector<int> generatorCounts(const GradedIdeal& ideal, int top) {
    std::vector<int> gens(static_cast<std::size_t>(top) + 1, 0);
    for (int i = 0; i <= top; ++i) {
        const int below = i == 0 ? 0 : shiftUp(ideal.component(i - 1)).dim();
        gens[static_cast<std::size_t>(i)] = ideal.component(i).dim() - below;
    }
    return gens;
}

std::vector<int> expand(const std::vector<int>& counts) {
    std::vector<int> out;
    for (std::size_t i = 0; i < counts.size(); ++i)
        for (int k = 0; k < counts[i]; ++k) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

std::vector<int> generatorDegrees(const GradedIdeal& ideal) {
    if (ideal.isZero()) return {};
    return expand(generatorCounts(ideal, ideal.settledDegree() + 1));
}

std::vector<int> relationDegrees(const GradedIdeal& ideal) {
    if (ideal.isZero()) return {};
    const int top = ideal.settledDegree() + 2;
    auto gens = generatorCounts(ideal, top);
    std::vector<int> dims;
    for (int i = 0; i <= top; ++i) dims.push_back(ideal.component(i).dim());
    auto dimAt = [&](int i) { return i < 0 ? 0 : dims[static_cast<std::size_t>(i)]; };
    std::vector<int> rels(static_cast<std::size_t>(top) + 1, 0);
    for (int i = 0; i <= top; ++i) {
        const int second = dimAt(i) - 2 * dimAt(i - 1) + dimAt(i - 2);
        const int r = gens[static_cast<std::size_t>(i)] - second;
        if (r < 0) throw InternalError("negative relation count in degree " + std::to_string(i));
        rels[static_cast<std::size_t>(i)] = r;
    }
    return expand(rels);
}

bool isAncestorIdealOf(const GradedIdeal& ideal, int j) {
    auto gens = generatorDegrees(ideal);
    auto rels = relationDegrees(ideal);
    if (!gens.empty() && gens.back() > j) return false;
    if (!rels.empty() && rels.front() < j + 2) return false;
    return true;
}

int nuMin(const OSequence& h) {
    if (h.isPolynomialRing()) throw PreconditionError("no generators for the zero ideal");
    const int mu = h.order();
    auto e = [&](int i) { return h[i - 1] - h[i]; };
    int total = 1 + e(mu);
    for (int i = mu; i <= h.stabilization() + 1; ++i) total += std::max(0, e(i + 1) - e(i));
    return total;
}

FormSpace divideSpace(const FormSpace& v, const BinaryForm& f) {
    const int i = v.degree() - f.degree();
    if (i < 0) throw PreconditionError("divisor degree exceeds space degree");
    std::vector<BinaryForm> qs;
    for (const auto& g : v.forms()) qs.push_back(divideForm(g, f));
    return FormSpace::span(v.field(), i, qs);
}

CommonFactorSplit commonFactorSplit(const GradedIdeal& ideal) {
    if (ideal.isZero()) throw PreconditionError("the zero ideal has no common factor");
    const BinaryForm f = *ideal.tailGcd();
    const int c = f.degree();
    if (c == 0) throw PreconditionError("the ideal has no common factor");
    const Field field = ideal.field();
    std::vector<FormSpace> comps;
    const int top = ideal.settledDegree();
    for (int i = c; i <= top; ++i) comps.push_back(divideSpace(ideal.component(i), f));
    auto quotient = GradedIdeal::fromComponents(field, 0, std::move(comps), BinaryForm::constant(Scalar::one(field)));
    return {f, quotient};
}

}  // namespace anc
