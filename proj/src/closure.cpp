#include "ancestor/closure.hpp"

#include <algorithm>
#include <map>

#include "ancestor/hfcomb.hpp"

namespace anc {

namespace {

constexpr int kUnbounded = -1;

int lastDegree(const OSequence& a, const OSequence& b, int j) {
    return std::max({a.stabilization(), b.stabilization(), j}) + 1;
}

FormSpace extendWithin(const FormSpace& start, const FormSpace& pool, int targetDim) {
    if (start.dim() > targetDim) throw InternalError("lower bound space already too large");
    FormSpace cur = start;
    for (const auto& f : pool.forms()) {
        if (cur.dim() == targetDim) break;
        if (!cur.contains(f)) cur = sumSpaces(cur, FormSpace::span(cur.field(), cur.degree(), {f}));
    }
    if (cur.dim() != targetDim) throw InternalError("upper bound space too small to reach the target dimension");
    return cur;
}

GradedIdeal replaceComponents(const GradedIdeal& ideal, const std::map<int, FormSpace>& changes) {
    int top = ideal.settledDegree();
    for (const auto& [deg, _] : changes) top = std::max(top, deg + 1);
    std::vector<FormSpace> comps;
    for (int i = 0; i <= top; ++i) {
        auto it = changes.find(i);
        comps.push_back(it != changes.end() ? it->second : ideal.component(i));
    }
    return GradedIdeal::fromComponents(ideal.field(), 0, std::move(comps), ideal.tailGcd());
}

void requireHilbert(const GradedIdeal& ideal, const OSequence& expected, const char* what) {
    OSequence got = hilbertFunction(ideal);
    if (!(got == expected))
        throw InternalError(std::string(what) + ": built " + got.toString() + ", wanted " + expected.toString());
}

// Block of degrees changed by a nose step, as [first, last].
std::pair<int, int> noseBlock(const OSequence& nPrime, const OSequence& n, int j) {
    int t = -1;
    for (int i = j - 1; i >= 0; --i)
        if (nPrime[i] < n[i]) {
            t = i;
            break;
        }
    if (t < 0) throw InternalError("no nose degree left to raise");
    int first = t;
    while (first - 1 >= 0 && diffAt(nPrime, first - 1) == diffAt(nPrime, t)) --first;
    return {first, t};
}

// Block of degrees changed by a tail step, as [first, last]; last is kUnbounded for an infinite block.
std::pair<int, int> tailBlock(const OSequence& tPrime, const OSequence& t, int j) {
    const int top = lastDegree(tPrime, t, j);
    int first = -1;
    for (int i = j + 1; i <= top; ++i)
        if (tPrime[i] > t[i]) {
            first = i;
            break;
        }
    if (first < 0) throw InternalError("no tail degree left to lower");
    const int e = diffAt(tPrime, first + 1);
    if (e == 0) return {first, kUnbounded};
    int a = 1;
    while (diffAt(tPrime, first + a + 1) == e) ++a;
    return {first, first + a - 1};
}

}  // namespace

OSequence stepN(const OSequence& nPrime, const OSequence& n, int d, int j) {
    if (!isPermissibleNose(nPrime, d, j) || !isPermissibleNose(n, d, j))
        throw PreconditionError("nose sequences must be permissible");
    for (int i = 0; i <= j; ++i)
        if (nPrime[i] > n[i]) throw PreconditionError("need N' <= N termwise");
    if (nPrime == n) throw PreconditionError("N' already equals N");
    auto [first, last] = noseBlock(nPrime, n, j);
    std::vector<int> prefix;
    for (int i = 0; i <= j; ++i) prefix.push_back(nPrime[i] + (i >= first && i <= last ? 1 : 0));
    OSequence next(std::move(prefix), 0);
    bool between = isPermissibleNose(next, d, j);
    for (int i = 0; i <= j && between; ++i) between = nPrime[i] <= next[i] && next[i] <= n[i];
    if (!between) throw InternalError("nose step left the interval: " + next.toString());
    return next;
}

OSequence stepT(const OSequence& tPrime, const OSequence& t, int d, int j) {
    if (!isPermissibleTail(tPrime, d, j) || !isPermissibleTail(t, d, j))
        throw PreconditionError("tail sequences must be permissible");
    const int top = lastDegree(tPrime, t, j);
    for (int i = j; i <= top; ++i)
        if (tPrime[i] < t[i]) throw PreconditionError("need T' >= T termwise");
    if (tPrime == t) throw PreconditionError("T' already equals T");
    auto [first, last] = tailBlock(tPrime, t, j);
    std::vector<int> prefix;
    for (int i = 0; i <= top; ++i) {
        const bool inBlock = i >= first && (last == kUnbounded || i <= last);
        prefix.push_back(tPrime[i] - (inBlock ? 1 : 0));
    }
    OSequence next(std::move(prefix), last == kUnbounded ? tPrime.constant() - 1 : tPrime.constant());
    bool between = isPermissibleTail(next, d, j);
    for (int i = j; i <= top + 1 && between; ++i) between = t[i] <= next[i] && next[i] <= tPrime[i];
    if (!between) throw InternalError("tail step left the interval: " + next.toString());
    return next;
}

BuildTrace buildN(const GradedIdeal& iPrime, const OSequence& n, int d, int j) {
    OSequence cur = hilbertFunction(iPrime);
    if (!isPermissibleNose(cur, d, j) || !isPermissibleNose(n, d, j))
        throw PreconditionError("nose build needs permissible nose sequences");
    BuildTrace trace{{}, iPrime};
    while (!(cur == n)) {
        OSequence next = stepN(cur, n, d, j);
        auto [first, last] = noseBlock(cur, n, j);
        std::map<int, FormSpace> changes;
        for (int u = first; u <= last; ++u) {
            FormSpace below = u == 0 ? FormSpace(iPrime.field(), 0)
                                     : shiftUp(changes.count(u - 1) ? changes.at(u - 1) : trace.result.component(u - 1));
            FormSpace upper = trace.result.component(u);
            changes.emplace(u, extendWithin(below, upper, u + 1 - next[u]));
        }
        GradedIdeal built = replaceComponents(trace.result, changes);
        requireHilbert(built, next, "nose step");
        if (!containsInRange(trace.result, built, 0, j + 1)) throw InternalError("nose step left the previous ideal");
        std::vector<int> degs;
        for (int u = first; u <= last; ++u) degs.push_back(u);
        trace.steps.push_back({"nose", cur, next, degs});
        trace.result = built;
        cur = next;
    }
    return trace;
}

BuildTrace buildT(const GradedIdeal& iPrime, const OSequence& t, int d, int j) {
    OSequence cur = hilbertFunction(iPrime);
    if (!isPermissibleTail(cur, d, j) || !isPermissibleTail(t, d, j))
        throw PreconditionError("tail build needs permissible tail sequences");
    BuildTrace trace{{}, iPrime};
    while (!(cur == t)) {
        OSequence next = stepT(cur, t, d, j);
        auto [first, last] = tailBlock(cur, t, j);
        GradedIdeal built = trace.result;
        std::vector<int> degs;
        if (last == kUnbounded) {
            if (first < cur.stabilization()) throw InternalError("unbounded tail step before stabilization");
            const BinaryForm f = *trace.result.tailGcd();
            auto factors = linearFactors(f);
            if (factors.empty())
                throw PreconditionError("common factor " + f.toString() + " has no linear factor over the base field");
            const BinaryForm smaller = divideForm(f, factors.front().form);
            std::vector<FormSpace> comps;
            for (int i = 0; i < first; ++i) comps.push_back(trace.result.component(i));
            comps.push_back(FormSpace::principal(smaller, first));
            built = GradedIdeal::fromComponents(built.field(), 0, std::move(comps), smaller);
            degs.push_back(first);
        } else {
            std::map<int, FormSpace> changes;
            for (int u = last; u >= first; --u) {
                FormSpace above = changes.count(u + 1) ? changes.at(u + 1) : trace.result.component(u + 1);
                FormSpace upper = shiftDown(above);
                changes.emplace(u, extendWithin(trace.result.component(u), upper, u + 1 - next[u]));
                degs.insert(degs.begin(), u);
            }
            built = replaceComponents(trace.result, changes);
        }
        requireHilbert(built, next, "tail step");
        const int top = std::max(built.settledDegree(), trace.result.settledDegree()) + 1;
        if (!containsInRange(built, trace.result, 0, top)) throw InternalError("tail step lost part of the previous ideal");
        trace.steps.push_back({"tail", cur, next, degs});
        trace.result = built;
        cur = next;
    }
    return trace;
}

BuildTrace buildH(const GradedIdeal& iPrime, const OSequence& h, int j) {
    const OSequence hPrime = hilbertFunction(iPrime);
    if (hPrime.isPolynomialRing()) throw PreconditionError("the zero ideal has no specialization data");
    const int d = j + 1 - hPrime[j];
    requireAcceptable(hPrime, d, j);
    requireAcceptable(h, d, j);
    const Order rel = comparePartial(hPrime, h, d, j);
    if (rel != Order::Greater && rel != Order::Equal)
        throw PreconditionError(hPrime.toString() + " is not more special than " + h.toString());
    const auto target = noseTail(h, j);
    BuildTrace nose = buildN(addPowerOfMaximal(iPrime, j + 1), target.nose, d, j);
    BuildTrace tail = buildT(intersectPowerOfMaximal(iPrime, j), target.tail, d, j);
    GradedIdeal glued = glueAt(nose.result, tail.result, j);
    glued.validate();
    requireHilbert(glued, h, "glued ideal");
    const int top = std::max(glued.settledDegree(), iPrime.settledDegree()) + 1;
    if (!containsInRange(iPrime, glued, 0, j)) throw InternalError("result not inside I' below degree j");
    if (!containsInRange(glued, iPrime, j, top)) throw InternalError("result does not contain I' from degree j");
    BuildTrace out{nose.steps, glued};
    out.steps.insert(out.steps.end(), tail.steps.begin(), tail.steps.end());
    return out;
}

}  // namespace anc
