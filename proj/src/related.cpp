#include "ancestor/related.hpp"

#include <cstdlib>

namespace anc {

FormSpace applyChain(const FormSpace& v, const Chain& chain) {
    FormSpace w = v;
    for (int s : chain) w = shift(w, s);
    return w;
}

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

bool mergeOnce(Chain& c) {
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        if (sign(c[k]) == sign(c[k + 1])) {
            c[k] += c[k + 1];
            c.erase(c.begin() + static_cast<std::ptrdiff_t>(k) + 1);
            return true;
        }
    for (std::size_t k = 0; k + 2 < c.size(); ++k) {
        const int s = c[k];
        const int t = c[k + 1];
        const int u = c[k + 2];
        if (sign(s) == sign(u) && std::abs(t) <= std::abs(s) && std::abs(t) <= std::abs(u)) {
            c[k] = s + t + u;
            c.erase(c.begin() + static_cast<std::ptrdiff_t>(k) + 1, c.begin() + static_cast<std::ptrdiff_t>(k) + 3);
            return true;
        }
    }
    return false;
}

void explore(const FormSpace& v, const Chain& chain, std::vector<RelatedClass>& found) {
    for (const auto& r : found)
        if (equivalent(r.representative, v)) return;
    found.push_back({normalizeChain(chain), v, ancestorIdeal(v)});
    for (int u = 1; u <= v.degree(); ++u) {
        FormSpace down = shift(v, -u);
        if (down.isZero()) break;
        if (!equivalent(down, v)) {
            Chain next = chain;
            next.push_back(-u);
            explore(down, next, found);
            break;
        }
    }
    const int limit = v.codim() - tau(v) + 2;
    for (int s = 1; s <= std::max(1, limit); ++s) {
        FormSpace up = shift(v, s);
        if (!equivalent(up, v)) {
            Chain next = chain;
            next.push_back(s);
            explore(up, next, found);
            break;
        }
    }
}

}  // namespace

Chain normalizeChain(const Chain& chain) {
    Chain c;
    for (int s : chain)
        if (s != 0) c.push_back(s);
    while (mergeOnce(c)) {
    }
    return c;
}

std::vector<RelatedClass> relatedClasses(const FormSpace& v) {
    if (v.isZero()) throw PreconditionError("the zero space has no nonzero related classes");
    std::vector<RelatedClass> found;
    explore(v, {}, found);
    return found;
}

MonomialSpace3 shiftUp3(const MonomialSpace3& v, int s) {
    MonomialSpace3 out{v.degree + s, {}};
    for (const auto& m : v.monomials)
        for (int a = 0; a <= s; ++a)
            for (int b = 0; a + b <= s; ++b) out.monomials.insert({m[0] + a, m[1] + b, m[2] + s - a - b});
    return out;
}

MonomialSpace3 shiftDown3(const MonomialSpace3& v, int s) {
    MonomialSpace3 out{v.degree - s, {}};
    if (out.degree < 0) throw PreconditionError("shift below degree zero");
    for (int a = 0; a <= out.degree; ++a)
        for (int b = 0; a + b <= out.degree; ++b) {
            Monomial3 m{a, b, out.degree - a - b};
            MonomialSpace3 single{out.degree, {m}};
            bool inside = true;
            for (const auto& p : shiftUp3(single, s).monomials)
                if (!v.monomials.count(p)) {
                    inside = false;
                    break;
                }
            if (inside) out.monomials.insert(m);
        }
    return out;
}

BermanReport bermanCheck() {
    MonomialSpace3 v{5, {{2, 3, 0}, {0, 2, 3}, {3, 0, 2}}};
    MonomialSpace3 w = shiftUp3(v, 2);
    const Monomial3 witness{2, 2, 2};
    return {v, w, shiftDown3(w, 2) == v, shiftDown3(w, 1).monomials.count(witness) > 0,
            shiftUp3(v, 1).monomials.count(witness) > 0};
}

}  // namespace anc
