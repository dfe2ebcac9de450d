#include "ancestor/hfcomb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace anc {

int diffAt(const OSequence& h, int i) {
    if (h.isPolynomialRing()) throw PreconditionError("differences of the polynomial ring");
    if (i <= 0) return i == 0 ? -1 : 0;
    return h[i - 1] - h[i];
}

std::vector<int> differenceSequence(const OSequence& h) {
    std::vector<int> e;
    for (int i = 0; i <= h.stabilization() + 1; ++i) e.push_back(diffAt(h, i));
    return e;
}

bool isAcceptable(const OSequence& h, int d, int j) {
    if (h.isPolynomialRing() || d < 1 || d > j) return false;
    if (h[0] != 1 || h[j] != j + 1 - d) return false;
    for (int i = 1; i <= j; ++i)
        if (diffAt(h, i) < diffAt(h, i - 1)) return false;
    if (diffAt(h, j + 1) != diffAt(h, j)) return false;
    const int end = std::max(h.stabilization(), j) + 2;
    for (int i = j + 2; i <= end; ++i)
        if (diffAt(h, i) > diffAt(h, i - 1) || diffAt(h, i) < 0) return false;
    return true;
}

void requireAcceptable(const OSequence& h, int d, int j) {
    if (!isAcceptable(h, d, j))
        throw PreconditionError(h.toString() + " is not acceptable for d=" + std::to_string(d) +
                                ", j=" + std::to_string(j));
}

int tauOf(const OSequence& h, int j) { return diffAt(h, j) + 1; }

bool isPermissibleNose(const OSequence& n, int d, int j) {
    if (n.isPolynomialRing() || d < 1 || d > j || n.constant() != 0) return false;
    if (n[0] != 1 || n[j] != j + 1 - d || n.stabilization() > j + 1) return false;
    for (int i = 1; i <= j + 1; ++i)
        if (diffAt(n, i) < diffAt(n, i - 1)) return false;
    return true;
}

bool isPermissibleTail(const OSequence& t, int d, int j) {
    if (t.isPolynomialRing() || d < 1 || d > j) return false;
    for (int i = 0; i < j; ++i)
        if (t[i] != i + 1) return false;
    if (t[j] != j + 1 - d) return false;
    const int end = std::max(t.stabilization(), j) + 2;
    for (int i = j + 1; i <= end; ++i)
        if (diffAt(t, i) > diffAt(t, i - 1) || diffAt(t, i) < 0) return false;
    return true;
}

PartitionPair partitionsPQ(const OSequence& h, int d, int j) {
    requireAcceptable(h, d, j);
    std::vector<int> p;
    for (int i = j; i >= 1 && diffAt(h, i) + 1 > 0; --i) p.push_back(diffAt(h, i) + 1);
    std::vector<int> q;
    for (int i = j + 1; diffAt(h, i) > 0; ++i) q.push_back(diffAt(h, i));
    return {Partition(std::move(p)), Partition(std::move(q))};
}

namespace {

Partition plusOneWithOnes(const Partition& a, int ones) {
    std::vector<int> parts;
    for (int v : a.parts()) parts.push_back(v + 1);
    for (int k = 0; k < ones; ++k) parts.push_back(1);
    return Partition(std::move(parts));
}

int dimensionGrassH(const OSequence& h) {
    const int mu = h.order();
    int dim = h.constant();
    for (int i = mu; i <= h.stabilization() + 1; ++i) dim += (diffAt(h, i) + 1) * diffAt(h, i + 1);
    return dim;
}

}  // namespace

BettiPartitions bettiPartitions(const OSequence& h, int d, int j) {
    auto pq = partitionsPQ(h, d, j);
    const int t = tauOf(h, j);
    Partition a = pq.P.dual();
    Partition b = pq.Q.dual();
    return {a, b, plusOneWithOnes(a, j + 2 - d - t), plusOneWithOnes(b, d - t)};
}

int ell(const Partition& a) {
    int total = 0;
    for (int u = 0; u < a.size(); ++u)
        for (int v = u; v < a.size(); ++v) total += std::max(0, a[u] - a[v] - 1);
    return total;
}

OSequence hilbertFromPartitions(const Partition& p, const Partition& q, int j, int c) {
    if (p.empty()) throw PreconditionError("P must be nonempty");
    if (p.size() > j) throw PreconditionError("P has more than j parts");
    if (c < 0) throw PreconditionError("negative constant");
    if (q.empty() ? p.largest() != 1 : q.largest() != p.largest() - 1)
        throw PreconditionError("largest parts of P and Q must differ by one");
    if (q.weight() != j + 1 - p.weight() - c)
        throw PreconditionError("weights must satisfy |P| + |Q| + c = j + 1");
    std::map<int, int> e;
    for (int i = 1; i <= j; ++i) {
        const int k = j - i;
        e[i] = k < p.size() ? p[k] - 1 : -1;
    }
    for (int m = 1; m <= q.size(); ++m) e[j + m] = q[m - 1];
    const int top = j + q.size() + 1;
    std::vector<int> prefix;
    for (int i = 0; i <= top; ++i) {
        int v = c;
        for (int k = i + 1; k <= top; ++k) v += e.count(k) ? e[k] : 0;
        prefix.push_back(v);
    }
    return OSequence(std::move(prefix), c);
}

NoseTail noseTail(const OSequence& h, int j) {
    if (h.isPolynomialRing()) throw PreconditionError("nose and tail of the polynomial ring");
    std::vector<int> nose;
    for (int i = 0; i <= j; ++i) nose.push_back(h[i]);
    std::vector<int> tail;
    for (int i = 0; i < j; ++i) tail.push_back(i + 1);
    for (int i = j; i <= std::max(h.stabilization(), j); ++i) tail.push_back(h[i]);
    return {OSequence(std::move(nose), 0), OSequence(std::move(tail), h.constant())};
}

OSequence joinNoseTail(const OSequence& nose, const OSequence& tail, int j) {
    if (nose[j] != tail[j]) throw PreconditionError("nose and tail disagree in degree j");
    std::vector<int> prefix;
    for (int i = 0; i < j; ++i) prefix.push_back(nose[i]);
    for (int i = j; i <= std::max(tail.stabilization(), j); ++i) prefix.push_back(tail[i]);
    return OSequence(std::move(prefix), tail.constant());
}

std::vector<CodimCheck> StratumReport::discrepancies() const {
    std::vector<CodimCheck> out;
    for (const auto& c : checks)
        if (!c.agrees()) out.push_back(c);
    return out;
}

StratumReport dims(const OSequence& h, int d, int j) {
    requireAcceptable(h, d, j);
    StratumReport r{h, d, j, tauOf(h, j), h.constant(), h.order(), partitionsPQ(h, d, j),
                    bettiPartitions(h, d, j), 0, 0, 0, 0, 0, {}};
    auto e = [&](int i) { return diffAt(h, i); };
    const int t = r.tau;
    const int c = r.c;
    const int mu = r.mu;
    const int top = std::max(h.stabilization(), j) + 2;
    const int codTau = (d - t) * (j + 2 - d - t);
    r.dimGrass = d * (j + 1 - d);
    r.dimGrassTau = r.dimGrass - codTau;
    r.dimGrassH = dimensionGrassH(h);

    int dimN = (e(j) + 1) * (j + 1 - d);
    for (int i = mu; i < j; ++i) dimN += (e(i) + 1) * e(i + 1);
    r.dimLevel = dimN;
    int dimT = c + d * e(j + 1);
    for (int i = j + 1; i <= top; ++i) dimT += (e(i) + 1) * e(i + 1);
    r.dimTail = dimT;

    int codN = codTau;
    for (int i = mu; i < j; ++i) codN += (e(i + 1) - e(i)) * (i - h[i - 1]);
    auto nt = noseTail(h, j);
    int codT = (2 * d - 2 - j) * c + codTau;
    for (int i = j + 1; i <= top; ++i) codT += (e(i) - e(i + 1)) * nt.tail[i + 1];

    const int lA = ell(r.betti.A);
    const int lB = ell(r.betti.B);
    const int lC = ell(r.betti.C);
    const int lD = ell(r.betti.D);
    const int codH = r.dimGrass - r.dimGrassH;
    const int codLevel = r.dimGrass - dimN;
    const int codTail = r.dimGrass - dimT;

    r.checks = {
        {"Grass_H", "Grass", "sum (e_(i+1)-e_i)(i-N_(i-1)) + tail sum - cod_tau", codN + codT - codTau, codH},
        {"Grass_H", "Grass", "ell(C)+ell(D)+(d-1)c-cod_tau", lC + lD + (d - 1) * c - codTau, codH},
        {"Grass_H", "Grass", "ell(C)+ell(B)+(d-1)c", lC + lB + (d - 1) * c, codH},
        {"Grass_H", "Grass_tau", "ell(A)+ell(B)+(d-1)c", lA + lB + (d - 1) * c, codH - codTau},
        {"LA_N", "Grass", "sum (e_(i+1)-e_i)(i-N_(i-1)) + cod_tau", codN, codLevel},
        {"LA_N", "Grass", "ell(C)", lC, codLevel},
        {"LA_N", "Grass_tau", "ell(A)", lA, codLevel - codTau},
        {"GA_T", "Grass", "(2d-2-j)c + sum (e_i-e_(i+1))T_(i+1) + cod_tau", codT, codTail},
        {"GA_T", "Grass", "ell(D)+(d-1)c", lD + (d - 1) * c, codTail},
        {"GA_T", "Grass_tau", "ell(B)+(d-1)c", lB + (d - 1) * c, codTail - codTau},
    };
    return r;
}

OSequence hTau(int d, int j, int tau) {
    if (d < 1 || d > j) throw PreconditionError("need 1 <= d <= j");
    if (tau < 1 || tau > std::min(d, j + 2 - d)) throw PreconditionError("tau out of range");
    const int a = j + 1 - d;
    std::vector<int> prefix;
    for (int i = 0; i <= j; ++i) prefix.push_back(std::min(i + 1, a + (tau - 1) * (j - i)));
    const int c = tau == 1 ? a : 0;
    for (int i = j + 1; i <= j + a + 1; ++i) prefix.push_back(std::max(c, a - (tau - 1) * (i - j)));
    return OSequence(std::move(prefix), c);
}

std::string toString(Order o) {
    switch (o) {
        case Order::Less: return "less";
        case Order::Equal: return "equal";
        case Order::Greater: return "greater";
        case Order::Incomparable: return "incomparable";
    }
    return "incomparable";
}

namespace {

Order fromFlags(bool ge, bool le) {
    if (ge && le) return Order::Equal;
    if (ge) return Order::Greater;
    if (le) return Order::Less;
    return Order::Incomparable;
}

std::vector<int> prefixSums(const Partition& p) {
    std::vector<int> s{0};
    for (int v : p.parts()) s.push_back(s.back() + v);
    return s;
}

// Value of the polygon through the vertices at x, as a fraction (num, den) with den > 0.
std::pair<long, long> polygonAt(const std::vector<std::pair<int, int>>& vertices, int x) {
    for (std::size_t k = 1; k < vertices.size(); ++k) {
        const auto [x0, y0] = vertices[k - 1];
        const auto [x1, y1] = vertices[k];
        if (x <= x1) return {static_cast<long>(y0) * (x1 - x0) + static_cast<long>(y1 - y0) * (x - x0), x1 - x0};
    }
    return {vertices.back().second, 1};
}

std::vector<std::pair<int, int>> polygon(const Partition& p, int n) {
    std::vector<int> parts = p.parts();
    parts.resize(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> v{{0, 0}};
    int sum = 0;
    for (int k = 0; k < n; ++k) {
        sum += parts[static_cast<std::size_t>(k)];
        if (k + 1 == n || parts[static_cast<std::size_t>(k + 1)] != parts[static_cast<std::size_t>(k)])
            v.emplace_back(k + 1, sum);
    }
    return v;
}

}  // namespace

Order comparePartial(const OSequence& h1, const OSequence& h2, int d, int j) {
    requireAcceptable(h1, d, j);
    requireAcceptable(h2, d, j);
    bool ge = true;
    bool le = true;
    const int top = std::max({h1.stabilization(), h2.stabilization(), j}) + 1;
    for (int i = 0; i <= top; ++i) {
        if (i <= j) {
            if (h1[i] > h2[i]) ge = false;
            if (h1[i] < h2[i]) le = false;
        }
        if (i >= j) {
            if (h1[i] < h2[i]) ge = false;
            if (h1[i] > h2[i]) le = false;
        }
    }
    return fromFlags(ge, le);
}

Order compareMajorization(const Partition& p1, const Partition& p2) {
    if (p1 == p2) return Order::Equal;
    auto s1 = prefixSums(p1);
    auto s2 = prefixSums(p2);
    const std::size_t m = std::min(s1.size(), s2.size());
    bool ge = p1.weight() >= p2.weight();
    bool le = p1.weight() <= p2.weight();
    for (std::size_t k = 0; k < m; ++k) {
        if (s1[k] < s2[k]) ge = false;
        if (s1[k] > s2[k]) le = false;
    }
    return fromFlags(ge, le);
}

Order compareHarderNarasimhan(const Partition& p1, const Partition& p2) {
    const int n = std::max(p1.size(), p2.size());
    if (n == 0) return Order::Equal;
    auto v1 = polygon(p1, n);
    auto v2 = polygon(p2, n);
    std::set<int> xs;
    for (const auto& v : v1) xs.insert(v.first);
    for (const auto& v : v2) xs.insert(v.first);
    bool ge = true;
    bool le = true;
    for (int x : xs) {
        auto [a, b] = polygonAt(v1, x);
        auto [c, e] = polygonAt(v2, x);
        const long lhs = a * e;
        const long rhs = c * b;
        if (lhs < rhs) ge = false;
        if (lhs > rhs) le = false;
    }
    return fromFlags(ge, le);
}

namespace {

void partitionsWithLargest(int n, int largest, std::vector<int>& cur, std::vector<Partition>& out, bool exact) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    const int top = std::min(n, largest);
    for (int v = top; v >= 1; --v) {
        if (exact && cur.empty() && v != largest) continue;
        cur.push_back(v);
        partitionsWithLargest(n - v, v, cur, out, false);
        cur.pop_back();
    }
}

std::vector<Partition> partitionsExactLargest(int n, int k) {
    std::vector<Partition> out;
    if (k == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    if (k > n) return out;
    std::vector<int> cur;
    partitionsWithLargest(n, k, cur, out, true);
    return out;
}

}  // namespace

std::vector<OSequence> enumerateAcceptable(int d, int j) {
    if (d < 1 || d > j) throw PreconditionError("need 1 <= d <= j");
    std::set<std::string> seen;
    std::vector<std::pair<int, OSequence>> found;
    for (int t = 1; t <= std::min(d, j + 2 - d); ++t) {
        const int cLow = t == 1 ? j + 1 - d : 0;
        const int cHigh = j + 1 - d - (t - 1);
        for (int c = cLow; c <= cHigh; ++c)
            for (const auto& p : partitionsExactLargest(d, t))
                for (const auto& q : partitionsExactLargest(j + 1 - d - c, t - 1)) {
                    OSequence h = hilbertFromPartitions(p, q, j, c);
                    if (seen.insert(h.toString()).second) found.emplace_back(d * (j + 1 - d) - dimensionGrassH(h), h);
                }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.toString() < b.second.toString();
    });
    std::vector<OSequence> out;
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

std::uint64_t partitionsInBox(int a, int b, int n) {
    if (a < 0 || b < 0 || n < 0) return 0;
    // Gaussian binomial [a+b choose b]_q via [m, r] = [m-1, r-1] + q^r [m-1, r].
    const int m = a + b;
    std::vector<std::vector<std::vector<std::uint64_t>>> g(static_cast<std::size_t>(m) + 1);
    for (int mm = 0; mm <= m; ++mm) {
        g[static_cast<std::size_t>(mm)].resize(static_cast<std::size_t>(mm) + 1);
        for (int r = 0; r <= mm; ++r) {
            auto& cur = g[static_cast<std::size_t>(mm)][static_cast<std::size_t>(r)];
            cur.assign(static_cast<std::size_t>(r * (mm - r)) + 1, 0);
            if (r == 0 || r == mm) {
                cur[0] = 1;
                continue;
            }
            const auto& left = g[static_cast<std::size_t>(mm - 1)][static_cast<std::size_t>(r - 1)];
            const auto& right = g[static_cast<std::size_t>(mm - 1)][static_cast<std::size_t>(r)];
            for (std::size_t k = 0; k < left.size(); ++k) cur[k] += left[k];
            for (std::size_t k = 0; k < right.size(); ++k) cur[k + static_cast<std::size_t>(r)] += right[k];
        }
    }
    const auto& poly = g[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)];
    return static_cast<std::size_t>(n) < poly.size() ? poly[static_cast<std::size_t>(n)] : 0;
}

std::uint64_t partitionsLargestPart(int k, int n) {
    if (k < 0 || n < 0) return 0;
    if (k == 0) return n == 0 ? 1 : 0;
    if (k > n) return 0;
    return partitionsInBox(k, n - k, n - k);
}

std::uint64_t countByTau(int d, int j, int tau, int c) {
    if (d < 1 || d > j) throw PreconditionError("need 1 <= d <= j");
    if (tau < 1 || tau > std::min(d, j + 2 - d)) return 0;
    const int rest = j + 1 - d - c;
    if (rest < 0) return 0;
    return partitionsLargestPart(tau, d) * partitionsLargestPart(tau - 1, rest);
}

Staircase realizeStaircase(const OSequence& h, int d, int j, const Field& field) {
    auto betti = bettiPartitions(h, d, j);
    const auto& a = betti.A.parts();
    const auto& b = betti.B.parts();
    std::vector<std::pair<int, int>> exps;
    int p = j + 1 - a.front();
    int q = 0;
    exps.emplace_back(p, q);
    for (std::size_t u = 0; u + 1 < a.size(); ++u) {
        const int rel = j + 1 + b[u];
        q = rel - p;
        p = (j + 1 - a[u + 1]) - q;
        exps.emplace_back(p, q);
    }
    if (p != h.constant()) throw InternalError("staircase does not end at the common factor degree");
    std::vector<BinaryForm> gens;
    for (const auto& [px, qy] : exps) {
        if (px < 0 || qy < 0) throw InternalError("negative staircase exponent");
        gens.push_back(BinaryForm::monomial(field, px, qy));
    }
    GradedIdeal ideal = GradedIdeal::generatedBy(gens);
    if (!(hilbertFunction(ideal) == h)) throw InternalError("staircase has the wrong Hilbert function");
    FormSpace space = ideal.component(j);
    return {exps, ideal, space};
}

HasseDiagram hasse(int d, int j) {
    HasseDiagram diagram{d, j, enumerateAcceptable(d, j), {}};
    const std::size_t n = diagram.nodes.size();
    std::vector<std::vector<bool>> above(n, std::vector<bool>(n, false));  // above[a][b]: b strictly more special
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            above[a][b] = a != b && comparePartial(diagram.nodes[b], diagram.nodes[a], d, j) == Order::Greater;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!above[a][b]) continue;
            bool cover = true;
            for (std::size_t m = 0; m < n && cover; ++m)
                if (above[a][m] && above[m][b]) cover = false;
            if (cover) diagram.edges.emplace_back(a, b);
        }
    return diagram;
}

std::string toDot(const HasseDiagram& diagram) {
    std::string out = "digraph hasse {\n";
    out += "  label=\"d=" + std::to_string(diagram.d) + ", j=" + std::to_string(diagram.j) + "\";\n";
    for (std::size_t k = 0; k < diagram.nodes.size(); ++k)
        out += "  n" + std::to_string(k) + " [label=\"" + diagram.nodes[k].toString() + "\"];\n";
    for (const auto& [a, b] : diagram.edges) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace anc
