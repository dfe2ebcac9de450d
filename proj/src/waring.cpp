#include "ancestor/waring.hpp"

#include <algorithm>

#include "ancestor/hfcomb.hpp"

namespace anc {

namespace {

Scalar factorial(const Field& field, int n) {
    Scalar r = Scalar::one(field);
    for (int k = 2; k <= n; ++k) r *= Scalar(field, static_cast<long>(k));
    return r;
}

Scalar falling(const Field& field, int n, int k) {
    Scalar r = Scalar::one(field);
    for (int t = 0; t < k; ++t) r *= Scalar(field, static_cast<long>(n - t));
    return r;
}

// Rows: conditions on the coefficients of f in R_i making f o W = 0.
Matrix contractionConditions(const DualSpace& w, int i) {
    const Field field = w.field();
    const int j = w.degree();
    Matrix m(field, 0, static_cast<std::size_t>(i) + 1);
    for (const auto& F : w.forms())
        for (int out = 0; out <= j - i; ++out) {
            Vector row(static_cast<std::size_t>(i) + 1, Scalar::zero(field));
            for (int k = 0; k <= i; ++k) {
                const int src = out + k;
                const Scalar& c = F.body().coeff(src);
                if (c.isZero()) continue;
                row[static_cast<std::size_t>(k)] = c * falling(field, j - src, i - k) * falling(field, src, k);
            }
            m.appendRow(row);
        }
    return m;
}

}  // namespace

DualSpace DualSpace::span(const Field& field, int degree, const std::vector<DualForm>& forms) {
    std::vector<BinaryForm> bodies;
    for (const auto& f : forms) bodies.push_back(f.body());
    return DualSpace(FormSpace::span(field, degree, bodies));
}

std::vector<DualForm> DualSpace::forms() const {
    std::vector<DualForm> out;
    for (auto& f : coords_.forms()) out.emplace_back(f);
    return out;
}

DualSpace perp(const FormSpace& v) {
    const Field field = v.field();
    const int j = v.degree();
    requireApolarField(field, j);
    Matrix weighted(field, 0, static_cast<std::size_t>(j) + 1);
    for (const auto& f : v.forms()) {
        Vector row;
        for (int a = 0; a <= j; ++a) row.push_back(f.coeff(a) * factorial(field, j - a) * factorial(field, a));
        weighted.appendRow(row);
    }
    if (weighted.rows() == 0) return DualSpace(FormSpace::full(field, j));
    return DualSpace(FormSpace(field, j, kernel(weighted)));
}

FormSpace perpOfDual(const DualSpace& w) {
    const Field field = w.field();
    const int j = w.degree();
    requireApolarField(field, j);
    Matrix weighted(field, 0, static_cast<std::size_t>(j) + 1);
    for (const auto& F : w.forms()) {
        Vector row;
        for (int a = 0; a <= j; ++a) row.push_back(F.body().coeff(a) * factorial(field, j - a) * factorial(field, a));
        weighted.appendRow(row);
    }
    if (weighted.rows() == 0) return FormSpace::full(field, j);
    return FormSpace(field, j, kernel(weighted));
}

GradedIdeal annihilator(const DualSpace& w) {
    const Field field = w.field();
    const int j = w.degree();
    requireApolarField(field, j);
    if (w.dim() == 0) return GradedIdeal::unit(field);
    std::vector<FormSpace> comps;
    for (int i = 0; i <= j; ++i) comps.emplace_back(field, i, kernel(contractionConditions(w, i)));
    comps.push_back(FormSpace::full(field, j + 1));
    return GradedIdeal::fromComponents(field, 0, std::move(comps), BinaryForm::constant(Scalar::one(field)));
}

int tauDelta(const DualSpace& w) {
    const Field field = w.field();
    const int j = w.degree();
    requireApolarField(field, j);
    if (j == 0) return 1 - w.dim();
    std::vector<BinaryForm> images;
    const BinaryForm x = BinaryForm::monomial(field, 1, 0);
    const BinaryForm y = BinaryForm::monomial(field, 0, 1);
    for (const auto& F : w.forms()) {
        images.push_back(contract(x, F).body());
        images.push_back(contract(y, F).body());
    }
    return 1 + FormSpace::span(field, j - 1, images).dim() - w.dim();
}

int mu(const DualSpace& w) {
    GradedIdeal ann = annihilator(w);
    for (int i = 0;; ++i)
        if (!ann.component(i).isZero()) return i;
}

Gad gad(const DualSpace& w) {
    const Field field = w.field();
    const int m = mu(w);
    GradedIdeal ann = annihilator(w);
    auto candidates = ann.component(m).forms();
    std::sort(candidates.begin(), candidates.end(), [](const BinaryForm& a, const BinaryForm& b) {
        for (int k = 0; k <= a.degree(); ++k) {
            auto c = a.coeff(k).canonicalCompare(b.coeff(k));
            if (c != 0) return c < 0;
        }
        return false;
    });
    for (const auto& f : candidates) {
        auto factors = linearFactors(f);
        int total = 0;
        for (const auto& lf : factors) total += lf.multiplicity;
        if (total != m) continue;
        Gad out{f, {}, {}, std::nullopt};
        for (const auto& lf : factors) {
            out.forms.emplace_back(BinaryForm(field, Vector{lf.a, lf.b}));
            out.weights.push_back(lf.multiplicity);
        }
        return out;
    }
    const BinaryForm f = candidates.front();
    BinaryForm rest = f;
    for (const auto& lf : linearFactors(f))
        for (int k = 0; k < lf.multiplicity; ++k) rest = divideForm(rest, lf.form);
    return Gad{f, {}, {}, rest.monic()};
}

bool verifyGadCertificate(const DualSpace& w, const Gad& decomposition) {
    if (!decomposition.split()) return false;
    const Field field = w.field();
    const int j = w.degree();
    std::vector<BinaryForm> spanning;
    for (std::size_t i = 0; i < decomposition.forms.size(); ++i) {
        const int beta = decomposition.weights[i];
        const auto& L = decomposition.forms[i].body();
        if (j + 1 - beta < 0) return false;
        DualForm power = linearPower(L.coeff(0), L.coeff(1), j + 1 - beta);
        for (int t = 0; t < beta; ++t)
            spanning.push_back(mulForm(BinaryForm::monomial(field, beta - 1 - t, t), power.body()));
    }
    FormSpace s = FormSpace::span(field, j, spanning);
    if (!s.contains(w.coordinates())) return false;
    // The factored form must annihilate W.
    for (const auto& F : w.forms())
        if (decomposition.annihilatingForm.degree() <= j && !contract(decomposition.annihilatingForm, F).body().isZero())
            return false;
    return true;
}

int muGeneric(int tau, int d, int j) {
    if (tau < 1) throw PreconditionError("tau must be positive");
    return j + 1 - (d + tau - 1) / tau;
}

OSequence nMuTau(int mu, int tau, int d, int j) {
    if (d < 1 || d > j) throw PreconditionError("need 1 <= d <= j");
    if (tau < 1 || tau > std::min(d, j + 2 - d)) throw PreconditionError("tau out of range");
    const int c = j + 1 - d;
    if (mu < c || mu > muGeneric(tau, d, j)) throw PreconditionError("mu out of range");
    std::vector<int> prefix;
    for (int i = 0; i <= j; ++i) prefix.push_back(std::min({i + 1, mu, c + (tau - 1) * (j - i)}));
    return OSequence(std::move(prefix), 0);
}

int genericOrderForDimension(int c, int j) {
    if (c < 0 || c > j + 1) throw PreconditionError("need 0 <= c <= j + 1");
    if (2 * c < j) return c * (j + 2) / (c + 1);
    return j;
}

GadLocusCodim gadLocusCodim(int mu, int tau, int c, int j) {
    const int d = j + 1 - c;
    if (mu >= muGeneric(tau, d, j)) throw PreconditionError("mu must lie below the generic order");
    OSequence n = nMuTau(mu, tau, d, j);
    if (n.order() != mu || diffAt(n, j) + 1 != tau)
        throw PreconditionError("(mu, tau) does not describe a stratum for this (d, j)");
    std::vector<int> p;
    for (int i = j; i >= 1 && diffAt(n, i) + 1 > 0; --i) p.push_back(diffAt(n, i) + 1);
    Partition a = Partition(std::move(p)).dual();
    return {a, ell(a), (j - mu) * tau - (d + 1)};
}

}  // namespace anc
