#include "ancestor/formspace.hpp"

#include "ancestor/graded_ideal.hpp"

namespace anc {

FormSpace::FormSpace(const Field& field, int degree) : degree_(degree), basis_(field, 0, 0) {
    if (degree < 0) throw PreconditionError("negative degree");
    basis_ = Matrix(field, 0, static_cast<std::size_t>(degree) + 1);
}

FormSpace::FormSpace(const Field& field, int degree, const Matrix& spanning)
    : degree_(degree), basis_(field, 0, 0) {
    if (degree < 0) throw PreconditionError("negative degree");
    if (spanning.cols() != static_cast<std::size_t>(degree) + 1) throw PreconditionError("basis width mismatch");
    if (spanning.field() != field) throw PreconditionError("field mismatch");
    basis_ = spanning.rref();
}

FormSpace FormSpace::full(const Field& field, int degree) {
    if (degree < 0) throw PreconditionError("negative degree");
    return FormSpace(field, degree, Matrix::identity(field, static_cast<std::size_t>(degree) + 1));
}

FormSpace FormSpace::span(const Field& field, int degree, const std::vector<BinaryForm>& forms) {
    Matrix m(field, 0, static_cast<std::size_t>(degree) + 1);
    for (const auto& f : forms) {
        if (f.degree() != degree) throw PreconditionError("form degree mismatch");
        m.appendRow(f.coeffs());
    }
    return FormSpace(field, degree, m);
}

FormSpace FormSpace::principal(const BinaryForm& f, int degree) {
    const Field field = f.field();
    if (f.isZero() || degree < f.degree()) return FormSpace(field, degree);
    const int s = degree - f.degree();
    std::vector<BinaryForm> gens;
    for (int b = 0; b <= s; ++b) gens.push_back(mulForm(f, BinaryForm::monomial(field, s - b, b)));
    return span(field, degree, gens);
}

std::vector<BinaryForm> FormSpace::forms() const {
    std::vector<BinaryForm> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r) out.emplace_back(field(), basis_.row(r));
    return out;
}

bool FormSpace::contains(const BinaryForm& f) const {
    if (f.degree() != degree_) throw PreconditionError("form degree mismatch");
    return basis_.rowSpaceContains(f.coeffs());
}

bool FormSpace::contains(const FormSpace& w) const {
    if (w.degree_ != degree_) throw PreconditionError("space degree mismatch");
    return sumSpaces(*this, w).dim() == dim();
}

bool FormSpace::operator==(const FormSpace& o) const { return degree_ == o.degree_ && basis_ == o.basis_; }

FormSpace sumSpaces(const FormSpace& v, const FormSpace& w) {
    if (v.degree() != w.degree()) throw PreconditionError("space degree mismatch");
    return FormSpace(v.field(), v.degree(), rowSpaceSum(v.basis(), w.basis()));
}

FormSpace intersectSpaces(const FormSpace& v, const FormSpace& w) {
    if (v.degree() != w.degree()) throw PreconditionError("space degree mismatch");
    return FormSpace(v.field(), v.degree(), rowSpaceIntersect(v.basis(), w.basis()));
}

FormSpace shiftUp(const FormSpace& v) {
    const Field field = v.field();
    const int j = v.degree();
    Matrix m(field, 0, static_cast<std::size_t>(j) + 2);
    for (std::size_t r = 0; r < v.basis().rows(); ++r) {
        Vector xf(static_cast<std::size_t>(j) + 2, Scalar::zero(field));
        Vector yf = xf;
        for (int a = 0; a <= j; ++a) {
            xf[static_cast<std::size_t>(a)] = v.basis().at(r, static_cast<std::size_t>(a));
            yf[static_cast<std::size_t>(a) + 1] = v.basis().at(r, static_cast<std::size_t>(a));
        }
        m.appendRow(xf);
        m.appendRow(yf);
    }
    return FormSpace(field, j + 1, m);
}

FormSpace shiftDown(const FormSpace& v) {
    const Field field = v.field();
    const int j = v.degree();
    if (j == 0) throw PreconditionError("shift below degree zero");
    // Functionals w with w.V = 0; f qualifies when x f and y f pair to zero with all of them.
    Matrix perp = kernel(v.basis().rows() == 0 ? Matrix(field, 1, static_cast<std::size_t>(j) + 1) : v.basis());
    Matrix conditions(field, 0, static_cast<std::size_t>(j));
    for (std::size_t r = 0; r < perp.rows(); ++r) {
        Vector onX(static_cast<std::size_t>(j), Scalar::zero(field));
        Vector onY = onX;
        for (int a = 0; a < j; ++a) {
            onX[static_cast<std::size_t>(a)] = perp.at(r, static_cast<std::size_t>(a));
            onY[static_cast<std::size_t>(a)] = perp.at(r, static_cast<std::size_t>(a) + 1);
        }
        conditions.appendRow(onX);
        conditions.appendRow(onY);
    }
    if (conditions.rows() == 0) return FormSpace::full(field, j - 1);
    return FormSpace(field, j - 1, kernel(conditions));
}

FormSpace shift(const FormSpace& v, int s) {
    if (v.degree() + s < 0) throw PreconditionError("shift below degree zero");
    FormSpace w = v;
    for (; s > 0; --s) w = shiftUp(w);
    for (; s < 0; ++s) w = shiftDown(w);
    return w;
}

int tau(const FormSpace& v) { return shiftUp(v).dim() - v.dim(); }

BinaryForm gcdOfSpace(const FormSpace& v) {
    if (v.isZero()) throw PreconditionError("gcd of the zero space");
    auto fs = v.forms();
    BinaryForm g = fs.front().monic();
    for (std::size_t k = 1; k < fs.size(); ++k) g = gcdForm(g, fs[k]);
    return g;
}

namespace {

int stableBound(const FormSpace& v) { return v.degree() + std::max(1, v.codim() - tau(v) + 2); }

}  // namespace

GradedIdeal ancestorIdeal(const FormSpace& v) {
    const Field field = v.field();
    if (v.isZero()) return GradedIdeal::zero(field);
    const int j = v.degree();
    std::vector<FormSpace> below;
    FormSpace w = v;
    int lo = j;
    while (lo > 0) {
        FormSpace d = shiftDown(w);
        if (d.isZero()) break;
        below.push_back(d);
        w = d;
        --lo;
    }
    std::vector<FormSpace> comps(below.rbegin(), below.rend());
    comps.push_back(v);
    const int hi = stableBound(v);
    FormSpace up = v;
    for (int i = j + 1; i <= hi; ++i) {
        up = shiftUp(up);
        comps.push_back(up);
    }
    return GradedIdeal::fromComponents(field, lo, std::move(comps), gcdOfSpace(v));
}

GradedIdeal levelIdeal(const FormSpace& v) {
    const Field field = v.field();
    const int j = v.degree();
    std::vector<FormSpace> comps;
    int lo = j;
    FormSpace w = v;
    comps.push_back(v);
    while (lo > 0 && !w.isZero()) {
        FormSpace d = shiftDown(w);
        if (d.isZero()) break;
        comps.insert(comps.begin(), d);
        w = d;
        --lo;
    }
    comps.push_back(FormSpace::full(field, j + 1));
    return GradedIdeal::fromComponents(field, lo, std::move(comps), BinaryForm::constant(Scalar::one(field)));
}

GradedIdeal generatedIdeal(const FormSpace& v) {
    const Field field = v.field();
    if (v.isZero()) return GradedIdeal::zero(field);
    const int j = v.degree();
    std::vector<FormSpace> comps{v};
    const int hi = stableBound(v);
    FormSpace up = v;
    for (int i = j + 1; i <= hi; ++i) {
        up = shiftUp(up);
        comps.push_back(up);
    }
    return GradedIdeal::fromComponents(field, j, std::move(comps), gcdOfSpace(v));
}

bool equivalent(const FormSpace& v, const FormSpace& w) {
    if (v.field() != w.field()) throw PreconditionError("field mismatch");
    if (v.isZero() || w.isZero()) return v.isZero() && w.isZero();
    return shift(w, v.degree() - w.degree()) == v && tau(v) == tau(w);
}

Scalar randomScalar(const Field& field, std::mt19937_64& rng) {
    if (field.isRationals()) {
        std::uniform_int_distribution<long> dist(-9, 9);
        return Scalar(field, dist(rng));
    }
    std::uniform_int_distribution<long> dist(0, static_cast<long>(field.characteristic()) - 1);
    return Scalar(field, dist(rng));
}

BinaryForm randomForm(int j, const Field& field, std::mt19937_64& rng) {
    Vector c;
    for (int a = 0; a <= j; ++a) c.push_back(randomScalar(field, rng));
    return BinaryForm(field, std::move(c));
}

FormSpace randomSpace(int d, int j, const Field& field, std::mt19937_64& rng) {
    if (j < 0 || d < 0 || d > j + 1) throw PreconditionError("need 0 <= d <= j + 1");
    for (;;) {
        Matrix m(field, 0, static_cast<std::size_t>(j) + 1);
        for (int r = 0; r < d; ++r) m.appendRow(randomForm(j, field, rng).coeffs());
        FormSpace v(field, j, m);
        if (v.dim() == d) return v;
    }
}

FormSpace randomSpace(int d, int j, const Field& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return randomSpace(d, j, field, rng);
}

}  // namespace anc
