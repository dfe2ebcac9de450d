#include "ancestor/binform.hpp"

#include <algorithm>
#include <set>

namespace anc {

namespace {

using Poly = Vector;  // univariate, index = exponent

void trim(Poly& p) {
    while (!p.empty() && p.back().isZero()) p.pop_back();
}

// Remainder of a by b (b nonzero, trimmed).
Poly remainder(Poly a, const Poly& b) {
    trim(a);
    const Scalar lead = b.back().inverse();
    while (a.size() >= b.size()) {
        Scalar factor = a.back() * lead;
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly uniGcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Multiplicity of x as a factor: trailing zero coefficients.
int xPower(const BinaryForm& f) {
    int k = 0;
    for (int a = f.degree(); a >= 0 && f.coeff(a).isZero(); --a) ++k;
    return k;
}

std::vector<mpz_class> positiveDivisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, int>> primes;
    for (mpz_class q = 2; q * q <= n; ++q) {
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e) primes.emplace_back(q, e);
    }
    if (n > 1) primes.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [q, e] : primes) {
        std::size_t n0 = divs.size();
        mpz_class pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t k = 0; k < n0; ++k) divs.push_back(divs[k] * pw);
        }
    }
    return divs;
}

// Candidate affine roots t with f(t,1) = 0.
std::vector<Scalar> candidateRoots(const BinaryForm& f) {
    const Field field = f.field();
    std::vector<Scalar> out;
    if (!field.isRationals()) {
        for (std::uint32_t t = 0; t < field.characteristic(); ++t) out.emplace_back(field, static_cast<long>(t));
        return out;
    }
    // Integer polynomial g(t) = f(t,1) up to scaling; coefficient of t^(j-a) is c_a.
    mpz_class lcm = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> g;  // g[e] coefficient of t^e
    for (int e = 0; e <= f.degree(); ++e) {
        mpq_class v = f.coeff(f.degree() - e).rational() * lcm;
        g.push_back(v.get_num());
    }
    while (!g.empty() && g.back() == 0) g.pop_back();
    if (g.empty()) return out;
    std::size_t low = 0;
    while (g[low] == 0) ++low;
    if (low > 0) out.emplace_back(field, 0L);
    if (low + 1 == g.size()) return out;
    std::set<mpq_class> seen;
    for (const auto& p : positiveDivisors(g[low]))
        for (const auto& q : positiveDivisors(g.back()))
            for (int sign : {1, -1}) {
                mpq_class r(p * sign, q);
                r.canonicalize();
                if (seen.insert(r).second) out.emplace_back(field, r);
            }
    return out;
}

}  // namespace

BinaryForm::BinaryForm(const Field& field, int degree) : field_(field) {
    if (degree < 0) throw PreconditionError("negative degree");
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, Scalar::zero(field));
}

BinaryForm::BinaryForm(const Field& field, Vector coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("form needs at least one coefficient");
    for (const auto& c : coeffs_)
        if (c.field() != field_) throw PreconditionError("field mismatch");
}

BinaryForm BinaryForm::monomial(const Field& field, int xExp, int yExp) {
    BinaryForm f(field, xExp + yExp);
    f.coeffs_[static_cast<std::size_t>(yExp)] = Scalar::one(field);
    return f;
}

BinaryForm BinaryForm::constant(const Scalar& c) { return BinaryForm(c.field(), Vector{c}); }

bool BinaryForm::isZero() const { return pivot() < 0; }

int BinaryForm::pivot() const {
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        if (!coeffs_[a].isZero()) return static_cast<int>(a);
    return -1;
}

BinaryForm BinaryForm::monic() const {
    int p = pivot();
    if (p < 0) return *this;
    return scaled(coeffs_[static_cast<std::size_t>(p)].inverse());
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (degree() != o.degree()) throw PreconditionError("degree mismatch in sum");
    BinaryForm r = *this;
    for (std::size_t a = 0; a < coeffs_.size(); ++a) r.coeffs_[a] += o.coeffs_[a];
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + o.scaled(-Scalar::one(field_)); }

BinaryForm BinaryForm::scaled(const Scalar& c) const {
    BinaryForm r = *this;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

bool BinaryForm::operator==(const BinaryForm& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

Scalar BinaryForm::evaluate(const Scalar& x, const Scalar& y) const {
    Scalar sum = Scalar::zero(field_);
    const int j = degree();
    for (int a = 0; a <= j; ++a)
        if (!coeff(a).isZero()) sum += coeff(a) * x.pow(static_cast<unsigned>(j - a)) * y.pow(static_cast<unsigned>(a));
    return sum;
}

std::string BinaryForm::toString(char xName, char yName) const {
    std::string out;
    const int j = degree();
    for (int a = 0; a <= j; ++a) {
        const Scalar& c = coeff(a);
        if (c.isZero()) continue;
        std::string text = c.toString();
        const bool negative = text.front() == '-';
        if (negative) text.erase(0, 1);
        const int ex = j - a;
        const int ey = a;
        std::string mono;
        auto power = [](char v, int e) {
            std::string s(1, v);
            if (e > 1) s += "^" + std::to_string(e);
            return s;
        };
        if (ex > 0) mono += power(xName, ex);
        if (ey > 0) mono += (mono.empty() ? "" : "*") + power(yName, ey);
        std::string term;
        if (mono.empty())
            term = text;
        else if (text == "1")
            term = mono;
        else
            term = text + "*" + mono;
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

BinaryForm mulForm(const BinaryForm& f, const BinaryForm& g) {
    if (f.field() != g.field()) throw PreconditionError("field mismatch");
    BinaryForm r(f.field(), f.degree() + g.degree());
    Vector c = r.coeffs();
    for (int a = 0; a <= f.degree(); ++a) {
        if (f.coeff(a).isZero()) continue;
        for (int b = 0; b <= g.degree(); ++b)
            if (!g.coeff(b).isZero()) c[static_cast<std::size_t>(a + b)] += f.coeff(a) * g.coeff(b);
    }
    return BinaryForm(f.field(), std::move(c));
}

BinaryForm gcdForm(const BinaryForm& f, const BinaryForm& g) {
    if (f.field() != g.field()) throw PreconditionError("field mismatch");
    if (f.isZero() && g.isZero()) throw PreconditionError("gcd of zero forms");
    if (f.isZero()) return g.monic();
    if (g.isZero()) return f.monic();
    const int mx = std::min(xPower(f), xPower(g));
    Poly u = uniGcd(f.coeffs(), g.coeffs());
    const int k = static_cast<int>(u.size()) - 1;
    Vector c(static_cast<std::size_t>(k + mx) + 1, Scalar::zero(f.field()));
    for (int a = 0; a <= k; ++a) c[static_cast<std::size_t>(a)] = u[static_cast<std::size_t>(a)];
    return BinaryForm(f.field(), std::move(c)).monic();
}

BinaryForm divideForm(const BinaryForm& f, const BinaryForm& g) {
    if (g.isZero()) throw PreconditionError("division by the zero form");
    const int qd = f.degree() - g.degree();
    if (qd < 0) throw PreconditionError("divisor degree exceeds dividend degree");
    if (f.isZero()) return BinaryForm(f.field(), qd);
    const int s = g.pivot();
    Vector rem = f.coeffs();
    Vector q(static_cast<std::size_t>(qd) + 1, Scalar::zero(f.field()));
    const Scalar inv = g.coeff(s).inverse();
    for (int a = 0; a <= qd; ++a) {
        Scalar factor = rem[static_cast<std::size_t>(a + s)] * inv;
        q[static_cast<std::size_t>(a)] = factor;
        if (factor.isZero()) continue;
        for (int b = s; b <= g.degree(); ++b) rem[static_cast<std::size_t>(a + b)] -= factor * g.coeff(b);
    }
    for (const auto& r : rem)
        if (!r.isZero()) throw PreconditionError("form does not divide exactly");
    return BinaryForm(f.field(), std::move(q));
}

void requireApolarField(const Field& field, int j) {
    if (!field.isRationals() && static_cast<long>(field.characteristic()) <= j)
        throw PreconditionError("characteristic must be 0 or exceed the degree " + std::to_string(j));
}

DualForm contract(const BinaryForm& f, const DualForm& F) {
    const Field field = f.field();
    if (F.field() != field) throw PreconditionError("field mismatch");
    const int i = f.degree();
    const int j = F.degree();
    if (i > j) throw PreconditionError("contraction by a form of larger degree");
    requireApolarField(field, j);
    auto falling = [&](int n, int k) {
        Scalar r = Scalar::one(field);
        for (int t = 0; t < k; ++t) r *= Scalar(field, static_cast<long>(n - t));
        return r;
    };
    Vector out(static_cast<std::size_t>(j - i) + 1, Scalar::zero(field));
    for (int k = 0; k <= i; ++k) {
        if (f.coeff(k).isZero()) continue;
        for (int m = k; m <= j; ++m) {
            const Scalar& Fm = F.body().coeff(m);
            if (Fm.isZero() || i - k > j - m) continue;
            out[static_cast<std::size_t>(m - k)] += f.coeff(k) * Fm * falling(j - m, i - k) * falling(m, k);
        }
    }
    return DualForm(BinaryForm(field, std::move(out)));
}

DualForm linearPower(const Scalar& alpha, const Scalar& beta, int j) {
    const Field field = alpha.field();
    Vector c(static_cast<std::size_t>(j) + 1, Scalar::zero(field));
    mpz_class b = 1;
    for (int m = 0; m <= j; ++m) {
        c[static_cast<std::size_t>(m)] = Scalar(field, mpq_class(b)) * alpha.pow(static_cast<unsigned>(j - m)) *
                                         beta.pow(static_cast<unsigned>(m));
        b = b * (j - m) / (m + 1);
    }
    return DualForm(BinaryForm(field, std::move(c)));
}

std::vector<LinearFactor> linearFactors(const BinaryForm& f) {
    if (f.isZero()) throw PreconditionError("factoring the zero form");
    const Field field = f.field();
    std::vector<LinearFactor> out;
    BinaryForm rest = f;
    auto peel = [&](const BinaryForm& ell, const Scalar& a, const Scalar& b) {
        int mult = 0;
        while (rest.degree() > 0 && rest.evaluate(a, b).isZero()) {
            rest = divideForm(rest, ell);
            ++mult;
        }
        if (mult > 0) out.push_back({ell, a, b, mult});
    };
    const Scalar zero = Scalar::zero(field);
    const Scalar one = Scalar::one(field);
    peel(BinaryForm(field, Vector{zero, one}), one, zero);
    for (const auto& t : candidateRoots(f)) {
        if (rest.degree() == 0) break;
        peel(BinaryForm(field, Vector{one, -t}), t, one);
    }
    std::sort(out.begin(), out.end(), [](const LinearFactor& l, const LinearFactor& r) {
        for (int a = 0; a <= 1; ++a) {
            auto c = l.form.coeff(a).canonicalCompare(r.form.coeff(a));
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

}  // namespace anc
