#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ancestor/matrix.hpp"

namespace anc {

/// Homogeneous form of degree j in k[x,y]; coeffs[a] multiplies x^(j-a) y^a.
class BinaryForm {
public:
    BinaryForm(const Field& field, int degree);
    BinaryForm(const Field& field, Vector coeffs);
    static BinaryForm monomial(const Field& field, int xExp, int yExp);
    static BinaryForm constant(const Scalar& c);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Vector& coeffs() const { return coeffs_; }
    const Scalar& coeff(int a) const { return coeffs_.at(static_cast<std::size_t>(a)); }
    bool isZero() const;
    /// Index of the first nonzero coefficient, -1 for the zero form.
    int pivot() const;
    /// Scaled so the pivot coefficient is 1.
    BinaryForm monic() const;

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm scaled(const Scalar& c) const;
    bool operator==(const BinaryForm& o) const;

    /// Value at the point (x, y).
    Scalar evaluate(const Scalar& x, const Scalar& y) const;
    std::string toString(char xName = 'x', char yName = 'y') const;

private:
    Field field_;
    Vector coeffs_;
};

/// Form in the divided-power dual ring with variables X, Y.
class DualForm {
public:
    explicit DualForm(BinaryForm body) : body_(std::move(body)) {}
    const BinaryForm& body() const { return body_; }
    int degree() const { return body_.degree(); }
    const Field& field() const { return body_.field(); }
    bool operator==(const DualForm& o) const { return body_ == o.body_; }
    std::string toString() const { return body_.toString('X', 'Y'); }

private:
    BinaryForm body_;
};

BinaryForm mulForm(const BinaryForm& f, const BinaryForm& g);
/// Monic greatest common divisor; at least one argument must be nonzero.
BinaryForm gcdForm(const BinaryForm& f, const BinaryForm& g);
/// Exact quotient f / g; throws when g does not divide f.
BinaryForm divideForm(const BinaryForm& f, const BinaryForm& g);
/// Contraction action f o F; needs characteristic 0 or p > deg F.
DualForm contract(const BinaryForm& f, const DualForm& F);
/// (alpha X + beta Y)^j.
DualForm linearPower(const Scalar& alpha, const Scalar& beta, int j);

/// A linear factor (monic) vanishing at the point (a : b), with multiplicity.
struct LinearFactor {
    BinaryForm form;
    Scalar a;
    Scalar b;
    int multiplicity;
};

/// Linear factors with roots in P^1 over the base field, smallest form first.
/// Over the rationals only rational roots are found.
std::vector<LinearFactor> linearFactors(const BinaryForm& f);

/// Throws PreconditionError unless the characteristic is 0 or exceeds j.
void requireApolarField(const Field& field, int j);

}  // namespace anc
