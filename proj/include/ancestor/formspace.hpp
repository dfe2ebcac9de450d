#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ancestor/binform.hpp"

namespace anc {

class GradedIdeal;

/// Subspace V of R_j, kept as a basis in reduced row echelon form.
class FormSpace {
public:
    FormSpace(const Field& field, int degree);
    FormSpace(const Field& field, int degree, const Matrix& spanning);
    static FormSpace full(const Field& field, int degree);
    static FormSpace span(const Field& field, int degree, const std::vector<BinaryForm>& forms);
    /// f * R_(degree - deg f); zero when degree < deg f.
    static FormSpace principal(const BinaryForm& f, int degree);

    const Field& field() const { return basis_.field(); }
    int degree() const { return degree_; }
    int dim() const { return static_cast<int>(basis_.rows()); }
    int codim() const { return degree_ + 1 - dim(); }
    bool isZero() const { return dim() == 0; }
    bool isFull() const { return codim() == 0; }
    const Matrix& basis() const { return basis_; }
    std::vector<BinaryForm> forms() const;

    bool contains(const BinaryForm& f) const;
    bool contains(const FormSpace& w) const;
    bool operator==(const FormSpace& o) const;

private:
    int degree_;
    Matrix basis_;
};

FormSpace sumSpaces(const FormSpace& v, const FormSpace& w);
FormSpace intersectSpaces(const FormSpace& v, const FormSpace& w);
/// R_1 V.
FormSpace shiftUp(const FormSpace& v);
/// R_(-1) V = { f : x f, y f in V }.
FormSpace shiftDown(const FormSpace& v);
/// R_s V for any integer s, iterating single steps.
FormSpace shift(const FormSpace& v, int s);
/// dim R_1 V - dim V.
int tau(const FormSpace& v);
/// Monic GCD of the elements of a nonzero space.
BinaryForm gcdOfSpace(const FormSpace& v);

/// The smallest graded ideal whose degree-j part is V.
GradedIdeal ancestorIdeal(const FormSpace& v);
/// Ancestor ideal plus all forms of degree above j.
GradedIdeal levelIdeal(const FormSpace& v);
/// The ideal generated by V.
GradedIdeal generatedIdeal(const FormSpace& v);
/// Whether V and W have the same ancestor ideal.
bool equivalent(const FormSpace& v, const FormSpace& w);

Scalar randomScalar(const Field& field, std::mt19937_64& rng);
/// Uniformly random d-dimensional subspace of R_j (redrawn until rank d).
FormSpace randomSpace(int d, int j, const Field& field, std::mt19937_64& rng);
FormSpace randomSpace(int d, int j, const Field& field, std::uint64_t seed);
BinaryForm randomForm(int j, const Field& field, std::mt19937_64& rng);

}  // namespace anc
