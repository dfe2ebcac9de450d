#pragma once

#include <optional>
#include <vector>

#include "ancestor/graded_ideal.hpp"
#include "ancestor/osequence.hpp"

namespace anc {

/// Subspace W of the degree-j dual forms in X, Y.
class DualSpace {
public:
    explicit DualSpace(FormSpace coordinates) : coords_(std::move(coordinates)) {}
    static DualSpace span(const Field& field, int degree, const std::vector<DualForm>& forms);

    const FormSpace& coordinates() const { return coords_; }
    const Field& field() const { return coords_.field(); }
    int degree() const { return coords_.degree(); }
    int dim() const { return coords_.dim(); }
    std::vector<DualForm> forms() const;
    bool operator==(const DualSpace& o) const { return coords_ == o.coords_; }

private:
    FormSpace coords_;
};

/// V^perp = { F : v o F = 0 for all v in V }.
DualSpace perp(const FormSpace& v);
/// W^perp inside R_j.
FormSpace perpOfDual(const DualSpace& w);
/// Ann(W) = { f : f o W = 0 }.
GradedIdeal annihilator(const DualSpace& w);
/// 1 + dim R_1 o W - dim W.
int tauDelta(const DualSpace& w);
/// Order of Ann(W).
int mu(const DualSpace& w);

/// Generalized additive decomposition W in sum_i k[X,Y]_(beta_i - 1) L_i^(j + 1 - beta_i).
struct Gad {
    BinaryForm annihilatingForm;       ///< the element of Ann(W)_mu that was factored
    std::vector<DualForm> forms;       ///< the linear forms L_i
    std::vector<int> weights;          ///< the multiplicities beta_i
    std::optional<BinaryForm> unsplit; ///< factor without roots over the base field, when it does not split
    bool split() const { return !unsplit.has_value(); }
};
Gad gad(const DualSpace& w);
/// Whether every element of W lies in the span the decomposition claims.
bool verifyGadCertificate(const DualSpace& w, const Gad& decomposition);

/// j + 1 - ceil(d / tau).
int muGeneric(int tau, int d, int j);
/// N_i = min(i + 1, mu, c + (tau - 1)(j - i)) for i <= j with c = j + 1 - d, zero afterwards.
OSequence nMuTau(int mu, int tau, int d, int j);
/// Generic order for a c-dimensional W in degree j.
int genericOrderForDimension(int c, int j);

struct GadLocusCodim {
    Partition A;
    int fromPartition;  ///< ell(A) for the dual of P(N(mu, tau, d, j))
    int closedForm;     ///< (j - mu) tau - (d + 1)
    bool agrees() const { return fromPartition == closedForm; }
};
/// Codimension data of the locus of W with order mu, within the tau stratum; needs c <= mu < mu(tau, d, j).
GadLocusCodim gadLocusCodim(int mu, int tau, int c, int j);

}  // namespace anc
