#pragma once

#include <utility>

#include "ffchol/cones.hpp"

namespace ffchol {

// Lower triangular with chi(diagonal) = +1 everywhere; checked at construction.
class LowerPosTri {
public:
    explicit LowerPosTri(Matrix m);

    const Matrix& mat() const { return m_; }
    const FieldPtr& field() const { return m_.field(); }
    int n() const { return m_.rows(); }

    bool operator==(const LowerPosTri& o) const { return m_ == o.m_; }
    bool operator!=(const LowerPosTri& o) const { return m_ != o.m_; }

private:
    Matrix m_;
};

struct Factorization {
    LowerPosTri L;
    SymMatrix anchor;
    SignPattern eps;

    SymMatrix reconstruct() const;
};

// L * A_eps * L^T for invertible lower-triangular L (positive diagonal not
// required); stays inside the anchor's cone.
SymMatrix congruence(const Matrix& L, const SymMatrix& anchor);

// The unique L with positive diagonal such that A = L * anchor * L^T.
// Requires a definite field or characteristic 2, and matching LPM patterns.
Factorization factor(const SymMatrix& a, const SymMatrix& anchor);

// TPM analogue: unique upper triangular U with positive diagonal such that
// A = U * anchor * U^T, computed by reversal conjugation.
Matrix factor_tpm(const SymMatrix& a, const SymMatrix& anchor_tpm);

// Psi_{anchor}: L |-> L * anchor * L^T, and its inverse.
SymMatrix psi(const SymMatrix& anchor, const LowerPosTri& L);
LowerPosTri psi_inv(const SymMatrix& anchor, const SymMatrix& a);

// Psi_{anchor_to} o Psi_{anchor_from}^{-1}: carries LPM(eps') to LPM(eps).
SymMatrix transition(const SymMatrix& a, const SymMatrix& anchor_from, const SymMatrix& anchor_to);

// Over non-definite fields uniqueness fails: returns two distinct members of
// LowerPosTri with identical congruence image against every diagonal anchor.
std::pair<LowerPosTri, LowerPosTri> nonuniqueness_witness(const FieldPtr& field, int n);

}  // namespace ffchol
