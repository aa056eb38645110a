#pragma once

#include <string>
#include <vector>

#include "ffchol/matrix.hpp"

namespace ffchol {

// Length-n vector over {+1, -1}; integer labels, never field elements.
using SignPattern = std::vector<int>;

// Fixed representatives omega_+ (a square) and omega_- (a non-square).
struct AnchorPair {
    int omega_plus;
    int omega_minus;  // unused in characteristic 2
};

// omega_+ = 1 always; omega_- = -1 over definite fields, else the nonzero
// non-square of smallest canonical code.
AnchorPair canonical_anchors(const FieldPtr& field);

// Characters of the nested leading (resp. trailing) principal minors.
// Throws E_ZERO_MINOR naming the first vanishing minor.
SignPattern sign_pattern_lpm(const SymMatrix& a);
SignPattern sign_pattern_tpm(const SymMatrix& a);

bool in_lpm_cone(const SymMatrix& a);                        // all leading minors nonzero
bool in_lpm_cone(const SymMatrix& a, const SignPattern& e);  // and pattern equals e
bool in_tpm_cone(const SymMatrix& a);
bool in_tpm_cone(const SymMatrix& a, const SignPattern& e);

// The canonical diagonal anchor with telescoping diagonal
// omega_1, omega_1*omega_2, ..., omega_{n-1}*omega_n, chi(omega_i) = eps_i.
// Over characteristic 2 every pattern yields the identity.
SymMatrix anchor_diag(const FieldPtr& field, const SignPattern& eps, const AnchorPair& anchors);
SymMatrix anchor_diag(const FieldPtr& field, const SignPattern& eps);  // canonical anchors

// Reversal conjugate of anchor_diag: a member of TPM(eps).
SymMatrix anchor_tpm(const FieldPtr& field, const SignPattern& eps, const AnchorPair& anchors);
SymMatrix anchor_tpm(const FieldPtr& field, const SignPattern& eps);

// The TPM pattern of the inverse of an LPM(eps) member:
// eps'_k = eps_n * eps_{n-k} for k < n, eps'_n = eps_n.
SignPattern inverse_pattern(const SignPattern& eps);

// A |-> A^{-1}, a bijection LPM(eps) -> TPM(inverse_pattern(eps)).
// The resulting pattern is asserted against the input's.
SymMatrix map_inverse_cone(const SymMatrix& a);

std::string format_pattern(const SignPattern& e);   // "+,-,+"
SignPattern parse_pattern(const std::string& s);

}  // namespace ffchol
