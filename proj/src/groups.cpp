#include "ffchol/groups.hpp"

namespace ffchol {

LowerPosTri tri_op(TriGroupLaw law, const LowerPosTri& l, const LowerPosTri& k) {
    if (!same_field(l.field(), k.field()))
        throw DomainError("E_FIELD_MISMATCH", "operands live in different fields");
    if (l.n() != k.n()) throw DomainError("E_SIZE_MISMATCH", "operands differ in size");
    if (law == TriGroupLaw::Prod) return LowerPosTri(mul(l.mat(), k.mat()));

    const Field& F = *l.field();
    Matrix r(l.field(), l.n(), l.n());
    for (int i = 0; i < l.n(); ++i) {
        r.at(i, i) = F.mul(l.mat().at(i, i), k.mat().at(i, i));
        for (int j = 0; j < i; ++j)
            r.at(i, j) = F.add(l.mat().at(i, j), k.mat().at(i, j));
    }
    return LowerPosTri(r);
}

LowerPosTri tri_inv(TriGroupLaw law, const LowerPosTri& l) {
    if (law == TriGroupLaw::Prod) return LowerPosTri(inverse(l.mat()));

    const Field& F = *l.field();
    Matrix r(l.field(), l.n(), l.n());
    for (int i = 0; i < l.n(); ++i) {
        r.at(i, i) = F.inv(l.mat().at(i, i));
        for (int j = 0; j < i; ++j)
            r.at(i, j) = F.neg(l.mat().at(i, j));
    }
    return LowerPosTri(r);
}

namespace {

void require_definite(const Field& F) {
    if (F.cls() == FieldClass::NonDefinite)
        throw DomainError("E_NONDEFINITE", "group transport needs a Cholesky field");
}

struct CanonicalFactor {
    LowerPosTri L;
    SymMatrix anchor;
    SignPattern eps;
};

CanonicalFactor canonical_factor(const SymMatrix& a) {
    const SignPattern eps = sign_pattern_lpm(a);
    SymMatrix anchor = anchor_diag(a.field(), eps);
    Factorization f = factor(a, anchor);
    return {f.L, std::move(anchor), eps};
}

}  // namespace

SymMatrix box(TriGroupLaw law, const SymMatrix& a, const SymMatrix& b) {
    require_definite(*a.field());
    const CanonicalFactor fa = canonical_factor(a);
    const CanonicalFactor fb = canonical_factor(b);
    const LowerPosTri m = tri_op(law, fa.L, fb.L);
    const SymMatrix d = SymMatrix(mul(fa.anchor.mat(), fb.anchor.mat()));
    // The anchor product is again a canonical anchor; its pattern is the
    // pointwise product of the operand patterns.
    if (a.field()->p() != 2) {
        SignPattern prod(fa.eps.size());
        for (size_t i = 0; i < prod.size(); ++i) prod[i] = fa.eps[i] * fb.eps[i];
        if (d != anchor_diag(a.field(), prod))
            throw DomainError("E_INTERNAL", "anchor product left the canonical family");
    }
    return congruence(m.mat(), d);
}

SymMatrix box_inv(TriGroupLaw law, const SymMatrix& a) {
    require_definite(*a.field());
    const CanonicalFactor fa = canonical_factor(a);
    return congruence(tri_inv(law, fa.L).mat(), fa.anchor);
}

SymMatrix circledast(TriGroupLaw law, const SymMatrix& a, const SymMatrix& b,
                     const SignPattern& eps) {
    require_definite(*a.field());
    const SymMatrix anchor = anchor_diag(a.field(), eps);
    if (!in_lpm_cone(a, eps) || !in_lpm_cone(b, eps))
        throw DomainError("E_PATTERN_MISMATCH", "both operands must lie in LPM(eps)");
    const LowerPosTri l = psi_inv(anchor, a);
    const LowerPosTri k = psi_inv(anchor, b);
    return congruence(tri_op(law, l, k).mat(), anchor);
}

}  // namespace ffchol
