#include "ffchol/cholesky.hpp"

namespace ffchol {

LowerPosTri::LowerPosTri(Matrix m) : m_(std::move(m)) {
    if (!m_.is_lower_triangular())
        throw DomainError("E_NOT_LOWER_TRIANGULAR", "matrix has entries above the diagonal");
    const Field& F = *m_.field();
    for (int i = 0; i < m_.rows(); ++i)
        if (F.chi(m_.at(i, i)) != 1)
            throw DomainError("E_NOT_POS_DIAG",
                              "diagonal entry " + std::to_string(i + 1) + " is not positive");
}

SymMatrix Factorization::reconstruct() const {
    return congruence(L.mat(), anchor);
}

SymMatrix congruence(const Matrix& L, const SymMatrix& anchor) {
    if (!L.is_lower_triangular())
        throw DomainError("E_NOT_LOWER_TRIANGULAR", "congruence needs a lower-triangular L");
    for (int i = 0; i < L.rows(); ++i)
        if (L.at(i, i) == 0) throw DomainError("E_SINGULAR", "L has a zero diagonal entry");
    if (!in_lpm_cone(anchor))
        throw DomainError("E_ZERO_MINOR", "anchor has a vanishing leading minor");
    return SymMatrix(mul(mul(L, anchor.mat()), transpose(L)));
}

namespace {

void require_factorable_field(const Field& F) {
    if (F.cls() == FieldClass::NonDefinite)
        throw DomainError("E_NONDEFINITE",
                          "Cholesky factorization is not available over " + F.name());
}

// Forward substitution: solve K y = b for lower-triangular K.
std::vector<int> forward_solve(const Field& F, const Matrix& K, const std::vector<int>& b) {
    const int n = static_cast<int>(b.size());
    std::vector<int> y(n);
    for (int i = 0; i < n; ++i) {
        int s = b[i];
        for (int j = 0; j < i; ++j) s = F.sub(s, F.mul(K.at(i, j), y[j]));
        y[i] = F.mul(s, F.inv(K.at(i, i)));
    }
    return y;
}

Matrix leading_block(const Matrix& m, int k) {
    Matrix b(m.field(), k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            b.at(i, j) = m.at(i, j);
    return b;
}

}  // namespace

Factorization factor(const SymMatrix& a, const SymMatrix& anchor) {
    const FieldPtr& Fp = a.field();
    const Field& F = *Fp;
    require_factorable_field(F);
    if (!same_field(Fp, anchor.field()) || a.n() != anchor.n())
        throw DomainError("E_SIZE_MISMATCH", "matrix and anchor must match in field and size");
    const int n = a.n();

    // Leading minors, dA[0] = dE[0] = 1; pattern check before any work.
    std::vector<int> dA(n + 1, 1), dE(n + 1, 1);
    for (int k = 1; k <= n; ++k) {
        dA[k] = leading_minor(a, k);
        dE[k] = leading_minor(anchor, k);
        if (dA[k] == 0 || dE[k] == 0)
            throw DomainError("E_ZERO_MINOR",
                              "leading minor of order " + std::to_string(k) + " vanishes");
        if (F.chi(dA[k]) != F.chi(dE[k]))
            throw DomainError("E_PATTERN_MISMATCH",
                              "sign patterns disagree at index " + std::to_string(k));
    }

    Matrix L(Fp, n, n);
    for (int m = 1; m <= n; ++m) {
        const int ratio = F.mul(F.mul(dA[m], dE[m - 1]), F.inv(F.mul(dA[m - 1], dE[m])));
        const int s = F.positive_sqrt(ratio);
        if (m > 1) {
            std::vector<int> b(m - 1), u(m - 1);
            for (int i = 0; i < m - 1; ++i) {
                b[i] = a.at(i, m - 1);
                u[i] = anchor.at(i, m - 1);
            }
            const std::vector<int> y = forward_solve(F, L, b);  // K^{-1} b
            const Matrix Binv = inverse(leading_block(anchor.mat(), m - 1));
            for (int i = 0; i < m - 1; ++i) {
                int acc = 0;
                for (int j = 0; j < m - 1; ++j)
                    acc = F.add(acc, F.mul(Binv.at(i, j), F.sub(y[j], F.mul(s, u[j]))));
                L.at(m - 1, i) = acc;
            }
        }
        L.at(m - 1, m - 1) = s;
    }

    Factorization f{LowerPosTri(L), anchor, SignPattern(n)};
    for (int k = 1; k <= n; ++k) f.eps[k - 1] = F.p() == 2 ? 1 : F.chi(dA[k]);
    if (f.reconstruct() != a)
        throw DomainError("E_INTERNAL", "factorization failed to reconstruct its input");
    return f;
}

Matrix factor_tpm(const SymMatrix& a, const SymMatrix& anchor_tpm) {
    const Factorization f = factor(reverse(a), reverse(anchor_tpm));
    return reverse(f.L.mat());
}

SymMatrix psi(const SymMatrix& anchor, const LowerPosTri& L) {
    return congruence(L.mat(), anchor);
}

LowerPosTri psi_inv(const SymMatrix& anchor, const SymMatrix& a) {
    return factor(a, anchor).L;
}

SymMatrix transition(const SymMatrix& a, const SymMatrix& anchor_from, const SymMatrix& anchor_to) {
    return psi(anchor_to, psi_inv(anchor_from, a));
}

std::pair<LowerPosTri, LowerPosTri> nonuniqueness_witness(const FieldPtr& field, int n) {
    if (field->cls() != FieldClass::NonDefinite)
        throw DomainError("E_DEFINITE", "factorization is unique over " + field->name());
    const Field& F = *field;
    // Smallest nontrivial square root of unity with chi = +1; over a
    // non-definite field -1 qualifies, so the search always succeeds.
    int d = 0;
    for (int c = 2; c < F.q(); ++c)
        if (F.mul(c, c) == 1 && F.chi(c) == 1) { d = c; break; }
    if (d == 0) throw DomainError("E_INTERNAL", "no unit square root found");

    Matrix L2 = Matrix::identity(field, n);
    L2.at(0, 0) = d;
    return {LowerPosTri(Matrix::identity(field, n)), LowerPosTri(L2)};
}

}  // namespace ffchol
