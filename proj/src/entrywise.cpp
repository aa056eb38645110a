#include "ffchol/entrywise.hpp"

#include "ffchol/census.hpp"

namespace ffchol {

Matrix apply(const FuncTable& f, const Matrix& a) {
    if (!same_field(f.field, a.field()))
        throw DomainError("E_FIELD_MISMATCH", "function table and matrix fields differ");
    Matrix r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            r.at(i, j) = f.table[a.at(i, j)];
    return r;
}

SymMatrix apply(const FuncTable& f, const SymMatrix& a) {
    return SymMatrix(apply(f, a.mat()));
}

Matrix frob_mat(const Matrix& a, int ell) {
    const Field& F = *a.field();
    Matrix r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            r.at(i, j) = F.frobenius(a.at(i, j), ell);
    return r;
}

SymMatrix frob_mat(const SymMatrix& a, int ell) {
    return SymMatrix(frob_mat(a.mat(), ell));
}

FuncTable frob_table(const FieldPtr& field, int c, int ell) {
    FuncTable f{field, std::vector<int>(field->q())};
    for (int a = 0; a < field->q(); ++a)
        f.table[a] = field->mul(c, field->frobenius(a, ell));
    return f;
}

std::vector<FuncTable> frobenius_family(const FieldPtr& field) {
    std::vector<FuncTable> fam;
    for (int c = 1; c < field->q(); ++c) {
        if (field->chi(c) != 1) continue;
        for (int ell = 0; ell < field->k(); ++ell)
            fam.push_back(frob_table(field, c, ell));
    }
    return fam;
}

namespace {

bool lpm_pattern_is(const Field& F, const SymMatrix& a, const SignPattern& e) {
    for (int k = 1; k <= a.n(); ++k) {
        const int m = leading_minor(a, k);
        if (m == 0) return false;
        if (F.p() != 2 && F.chi(m) != e[k - 1]) return false;
    }
    return true;
}

// Members of LPM_n(eps) as full matrices, enumeration order.
std::vector<SymMatrix> cone_members(const FieldPtr& field, int n, const SignPattern& eps,
                                    std::int64_t budget) {
    std::vector<SymMatrix> members;
    enumerate_sym(field, n, [&](const SymMatrix& a) {
        if (lpm_pattern_is(*field, a, eps)) members.push_back(a);
    }, budget);
    return members;
}

}  // namespace

bool is_preserver(const FuncTable& f, int n, const SignPattern& eps_from,
                  const SignPattern& eps_to, std::int64_t budget) {
    const Field& F = *f.field;
    bool ok = true;
    enumerate_sym(f.field, n, [&](const SymMatrix& a) {
        if (!ok) return;
        if (!lpm_pattern_is(F, a, eps_from)) return;
        if (!lpm_pattern_is(F, apply(f, a), eps_to)) ok = false;
    }, budget);
    return ok;
}

PreserverScan classify_preservers(const FieldPtr& field, int n, const SignPattern& eps_from,
                                  const SignPattern& eps_to, std::int64_t budget) {
    const Field& F = *field;
    const int q = F.q();
    double fn_count = 1;
    for (int i = 0; i < q; ++i) fn_count *= q;
    if (fn_count > static_cast<double>(budget))
        throw DomainError("E_BUDGET_EXCEEDED",
                          "full scan of q^q = " + std::to_string(fn_count) +
                              " functions exceeds the budget");

    const std::vector<SymMatrix> domain = cone_members(field, n, eps_from, budget);

    PreserverScan out{{}, false, false};
    FuncTable f{field, std::vector<int>(q, 0)};
    // Odometer over tables: f(q-1) is the fastest digit, so tables come in
    // ascending base-q value of (f(0), ..., f(q-1)).
    for (;;) {
        bool good = true;
        for (const SymMatrix& a : domain)
            if (!lpm_pattern_is(F, apply(f, a), eps_to)) { good = false; break; }
        if (good) out.preservers.push_back(f);

        int i = q - 1;
        while (i >= 0 && f.table[i] == q - 1) f.table[i--] = 0;
        if (i < 0) break;
        ++f.table[i];
    }

    out.empty = out.preservers.empty();
    const std::vector<FuncTable> fam = frobenius_family(field);
    out.matches_frobenius_family = out.preservers.size() == fam.size();
    if (out.matches_frobenius_family)
        for (const FuncTable& g : fam) {
            bool found = false;
            for (const FuncTable& h : out.preservers)
                if (h == g) { found = true; break; }
            if (!found) { out.matches_frobenius_family = false; break; }
        }
    return out;
}

bool check_compatibility(const SymMatrix& anchor, int c, int ell, const SymMatrix& a,
                         const LowerPosTri& L) {
    const FieldPtr& Fp = anchor.field();
    const Field& F = *Fp;
    if (F.cls() == FieldClass::NonDefinite)
        throw DomainError("E_NONDEFINITE", "compatibility identities need a Cholesky field");
    const int sqrt_c = F.positive_sqrt(c);
    const FuncTable f = frob_table(Fp, c, ell);

    const SymMatrix anchor_f = apply(f, anchor);              // c * Frob^ell[anchor]
    const SymMatrix anchor_frob = frob_mat(anchor, ell);      // Frob^ell[anchor]

    // Psi^{-1} route: inverting the Psi route below, c * Frob^ell[A] factors
    // as Frob^ell[L] against c * Frob^ell[anchor], and as sqrt(c) * Frob^ell[L]
    // against Frob^ell[anchor]
    const Matrix want1 = frob_mat(psi_inv(anchor, a).mat(), ell);
    if (psi_inv(anchor_f, apply(f, a)).mat() != want1) return false;
    if (psi_inv(anchor_frob, apply(f, a)).mat() != scalar_mul(sqrt_c, want1)) return false;

    // Psi route
    const Matrix lhs2 = apply(f, psi(anchor, L).mat());
    const Matrix mid2 =
        psi(anchor_f, LowerPosTri(frob_mat(L.mat(), ell))).mat();
    const Matrix rhs2 =
        psi(anchor_frob, LowerPosTri(scalar_mul(sqrt_c, frob_mat(L.mat(), ell)))).mat();
    if (lhs2 != mid2 || lhs2 != rhs2) return false;

    // Commutation with Frob when the anchor is Frob-fixed and c = 1.
    if (c == 1 && anchor_frob == anchor) {
        if (frob_mat(psi_inv(anchor, a).mat(), ell) != psi_inv(anchor, frob_mat(a, ell)).mat())
            return false;
        if (frob_mat(psi(anchor, L).mat(), ell) !=
            psi(anchor, LowerPosTri(frob_mat(L.mat(), ell))).mat())
            return false;
    }
    return true;
}

}  // namespace ffchol
