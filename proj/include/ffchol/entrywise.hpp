#pragma once

#include <cstdint>

#include "ffchol/cholesky.hpp"

namespace ffchol {

// A total function F_q -> F_q as a lookup table indexed by element code.
struct FuncTable {
    FieldPtr field;
    std::vector<int> table;  // size q

    bool operator==(const FuncTable& o) const { return table == o.table; }
};

// f[A]: the entrywise image.
Matrix apply(const FuncTable& f, const Matrix& a);
SymMatrix apply(const FuncTable& f, const SymMatrix& a);

// Entrywise a |-> a^(p^ell) on a whole matrix.
Matrix frob_mat(const Matrix& a, int ell);
SymMatrix frob_mat(const SymMatrix& a, int ell);

// The table a |-> c * a^(p^ell).
FuncTable frob_table(const FieldPtr& field, int c, int ell);

// { c * Frob^ell : chi(c) = +1, 0 <= ell < k }, in scan order.
std::vector<FuncTable> frobenius_family(const FieldPtr& field);

// True iff f[A] lies in LPM_n(eps_to) for every A in LPM_n(eps_from),
// by exhaustive enumeration of the symmetric matrices of size n.
bool is_preserver(const FuncTable& f, int n, const SignPattern& eps_from,
                  const SignPattern& eps_to, std::int64_t budget = 10'000'000);

struct PreserverScan {
    std::vector<FuncTable> preservers;  // scan order: ascending base-q value
                                        // of (f(0), ..., f(q-1)), f(0) most
                                        // significant
    bool matches_frobenius_family;      // exact set equality with the family
    bool empty;
};

// Full scan of all q^q functions; throws E_BUDGET_EXCEEDED when that or the
// per-function matrix sweep exceeds the budget.
PreserverScan classify_preservers(const FieldPtr& field, int n, const SignPattern& eps_from,
                                  const SignPattern& eps_to, std::int64_t budget = 10'000'000);

// Exact elementwise verification of the compatibility identities between
// c * Frob^ell and the Cholesky maps against the given anchor, plus the
// commutation with Frob when the anchor is fixed by Frob^ell and c = 1.
bool check_compatibility(const SymMatrix& anchor, int c, int ell, const SymMatrix& a,
                         const LowerPosTri& L);

}  // namespace ffchol
