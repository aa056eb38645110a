#pragma once

#include "ffchol/cholesky.hpp"

namespace ffchol {

// Group laws on the positive-diagonal lower-triangular cone:
//   Prod     L, K |-> L * K
//   CholAdd  L, K |-> strict lower parts add, diagonals multiply
enum class TriGroupLaw { Prod, CholAdd };

LowerPosTri tri_op(TriGroupLaw law, const LowerPosTri& l, const LowerPosTri& k);
LowerPosTri tri_inv(TriGroupLaw law, const LowerPosTri& l);

// Transported law on the whole LPM cone (definite fields): factor both
// operands against their canonical diagonal anchors and combine as
// (L o K) (D_eps * D_eps') (L o K)^T. Identity I_n.
SymMatrix box(TriGroupLaw law, const SymMatrix& a, const SymMatrix& b);
SymMatrix box_inv(TriGroupLaw law, const SymMatrix& a);

// Internal law on a single cone LPM(eps): (L o K) D_eps (L o K)^T.
SymMatrix circledast(TriGroupLaw law, const SymMatrix& a, const SymMatrix& b,
                     const SignPattern& eps);

}  // namespace ffchol
