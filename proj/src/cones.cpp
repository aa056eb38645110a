#include "ffchol/cones.hpp"

#include <sstream>

namespace ffchol {

AnchorPair canonical_anchors(const FieldPtr& field) {
    AnchorPair a{1, 0};
    if (field->cls() == FieldClass::EvenChar) return a;
    if (field->cls() == FieldClass::Definite) {
        a.omega_minus = field->neg(1);
        return a;
    }
    for (int c = 2; c < field->q(); ++c)
        if (field->chi(c) == -1) { a.omega_minus = c; break; }
    return a;
}

namespace {

SignPattern pattern_of(const SymMatrix& a, bool trailing) {
    const Field& F = *a.field();
    SignPattern e(a.n());
    for (int k = 1; k <= a.n(); ++k) {
        const int m = trailing ? trailing_minor(a, k) : leading_minor(a, k);
        const int c = F.chi(m);
        if (c == 0)
            throw DomainError("E_ZERO_MINOR",
                              "principal minor of order " + std::to_string(k) + " vanishes");
        e[k - 1] = c;
    }
    return e;
}

}  // namespace

SignPattern sign_pattern_lpm(const SymMatrix& a) { return pattern_of(a, false); }
SignPattern sign_pattern_tpm(const SymMatrix& a) { return pattern_of(a, true); }

bool in_lpm_cone(const SymMatrix& a) {
    for (int k = 1; k <= a.n(); ++k)
        if (leading_minor(a, k) == 0) return false;
    return true;
}

bool in_lpm_cone(const SymMatrix& a, const SignPattern& e) {
    const Field& F = *a.field();
    if (static_cast<int>(e.size()) != a.n()) return false;
    for (int k = 1; k <= a.n(); ++k) {
        const int m = leading_minor(a, k);
        if (m == 0) return false;
        // every sign pattern names the single cone in characteristic 2
        if (F.p() != 2 && F.chi(m) != e[k - 1]) return false;
    }
    return true;
}

bool in_tpm_cone(const SymMatrix& a) {
    for (int k = 1; k <= a.n(); ++k)
        if (trailing_minor(a, k) == 0) return false;
    return true;
}

bool in_tpm_cone(const SymMatrix& a, const SignPattern& e) {
    const Field& F = *a.field();
    if (static_cast<int>(e.size()) != a.n()) return false;
    for (int k = 1; k <= a.n(); ++k) {
        const int m = trailing_minor(a, k);
        if (m == 0) return false;
        if (F.p() != 2 && F.chi(m) != e[k - 1]) return false;
    }
    return true;
}

SymMatrix anchor_diag(const FieldPtr& field, const SignPattern& eps, const AnchorPair& anchors) {
    const int n = static_cast<int>(eps.size());
    if (field->cls() == FieldClass::EvenChar)
        return SymMatrix(Matrix::identity(field, n));
    std::vector<int> omega(n);
    for (int i = 0; i < n; ++i)
        omega[i] = eps[i] == 1 ? anchors.omega_plus : anchors.omega_minus;
    std::vector<int> d(n);
    d[0] = omega[0];
    for (int i = 1; i < n; ++i) d[i] = field->mul(omega[i - 1], omega[i]);
    return SymMatrix(Matrix::diagonal(field, d));
}

SymMatrix anchor_diag(const FieldPtr& field, const SignPattern& eps) {
    return anchor_diag(field, eps, canonical_anchors(field));
}

SymMatrix anchor_tpm(const FieldPtr& field, const SignPattern& eps, const AnchorPair& anchors) {
    return reverse(anchor_diag(field, eps, anchors));
}

SymMatrix anchor_tpm(const FieldPtr& field, const SignPattern& eps) {
    return anchor_tpm(field, eps, canonical_anchors(field));
}

SignPattern inverse_pattern(const SignPattern& eps) {
    const int n = static_cast<int>(eps.size());
    SignPattern out(n);
    for (int k = 1; k < n; ++k) out[k - 1] = eps[n - 1] * eps[n - 1 - k];
    out[n - 1] = eps[n - 1];
    return out;
}

SymMatrix map_inverse_cone(const SymMatrix& a) {
    const SignPattern eps = sign_pattern_lpm(a);
    SymMatrix r = SymMatrix(inverse(a.mat()));
    if (sign_pattern_tpm(r) != inverse_pattern(eps))
        throw DomainError("E_INTERNAL", "inverse left the predicted TPM cone");
    return r;
}

std::string format_pattern(const SignPattern& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += e[i] == 1 ? '+' : '-';
    }
    return s;
}

SignPattern parse_pattern(const std::string& s) {
    SignPattern e;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "+" || tok == "+1") e.push_back(1);
        else if (tok == "-" || tok == "-1") e.push_back(-1);
        else throw DomainError("E_PARSE", "sign pattern tokens must be '+' or '-'");
    }
    if (e.empty()) throw DomainError("E_PARSE", "empty sign pattern");
    return e;
}

}  // namespace ffchol
