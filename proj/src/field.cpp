#include "ffchol/field.hpp"

#include <algorithm>

namespace ffchol {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Polynomial helpers over F_p, coefficient vectors with constant term first.
// Used only during field construction, before the tables exist.

std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_trim(r);
}

// Remainder of a modulo monic m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    a = poly_trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int lead = a.back();
        for (int i = 0; i <= dm; ++i) {
            int& c = a[shift + i];
            c = ((c - lead * m[i]) % p + p) % p;
        }
        a = poly_trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const std::vector<int>& m, int p) {
    const int deg = static_cast<int>(m.size()) - 1;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> div(d + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) { div[i] = static_cast<int>(c % p); c /= p; }
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::shared_ptr<const Field> Field::make(int p, int k) {
    if (!is_prime(p)) throw DomainError("E_NOT_PRIME", "p = " + std::to_string(p) + " is not prime");
    if (k < 1 || k > kMaxDegree)
        throw DomainError("E_DEGREE_UNSUPPORTED", "degree k = " + std::to_string(k) + " outside [1, 4]");

    if (k == 1) return make(p, 1, {0, 1});

    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > kMaxOrder)
        throw DomainError("E_DEGREE_UNSUPPORTED", "q = " + std::to_string(q) + " exceeds the desk-scale cap");

    // Scan monic degree-k polynomials in ascending order of the lower
    // coefficient vector read as a base-p integer, constant term least
    // significant.
    long long span = 1;
    for (int i = 0; i < k; ++i) span *= p;
    for (long long code = 0; code < span; ++code) {
        std::vector<int> m(k + 1, 0);
        long long c = code;
        for (int i = 0; i < k; ++i) { m[i] = static_cast<int>(c % p); c /= p; }
        m[k] = 1;
        if (poly_irreducible(m, p)) return make(p, k, m);
    }
    throw DomainError("E_DEGREE_UNSUPPORTED", "no irreducible modulus found");  // unreachable
}

std::shared_ptr<const Field> Field::make(int p, int k, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw DomainError("E_NOT_PRIME", "p = " + std::to_string(p) + " is not prime");
    if (k < 1 || k > kMaxDegree)
        throw DomainError("E_DEGREE_UNSUPPORTED", "degree k = " + std::to_string(k) + " outside [1, 4]");
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > kMaxOrder)
        throw DomainError("E_DEGREE_UNSUPPORTED", "q = " + std::to_string(q) + " exceeds the desk-scale cap");

    if (static_cast<int>(modulus.size()) != k + 1 || modulus.back() != 1)
        throw DomainError("E_DEGREE_UNSUPPORTED", "modulus must be monic of degree k");
    for (int c : modulus)
        if (c < 0 || c >= p) throw DomainError("E_DEGREE_UNSUPPORTED", "modulus coefficients must lie in [0, p)");
    if (k >= 2 && !poly_irreducible(modulus, p))
        throw DomainError("E_DEGREE_UNSUPPORTED", "modulus is reducible over F_p");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->k_ = k;
    f->q_ = static_cast<int>(q);
    f->modulus_ = modulus;
    if (p == 2) f->cls_ = FieldClass::EvenChar;
    else if (q % 4 == 3) f->cls_ = FieldClass::Definite;
    else f->cls_ = FieldClass::NonDefinite;
    f->build_tables();
    return f;
}

void Field::build_tables() {
    const int q = q_;
    add_.assign(static_cast<size_t>(q) * q, 0);
    mul_.assign(static_cast<size_t>(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    chi_.assign(q, 0);
    frob_.assign(q, 0);

    for (int a = 0; a < q; ++a) {
        const auto ca = coeffs_of(a);
        // negation
        std::vector<int> cn(k_);
        for (int i = 0; i < k_; ++i) cn[i] = (p_ - ca[i]) % p_;
        neg_[a] = code_of(cn);
        for (int b = 0; b < q; ++b) {
            const auto cb = coeffs_of(b);
            std::vector<int> cs(k_);
            for (int i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
            add_[static_cast<size_t>(a) * q + b] = code_of(cs);

            auto prod = poly_mod(poly_mul(poly_trim(ca), poly_trim(cb), p_), modulus_, p_);
            prod.resize(k_, 0);
            mul_[static_cast<size_t>(a) * q + b] = code_of(prod);
        }
    }

    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[static_cast<size_t>(a) * q + b] == 1) { inv_[a] = b; break; }

    // chi: squares of nonzero elements; all +1 in characteristic 2.
    if (p_ == 2) {
        for (int a = 1; a < q; ++a) chi_[a] = 1;
    } else {
        for (int a = 1; a < q; ++a) chi_[a] = -1;
        for (int b = 1; b < q; ++b) chi_[mul_[static_cast<size_t>(b) * q + b]] = 1;
    }

    for (int a = 0; a < q; ++a) frob_[a] = pow(a, p_);
}

int Field::inv(int a) const {
    if (a == 0) throw DomainError("E_DIVISION_BY_ZERO", "inverse of zero in " + name());
    return inv_[a];
}

int Field::pow(int a, long long e) const {
    int r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int Field::frobenius(int a, int ell) const {
    int r = a;
    for (int i = 0; i < ell; ++i) r = frob_[r];
    return r;
}

int Field::positive_sqrt(int a) const {
    if (a == 0) return 0;
    if (cls_ == FieldClass::EvenChar) return pow(a, q_ / 2);
    if (cls_ == FieldClass::NonDefinite)
        throw DomainError("E_NONDEFINITE", "positive square root is not well-defined over " + name());
    if (chi(a) != 1) throw DomainError("E_NOT_A_SQUARE", "element has no square root in " + name());
    const int r = pow(a, (q_ + 1) / 4);
    return chi(r) == 1 ? r : neg(r);
}

std::vector<int> Field::coeffs_of(int code) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) { c[i] = code % p_; code /= p_; }
    return c;
}

int Field::code_of(const std::vector<int>& coeffs) const {
    int code = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        code = code * p_ + coeffs[i];
    return code;
}

std::string Field::name() const {
    return std::to_string(p_) + "^" + std::to_string(k_);
}

}  // namespace ffchol
