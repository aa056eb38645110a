#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffchol {

// Domain error with a stable machine-parsable code (e.g. "E_NONDEFINITE").
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

enum class FieldClass {
    EvenChar,      // p = 2
    Definite,      // q ≡ 3 (mod 4)
    NonDefinite,   // q ≡ 1 (mod 4)
};

// F_{p^k} with a fixed monic irreducible modulus polynomial.
//
// Elements are canonical integer codes in [0, q): the element with
// coefficient vector (c_0, ..., c_{k-1}), constant term first, has code
// sum c_i * p^i. Arithmetic is table-driven; fields are capped at
// desk scale (q <= 256, k <= 4).
class Field {
public:
    static constexpr int kMaxDegree = 4;
    static constexpr int kMaxOrder = 256;

    // Constructs F_{p^k} with the first irreducible monic degree-k
    // polynomial in ascending order of its coefficient vector read as a
    // base-p integer. For k = 1 the modulus is x.
    static std::shared_ptr<const Field> make(int p, int k);

    // Same, but with a caller-supplied modulus (validated monic irreducible).
    static std::shared_ptr<const Field> make(int p, int k, const std::vector<int>& modulus);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    // k+1 coefficients, constant term first, leading coefficient 1.
    const std::vector<int>& modulus() const { return modulus_; }
    FieldClass cls() const { return cls_; }

    int zero() const { return 0; }
    int one() const { return 1; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;
    int pow(int a, long long e) const;

    // Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise.
    // Every nonzero element of a characteristic-2 field is a square.
    int chi(int a) const { return chi_[a]; }

    // a^(p^ell); ell = 0 is the identity, ell = k is the identity too.
    int frobenius(int a, int ell) const;

    // The unique square root with chi = +1 (definite fields), or the unique
    // square root (characteristic 2). Not defined over non-definite fields.
    int positive_sqrt(int a) const;

    std::vector<int> coeffs_of(int code) const;
    int code_of(const std::vector<int>& coeffs) const;

    // Text form "p^k" as in "3^2".
    std::string name() const;

private:
    Field() = default;
    void build_tables();

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_;
    FieldClass cls_ = FieldClass::EvenChar;
    std::vector<int> add_, mul_, neg_, inv_, chi_, frob_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(int n);

}  // namespace ffchol
