#pragma once

#include <iosfwd>
#include <vector>

#include "ffchol/field.hpp"

namespace ffchol {

// Dense matrix over a fixed field; entries are element codes.
class Matrix {
public:
    Matrix(FieldPtr field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * cols, 0) {}

    static Matrix identity(FieldPtr field, int n);
    static Matrix diagonal(FieldPtr field, const std::vector<int>& d);

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_lower_triangular() const;
    bool is_upper_triangular() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<int> e_;
};

// Square symmetric matrix; symmetry checked at construction.
class SymMatrix {
public:
    explicit SymMatrix(Matrix m);

    const Matrix& mat() const { return m_; }
    const FieldPtr& field() const { return m_.field(); }
    int n() const { return m_.rows(); }
    int at(int i, int j) const { return m_.at(i, j); }

    bool operator==(const SymMatrix& o) const { return m_ == o.m_; }
    bool operator!=(const SymMatrix& o) const { return m_ != o.m_; }

private:
    Matrix m_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

Matrix mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix scalar_mul(int c, const Matrix& a);

// Determinant by Gaussian elimination with exact field inverses.
int det(const Matrix& a);

Matrix inverse(const Matrix& a);  // throws E_SINGULAR

// det of the leading / trailing k x k principal block.
int leading_minor(const SymMatrix& a, int k);
int trailing_minor(const SymMatrix& a, int k);

// Simultaneous row and column reversal (conjugation by the reversal
// permutation): leading minors of the result are trailing minors of the input.
SymMatrix reverse(const SymMatrix& a);
Matrix reverse(const Matrix& a);

// det of the submatrix picked by row and column index sets (0-based).
int minor_det(const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols);

// Text format: "p k n" / modulus coefficients (k+1 ints, only when k > 1) /
// n rows of n codes.
Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& m);

}  // namespace ffchol
