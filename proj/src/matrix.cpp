#include "ffchol/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ffchol {

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    return a->p() == b->p() && a->k() == b->k() && a->modulus() == b->modulus();
}

Matrix Matrix::identity(FieldPtr field, int n) {
    Matrix m(std::move(field), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(FieldPtr field, const std::vector<int>& d) {
    Matrix m(std::move(field), static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Matrix::is_lower_triangular() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

bool Matrix::is_upper_triangular() const {
    if (!is_square()) return false;
    for (int i = 1; i < rows_; ++i)
        for (int j = 0; j < i; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.is_symmetric())
        throw DomainError("E_NOT_SYMMETRIC", "matrix is not symmetric");
}

Matrix mul(const Matrix& a, const Matrix& b) {
    if (!same_field(a.field(), b.field()))
        throw DomainError("E_FIELD_MISMATCH", "operands live in different fields");
    if (a.cols() != b.rows())
        throw DomainError("E_SIZE_MISMATCH", "inner dimensions disagree");
    const Field& F = *a.field();
    Matrix r(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            int s = 0;
            for (int k = 0; k < a.cols(); ++k)
                s = F.add(s, F.mul(a.at(i, k), b.at(k, j)));
            r.at(i, j) = s;
        }
    return r;
}

Matrix transpose(const Matrix& a) {
    Matrix r(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(j, i) = a.at(i, j);
    return r;
}

Matrix scalar_mul(int c, const Matrix& a) {
    const Field& F = *a.field();
    Matrix r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            r.at(i, j) = F.mul(c, a.at(i, j));
    return r;
}

int det(const Matrix& a) {
    if (!a.is_square()) throw DomainError("E_NONSQUARE", "determinant of a non-square matrix");
    const Field& F = *a.field();
    const int n = a.rows();
    Matrix w = a;
    int d = 1;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pivot = -1;
        for (int i = row; i < n; ++i)
            if (w.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;  // zero column below row: det will be 0
        if (pivot != row) {
            for (int j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(row, j));
            d = F.neg(d);
        }
        const int pv = w.at(row, col);
        d = F.mul(d, pv);
        const int pinv = F.inv(pv);
        for (int i = row + 1; i < n; ++i) {
            const int factor = F.mul(w.at(i, col), pinv);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                w.at(i, j) = F.sub(w.at(i, j), F.mul(factor, w.at(row, j)));
        }
        ++row;
    }
    if (row < n) return 0;
    return d;
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw DomainError("E_NONSQUARE", "inverse of a non-square matrix");
    const Field& F = *a.field();
    const int n = a.rows();
    Matrix w = a;
    Matrix r = Matrix::identity(a.field(), n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (w.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) throw DomainError("E_SINGULAR", "matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(r.at(pivot, j), r.at(col, j));
            }
        const int pinv = F.inv(w.at(col, col));
        for (int j = 0; j < n; ++j) {
            w.at(col, j) = F.mul(w.at(col, j), pinv);
            r.at(col, j) = F.mul(r.at(col, j), pinv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const int factor = w.at(i, col);
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = F.sub(w.at(i, j), F.mul(factor, w.at(col, j)));
                r.at(i, j) = F.sub(r.at(i, j), F.mul(factor, r.at(col, j)));
            }
        }
    }
    return r;
}

namespace {

int block_minor(const Matrix& m, int i0, int k) {
    Matrix sub(m.field(), k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub.at(i, j) = m.at(i0 + i, i0 + j);
    return det(sub);
}

}  // namespace

int leading_minor(const SymMatrix& a, int k) {
    if (k < 1 || k > a.n()) throw DomainError("E_INDEX_RANGE", "minor order out of range");
    return block_minor(a.mat(), 0, k);
}

int trailing_minor(const SymMatrix& a, int k) {
    if (k < 1 || k > a.n()) throw DomainError("E_INDEX_RANGE", "minor order out of range");
    return block_minor(a.mat(), a.n() - k, k);
}

Matrix reverse(const Matrix& a) {
    Matrix r(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(a.rows() - 1 - i, a.cols() - 1 - j);
    return r;
}

SymMatrix reverse(const SymMatrix& a) {
    return SymMatrix(reverse(a.mat()));
}

int minor_det(const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size() || rows.empty())
        throw DomainError("E_SIZE_MISMATCH", "row and column index sets must have equal positive size");
    Matrix sub(a.field(), static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            sub.at(static_cast<int>(i), static_cast<int>(j)) = a.at(rows[i], cols[j]);
    return det(sub);
}

Matrix read_matrix(std::istream& in) {
    int p, k, n;
    if (!(in >> p >> k >> n) || n < 1)
        throw DomainError("E_PARSE", "expected header line \"p k n\"");
    FieldPtr F;
    if (k > 1) {
        std::vector<int> m(k + 1);
        for (int& c : m)
            if (!(in >> c)) throw DomainError("E_PARSE", "expected modulus coefficient line");
        F = Field::make(p, k, m);
    } else {
        F = Field::make(p, k);
    }
    Matrix mat(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int code;
            if (!(in >> code) || code < 0 || code >= F->q())
                throw DomainError("E_PARSE", "entry out of range or missing");
            mat.at(i, j) = code;
        }
    return mat;
}

void write_matrix(std::ostream& out, const Matrix& m) {
    const Field& F = *m.field();
    out << F.p() << ' ' << F.k() << ' ' << m.rows() << '\n';
    if (F.k() > 1) {
        for (size_t i = 0; i < F.modulus().size(); ++i)
            out << (i ? " " : "") << F.modulus()[i];
        out << '\n';
    }
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m.at(i, j);
        out << '\n';
    }
}

}  // namespace ffchol
