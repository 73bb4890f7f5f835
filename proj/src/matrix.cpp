#include "flaglab/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace flaglab {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& q : data_)
        if (q != 0) return false;
    return true;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

Matrix Matrix::stack_below(const Matrix& other) const {
    if (rows_ == 0) return other;
    if (other.rows_ == 0) return *this;
    if (other.cols_ != cols_) throw std::invalid_argument("stack_below: column mismatch");
    Matrix s(rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), s.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), s.data_.begin() + data_.size());
    return s;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix +: shape");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix -: shape");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix *: shape");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Rational& x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(l, j);
        }
    return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix*vector: shape");
    Vector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (v[j] != 0) r[i] += a(i, j) * v[j];
    return r;
}

namespace {

// Each row scaled by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
    std::vector<std::vector<Integer>> z(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vector r = m.row(i);
        Integer l = common_denominator(r);
        for (std::size_t j = 0; j < m.cols(); ++j) z[i][j] = r[j].get_num() * (l / r[j].get_den());
    }
    return z;
}

// Bareiss on an integer array. Returns rank; sign tracks row swaps and
// last_pivot ends as the determinant of the leading rank x rank minor (up to sign).
std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, int& sign, Integer& last_pivot) {
    const std::size_t n = a.size();
    std::size_t r = 0;
    Integer prev = 1;
    sign = 1;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        if (p != r) { std::swap(a[p], a[r]); sign = -sign; }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    last_pivot = prev;
    return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto z = integer_rows(m);
    int sign;
    Integer piv;
    return bareiss(z, m.cols(), sign, piv);
}

Rational determinant(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) scale *= common_denominator(m.row(i));
    auto z = integer_rows(m);
    int sign;
    Integer piv;
    if (bareiss(z, n, sign, piv) < n) return 0;
    return make_rational(sign * piv, scale);
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
    Matrix a = m;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = piv;
    return a.block(0, 0, r, a.cols());
}

Matrix inverse(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse: not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (r.rows() < n || piv[n - 1] >= n) throw std::domain_error("inverse: singular matrix");
    return r.block(0, n, n, n);
}

Rational trace(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("trace: not square");
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: shape");
    const std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    Vector x(n);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == n) return std::nullopt;
        x[piv[i]] = r(i, n);
    }
    return x;
}

}  // namespace flaglab
