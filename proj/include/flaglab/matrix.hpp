#pragma once

#include "flaglab/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace flaglab {

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    const std::vector<Rational>& entries() const { return data_; }

    Matrix transpose() const;
    bool is_zero() const;
    void swap_rows(std::size_t a, std::size_t b);

    // Rows [r0, r0+nr), columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix stack_below(const Matrix& other) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

// Fraction-free (Bareiss) elimination on the integer-scaled rows.
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);

// Gauss-Jordan reduced row echelon form; zero rows dropped.
// pivots (if given) receives the pivot column of each returned row.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

// Throws std::domain_error on a singular matrix.
Matrix inverse(const Matrix& m);

Rational trace(const Matrix& m);

// One solution of a x = b (free variables set to 0), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

}  // namespace flaglab
