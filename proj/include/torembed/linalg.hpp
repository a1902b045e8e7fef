#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace torembed {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix over an exact ring (Integer or Rational).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const;
    std::vector<T> col(std::size_t c) const;

    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
RatMatrix to_rational(const IntMatrix& a);

/// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ...
struct SnfDecomposition {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;

    std::size_t rank() const;
};

/// Smith normal form. Pivot: nonzero entry of smallest absolute value in the
/// remaining block, ties broken by lowest (row, col).
SnfDecomposition smith_normal_form(const IntMatrix& a);

/// Lattice basis of {x in Z^cols : A x = 0}; empty when the kernel is trivial.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& a);

Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);

/// Integer inverse of a square matrix with determinant +-1.
/// Throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& b);

/// Unique solution of a square system, or nullopt when singular.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

std::size_t rank(const RatMatrix& a);

Integer dot(const IntVector& a, const IntVector& b);
Integer gcd_of(const IntVector& v);

}  // namespace torembed
