#include "torembed/linalg.hpp"

#include <algorithm>
#include <utility>

#include "torembed/errors.hpp"

namespace torembed {

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

template <typename T>
std::vector<T> Matrix<T>::col(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

template class Matrix<Integer>;
template class Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    IntVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    return r;
}

std::size_t SnfDecomposition::rank() const {
    std::size_t k = 0;
    while (k < std::min(S.rows(), S.cols()) && S(k, k) != 0) ++k;
    return k;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

// Floor division keeps remainders nonnegative, which is enough for termination
// because the pivot always has the smallest absolute value in its block.
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a) {
    if (a.empty()) throw std::invalid_argument("smith_normal_form: empty matrix");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix S = a;
    IntMatrix U = IntMatrix::identity(m);
    IntMatrix V = IntMatrix::identity(n);

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // Smallest |entry| in the block [t.., t..], lowest (row, col) on ties.
            std::optional<std::pair<std::size_t, std::size_t>> pivot;
            for (std::size_t r = t; r < m; ++r)
                for (std::size_t c = t; c < n; ++c) {
                    if (S(r, c) == 0) continue;
                    if (!pivot || abs(S(r, c)) < abs(S(pivot->first, pivot->second))) pivot = {r, c};
                }
            if (!pivot) break;
            swap_rows(S, t, pivot->first);
            swap_rows(U, t, pivot->first);
            swap_cols(S, t, pivot->second);
            swap_cols(V, t, pivot->second);

            bool clean = true;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (S(r, t) == 0) continue;
                Integer q = floor_div(S(r, t), S(t, t));
                add_row(S, r, t, q);
                add_row(U, r, t, q);
                if (S(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (S(t, c) == 0) continue;
                Integer q = floor_div(S(t, c), S(t, t));
                add_col(S, c, t, q);
                add_col(V, c, t, q);
                if (S(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // Row and column are clear; enforce divisibility of the remaining block.
            std::optional<std::size_t> bad_row;
            for (std::size_t r = t + 1; r < m && !bad_row; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (S(r, c) % S(t, t) != 0) {
                        bad_row = r;
                        break;
                    }
            if (!bad_row) break;
            add_row(S, t, *bad_row, Integer(-1));
            add_row(U, t, *bad_row, Integer(-1));
        }
        if (S(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c) S(t, c) = -S(t, c);
            for (std::size_t c = 0; c < m; ++c) U(t, c) = -U(t, c);
        }
    }
    return {std::move(U), std::move(S), std::move(V)};
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& a) {
    if (a.empty()) return {};
    SnfDecomposition snf = smith_normal_form(a);
    std::vector<IntVector> basis;
    for (std::size_t c = snf.rank(); c < a.cols(); ++c) basis.push_back(snf.V.col(c));
    return basis;
}

Rational determinant(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix m = a;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rational f = m(r, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

Integer determinant(const IntMatrix& a) {
    Rational d = determinant(to_rational(a));
    return d.get_num();
}

IntMatrix unimodular_inverse(const IntMatrix& b) {
    if (b.rows() != b.cols()) throw NotUnimodular("matrix is not square");
    const std::size_t n = b.rows();
    Integer det = determinant(b);
    if (abs(det) != 1) throw NotUnimodular("determinant is " + det.get_str() + ", not +-1");
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = b(r, c);
        aug(r, n + r) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (aug(p, c) == 0) ++p;
        for (std::size_t k = 0; k < 2 * n; ++k) std::swap(aug(p, k), aug(c, k));
        Rational inv = 1 / aug(c, c);
        for (std::size_t k = 0; k < 2 * n; ++k) aug(c, k) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || aug(r, c) == 0) continue;
            Rational f = aug(r, c);
            for (std::size_t k = 0; k < 2 * n; ++k) aug(r, k) -= f * aug(c, k);
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& v = aug(r, n + c);
            if (v.get_den() != 1) throw NotUnimodular("non-integral inverse");
            inv(r, c) = v.get_num();
        }
    return inv;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
    RatMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug(p, c) == 0) ++p;
        if (p == n) return std::nullopt;
        for (std::size_t k = 0; k <= n; ++k) std::swap(aug(p, k), aug(c, k));
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || aug(r, c) == 0) continue;
            Rational f = aug(r, c) / aug(c, c);
            for (std::size_t k = c; k <= n; ++k) aug(r, k) -= f * aug(c, k);
        }
    }
    RatVector x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n) / aug(r, r);
    return x;
}

std::size_t rank(const RatMatrix& a) {
    RatMatrix m = a;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
        std::size_t p = rk;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rk, k));
        for (std::size_t r = rk + 1; r < m.rows(); ++r) {
            if (m(r, c) == 0) continue;
            Rational f = m(r, c) / m(rk, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rk, k);
        }
        ++rk;
    }
    return rk;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

}  // namespace torembed
