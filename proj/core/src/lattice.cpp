#include "toricfrob/lattice.hpp"

#include <algorithm>

#include "toricfrob/errors.hpp"

namespace toricfrob {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw Error("IntMatrix: entry count != rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw Error("IntMatrix: ragged rows");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error("IntMatrix: dimension mismatch in product");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x) {
    if (a.cols() != x.size()) throw Error("IntMatrix: dimension mismatch in mat*vec");
    std::vector<Int> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
    return r;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;

    // Bareiss fraction-free elimination: all divisions are exact.
    IntMatrix m = *this;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

namespace {

// Pivot: smallest nonzero |entry| in the trailing submatrix, lowest row
// then lowest column on ties. Row-major scan realizes the tie-break.
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int a = abs(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    SmithDecomposition d{IntMatrix::identity(r), a, IntMatrix::identity(c), {}};
    IntMatrix& s = d.S;
    IntMatrix& u = d.U;
    IntMatrix& v = d.V;

    const std::size_t steps = std::min(r, c);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(s, t, pi, pj)) break; // trailing submatrix is zero

        for (;;) {
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Reduce column t below the pivot and row t to its right.
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (s(i, t) == 0) continue;
                Int q = s(i, t) / s(t, t); // truncated: remainder shrinks
                s.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (s(t, j) == 0) continue;
                Int q = s(t, j) / s(t, t);
                s.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) {
                find_pivot(s, t, pi, pj);
                continue;
            }

            // Pivot must divide the whole trailing submatrix for the
            // invariant-factor chain; folding an offending row back in
            // makes the next pivot strictly smaller.
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
            find_pivot(s, t, pi, pj);
        }

        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (s(t, t) != 0) d.invariant_factors.push_back(s(t, t));
    return d;
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
    SmithDecomposition d = smith_normal_form(a);
    const std::size_t rank = d.rank();
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = rank; j < a.cols(); ++j) {
        std::vector<Int> col(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) col[i] = d.V(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw Error("solve_integer: b length != rows");
    SmithDecomposition d = smith_normal_form(a);
    const std::size_t diag = std::min(a.rows(), a.cols());

    std::vector<Int> c = d.U * b;
    std::vector<Int> y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Int di = i < diag ? d.S(i, i) : Int(0);
        if (di != 0) {
            if (c[i] % di != 0) return std::nullopt;
            y[i] = c[i] / di;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return d.V * y;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw Error("unimodular_inverse: matrix not square");
    SmithDecomposition d = smith_normal_form(a);
    if (d.S != IntMatrix::identity(a.rows()))
        throw Error("unimodular_inverse: matrix is not unimodular");
    // U*A*V = I  =>  A^{-1} = V*U
    return d.V * d.U;
}

} // namespace toricfrob
