#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace toricfrob {

/// Arbitrary-precision integer. Exact arithmetic everywhere; intermediate
/// entries of normal-form computations can grow far past 64 bits.
using Int = mpz_class;

/// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    /// Convenience for literals in tests and small fixed matrices.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transposed() const;

    /// Exact determinant (Bareiss fraction-free elimination). Square only.
    Int determinant() const;

    // Elementary row/column operations, used by the normal-form algorithms.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void negate_row(std::size_t i);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x);

/// U*A*V == S with U, V unimodular and S in Smith normal form:
/// nonzero entries only on the diagonal, nonnegative, each dividing the
/// next, zeros last. invariant_factors lists the diagonal entries >= 1.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    std::vector<Int> invariant_factors;

    std::size_t rank() const { return invariant_factors.size(); }
};

/// Deterministic: pivot is the smallest nonzero absolute value, ties broken
/// by lowest row then lowest column index; diagonal signs absorbed into U.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Basis of {x : A*x = 0} as columns extracted from the Smith V factor.
/// The basis is saturated: it spans a direct summand of Z^cols.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a);

/// One integer solution of A*x = b if any exists (chosen deterministically
/// via back-substitution through the Smith form), otherwise nullopt.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

/// Inverse of a unimodular matrix; throws Error if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& a);

} // namespace toricfrob
