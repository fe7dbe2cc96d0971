#pragma once

#include "kucalc/plocal.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kucalc {

using IntVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    /// [this | other]; row counts must agree.
    IntMatrix hconcat(const IntMatrix& other) const;
    IntVector column(std::size_t c) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, const IntVector& x);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& a);

struct SmithForm {
    /// d_1 | d_2 | ... , length min(rows, cols), all >= 0.
    IntVector diagonal;
    std::size_t rank = 0;
    /// U * A * V = diag(diagonal). Empty when transforms were not requested.
    IntMatrix U;
    IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& a, bool with_transforms = true);

/// Solves A x = b over Z_(p) using a Smith form computed once.
class PLocalSolver {
public:
    PLocalSolver(const IntMatrix& a, std::uint64_t p);

    /// Some solution with p-unit denominators, or nullopt. Throws
    /// std::invalid_argument when b has the wrong length.
    std::optional<std::vector<PLocalScalar>> solve(const IntVector& b) const;
    bool solvable(const IntVector& b) const { return solve(b).has_value(); }

    const SmithForm& smith() const { return snf_; }

private:
    std::uint64_t p_;
    std::size_t rows_;
    SmithForm snf_;
};

std::optional<std::vector<PLocalScalar>> solve_plocal(const IntMatrix& a, const IntVector& b,
                                                      std::uint64_t p);

struct CokernelOrders {
    std::size_t free_rank = 0;
    /// p-parts of the elementary divisors, ascending, p^0 dropped.
    std::vector<BigInt> torsion;

    /// Sum of the exponents of the torsion orders.
    std::uint64_t log_order(std::uint64_t p) const;
};

CokernelOrders cokernel_orders(const IntMatrix& a, std::uint64_t p);

/// Columns form a Z-basis of {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

}  // namespace kucalc
