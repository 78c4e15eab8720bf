#pragma once

#include "qloop/laurent.hpp"

#include <string>
#include <vector>

namespace qloop {

// Dense matrix over Q with GMP rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols = -1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    bool is_zero() const;

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rational& s) const;
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    RationalMatrix transpose() const;
    // [A B] and [A; B]
    static RationalMatrix hstack(const std::vector<RationalMatrix>& blocks, int rows);
    static RationalMatrix vstack(const std::vector<RationalMatrix>& blocks, int cols);

    // Fraction-free (Bareiss) elimination on the row-wise integer-cleared matrix.
    int rank() const;
    Rational determinant() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
    RationalMatrix inverse() const;
    // Columns form a basis of the null space.
    RationalMatrix kernel() const;
    // A matrix with linearly independent rows spanning the row space.
    RationalMatrix row_basis() const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

// Integer matrix obtained by clearing denominators row by row, then Bareiss
// elimination; returns the pivot columns and leaves the echelon form in `m`.
std::vector<int> bareiss_echelon(std::vector<std::vector<Integer>>& m);

} // namespace qloop
