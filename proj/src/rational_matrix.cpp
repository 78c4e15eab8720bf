#include "qloop/rational_matrix.hpp"

#include "qloop/errors.hpp"

#include <sstream>

namespace qloop {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, int cols) {
    const int r = static_cast<int>(rows.size());
    const int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw ValidationError("ragged matrix");
        for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix shape mismatch in sum");
    RationalMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const { return *this + o * Rational(-1); }

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix shape mismatch in product");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
    RationalMatrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

RationalMatrix RationalMatrix::hstack(const std::vector<RationalMatrix>& blocks, int rows) {
    int cols = 0;
    for (const auto& b : blocks) {
        if (b.rows_ != rows) throw ValidationError("hstack row mismatch");
        cols += b.cols_;
    }
    RationalMatrix r(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < b.cols_; ++j) r(i, off + j) = b(i, j);
        off += b.cols_;
    }
    return r;
}

RationalMatrix RationalMatrix::vstack(const std::vector<RationalMatrix>& blocks, int cols) {
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols_ != cols) throw ValidationError("vstack column mismatch");
        rows += b.rows_;
    }
    RationalMatrix r(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < cols; ++j) r(off + i, j) = b(i, j);
        off += b.rows_;
    }
    return r;
}

std::vector<int> bareiss_echelon(std::vector<std::vector<Integer>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

namespace {

std::vector<std::vector<Integer>> cleared(const RationalMatrix& a) {
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(a.rows()),
                                        std::vector<Integer>(static_cast<std::size_t>(a.cols())));
    for (int i = 0; i < a.rows(); ++i) {
        Integer l = 1;
        for (int j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (int j = 0; j < a.cols(); ++j) {
            Rational x = a(i, j) * Rational(l);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x.get_num();
        }
    }
    return m;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<int> rref(RationalMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (int j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int RationalMatrix::rank() const {
    auto m = cleared(*this);
    return static_cast<int>(bareiss_echelon(m).size());
}

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_) throw ValidationError("determinant of a non-square matrix");
    if (rows_ == 0) return 1;
    // Bareiss on the exact matrix: scale rows to integers, undo the scale at the end.
    Rational scale = 1;
    auto m = cleared(*this);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != 0) {
                scale *= Rational(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) / (*this)(i, j);
                break;
            }
        }
    }
    // Track row swaps for the sign.
    const std::size_t n = m.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                m[i][j] = m[c][c] * m[i][j] - m[i][c] * m[c][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return Rational(prev) * sign / scale;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw ValidationError("inverse of a non-square matrix");
    RationalMatrix aug = hstack({*this, identity(rows_)}, rows_);
    const auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < rows_ || (rows_ > 0 && piv.back() >= cols_))
        throw MathError("matrix is not invertible");
    RationalMatrix r(rows_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) r(i, j) = aug(i, cols_ + j);
    return r;
}

RationalMatrix RationalMatrix::kernel() const {
    RationalMatrix m = *this;
    const auto piv = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    RationalMatrix k(cols_, static_cast<int>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f) {
        const int fc = free[f];
        k(fc, static_cast<int>(f)) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], static_cast<int>(f)) = -m(static_cast<int>(r), fc);
    }
    return k;
}

RationalMatrix RationalMatrix::row_basis() const {
    RationalMatrix m = *this;
    const auto piv = rref(m);
    RationalMatrix r(static_cast<int>(piv.size()), cols_);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = m(i, j);
    return r;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    }
    os << "]";
    return os.str();
}

} // namespace qloop
