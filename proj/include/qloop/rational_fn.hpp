#pragma once

#include "qloop/multi_laurent.hpp"

#include <span>

namespace qloop {

// Element of the fraction field of Z[q, q^-1][x^{+-1}].  No gcd cancellation
// is attempted; equality is decided by cross-multiplication.
class RationalFn {
public:
    explicit RationalFn(int nvars = 0);
    RationalFn(MultiLaurent num);  // NOLINT(google-explicit-constructor)
    RationalFn(MultiLaurent num, MultiLaurent den);

    const MultiLaurent& num() const { return num_; }
    const MultiLaurent& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator-() const { return {-num_, den_}; }
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend bool operator==(const RationalFn& a, const RationalFn& b);

    RationalFn permuted(std::span<const int> sigma) const;

    // The polynomial num/den; throws InexactDivision if den does not divide num.
    MultiLaurent to_polynomial() const;

private:
    MultiLaurent num_;
    MultiLaurent den_;
};

} // namespace qloop
