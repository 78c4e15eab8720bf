#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace qloop {

using Integer = mpz_class;
using Rational = mpq_class;

// Element of Z[q, q^-1], stored as a sparse list of (exponent, coefficient)
// sorted by exponent with no zero coefficients.
class LaurentQ {
public:
    using Term = std::pair<int, Integer>;

    LaurentQ() = default;
    LaurentQ(long c);                        // NOLINT(google-explicit-constructor)
    LaurentQ(const Integer& c);              // NOLINT(google-explicit-constructor)

    static LaurentQ monomial(const Integer& c, int exponent);
    static LaurentQ q_power(int exponent) { return monomial(1, exponent); }
    static LaurentQ from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    Integer coeff(int exponent) const;
    int min_exponent() const;  // requires non-zero
    int max_exponent() const;  // requires non-zero

    // q -> q^-1
    LaurentQ bar() const;
    // q -> q^k
    LaurentQ substitute_power(int k) const;
    // value at q = 1
    Integer at_one() const;
    bool has_nonnegative_coefficients() const;

    LaurentQ operator-() const;
    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o);
    LaurentQ& operator*=(const LaurentQ& o);

    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    friend bool operator==(const LaurentQ& a, const LaurentQ& b);

    std::string to_string() const;

private:
    void normalize();
    std::vector<Term> terms_;
};

// Exact quotient a / b in Z[q, q^-1]; throws InexactDivision when b does not divide a.
LaurentQ exact_divide(const LaurentQ& a, const LaurentQ& b);

LaurentQ pow(const LaurentQ& a, unsigned n);

} // namespace qloop
