#pragma once

#include "qloop/laurent.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qloop {

// Exponent vector of x_1..x_n together with the exponent of q.  The q slot is
// last so that the default lexicographic order compares x-exponents first.
struct Monomial {
    static constexpr int kMaxVars = 15;
    static constexpr int kQSlot = 15;

    std::array<std::int16_t, 16> e{};

    int x(int i) const { return e[static_cast<std::size_t>(i)]; }
    int q() const { return e[kQSlot]; }

    bool divides(const Monomial& o) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    auto operator<=>(const Monomial&) const = default;
};

// Element of Z[q, q^-1][x_1^{+-1}, ..., x_n^{+-1}].
//
// Terms are kept sorted by monomial (x-exponents lexicographically, then the
// q-exponent) with no zero coefficients, so equality is structural.
class MultiLaurent {
public:
    using Term = std::pair<Monomial, Integer>;

    explicit MultiLaurent(int nvars = 0);

    static MultiLaurent constant(int nvars, const LaurentQ& c);
    static MultiLaurent variable(int nvars, int i, int power = 1);
    static MultiLaurent monomial(int nvars, std::span<const int> xexps, const LaurentQ& c = LaurentQ(1));
    static MultiLaurent from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    MultiLaurent operator-() const;
    MultiLaurent& operator+=(const MultiLaurent& o);
    MultiLaurent& operator-=(const MultiLaurent& o);
    MultiLaurent& operator*=(const MultiLaurent& o);
    MultiLaurent& operator*=(const LaurentQ& c);

    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
    friend MultiLaurent operator*(MultiLaurent a, const LaurentQ& c) { return a *= c; }
    friend MultiLaurent operator*(const LaurentQ& c, MultiLaurent a) { return a *= c; }
    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b);

    // Variable substitution x_i -> x_{target[i]} into a ring with `new_nvars`
    // variables.  With new_nvars == nvars and target a permutation this is the
    // action sigma(f) of the symmetric group.
    MultiLaurent remap(int new_nvars, std::span<const int> target) const;
    MultiLaurent permuted(std::span<const int> sigma) const { return remap(nvars_, sigma); }

    // Multiply by x_i^d.
    MultiLaurent times_x(int i, int d) const;

    // Coefficient (in Z[q, q^-1]) of the x-monomial with the given exponents.
    LaurentQ coefficient(std::span<const int> xexps) const;
    // Distinct x-monomials with their Z[q, q^-1] coefficients, in canonical order.
    std::vector<std::pair<std::vector<int>, LaurentQ>> grouped() const;

    // Substitute q = value (value must be +1 or -1).
    MultiLaurent specialize_q(int value) const;
    // q -> q^k in every coefficient.
    MultiLaurent substitute_q_power(int k) const;

    bool is_constant() const;
    // Requires is_constant().
    LaurentQ constant_value() const;

    std::string to_string(std::span<const std::string> names = {}) const;

private:
    void normalize();
    int nvars_;
    std::vector<Term> terms_;
};

// Exact quotient a / b; throws InexactDivision when b does not divide a and
// DivisionByZero when b is zero.
MultiLaurent exact_divide(const MultiLaurent& a, const MultiLaurent& b);

// Product of (x_a - x_b) over a < b taken from `idx` in the given order.
MultiLaurent vandermonde(int nvars, std::span<const int> idx);

// Divide exactly by vandermonde(nvars, idx), one linear factor at a time.
MultiLaurent divide_by_vandermonde(const MultiLaurent& a, std::span<const int> idx);

} // namespace qloop
