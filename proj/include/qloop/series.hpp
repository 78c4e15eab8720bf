#pragma once

#include "qloop/multi_laurent.hpp"

#include <vector>

namespace qloop {

// Power series sum_{n=0}^{order} c_n y^n truncated at `order`, coefficients in
// Z[q, q^-1][x^{+-1}].  Used for expansions in y = 1/z (at z = infinity) or
// y = z (at z = 0).
class TruncatedSeries {
public:
    TruncatedSeries(int nvars, int order);

    static TruncatedSeries constant(int nvars, int order, const MultiLaurent& c);
    // 1 - c y
    static TruncatedSeries one_minus(const MultiLaurent& c, int order);
    // (1 - c y)^-1 = sum c^n y^n
    static TruncatedSeries geometric(const MultiLaurent& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int nvars() const { return nvars_; }
    const MultiLaurent& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    MultiLaurent& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<MultiLaurent>& coefficients() const { return coeffs_; }

    TruncatedSeries& operator*=(const TruncatedSeries& o);
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    TruncatedSeries& operator*=(const MultiLaurent& c);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    // Multiplicative inverse; the constant term must be +-q^k times a monomial.
    TruncatedSeries inverse() const;
    TruncatedSeries pow(int e) const;
    // y -> q^k y, i.e. c_n -> q^{kn} c_n.
    TruncatedSeries rescale_q(int k) const;

private:
    int nvars_;
    std::vector<MultiLaurent> coeffs_;
};

} // namespace qloop
