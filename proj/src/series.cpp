#include "qloop/series.hpp"

#include "qloop/errors.hpp"

#include <algorithm>

namespace qloop {

TruncatedSeries::TruncatedSeries(int nvars, int order)
    : nvars_(nvars), coeffs_(static_cast<std::size_t>(order + 1), MultiLaurent(nvars)) {
    if (order < 0) throw ValidationError("series order must be non-negative");
}

TruncatedSeries TruncatedSeries::constant(int nvars, int order, const MultiLaurent& c) {
    TruncatedSeries s(nvars, order);
    s[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::one_minus(const MultiLaurent& c, int order) {
    TruncatedSeries s(c.nvars(), order);
    s[0] = MultiLaurent::constant(c.nvars(), LaurentQ(1));
    if (order >= 1) s[1] = -c;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(const MultiLaurent& c, int order) {
    TruncatedSeries s(c.nvars(), order);
    MultiLaurent p = MultiLaurent::constant(c.nvars(), LaurentQ(1));
    for (int n = 0; n <= order; ++n) {
        s[n] = p;
        if (n < order) p *= c;
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    const int ord = std::min(order(), o.order());
    TruncatedSeries r(nvars_, ord);
    for (int i = 0; i <= ord; ++i) {
        if ((*this)[i].is_zero()) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (o[j].is_zero()) continue;
            r[i + j] += (*this)[i] * o[j];
        }
    }
    *this = std::move(r);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const MultiLaurent& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const MultiLaurent& c0 = (*this)[0];
    if (c0.size() != 1 || (c0.terms().front().second != 1 && c0.terms().front().second != -1))
        throw MathError("series constant term is not a unit");
    // c0^-1 is the inverse monomial.
    const auto& [mono, coef] = c0.terms().front();
    Monomial inv;
    for (std::size_t i = 0; i < inv.e.size(); ++i) inv.e[i] = static_cast<std::int16_t>(-mono.e[i]);
    const MultiLaurent c0inv = MultiLaurent::from_terms(nvars_, {{inv, coef}});

    TruncatedSeries r(nvars_, order());
    r[0] = c0inv;
    for (int n = 1; n <= order(); ++n) {
        MultiLaurent acc(nvars_);
        for (int k = 1; k <= n; ++k)
            if (!(*this)[k].is_zero() && !r[n - k].is_zero()) acc += (*this)[k] * r[n - k];
        r[n] = -(acc * c0inv);
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    TruncatedSeries base = e < 0 ? inverse() : *this;
    TruncatedSeries r = constant(nvars_, order(), MultiLaurent::constant(nvars_, LaurentQ(1)));
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
    return r;
}

TruncatedSeries TruncatedSeries::rescale_q(int k) const {
    TruncatedSeries r = *this;
    for (int n = 0; n <= order(); ++n) r[n] *= LaurentQ::q_power(k * n);
    return r;
}

} // namespace qloop
