#include "qloop/rational_fn.hpp"

#include "qloop/errors.hpp"

namespace qloop {

RationalFn::RationalFn(int nvars)
    : num_(nvars), den_(MultiLaurent::constant(nvars, LaurentQ(1))) {}

RationalFn::RationalFn(MultiLaurent num)
    : num_(std::move(num)), den_(MultiLaurent::constant(num_.nvars(), LaurentQ(1))) {}

RationalFn::RationalFn(MultiLaurent num, MultiLaurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.nvars() != den_.nvars()) throw ValidationError("numerator/denominator variable count mismatch");
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw DivisionByZero("division of a rational function by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFn RationalFn::permuted(std::span<const int> sigma) const {
    return {num_.permuted(sigma), den_.permuted(sigma)};
}

MultiLaurent RationalFn::to_polynomial() const { return exact_divide(num_, den_); }

} // namespace qloop
