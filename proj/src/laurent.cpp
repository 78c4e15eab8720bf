#include "qloop/laurent.hpp"

#include "qloop/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qloop {

LaurentQ::LaurentQ(long c) {
    if (c != 0) terms_.emplace_back(0, Integer(c));
}

LaurentQ::LaurentQ(const Integer& c) {
    if (c != 0) terms_.emplace_back(0, c);
}

LaurentQ LaurentQ::monomial(const Integer& c, int exponent) {
    LaurentQ r;
    if (c != 0) r.terms_.emplace_back(exponent, c);
    return r;
}

LaurentQ LaurentQ::from_terms(std::vector<Term> terms) {
    LaurentQ r;
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

void LaurentQ::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
        } else {
            if (!out.empty() && out.back().second == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().second == 0) out.pop_back();
    terms_ = std::move(out);
}

Integer LaurentQ::coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
}

int LaurentQ::min_exponent() const { return terms_.front().first; }
int LaurentQ::max_exponent() const { return terms_.back().first; }

LaurentQ LaurentQ::bar() const { return substitute_power(-1); }

LaurentQ LaurentQ::substitute_power(int k) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [e, c] : terms_) t.emplace_back(e * k, c);
    return from_terms(std::move(t));
}

Integer LaurentQ::at_one() const {
    Integer s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
}

bool LaurentQ::has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Integer s = a->second + b->second;
            if (s != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) { return *this += -o; }

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
    *this = *this * o;
    return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<int, Integer> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    std::vector<LaurentQ::Term> t;
    t.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) t.emplace_back(e, std::move(c));
    LaurentQ r;
    r.terms_ = std::move(t);
    return r;
}

bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }

std::string LaurentQ::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = abs(c);
        if (c < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentQ exact_divide(const LaurentQ& a, const LaurentQ& b) {
    if (b.is_zero()) throw DivisionByZero("division of a Laurent polynomial in q by zero");
    if (a.is_zero()) return {};
    // Work with ordinary polynomials a0 = q^-amin a, b0 = q^-bmin b, highest degree first.
    const int amin = a.min_exponent();
    const int bmin = b.min_exponent();
    std::map<int, Integer> rem;
    for (const auto& [e, c] : a.terms()) rem[e - amin] = c;
    std::vector<LaurentQ::Term> bt;
    for (const auto& [e, c] : b.terms()) bt.emplace_back(e - bmin, c);
    const int bdeg = bt.back().first;
    const Integer& blead = bt.back().second;
    std::vector<LaurentQ::Term> quot;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        const int d = top->first - bdeg;
        if (d < 0 || !mpz_divisible_p(top->second.get_mpz_t(), blead.get_mpz_t()))
            throw InexactDivision("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
        Integer c = top->second / blead;
        for (const auto& [e, bc] : bt) {
            Integer& slot = rem[e + d];
            slot -= c * bc;
            if (slot == 0) rem.erase(e + d);
        }
        quot.emplace_back(d + amin - bmin, std::move(c));
    }
    return LaurentQ::from_terms(std::move(quot));
}

LaurentQ pow(const LaurentQ& a, unsigned n) {
    LaurentQ r(1);
    for (unsigned i = 0; i < n; ++i) r *= a;
    return r;
}

} // namespace qloop
