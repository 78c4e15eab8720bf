#include "qloop/multi_laurent.hpp"

#include "qloop/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace qloop {

namespace {

std::int16_t checked(int v) {
    if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
        throw MathError("exponent overflow in MultiLaurent");
    return static_cast<std::int16_t>(v);
}

void check_nvars(int n) {
    if (n < 0 || n > Monomial::kMaxVars)
        throw ValidationError("MultiLaurent supports at most " + std::to_string(Monomial::kMaxVars) +
                              " variables, got " + std::to_string(n));
}

} // namespace

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = checked(a.e[i] + b.e[i]);
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = checked(a.e[i] - b.e[i]);
    return r;
}

MultiLaurent::MultiLaurent(int nvars) : nvars_(nvars) { check_nvars(nvars); }

MultiLaurent MultiLaurent::constant(int nvars, const LaurentQ& c) {
    MultiLaurent r(nvars);
    for (const auto& [e, coeff] : c.terms()) {
        Monomial m;
        m.e[Monomial::kQSlot] = checked(e);
        r.terms_.emplace_back(m, coeff);
    }
    return r;
}

MultiLaurent MultiLaurent::variable(int nvars, int i, int power) {
    if (i < 0 || i >= nvars) throw ValidationError("variable index out of range");
    MultiLaurent r(nvars);
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = checked(power);
    r.terms_.emplace_back(m, Integer(1));
    return r;
}

MultiLaurent MultiLaurent::monomial(int nvars, std::span<const int> xexps, const LaurentQ& c) {
    if (static_cast<int>(xexps.size()) != nvars) throw ValidationError("exponent vector length mismatch");
    MultiLaurent r(nvars);
    for (const auto& [e, coeff] : c.terms()) {
        Monomial m;
        for (int i = 0; i < nvars; ++i) m.e[static_cast<std::size_t>(i)] = checked(xexps[static_cast<std::size_t>(i)]);
        m.e[Monomial::kQSlot] = checked(e);
        r.terms_.emplace_back(m, coeff);
    }
    return r;
}

MultiLaurent MultiLaurent::from_terms(int nvars, std::vector<Term> terms) {
    MultiLaurent r(nvars);
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

void MultiLaurent::normalize() {
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

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
    if (o.nvars_ != nvars_) throw ValidationError("MultiLaurent variable count mismatch");
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

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) { return *this += -o; }

MultiLaurent& MultiLaurent::operator*=(const MultiLaurent& o) {
    *this = *this * o;
    return *this;
}

MultiLaurent& MultiLaurent::operator*=(const LaurentQ& c) {
    *this = *this * MultiLaurent::constant(nvars_, c);
    return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    if (a.nvars_ != b.nvars_) throw ValidationError("MultiLaurent variable count mismatch");
    MultiLaurent r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.terms_.emplace_back(ma * mb, ca * cb);
    r.normalize();
    return r;
}

bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MultiLaurent MultiLaurent::remap(int new_nvars, std::span<const int> target) const {
    if (static_cast<int>(target.size()) != nvars_) throw ValidationError("remap target has wrong length");
    for (int t : target)
        if (t < 0 || t >= new_nvars) throw ValidationError("remap target out of range");
    MultiLaurent r(new_nvars);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial n;
        n.e[Monomial::kQSlot] = m.e[Monomial::kQSlot];
        for (int i = 0; i < nvars_; ++i) {
            auto& slot = n.e[static_cast<std::size_t>(target[static_cast<std::size_t>(i)])];
            slot = checked(slot + m.e[static_cast<std::size_t>(i)]);
        }
        r.terms_.emplace_back(n, c);
    }
    r.normalize();
    return r;
}

MultiLaurent MultiLaurent::times_x(int i, int d) const {
    if (i < 0 || i >= nvars_) throw ValidationError("variable index out of range");
    MultiLaurent r = *this;
    for (auto& t : r.terms_) t.first.e[static_cast<std::size_t>(i)] = checked(t.first.e[static_cast<std::size_t>(i)] + d);
    // Shifting one coordinate preserves the lexicographic order.
    return r;
}

LaurentQ MultiLaurent::coefficient(std::span<const int> xexps) const {
    if (static_cast<int>(xexps.size()) != nvars_) throw ValidationError("exponent vector length mismatch");
    std::vector<LaurentQ::Term> out;
    for (const auto& [m, c] : terms_) {
        bool match = true;
        for (int i = 0; i < nvars_ && match; ++i) match = m.x(i) == xexps[static_cast<std::size_t>(i)];
        if (match) out.emplace_back(m.q(), c);
    }
    return LaurentQ::from_terms(std::move(out));
}

std::vector<std::pair<std::vector<int>, LaurentQ>> MultiLaurent::grouped() const {
    std::vector<std::pair<std::vector<int>, LaurentQ>> out;
    std::vector<LaurentQ::Term> current;
    std::vector<int> key;
    auto flush = [&] {
        if (!current.empty()) out.emplace_back(key, LaurentQ::from_terms(std::move(current)));
        current.clear();
    };
    for (const auto& [m, c] : terms_) {
        std::vector<int> k(static_cast<std::size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i) k[static_cast<std::size_t>(i)] = m.x(i);
        if (k != key) {
            flush();
            key = std::move(k);
        }
        current.emplace_back(m.q(), c);
    }
    flush();
    return out;
}

MultiLaurent MultiLaurent::specialize_q(int value) const {
    if (value != 1 && value != -1) throw ValidationError("q can only be specialized to +1 or -1");
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial n = m;
        n.e[Monomial::kQSlot] = 0;
        t.emplace_back(n, (value == -1 && (m.q() % 2 != 0)) ? Integer(-c) : c);
    }
    return from_terms(nvars_, std::move(t));
}

MultiLaurent MultiLaurent::substitute_q_power(int k) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial n = m;
        n.e[Monomial::kQSlot] = checked(m.q() * k);
        t.emplace_back(n, c);
    }
    return from_terms(nvars_, std::move(t));
}

bool MultiLaurent::is_constant() const {
    return std::all_of(terms_.begin(), terms_.end(), [this](const Term& t) {
        for (int i = 0; i < nvars_; ++i)
            if (t.first.x(i) != 0) return false;
        return true;
    });
}

LaurentQ MultiLaurent::constant_value() const {
    if (!is_constant()) throw ValidationError("MultiLaurent is not a constant");
    std::vector<LaurentQ::Term> t;
    for (const auto& [m, c] : terms_) t.emplace_back(m.q(), c);
    return LaurentQ::from_terms(std::move(t));
}

std::string MultiLaurent::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [xs, coeff] : grouped()) {
        if (!first) os << " + ";
        first = false;
        bool unit = coeff == LaurentQ(1);
        if (!unit) os << "(" << coeff.to_string() << ")";
        bool any = false;
        for (int i = 0; i < nvars_; ++i) {
            int e = xs[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!unit || any) os << "*";
            any = true;
            if (static_cast<std::size_t>(i) < names.size()) os << names[static_cast<std::size_t>(i)];
            else os << "x" << (i + 1);
            if (e != 1) os << "^" << e;
        }
        if (unit && !any) os << "1";
    }
    return os.str();
}

MultiLaurent exact_divide(const MultiLaurent& a, const MultiLaurent& b) {
    if (a.nvars() != b.nvars()) throw ValidationError("MultiLaurent variable count mismatch");
    if (b.is_zero()) throw DivisionByZero("division of a MultiLaurent by zero");
    const int n = a.nvars();
    if (a.is_zero()) return MultiLaurent(n);

    // Pull out the monomial content so both operands are genuine polynomials.
    auto lowest = [](const MultiLaurent& p) {
        Monomial lo = p.terms().front().first;
        for (const auto& [m, c] : p.terms())
            for (std::size_t i = 0; i < lo.e.size(); ++i) lo.e[i] = std::min(lo.e[i], m.e[i]);
        return lo;
    };
    const Monomial alo = lowest(a);
    const Monomial blo = lowest(b);

    std::vector<MultiLaurent::Term> divisor;
    divisor.reserve(b.size());
    for (const auto& [m, c] : b.terms()) divisor.emplace_back(m / blo, c);
    const auto& lead = divisor.back();

    std::map<Monomial, Integer> rem;
    for (const auto& [m, c] : a.terms()) rem.emplace_hint(rem.end(), m / alo, c);

    std::vector<MultiLaurent::Term> quot;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        if (!lead.first.divides(top->first) ||
            !mpz_divisible_p(top->second.get_mpz_t(), lead.second.get_mpz_t()))
            throw InexactDivision("polynomial division is not exact");
        const Monomial shift = top->first / lead.first;
        Integer c = top->second / lead.second;
        for (const auto& [m, bc] : divisor) {
            const Monomial key = m * shift;
            auto [it, inserted] = rem.try_emplace(key, 0);
            it->second -= c * bc;
            if (it->second == 0) rem.erase(it);
        }
        quot.emplace_back(shift, std::move(c));
    }
    const Monomial offset = alo / blo;
    for (auto& t : quot) t.first = t.first * offset;
    return MultiLaurent::from_terms(n, std::move(quot));
}

MultiLaurent vandermonde(int nvars, std::span<const int> idx) {
    MultiLaurent r = MultiLaurent::constant(nvars, LaurentQ(1));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            r *= MultiLaurent::variable(nvars, idx[i]) - MultiLaurent::variable(nvars, idx[j]);
    return r;
}

MultiLaurent divide_by_vandermonde(const MultiLaurent& a, std::span<const int> idx) {
    MultiLaurent r = a;
    const int n = a.nvars();
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            r = exact_divide(r, MultiLaurent::variable(n, idx[i]) - MultiLaurent::variable(n, idx[j]));
    return r;
}

} // namespace qloop
