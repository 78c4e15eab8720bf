#pragma once

#include "qloop/cartan.hpp"
#include "qloop/series.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qloop {

// Formal spectral parameter base * eps^epow.
struct SpectralParam {
    std::string base;
    int epow = 0;

    SpectralParam shifted(int n) const { return {base, epow + n}; }
    std::string to_string() const;
    // "a", "a*e^2", "a*e^-1"; also accepts "a*e".
    static SpectralParam parse(const std::string& s);
    auto operator<=>(const SpectralParam&) const = default;
};

// Laurent monomial in Y_{k,a}.  Keys are (vertex id, parameter); exponents
// are never zero.
class YMonomial {
public:
    using Key = std::pair<VertexId, SpectralParam>;

    YMonomial() = default;
    static YMonomial Y(const VertexId& k, const SpectralParam& a, int exp = 1);

    const std::map<Key, int>& exps() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    int exponent(const VertexId& k, const SpectralParam& a) const;

    YMonomial& operator*=(const YMonomial& o);
    friend YMonomial operator*(YMonomial a, const YMonomial& b) { return a *= b; }
    YMonomial inverse() const;
    YMonomial pow(int e) const;
    auto operator<=>(const YMonomial&) const = default;

    std::string to_string() const;

private:
    void add(const Key& k, int e);
    std::map<Key, int> exps_;
};

// Z-linear combination of Y-monomials with positive multiplicities.
class QCharacter {
public:
    QCharacter() = default;
    static QCharacter one() { return single(YMonomial()); }
    static QCharacter single(const YMonomial& m, std::int64_t mult = 1);

    const std::map<YMonomial, std::int64_t>& terms() const { return terms_; }
    void add(const YMonomial& m, std::int64_t mult = 1);
    std::int64_t dimension() const;
    friend bool operator==(const QCharacter&, const QCharacter&) = default;

private:
    std::map<YMonomial, std::int64_t> terms_;
};

// P_k(u) = prod (1 - u a) over the roots at vertex k.
struct DrinfeldPoly {
    std::map<VertexId, std::vector<SpectralParam>> roots;

    int degree(const VertexId& k) const;
    std::string to_string(const VertexId& k) const;
    friend bool operator==(const DrinfeldPoly&, const DrinfeldPoly&) = default;
};

// Y_{k,a eps} Y_{k,a eps^-1} prod_{h: in(h)=k} Y_{out(h), a eps^{m(h)}}^-1.
YMonomial a_monomial(const VertexId& k, const SpectralParam& a, const QuiverGraph& graph);

bool is_l_dominant(const YMonomial& m);
DrinfeldPoly drinfeld_of(const YMonomial& m);

// Series in y = 1/z (Plus) or y = z (Minus) with coefficients in
// Z[eps^{+-1}][bases^{+-1}]: each base symbol is a variable and eps sits in
// the q slot.
struct LSeries {
    std::vector<std::string> bases;
    std::map<VertexId, TruncatedSeries> series;
};

// Sorted distinct base symbols, and the monomial base * eps^epow in that ring.
std::vector<std::string> collect_bases(const YMonomial& m);
MultiLaurent param_monomial(const std::vector<std::string>& bases, const SpectralParam& a, int power = 1);

// Psi^+-_k(z) of the l-weight m at every vertex in `vertices` (vertices that
// do not occur get the constant series 1).  `bases` fixes the variable list;
// when empty the bases of m are used.
LSeries psi_eigenvalue(const YMonomial& m, bool plus, int order, const std::vector<VertexId>& vertices = {},
                       std::vector<std::string> bases = {});
// Factor eps (1 - a eps^-1 / z)/(1 - a eps / z) of a single Y_{k,a}, raised to `exp`.
TruncatedSeries y_factor_series(const std::vector<std::string>& bases, const SpectralParam& a, int exp, bool plus,
                                int order);
// psi series built from the Drinfel'd polynomials: eps^{deg P} P(1/eps z)/P(eps/z).
LSeries psi_from_drinfeld(const DrinfeldPoly& p, bool plus, int order, const std::vector<VertexId>& vertices,
                          const std::vector<std::string>& bases);

QCharacter qchar_multiply(const QCharacter& a, const QCharacter& b);

// Weight sum_k exp_k Lambda_k of each monomial, in fundamental-weight
// coordinates over the graph's vertex order.
std::map<IntVector, std::int64_t> restrict_to_character(const QCharacter& c, const QuiverGraph& graph);
IntVector monomial_weight(const YMonomial& m, const QuiverGraph& graph);

// The quotient m / top as a product of A_{k,c}^{-1}: returns the multiset of
// (k, c) or throws MathError when no such factorization exists.  The search
// peels the A with the largest eps-power first.
std::vector<std::pair<VertexId, SpectralParam>> a_inverse_factors(const YMonomial& m, const YMonomial& top,
                                                                   const QuiverGraph& graph);

} // namespace qloop
