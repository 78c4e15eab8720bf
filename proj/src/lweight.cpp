#include "qloop/lweight.hpp"

#include "qloop/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qloop {

std::string SpectralParam::to_string() const {
    if (epow == 0) return base;
    return base + "*e^" + std::to_string(epow);
}

SpectralParam SpectralParam::parse(const std::string& s) {
    SpectralParam p;
    const auto star = s.find('*');
    p.base = s.substr(0, star);
    if (p.base.empty()) throw ValidationError("empty spectral parameter");
    for (char c : p.base)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw ValidationError("bad spectral parameter '" + s + "'");
    if (star == std::string::npos) return p;
    const std::string rest = s.substr(star + 1);
    if (rest == "e") {
        p.epow = 1;
        return p;
    }
    if (rest.rfind("e^", 0) != 0) throw ValidationError("bad spectral parameter '" + s + "'");
    try {
        std::size_t used = 0;
        p.epow = std::stoi(rest.substr(2), &used);
        if (used != rest.size() - 2) throw ValidationError("bad spectral parameter '" + s + "'");
    } catch (const std::logic_error&) {
        throw ValidationError("bad spectral parameter '" + s + "'");
    }
    return p;
}

YMonomial YMonomial::Y(const VertexId& k, const SpectralParam& a, int exp) {
    YMonomial m;
    m.add({k, a}, exp);
    return m;
}

void YMonomial::add(const Key& k, int e) {
    if (e == 0) return;
    auto [it, inserted] = exps_.try_emplace(k, 0);
    it->second += e;
    if (it->second == 0) exps_.erase(it);
}

int YMonomial::exponent(const VertexId& k, const SpectralParam& a) const {
    auto it = exps_.find({k, a});
    return it == exps_.end() ? 0 : it->second;
}

YMonomial& YMonomial::operator*=(const YMonomial& o) {
    for (const auto& [k, e] : o.exps_) add(k, e);
    return *this;
}

YMonomial YMonomial::inverse() const { return pow(-1); }

YMonomial YMonomial::pow(int e) const {
    YMonomial r;
    if (e == 0) return r;
    for (const auto& [k, x] : exps_) r.exps_.emplace(k, x * e);
    return r;
}

std::string YMonomial::to_string() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : exps_) {
        if (!first) os << " ";
        first = false;
        os << "Y_{" << k.first << "," << k.second.to_string() << "}";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

QCharacter QCharacter::single(const YMonomial& m, std::int64_t mult) {
    QCharacter c;
    c.add(m, mult);
    return c;
}

void QCharacter::add(const YMonomial& m, std::int64_t mult) {
    if (mult < 0) throw ValidationError("q-character multiplicities must be positive");
    if (mult == 0) return;
    terms_[m] += mult;
}

std::int64_t QCharacter::dimension() const {
    std::int64_t d = 0;
    for (const auto& [m, c] : terms_) d += c;
    return d;
}

int DrinfeldPoly::degree(const VertexId& k) const {
    auto it = roots.find(k);
    return it == roots.end() ? 0 : static_cast<int>(it->second.size());
}

std::string DrinfeldPoly::to_string(const VertexId& k) const {
    auto it = roots.find(k);
    if (it == roots.end() || it->second.empty()) return "1";
    std::string s;
    for (const auto& a : it->second) s += "(1 - u*" + a.to_string() + ")";
    return s;
}

YMonomial a_monomial(const VertexId& k, const SpectralParam& a, const QuiverGraph& graph) {
    const int ki = graph.vertex_index(k);
    YMonomial m = YMonomial::Y(k, a.shifted(1)) * YMonomial::Y(k, a.shifted(-1));
    for (const auto& h : graph.oriented_edges())
        if (h.in == ki) m *= YMonomial::Y(graph.vertices()[static_cast<std::size_t>(h.out)], a.shifted(h.m), -1);
    return m;
}

bool is_l_dominant(const YMonomial& m) {
    return std::all_of(m.exps().begin(), m.exps().end(), [](const auto& kv) { return kv.second > 0; });
}

DrinfeldPoly drinfeld_of(const YMonomial& m) {
    if (!is_l_dominant(m)) throw ValidationError("monomial is not l-dominant");
    DrinfeldPoly p;
    for (const auto& [k, e] : m.exps())
        for (int i = 0; i < e; ++i) p.roots[k.first].push_back(k.second);
    return p;
}

std::vector<std::string> collect_bases(const YMonomial& m) {
    std::set<std::string> s;
    for (const auto& [k, e] : m.exps()) s.insert(k.second.base);
    return {s.begin(), s.end()};
}

MultiLaurent param_monomial(const std::vector<std::string>& bases, const SpectralParam& a, int power) {
    const int n = static_cast<int>(bases.size());
    auto it = std::find(bases.begin(), bases.end(), a.base);
    if (it == bases.end()) throw ValidationError("unknown base symbol '" + a.base + "'");
    return MultiLaurent::variable(n, static_cast<int>(it - bases.begin()), power) *
           LaurentQ::q_power(a.epow * power);
}

namespace {

// c0 (1 - u y)/(1 - d y)
TruncatedSeries ratio(int n, int order, int c0_epow, const MultiLaurent& u, const MultiLaurent& d) {
    TruncatedSeries s = TruncatedSeries::one_minus(u, order) * TruncatedSeries::geometric(d, order);
    s *= MultiLaurent::constant(n, LaurentQ::q_power(c0_epow));
    return s;
}

} // namespace

TruncatedSeries y_factor_series(const std::vector<std::string>& bases, const SpectralParam& a, int exp, bool plus,
                                int order) {
    const int n = static_cast<int>(bases.size());
    TruncatedSeries r = TruncatedSeries::constant(n, order, MultiLaurent::constant(n, LaurentQ(1)));
    if (exp == 0) return r;
    // at infinity: eps (1 - a eps^-1 y)/(1 - a eps y)
    // at zero:     eps^-1 (1 - eps a^-1 y)/(1 - eps^-1 a^-1 y)
    const int p = plus ? 1 : -1;
    const MultiLaurent lo = param_monomial(bases, a.shifted(-1), p);
    const MultiLaurent hi = param_monomial(bases, a.shifted(1), p);
    const TruncatedSeries f = exp > 0 ? ratio(n, order, p, lo, hi) : ratio(n, order, -p, hi, lo);
    for (int i = 0; i < std::abs(exp); ++i) r *= f;
    return r;
}

LSeries psi_eigenvalue(const YMonomial& m, bool plus, int order, const std::vector<VertexId>& vertices,
                       std::vector<std::string> bases) {
    if (order < 0) throw ValidationError("series order must be non-negative");
    if (bases.empty()) bases = collect_bases(m);
    const int n = static_cast<int>(bases.size());
    LSeries out{bases, {}};
    auto unit = [&] { return TruncatedSeries::constant(n, order, MultiLaurent::constant(n, LaurentQ(1))); };
    for (const auto& k : vertices) out.series.emplace(k, unit());
    for (const auto& [key, e] : m.exps()) {
        auto it = out.series.try_emplace(key.first, unit()).first;
        it->second *= y_factor_series(bases, key.second, e, plus, order);
    }
    return out;
}

LSeries psi_from_drinfeld(const DrinfeldPoly& p, bool plus, int order, const std::vector<VertexId>& vertices,
                          const std::vector<std::string>& bases) {
    const int n = static_cast<int>(bases.size());
    LSeries out{bases, {}};
    std::set<VertexId> all(vertices.begin(), vertices.end());
    for (const auto& [k, r] : p.roots) all.insert(k);
    for (const auto& k : all) {
        // coefficients of P(u) = sum c_j u^j
        std::vector<MultiLaurent> c{MultiLaurent::constant(n, LaurentQ(1))};
        auto it = p.roots.find(k);
        const int d = it == p.roots.end() ? 0 : static_cast<int>(it->second.size());
        if (d > 0) {
            for (const auto& a : it->second) {
                const MultiLaurent am = param_monomial(bases, a);
                std::vector<MultiLaurent> nc(c.size() + 1, MultiLaurent(n));
                for (std::size_t j = 0; j < c.size(); ++j) {
                    nc[j] += c[j];
                    nc[j + 1] -= c[j] * am;
                }
                c = std::move(nc);
            }
        }
        TruncatedSeries num(n, order);
        TruncatedSeries den(n, order);
        for (int j = 0; j <= d; ++j) {
            // plus: P(eps^-1 y)/P(eps y); minus: reversed polynomials in y = z
            const int deg = plus ? j : d - j;
            if (j > order) continue;
            num[j] = c[static_cast<std::size_t>(deg)] * LaurentQ::q_power(-deg);
            den[j] = c[static_cast<std::size_t>(deg)] * LaurentQ::q_power(deg);
        }
        TruncatedSeries s = num * den.inverse();
        s *= MultiLaurent::constant(n, LaurentQ::q_power(d));
        out.series.emplace(k, std::move(s));
    }
    return out;
}

QCharacter qchar_multiply(const QCharacter& a, const QCharacter& b) {
    QCharacter r;
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms()) r.add(m1 * m2, c1 * c2);
    return r;
}

IntVector monomial_weight(const YMonomial& m, const QuiverGraph& graph) {
    IntVector w(static_cast<std::size_t>(graph.size()), 0);
    for (const auto& [k, e] : m.exps()) w[static_cast<std::size_t>(graph.vertex_index(k.first))] += e;
    return w;
}

std::map<IntVector, std::int64_t> restrict_to_character(const QCharacter& c, const QuiverGraph& graph) {
    std::map<IntVector, std::int64_t> out;
    for (const auto& [m, mult] : c.terms()) out[monomial_weight(m, graph)] += mult;
    return out;
}

std::vector<std::pair<VertexId, SpectralParam>> a_inverse_factors(const YMonomial& m, const YMonomial& top,
                                                                   const QuiverGraph& graph) {
    YMonomial rest = top * m.inverse();
    std::vector<std::pair<VertexId, SpectralParam>> out;
    for (int guard = 0; !rest.is_one(); ++guard) {
        if (guard > 10000) throw MathError("A-factorization did not terminate");
        const YMonomial::Key* best = nullptr;
        for (const auto& [k, e] : rest.exps())
            if (e > 0 && (!best || k.second.epow > best->second.epow)) best = &k;
        if (!best) throw MathError("monomial is not the top monomial times a product of A^-1");
        const VertexId k = best->first;
        const SpectralParam c = best->second.shifted(-1);
        rest *= a_monomial(k, c, graph).inverse();
        out.emplace_back(k, c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qloop
