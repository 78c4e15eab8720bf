#include "qloop/fixedpoints.hpp"

#include "qloop/errors.hpp"
#include "qloop/qnumbers.hpp"

#include <algorithm>
#include <set>

namespace qloop {

namespace {

int lookup(const std::map<YMonomial::Key, int>& m, const VertexId& k, const SpectralParam& l) {
    auto it = m.find({k, l});
    return it == m.end() ? 0 : it->second;
}

void bump(std::map<YMonomial::Key, int>& m, const VertexId& k, const SpectralParam& l, int d) {
    if (d < 0) throw ValidationError("graded dimensions must be non-negative");
    if (d == 0) return;
    m[{k, l}] += d;
}

IntVector totals(const std::map<YMonomial::Key, int>& m, const QuiverGraph& graph) {
    IntVector v(static_cast<std::size_t>(graph.size()), 0);
    for (const auto& [key, d] : m) v[static_cast<std::size_t>(graph.vertex_index(key.first))] += d;
    return v;
}

const VertexId& vid(const QuiverGraph& graph, int i) { return graph.vertices()[static_cast<std::size_t>(i)]; }

} // namespace

int GradedDims::dimV(const VertexId& k, const SpectralParam& l) const { return lookup(V, k, l); }
int GradedDims::dimW(const VertexId& k, const SpectralParam& l) const { return lookup(W, k, l); }
void GradedDims::addV(const VertexId& k, const SpectralParam& l, int d) { bump(V, k, l, d); }
void GradedDims::addW(const VertexId& k, const SpectralParam& l, int d) { bump(W, k, l, d); }
IntVector GradedDims::v_vector(const QuiverGraph& graph) const { return totals(V, graph); }
IntVector GradedDims::w_vector(const QuiverGraph& graph) const { return totals(W, graph); }

bool GradedDims::v_params_in_w_orbits() const {
    std::set<std::string> wb;
    for (const auto& [key, d] : W) wb.insert(key.second.base);
    return std::all_of(V.begin(), V.end(), [&](const auto& kv) { return wb.count(kv.first.second.base) > 0; });
}

GradedDims operator+(const GradedDims& a, const GradedDims& b) {
    GradedDims r = a;
    for (const auto& [k, d] : b.V) r.addV(k.first, k.second, d);
    for (const auto& [k, d] : b.W) r.addW(k.first, k.second, d);
    return r;
}

int dim_M_rho(const GradedDims& g, const QuiverGraph& graph) {
    for (const auto& [k, d] : g.V) graph.vertex_index(k.first);
    for (const auto& [k, d] : g.W) graph.vertex_index(k.first);
    long total = 0;
    // sum_h dim V_out(lambda) dim V_in(eps^{-m(h)-1} lambda)
    for (const auto& h : graph.oriented_edges())
        for (const auto& [key, d] : g.V)
            if (key.first == vid(graph, h.out))
                total += static_cast<long>(d) * g.dimV(vid(graph, h.in), key.second.shifted(-h.m - 1));
    // dim W_k(lambda)(dim V_k(eps^-1 lambda) + dim V_k(eps lambda))
    for (const auto& [key, d] : g.W)
        total += static_cast<long>(d) * (g.dimV(key.first, key.second.shifted(-1)) + g.dimV(key.first, key.second.shifted(1)));
    // - dim V_k(lambda)^2 - dim V_k(lambda) dim V_k(eps^-2 lambda)
    for (const auto& [key, d] : g.V)
        total -= static_cast<long>(d) * (d + g.dimV(key.first, key.second.shifted(-2)));
    return static_cast<int>(total);
}

int rank_C_k_lambda(const GradedDims& g, const VertexId& k, const SpectralParam& lambda, const QuiverGraph& graph) {
    const int ki = graph.vertex_index(k);
    int r = 0;
    for (const auto& h : graph.oriented_edges())
        if (h.in == ki) r += g.dimV(vid(graph, h.out), lambda.shifted(h.m + 1));
    r += g.dimW(k, lambda.shifted(1));
    r -= g.dimV(k, lambda.shifted(2));
    r -= g.dimV(k, lambda);
    return r;
}

std::vector<SpectralParam> rank_support(const GradedDims& g, const VertexId& k, const QuiverGraph& graph) {
    const int ki = graph.vertex_index(k);
    std::set<SpectralParam> s;
    for (const auto& h : graph.oriented_edges())
        if (h.in == ki)
            for (const auto& [key, d] : g.V)
                if (key.first == vid(graph, h.out)) s.insert(key.second.shifted(-h.m - 1));
    for (const auto& [key, d] : g.W)
        if (key.first == k) s.insert(key.second.shifted(-1));
    for (const auto& [key, d] : g.V)
        if (key.first == k) {
            s.insert(key.second.shifted(-2));
            s.insert(key.second);
        }
    return {s.begin(), s.end()};
}

std::map<SpectralParam, int> ck_character(const GradedDims& g, const VertexId& k, const QuiverGraph& graph) {
    const int ki = graph.vertex_index(k);
    const CartanData cd = cartan_matrix(graph);
    std::map<SpectralParam, int> out;
    auto add = [&](const SpectralParam& p, int n) {
        if (n == 0) return;
        if ((out[p] += n) == 0) out.erase(p);
    };
    for (const auto& [key, d] : g.W)
        if (key.first == k) add(key.second.shifted(-1), d);
    for (const auto& [key, d] : g.V) {
        const int li = graph.vertex_index(key.first);
        const LaurentQ mult = q_int(-cd.C[static_cast<std::size_t>(ki)][static_cast<std::size_t>(li)]) * LaurentQ::q_power(-1);
        for (const auto& [e, c] : mult.terms()) add(key.second.shifted(e), d * static_cast<int>(c.get_si()));
    }
    return out;
}

LSeries genweight_series(const GradedDims& g, const QuiverGraph& graph, bool plus, int order,
                         const std::vector<std::string>& bases) {
    const int n = static_cast<int>(bases.size());
    LSeries out{bases, {}};
    for (const auto& k : graph.vertices()) {
        // Lambda_{-1/qz} C / Lambda_{-q/z} C with Lambda_{-u} [c] = 1 - u c
        TruncatedSeries num = TruncatedSeries::constant(n, order, MultiLaurent::constant(n, LaurentQ(1)));
        TruncatedSeries den = num;
        int rank = 0;
        for (const auto& [c, mult] : ck_character(g, k, graph)) {
            rank += mult;
            TruncatedSeries top(n, order);
            TruncatedSeries bot(n, order);
            if (plus) {
                // (1 - c eps^-1 y) / (1 - c eps y), y = 1/z
                top = TruncatedSeries::one_minus(param_monomial(bases, c.shifted(-1)), order);
                bot = TruncatedSeries::one_minus(param_monomial(bases, c.shifted(1)), order);
            } else {
                // (y - c eps^-1) / (y - c eps), y = z
                top[0] = -param_monomial(bases, c.shifted(-1));
                bot[0] = -param_monomial(bases, c.shifted(1));
                if (order >= 1) {
                    top[1] = MultiLaurent::constant(n, LaurentQ(1));
                    bot[1] = top[1];
                }
            }
            for (int i = 0; i < std::abs(mult); ++i) {
                num *= mult > 0 ? top : bot;
                den *= mult > 0 ? bot : top;
            }
        }
        TruncatedSeries s = num * den.inverse();
        s *= MultiLaurent::constant(n, LaurentQ::q_power(rank));
        out.series.emplace(k, std::move(s));
    }
    return out;
}

YMonomial l_weight_of_rho(const GradedDims& g, const QuiverGraph& graph, int check_order) {
    YMonomial m;
    for (const auto& [key, d] : g.W) m *= YMonomial::Y(key.first, key.second.shifted(-1), d);
    for (const auto& [key, d] : g.V) m *= a_monomial(key.first, key.second.shifted(-1), graph).pow(-d);
    if (check_order >= 0) {
        std::set<std::string> bs;
        for (const auto& [key, d] : g.V) bs.insert(key.second.base);
        for (const auto& [key, d] : g.W) bs.insert(key.second.base);
        const std::vector<std::string> bases(bs.begin(), bs.end());
        for (bool plus : {true, false}) {
            const LSeries a = psi_eigenvalue(m, plus, check_order, graph.vertices(), bases);
            const LSeries b = genweight_series(g, graph, plus, check_order, bases);
            for (const auto& k : graph.vertices())
                if (!(a.series.at(k) == b.series.at(k)))
                    throw MathError("l-weight monomial disagrees with the direct series at vertex " + k);
        }
    }
    return m;
}

bool is_generic(const std::vector<SpectralParam>& params) {
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params[i].base == params[j].base && params[i].epow != params[j].epow) return false;
    return true;
}

bool is_generic(const GradedDims& g, const QuiverGraph& graph) {
    if (!graph.is_simply_laced_single_edge())
        throw ValidationError("genericity criterion needs at most one edge between two vertices");
    std::vector<SpectralParam> ps;
    for (const auto& [key, d] : g.W) {
        graph.vertex_index(key.first);
        for (int i = 0; i < d; ++i) ps.push_back(key.second);
    }
    return is_generic(ps);
}

std::vector<FixedPointSl2> enumerate_fixed_points_sl2(const std::vector<SpectralParam>& w_params, int level) {
    if (!is_generic(w_params)) throw ValidationError("parameters are not generic");
    const int N = static_cast<int>(w_params.size());
    if (N > 20) throw ValidationError("too many parameters");
    if (level > N) return {};
    std::vector<FixedPointSl2> out;
    for (int v = 0; v <= N; ++v) {
        if (level >= 0 && v != level) continue;
        std::vector<bool> choose(static_cast<std::size_t>(N), false);
        std::fill(choose.begin(), choose.begin() + v, true);
        do {
            FixedPointSl2 fp;
            fp.N = N;
            fp.w_params = w_params;
            for (int i = 0; i < N; ++i) {
                fp.dims.addW(kSl2Vertex, w_params[static_cast<std::size_t>(i)]);
                if (choose[static_cast<std::size_t>(i)]) {
                    fp.subset.push_back(i);
                    fp.dims.addV(kSl2Vertex, w_params[static_cast<std::size_t>(i)].shifted(1));
                }
            }
            out.push_back(std::move(fp));
        } while (std::prev_permutation(choose.begin(), choose.end()));
    }
    return out;
}

QCharacter qchar_standard_sl2(const std::vector<SpectralParam>& w_params) {
    const QuiverGraph a1({kSl2Vertex}, {});
    QCharacter c;
    for (const auto& fp : enumerate_fixed_points_sl2(w_params)) c.add(l_weight_of_rho(fp.dims, a1));
    return c;
}

bool euler_product_check(const IntVector& w, const std::vector<SpectralParam>& w_params) {
    if (w.size() != 1 || w[0] != static_cast<int>(w_params.size()))
        throw ValidationError("w must be the single entry N = number of parameters");
    const auto total = enumerate_fixed_points_sl2(w_params).size();
    std::size_t product = 1;
    for (const auto& p : w_params) product *= enumerate_fixed_points_sl2({p}).size();
    return total == product && total == (std::size_t{1} << w_params.size());
}

} // namespace qloop
