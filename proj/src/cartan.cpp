#include "qloop/cartan.hpp"

#include "qloop/errors.hpp"

#include <algorithm>
#include <map>

namespace qloop {

QuiverGraph::QuiverGraph(std::vector<VertexId> vertices, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j)
            if (vertices_[i] == vertices_[j]) throw ValidationError("duplicate vertex id '" + vertices_[i] + "'");
    for (const auto& [o, i] : edges) {
        const int a = vertex_index(o);
        const int b = vertex_index(i);
        if (a == b) throw ValidationError("edge loop at vertex '" + o + "'");
        edges_.push_back({a, b});
    }

    // Number parallel edges per unordered pair in input order; h_p points from
    // the earlier vertex to the later one in the vertex list.
    std::map<std::pair<int, int>, int> count;
    std::map<std::pair<int, int>, int> seen;
    for (const auto& e : edges_) ++count[{std::min(e.out, e.in), std::max(e.out, e.in)}];
    for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
        const auto& e = edges_[idx];
        const std::pair<int, int> key{std::min(e.out, e.in), std::max(e.out, e.in)};
        const int bprime = count[key];
        const int p = ++seen[key];
        const int m_low_to_high = bprime + 1 - 2 * p;
        const int m_fwd = e.out < e.in ? m_low_to_high : -m_low_to_high;
        oriented_.push_back({static_cast<int>(idx), false, e.out, e.in, m_fwd, 1});
        oriented_.push_back({static_cast<int>(idx), true, e.in, e.out, -m_fwd, -1});
    }
}

QuiverGraph QuiverGraph::type_a(int n) {
    std::vector<VertexId> vs;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i) es.emplace_back(std::to_string(i), std::to_string(i + 1));
    return {vs, es};
}

int QuiverGraph::vertex_index(const VertexId& id) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end()) throw ValidationError("unknown vertex '" + id + "'");
    return static_cast<int>(it - vertices_.begin());
}

bool QuiverGraph::has_vertex(const VertexId& id) const {
    return std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end();
}

int QuiverGraph::multiplicity(int k, int l) const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
        return (e.out == k && e.in == l) || (e.out == l && e.in == k);
    }));
}

bool QuiverGraph::is_simply_laced_single_edge() const {
    for (int k = 0; k < size(); ++k)
        for (int l = k + 1; l < size(); ++l)
            if (multiplicity(k, l) > 1) return false;
    return true;
}

int edge_weight_m(const QuiverGraph& graph, int edge, bool reversed) {
    for (const auto& h : graph.oriented_edges())
        if (h.edge == edge && h.reversed == reversed) return h.m;
    throw ValidationError("unknown edge " + std::to_string(edge));
}

CartanData cartan_matrix(const QuiverGraph& graph) {
    const auto n = static_cast<std::size_t>(graph.size());
    const IntMatrix zero(n, IntVector(n, 0));
    CartanData cd{zero, zero, zero, zero, zero, zero, zero, zero};
    for (const auto& e : graph.edges()) {
        if (e.out == e.in) throw ValidationError("edge loop");
        cd.A_omega[static_cast<std::size_t>(e.in)][static_cast<std::size_t>(e.out)] += 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            cd.A_omega_bar[k][l] = cd.A_omega[l][k];
            cd.A[k][l] = cd.A_omega[k][l] + cd.A_omega_bar[k][l];
            const int id = k == l ? 1 : 0;
            cd.C[k][l] = 2 * id - cd.A[k][l];
            cd.C_prime[k][l] = cd.C[k][l] - id;
            cd.C_doubleprime[k][l] = id;
            cd.C_omega[k][l] = id - cd.A_omega[k][l];
            cd.C_omega_bar[k][l] = id - cd.A_omega_bar[k][l];
        }
    return cd;
}

Weight Weight::fundamental(int n, int k) {
    Weight w = zero(n);
    w.fund.at(static_cast<std::size_t>(k)) = 1;
    return w;
}

Weight Weight::simple_root(int n, int k) {
    Weight w = zero(n);
    w.root.at(static_cast<std::size_t>(k)) = -1;
    return w;
}

Weight Weight::operator+(const Weight& o) const {
    if (fund.size() != o.fund.size()) throw ValidationError("weights over different index sets");
    Weight r = *this;
    for (std::size_t i = 0; i < fund.size(); ++i) {
        r.fund[i] += o.fund[i];
        r.root[i] += o.root[i];
    }
    return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + o * -1; }

Weight Weight::operator*(int s) const {
    Weight r = *this;
    for (auto& x : r.fund) x *= s;
    for (auto& x : r.root) x *= s;
    return r;
}

namespace {

void check_dims(const CartanData& cd, const Weight& x) {
    if (x.fund.size() != cd.C.size() || x.root.size() != cd.C.size())
        throw ValidationError("weight index set does not match the graph");
}

bool in_root_lattice(const Weight& x) {
    return std::all_of(x.fund.begin(), x.fund.end(), [](int c) { return c == 0; });
}

} // namespace

int coroot_pairing(const CartanData& cd, int k, const Weight& x) {
    check_dims(cd, x);
    const auto kk = static_cast<std::size_t>(k);
    int r = x.fund.at(kk);
    for (std::size_t l = 0; l < cd.C.size(); ++l) r -= cd.C[kk][l] * x.root[l];
    return r;
}

int pairing(const CartanData& cd, const Weight& x, const Weight& y) {
    check_dims(cd, x);
    check_dims(cd, y);
    if (!in_root_lattice(x) && !in_root_lattice(y))
        throw ValidationError("pairing needs one argument in the root lattice");
    const Weight& r = in_root_lattice(x) ? x : y;
    const Weight& o = in_root_lattice(x) ? y : x;
    // (-sum r_k alpha_k, o) = -sum_k r_k <h_k, o> in the simply-laced case.
    int s = 0;
    for (std::size_t k = 0; k < cd.C.size(); ++k) s -= r.root[k] * coroot_pairing(cd, static_cast<int>(k), o);
    return s;
}

int rank_Ck(const CartanData& cd, const IntVector& v, const IntVector& w, int k) {
    return coroot_pairing(cd, k, Weight{w, v});
}

int dim_quiver_variety(const CartanData& cd, const IntVector& v, const IntVector& w) {
    const Weight vv{IntVector(v.size(), 0), v};
    IntVector w2 = w;
    for (auto& x : w2) x *= 2;
    // vv is -sum v_k alpha_k, so negate to get (v, 2w - v).
    return -pairing(cd, vv, Weight{w2, v});
}

bool is_dominant(const CartanData& cd, const Weight& x) {
    for (std::size_t k = 0; k < cd.C.size(); ++k)
        if (coroot_pairing(cd, static_cast<int>(k), x) < 0) return false;
    return true;
}

} // namespace qloop
