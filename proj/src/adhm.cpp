#include "qloop/adhm.hpp"

#include "qloop/errors.hpp"

namespace qloop {

namespace {

std::size_t at(int k) { return static_cast<std::size_t>(k); }

void expect_shape(const RationalMatrix& m, int r, int c, const std::string& what) {
    if (m.rows() != r || m.cols() != c)
        throw ValidationError(what + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected " + std::to_string(r) + "x" + std::to_string(c));
}

} // namespace

ADHMData ADHMData::zero(QuiverGraph graph, IntVector v, IntVector w) {
    ADHMData d;
    d.graph = std::move(graph);
    d.v = std::move(v);
    d.w = std::move(w);
    if (static_cast<int>(d.v.size()) != d.graph.size() || static_cast<int>(d.w.size()) != d.graph.size())
        throw ValidationError("dimension vectors do not match the graph");
    for (const auto& h : d.graph.oriented_edges()) d.B.emplace_back(d.v[at(h.in)], d.v[at(h.out)]);
    for (int k = 0; k < d.graph.size(); ++k) {
        d.i.emplace_back(d.v[at(k)], d.w[at(k)]);
        d.j.emplace_back(d.w[at(k)], d.v[at(k)]);
    }
    return d;
}

void ADHMData::validate() const {
    const int n = graph.size();
    if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
        throw ValidationError("dimension vectors do not match the graph");
    for (int x : v)
        if (x < 0) throw ValidationError("negative dimension");
    for (int x : w)
        if (x < 0) throw ValidationError("negative dimension");
    const auto& H = graph.oriented_edges();
    if (B.size() != H.size()) throw ValidationError("one B matrix per oriented edge is required");
    if (static_cast<int>(i.size()) != n || static_cast<int>(j.size()) != n)
        throw ValidationError("one i and one j matrix per vertex is required");
    for (std::size_t h = 0; h < H.size(); ++h) expect_shape(B[h], v[at(H[h].in)], v[at(H[h].out)], "B[" + std::to_string(h) + "]");
    for (int k = 0; k < n; ++k) {
        expect_shape(i[at(k)], v[at(k)], w[at(k)], "i[" + graph.vertices()[at(k)] + "]");
        expect_shape(j[at(k)], w[at(k)], v[at(k)], "j[" + graph.vertices()[at(k)] + "]");
    }
}

int ADHMData::reverse_of(int h) const {
    const auto& H = graph.oriented_edges();
    for (std::size_t x = 0; x < H.size(); ++x)
        if (H[x].edge == H[at(h)].edge && H[x].reversed != H[at(h)].reversed) return static_cast<int>(x);
    throw ValidationError("edge without reversal");
}

std::vector<RationalMatrix> moment_map(const ADHMData& d) {
    d.validate();
    std::vector<RationalMatrix> mu;
    const auto& H = d.graph.oriented_edges();
    for (int k = 0; k < d.graph.size(); ++k) {
        RationalMatrix m = d.i[at(k)] * d.j[at(k)];
        for (std::size_t h = 0; h < H.size(); ++h)
            if (H[h].in == k) m = m + d.B[h] * d.B[at(d.reverse_of(static_cast<int>(h)))] * Rational(H[h].eps);
        mu.push_back(std::move(m));
    }
    return mu;
}

bool moment_map_vanishes(const ADHMData& d) {
    for (const auto& m : moment_map(d))
        if (!m.is_zero()) return false;
    return true;
}

StabilityResult stability(const ADHMData& d) {
    d.validate();
    const int n = d.graph.size();
    const auto& H = d.graph.oriented_edges();
    // S_k = Ker E_k; start from E_k = j_k and add E_in(h) B_h for out(h) = k.
    std::vector<RationalMatrix> E;
    for (int k = 0; k < n; ++k) E.push_back(d.j[at(k)].row_basis());
    StabilityResult res;
    for (;;) {
        std::vector<RationalMatrix> next;
        bool changed = false;
        for (int k = 0; k < n; ++k) {
            std::vector<RationalMatrix> blocks{E[at(k)]};
            for (std::size_t h = 0; h < H.size(); ++h)
                if (H[h].out == k) blocks.push_back(E[at(H[h].in)] * d.B[h]);
            RationalMatrix e = RationalMatrix::vstack(blocks, d.v[at(k)]).row_basis();
            if (e.rows() != E[at(k)].rows()) changed = true;
            next.push_back(std::move(e));
        }
        E = std::move(next);
        if (!changed) break;
        ++res.iterations;
    }
    res.stable = true;
    for (int k = 0; k < n; ++k) {
        const int s = d.v[at(k)] - E[at(k)].rows();
        res.destabilizing_dims.push_back(s);
        if (s != 0) res.stable = false;
    }
    return res;
}

bool is_stable(const ADHMData& d) { return stability(d).stable; }

TauSigma tau_sigma_at_point(const ADHMData& d, const VertexId& kid) {
    d.validate();
    const int k = d.graph.vertex_index(kid);
    const auto& H = d.graph.oriented_edges();
    std::vector<RationalMatrix> sig;
    std::vector<RationalMatrix> tau;
    for (std::size_t h = 0; h < H.size(); ++h) {
        if (H[h].in != k) continue;
        sig.push_back(d.B[at(d.reverse_of(static_cast<int>(h)))]);
        tau.push_back(d.B[h] * Rational(H[h].eps));
    }
    sig.push_back(d.j[at(k)]);
    tau.push_back(d.i[at(k)]);
    TauSigma r;
    r.sigma = RationalMatrix::vstack(sig, d.v[at(k)]);
    r.tau = RationalMatrix::hstack(tau, d.v[at(k)]);
    if (!(r.tau * r.sigma).is_zero()) throw MathError("tau sigma is not zero: the moment map does not vanish");
    r.rank_sigma = r.sigma.rank();
    r.rank_tau = r.tau.rank();
    r.codim_image_tau = d.v[at(k)] - r.rank_tau;
    r.sigma_injective = r.rank_sigma == d.v[at(k)];
    if (!r.sigma_injective && is_stable(d)) throw MathError("sigma is not injective at a stable point");
    return r;
}

ADHMData base_change(const ADHMData& d, const std::vector<RationalMatrix>& g) {
    d.validate();
    if (static_cast<int>(g.size()) != d.graph.size()) throw ValidationError("one g per vertex is required");
    std::vector<RationalMatrix> ginv;
    for (int k = 0; k < d.graph.size(); ++k) {
        expect_shape(g[at(k)], d.v[at(k)], d.v[at(k)], "g");
        if (!g[at(k)].is_invertible()) throw ValidationError("base change is not invertible");
        ginv.push_back(g[at(k)].inverse());
    }
    ADHMData r = d;
    const auto& H = d.graph.oriented_edges();
    for (std::size_t h = 0; h < H.size(); ++h) r.B[h] = g[at(H[h].in)] * d.B[h] * ginv[at(H[h].out)];
    for (int k = 0; k < d.graph.size(); ++k) {
        r.i[at(k)] = g[at(k)] * d.i[at(k)];
        r.j[at(k)] = d.j[at(k)] * ginv[at(k)];
    }
    return r;
}

namespace {

// Entries of M (in the graded bases) may only be non-zero where
// row label == column label shifted by `shift`.
bool graded(const RationalMatrix& m, const std::vector<SpectralParam>& row_labels,
            const std::vector<SpectralParam>& col_labels, int shift) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0 && !(row_labels[at(r)] == col_labels[at(c)].shifted(shift))) return false;
    return true;
}

void check_basis(const GradedBasis& b, int dim, const std::string& what) {
    expect_shape(b.basis, dim, dim, what);
    if (static_cast<int>(b.labels.size()) != dim) throw ValidationError(what + ": one label per basis vector");
    if (!b.basis.is_invertible()) throw ValidationError(what + ": basis is not invertible");
}

} // namespace

bool check_fixed(const ADHMData& d, const std::vector<GradedBasis>& vg, const std::vector<GradedBasis>& wg) {
    d.validate();
    const int n = d.graph.size();
    if (static_cast<int>(vg.size()) != n || static_cast<int>(wg.size()) != n)
        throw ValidationError("one V- and one W-grading per vertex is required");
    std::vector<RationalMatrix> pinv;
    std::vector<RationalMatrix> qinv;
    for (int k = 0; k < n; ++k) {
        check_basis(vg[at(k)], d.v[at(k)], "V grading at " + d.graph.vertices()[at(k)]);
        check_basis(wg[at(k)], d.w[at(k)], "W grading at " + d.graph.vertices()[at(k)]);
        pinv.push_back(vg[at(k)].basis.inverse());
        qinv.push_back(wg[at(k)].basis.inverse());
    }
    const auto& H = d.graph.oriented_edges();
    for (std::size_t h = 0; h < H.size(); ++h) {
        const int o = H[h].out;
        const int in = H[h].in;
        const RationalMatrix b = pinv[at(in)] * d.B[h] * vg[at(o)].basis;
        if (!graded(b, vg[at(in)].labels, vg[at(o)].labels, -H[h].m - 1)) return false;
    }
    for (int k = 0; k < n; ++k) {
        const RationalMatrix ii = pinv[at(k)] * d.i[at(k)] * wg[at(k)].basis;
        if (!graded(ii, vg[at(k)].labels, wg[at(k)].labels, -1)) return false;
        const RationalMatrix jj = qinv[at(k)] * d.j[at(k)] * vg[at(k)].basis;
        if (!graded(jj, wg[at(k)].labels, vg[at(k)].labels, -1)) return false;
    }
    return true;
}

} // namespace qloop
