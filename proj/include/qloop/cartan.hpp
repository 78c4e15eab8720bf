#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qloop {

using VertexId = std::string;
using IntMatrix = std::vector<std::vector<int>>;
using IntVector = std::vector<int>;

// An oriented edge h in H.  `reversed` is false for edges of the chosen
// orientation Omega (the input order) and true for their reversals.
struct OrientedEdge {
    int edge = 0;          // index into QuiverGraph::edges()
    bool reversed = false;
    int out = 0;           // vertex index
    int in = 0;            // vertex index
    int m = 0;             // label m(h)
    int eps = 1;           // +1 on Omega, -1 on its reversal
};

// Finite graph without edge loops, with an orientation Omega given by the
// direction each edge was entered in.  Parallel edges are numbered 1..b' in
// input order.
class QuiverGraph {
public:
    struct Edge {
        int out;
        int in;
    };

    QuiverGraph() = default;
    QuiverGraph(std::vector<VertexId> vertices, const std::vector<std::pair<VertexId, VertexId>>& edges);

    // Graph of type A_n on vertices "1".."n" oriented i -> i+1.
    static QuiverGraph type_a(int n);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    int vertex_index(const VertexId& id) const;
    bool has_vertex(const VertexId& id) const;

    // Both orientations of every edge: H = Omega u Omega-bar.
    const std::vector<OrientedEdge>& oriented_edges() const { return oriented_; }
    // Number of edges joining k and l (b' = -(alpha_k, alpha_l) for k != l).
    int multiplicity(int k, int l) const;
    // At most one edge between any two vertices.
    bool is_simply_laced_single_edge() const;

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::vector<OrientedEdge> oriented_;
};

// m(h) for an oriented edge, looked up in graph.oriented_edges().
int edge_weight_m(const QuiverGraph& graph, int edge, bool reversed);

struct CartanData {
    IntMatrix C;               // 2I - A
    IntMatrix A;               // adjacency
    IntMatrix A_omega;         // (A_Omega)_{kl} = #{h in Omega : in(h) = k, out(h) = l}
    IntMatrix A_omega_bar;     // transpose of A_omega
    IntMatrix C_prime;         // C - I
    IntMatrix C_doubleprime;   // I
    IntMatrix C_omega;         // I - A_Omega
    IntMatrix C_omega_bar;     // I - A_Omega-bar
};

CartanData cartan_matrix(const QuiverGraph& graph);

// sum_k fund_k Lambda_k - sum_k root_k alpha_k.
struct Weight {
    IntVector fund;
    IntVector root;

    static Weight zero(int n) { return {IntVector(static_cast<std::size_t>(n), 0), IntVector(static_cast<std::size_t>(n), 0)}; }
    static Weight fundamental(int n, int k);
    static Weight simple_root(int n, int k);  // +alpha_k

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator*(int s) const;
    auto operator<=>(const Weight&) const = default;
};

// <h_k, x>.
int coroot_pairing(const CartanData& cd, int k, const Weight& x);
// (x, y) with (alpha_k, alpha_l) = C_kl and (alpha_k, Lambda_l) = delta_kl.
// At least one argument must lie in the root lattice (zero fundamental part);
// (Lambda_k, Lambda_l) is not integral in general and is rejected.
int pairing(const CartanData& cd, const Weight& x, const Weight& y);

// <h_k, w - v> for v in the root lattice and w in the fundamental-weight lattice.
int rank_Ck(const CartanData& cd, const IntVector& v, const IntVector& w, int k);
// (v, 2w - v).
int dim_quiver_variety(const CartanData& cd, const IntVector& v, const IntVector& w);
bool is_dominant(const CartanData& cd, const Weight& x);

} // namespace qloop
