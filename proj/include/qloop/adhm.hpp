#pragma once

#include "qloop/cartan.hpp"
#include "qloop/lweight.hpp"
#include "qloop/rational_matrix.hpp"

#include <vector>

namespace qloop {

// (B, i, j) for the graph.  B is indexed like graph.oriented_edges(): B[h] maps
// V_out(h) -> V_in(h).  i[k]: W_k -> V_k, j[k]: V_k -> W_k.  eps(h) is +1 on
// the input orientation and -1 on its reversal.
struct ADHMData {
    QuiverGraph graph;
    IntVector v;
    IntVector w;
    std::vector<RationalMatrix> B;
    std::vector<RationalMatrix> i;
    std::vector<RationalMatrix> j;

    // All maps zero.
    static ADHMData zero(QuiverGraph graph, IntVector v, IntVector w);
    // Throws ValidationError on any shape mismatch.
    void validate() const;
    // Index of the reversal of oriented edge h.
    int reverse_of(int h) const;
};

std::vector<RationalMatrix> moment_map(const ADHMData& d);
bool moment_map_vanishes(const ADHMData& d);

struct StabilityResult {
    bool stable = false;
    int iterations = 0;  // refinement rounds that shrank some S_k
    IntVector destabilizing_dims;  // dim S_k of the maximal invariant subspace in Ker j
};

StabilityResult stability(const ADHMData& d);
bool is_stable(const ADHMData& d);

struct TauSigma {
    RationalMatrix sigma;
    RationalMatrix tau;
    int rank_sigma = 0;
    int rank_tau = 0;
    int codim_image_tau = 0;
    bool sigma_injective = false;
};

// Requires mu(d) = 0 (throws MathError otherwise); for stable d also checks
// that sigma_k is injective.
TauSigma tau_sigma_at_point(const ADHMData& d, const VertexId& k);

// g . (B, i, j) = (g B g^-1, g i, j g^-1), g_k in GL(V_k).
ADHMData base_change(const ADHMData& d, const std::vector<RationalMatrix>& g);

// Eigen-decomposition of rho: the columns of `basis` span V_k (or W_k) and
// column c is an eigenvector with eigenvalue labels[c].
struct GradedBasis {
    RationalMatrix basis;
    std::vector<SpectralParam> labels;
};

// Graded containments B_h(V_out(l)) in V_in(eps^{-m(h)-1} l), i(W(l)) in
// V(eps^-1 l), j(V(l)) in W(eps^-1 l).  Bases must be invertible.
bool check_fixed(const ADHMData& d, const std::vector<GradedBasis>& v_grading,
                 const std::vector<GradedBasis>& w_grading);

} // namespace qloop
