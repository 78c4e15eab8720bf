#pragma once

#include "qloop/cartan.hpp"
#include "qloop/lweight.hpp"

#include <map>
#include <vector>

namespace qloop {

// Graded dimensions dim V_k(lambda), dim W_k(lambda) of a fixed-point datum rho.
// Zero entries are never stored.
struct GradedDims {
    std::map<YMonomial::Key, int> V;
    std::map<YMonomial::Key, int> W;

    int dimV(const VertexId& k, const SpectralParam& l) const;
    int dimW(const VertexId& k, const SpectralParam& l) const;
    void addV(const VertexId& k, const SpectralParam& l, int d = 1);
    void addW(const VertexId& k, const SpectralParam& l, int d = 1);
    // Total dimension vectors over the graph's vertex order.
    IntVector v_vector(const QuiverGraph& graph) const;
    IntVector w_vector(const QuiverGraph& graph) const;
    // Every V-parameter lies in some W-parameter times eps^Z.
    bool v_params_in_w_orbits() const;

    friend GradedDims operator+(const GradedDims& a, const GradedDims& b);
    friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

int dim_M_rho(const GradedDims& g, const QuiverGraph& graph);

// rank of C_{k,lambda}: V_k(eps^2 lambda) -> (+)_{in(h)=k} V_out(h)(eps^{m(h)+1} lambda) (+) W_k(eps lambda) -> V_k(lambda).
int rank_C_k_lambda(const GradedDims& g, const VertexId& k, const SpectralParam& lambda, const QuiverGraph& graph);
// All lambda where some term of rank_C_k_lambda can be non-zero.
std::vector<SpectralParam> rank_support(const GradedDims& g, const VertexId& k, const QuiverGraph& graph);

// The virtual character of C_k = q^-1 (sum_l [-C_kl]_q V_l + W_k) as a signed
// multiset of eps-shifted parameters.
std::map<SpectralParam, int> ck_character(const GradedDims& g, const VertexId& k, const QuiverGraph& graph);

// Psi^+-_k on the fixed component, expanded directly from the C_k character:
// eps^{rank} prod_c ((1 - c/(eps z))/(1 - eps c/z))^{n_c}.
LSeries genweight_series(const GradedDims& g, const QuiverGraph& graph, bool plus, int order,
                         const std::vector<std::string>& bases);

// prod_k prod_{W-parameters a} Y_{k, a eps^-1} prod_{V-parameters c} A_{k, c eps^-1}^-1.
// With check_order >= 0 the psi-series of the result is compared with
// genweight_series up to that order and a mismatch throws MathError.
YMonomial l_weight_of_rho(const GradedDims& g, const QuiverGraph& graph, int check_order = 4);

// No two parameters with the same base and different eps-powers.
bool is_generic(const std::vector<SpectralParam>& params);
// Same for the W-parameters of a graded datum; the graph must have at most one edge per pair.
bool is_generic(const GradedDims& g, const QuiverGraph& graph);

struct FixedPointSl2 {
    int N = 0;
    std::vector<SpectralParam> w_params;
    std::vector<int> subset;  // 0-based indices with a V-line
    GradedDims dims;

    int level() const { return static_cast<int>(subset.size()); }
};

// Vertex id used for type A_1.
inline const VertexId kSl2Vertex = "1";

// W = sum_i C at w_i, V = sum_{i in S} C at eps w_i (j injective, i = 0).
// level < 0 enumerates every level.  Throws ValidationError on non-generic input.
std::vector<FixedPointSl2> enumerate_fixed_points_sl2(const std::vector<SpectralParam>& w_params, int level = -1);

QCharacter qchar_standard_sl2(const std::vector<SpectralParam>& w_params);

// The number of sl_2 fixed points equals prod over parameters of the one-parameter count.
bool euler_product_check(const IntVector& w, const std::vector<SpectralParam>& w_params);

} // namespace qloop
