#pragma once

#include "qloop/hall_littlewood.hpp"
#include "qloop/multi_laurent.hpp"
#include "qloop/series.hpp"

#include <vector>

namespace qloop {

// Level-v element of the rank-1 module: an S_v x S_{N-v} symmetric Laurent
// polynomial in x_1..x_N (0-based: blocks [0, v) and [v, N)).
struct GrassElement {
    int N = 1;
    int v = 0;
    MultiLaurent f{1};

    // Checks 0 <= v <= N, nvars == N and block symmetry.
    static GrassElement make(int N, int v, MultiLaurent f);
    static GrassElement zero(int N, int v);
    static GrassElement vacuum(int N, int v);  // f = 1

    bool is_zero() const { return f.is_zero(); }
    // Zero elements compare equal regardless of level.
    friend bool operator==(const GrassElement& a, const GrassElement& b);
};

struct Rank1Options {
    // Negative control: flips q^-1 -> q in the numerator factors of the f-operator.
    bool corrupt_f = false;
    // Re-check block symmetry of every result.
    bool check_symmetry = true;
};

// e_r: level v -> v-1.
GrassElement apply_e(int r, const GrassElement& m, const Rank1Options& opt = {});
// f_s: level v -> v+1.
GrassElement apply_f(int s, const GrassElement& m, const Rank1Options& opt = {});

// Same operators assembled by the generic rational symmetrizer.  Slow; used as
// an oracle for the direct versions.
GrassElement apply_e_symmetrizer(int r, const GrassElement& m);
GrassElement apply_f_symmetrizer(int s, const GrassElement& m);

enum class Sign { Plus, Minus };

// Eigen-series of psi^+ (in y = 1/z) or psi^- (in y = z) on level v, truncated
// at `order`.  Entry n is the coefficient of z^{-n} (plus) or z^{n} (minus).
TruncatedSeries psi_series(Sign sign, int N, int v, int order);
// p^+(z) in 1/z or p^-(z) in z on level v.
TruncatedSeries p_series(Sign sign, int N, int v, int order);
// psi via q^{+-h} p(qz)/p(q^-1 z); throws MathError if it disagrees with psi_series.
TruncatedSeries psi_from_p(Sign sign, int N, int v, int order);

// Coefficients of psi^sign applied to m, entry n for z^{-n} / z^{n}.
std::vector<GrassElement> psi_apply(Sign sign, const GrassElement& m, int order);

// Mode psi_n (psi^+_n for n >= 0, psi^-_n for n <= 0, zero otherwise) as a
// multiplication operator on level v.  Requires |n| <= order of the cache.
MultiLaurent psi_mode(Sign sign, int N, int v, int n);

// Divided powers f_{p_s}^{(n_s)} ... f_{p_1}^{(n_1)} applied to m: the block of
// the smallest mode acts first.  Closed Hall-Littlewood formula times
// q^{sum n_i(n_i-1)/2 - n(n-1)/2}.
GrassElement divided_power_f(const std::vector<int>& p_list, const std::vector<int>& n_list, const GrassElement& m);
// Same product by iterated application of apply_f with exact division by [n_i]_q!.
GrassElement divided_power_f_iterated(const std::vector<int>& p_list, const std::vector<int>& n_list,
                                      const GrassElement& m);
// Closed formula before the global +-q^L normalization.
GrassElement divided_power_f_raw(const std::vector<int>& p_list, const std::vector<int>& n_list,
                                 const GrassElement& m);
// The normalization c with divided_power_f = c * divided_power_f_raw.
LaurentQ divided_power_normalization(const std::vector<int>& n_list);
// lambda = ((p_2-p_1)^{n_2}, ..., (p_s-p_1)^{n_s}) padded by n_1 zeros, weakly decreasing.
IntPartition divided_power_partition(const std::vector<int>& p_list, const std::vector<int>& n_list);

} // namespace qloop
