#pragma once

#include "qloop/rank1.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qloop {

// Residual of a failed identity; empty when it holds.
struct RelationResult {
    bool ok = true;
    MultiLaurent residual;
};

// (q - q^-1)[e_r, f_s] m == (psi^+_{r+s} - psi^-_{r+s}) m.
RelationResult check_relation_EF(int r, int s, const GrassElement& m, int order, const Rank1Options& opt = {});
// x_{r+1} x_s - q^{+-2} x_r x_{s+1} == q^{+-2} x_s x_{r+1} - x_{s+1} x_r with x = e
// (Plus, q^2) or x = f (Minus, q^-2).
RelationResult check_relation_exE2(int r, int s, const GrassElement& m, Sign x_sign, const Rank1Options& opt = {});
// psi_{a+1} x_b - q^{+-2} psi_a x_{b+1} == q^{+-2} x_b psi_{a+1} - x_{b+1} psi_a for
// psi = psi^{psi_sign}, x = e (Plus) or f (Minus).
RelationResult check_relation_HE(int a, int b, const GrassElement& m, Sign psi_sign, Sign x_sign,
                                 const Rank1Options& opt = {});

// Orbit sums m_mu(x_1..x_v) m_nu(x_{v+1}..x_N) with |mu| + |nu| <= max_degree.
std::vector<GrassElement> basis_elements(int N, int v, int max_degree);

struct RelationGrid {
    int n_min = 1;
    int n_max = 4;
    int mode_min = -2;
    int mode_max = 2;
    int order = 4;
    int max_degree = 2;
    int jobs = 1;
    Rank1Options options;
};

struct RelationFailure {
    std::string relation;
    int N = 0;
    int v = 0;
    std::string element;
    std::vector<int> modes;
    std::string residual;
};

struct RelationCount {
    long checked = 0;
    long passed = 0;
};

struct RelationReport {
    std::map<std::string, RelationCount> counts;
    std::optional<RelationFailure> first_failure;
    long cells = 0;

    bool ok() const { return !first_failure.has_value(); }
};

// Runs every identity over N in [n_min, n_max], every level, every basis
// element and every mode combination; cells are spread over `jobs` threads.
RelationReport run_relation_suite(const RelationGrid& grid);

} // namespace qloop
