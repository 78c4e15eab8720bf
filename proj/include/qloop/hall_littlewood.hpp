#pragma once

#include "qloop/laurent.hpp"
#include "qloop/multi_laurent.hpp"

#include <vector>

namespace qloop {

// Weakly decreasing, non-negative parts.  Trailing zeros are allowed and ignored.
using IntPartition = std::vector<int>;

void validate_partition(const IntPartition& lambda, int nvars);

// v_m(t) = prod_{j=1..m} (1 - t^j)/(1 - t) evaluated at t = q^2.
LaurentQ hl_vm(int m);
// v_lambda(t) = prod_{i>=0} v_{m_i}(t), m_i the multiplicity of part i among
// the n parts of lambda padded with zeros.
LaurentQ hl_normalizer(const IntPartition& lambda, int nvars);

// Hall-Littlewood polynomial P_lambda(x_1..x_n; t) at t = q^2, normalized so
// the coefficient of x^lambda is 1.  Computed as
//   v_lambda(t)^-1 sum_{w in S_n} w( x^lambda prod_{i<j} (x_i - t x_j)/(x_i - x_j) )
// with the Vandermonde cleared and both divisions checked for exactness.
MultiLaurent hall_littlewood(const IntPartition& lambda, int nvars);

// Monomial symmetric polynomial m_lambda(x_1..x_n).
MultiLaurent monomial_symmetric(const IntPartition& lambda, int nvars);

// All partitions of `size` with at most `max_parts` parts, in reverse lexicographic order.
std::vector<IntPartition> partitions_of(int size, int max_parts);

} // namespace qloop
