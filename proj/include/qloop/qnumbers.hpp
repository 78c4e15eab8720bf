#pragma once

#include "qloop/laurent.hpp"

namespace qloop {

// [n]_q = (q^n - q^-n)/(q - q^-1); [-n]_q = -[n]_q.
LaurentQ q_int(int n);
// [n]_q! for n >= 0.
LaurentQ q_factorial(int n);
// Gaussian binomial [n r]_q = [n]_q! / ([r]_q! [n-r]_q!), 0 <= r <= n.
LaurentQ q_binomial(int n, int r);
// [q^h; n r] on the h-eigenvalue m: prod_{s=1..r} [m + n - s + 1]_q / [s]_q.
LaurentQ qh_binomial(int m, int n, int r);

} // namespace qloop
