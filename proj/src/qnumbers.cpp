#include "qloop/qnumbers.hpp"

#include "qloop/errors.hpp"

#include <cstdlib>

namespace qloop {

LaurentQ q_int(int n) {
    // q^{n-1} + q^{n-3} + ... + q^{1-n}
    const int a = std::abs(n);
    std::vector<LaurentQ::Term> t;
    for (int e = 1 - a; e <= a - 1; e += 2) t.emplace_back(e, Integer(n < 0 ? -1 : 1));
    return LaurentQ::from_terms(std::move(t));
}

LaurentQ q_factorial(int n) {
    if (n < 0) throw ValidationError("q_factorial of a negative integer");
    LaurentQ r(1);
    for (int i = 2; i <= n; ++i) r *= q_int(i);
    return r;
}

LaurentQ q_binomial(int n, int r) {
    if (n < 0 || r < 0 || r > n) throw ValidationError("q_binomial needs 0 <= r <= n");
    return exact_divide(q_factorial(n), q_factorial(r) * q_factorial(n - r));
}

LaurentQ qh_binomial(int m, int n, int r) {
    if (r < 1) throw ValidationError("qh_binomial needs r >= 1");
    LaurentQ num(1);
    LaurentQ den(1);
    for (int s = 1; s <= r; ++s) {
        num *= LaurentQ::q_power(m + n - s + 1) - LaurentQ::q_power(-m - n + s - 1);
        den *= LaurentQ::q_power(s) - LaurentQ::q_power(-s);
    }
    return exact_divide(num, den);
}

} // namespace qloop
