#include "qloop/hall_littlewood.hpp"

#include "qloop/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qloop {

namespace {

int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

std::vector<int> padded(const IntPartition& lambda, int nvars) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] != 0) e[i] = lambda[i];
    return e;
}

} // namespace

void validate_partition(const IntPartition& lambda, int nvars) {
    int nonzero = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw ValidationError("partition parts must be non-negative");
        if (i > 0 && lambda[i] > lambda[i - 1]) throw ValidationError("partition parts must be weakly decreasing");
        if (lambda[i] > 0) ++nonzero;
    }
    if (nonzero > nvars) throw ValidationError("partition has more parts than variables");
}

LaurentQ hl_vm(int m) {
    const LaurentQ one_minus_t = LaurentQ(1) - LaurentQ::q_power(2);
    LaurentQ r(1);
    for (int j = 1; j <= m; ++j)
        r *= exact_divide(LaurentQ(1) - LaurentQ::q_power(2 * j), one_minus_t);
    return r;
}

LaurentQ hl_normalizer(const IntPartition& lambda, int nvars) {
    validate_partition(lambda, nvars);
    const auto parts = padded(lambda, nvars);
    LaurentQ r(1);
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        r *= hl_vm(static_cast<int>(j - i));
        i = j;
    }
    return r;
}

MultiLaurent hall_littlewood(const IntPartition& lambda, int nvars) {
    validate_partition(lambda, nvars);
    const int n = nvars;
    const auto exps = padded(lambda, n);

    // x^lambda prod_{i<j} (x_i - t x_j), antisymmetrized; the Vandermonde is
    // antisymmetric so w(Delta) = sgn(w) Delta.
    MultiLaurent base = MultiLaurent::monomial(n, exps);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            base *= MultiLaurent::variable(n, i) -
                    MultiLaurent::variable(n, j) * LaurentQ::q_power(2);

    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    MultiLaurent numerator(n);
    do {
        MultiLaurent term = base.permuted(w);
        if (permutation_sign(w) < 0) numerator -= term;
        else numerator += term;
    } while (std::next_permutation(w.begin(), w.end()));

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    MultiLaurent sym = divide_by_vandermonde(numerator, idx);
    return exact_divide(sym, MultiLaurent::constant(n, hl_normalizer(lambda, n)));
}

MultiLaurent monomial_symmetric(const IntPartition& lambda, int nvars) {
    validate_partition(lambda, nvars);
    auto e = padded(lambda, nvars);
    std::sort(e.begin(), e.end());
    MultiLaurent r(nvars);
    do {
        r += MultiLaurent::monomial(nvars, e);
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

std::vector<IntPartition> partitions_of(int size, int max_parts) {
    std::vector<IntPartition> out;
    IntPartition cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(size, size);
    return out;
}

} // namespace qloop
