#include "qloop/rank1.hpp"

#include "qloop/errors.hpp"
#include "qloop/qnumbers.hpp"
#include "qloop/rational_fn.hpp"
#include "qloop/symmetrize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace qloop {

namespace {

MultiLaurent var(int n, int i) { return MultiLaurent::variable(n, i); }

MultiLaurent one(int n) { return MultiLaurent::constant(n, LaurentQ(1)); }

std::vector<int> range(int a, int b) {
    std::vector<int> r;
    for (int i = a; i < b; ++i) r.push_back(i);
    return r;
}

// sum over n-subsets S of J of sign(S) Delta(S) Delta(J \ S) numer(S), divided
// exactly by Delta(J).  This is sum_S numer(S) / prod_{l in S, u in J\S} (x_l - x_u).
MultiLaurent assemble(int N, const std::vector<int>& J, int n,
                      const std::function<MultiLaurent(const std::vector<int>&, const std::vector<int>&)>& numer) {
    const std::size_t m = J.size();
    MultiLaurent total(N);
    std::vector<bool> choose(m, false);
    std::fill(choose.begin(), choose.begin() + n, true);
    do {
        std::vector<int> S;
        std::vector<int> rest;
        int inversions = 0;
        for (std::size_t p = 0; p < m; ++p) {
            if (choose[p]) {
                S.push_back(J[p]);
                inversions += static_cast<int>(rest.size());
            } else {
                rest.push_back(J[p]);
            }
        }
        MultiLaurent term = numer(S, rest);
        if (term.is_zero()) continue;
        term *= vandermonde(N, S) * vandermonde(N, rest);
        if (inversions % 2) total -= term;
        else total += term;
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return divide_by_vandermonde(total, J);
}

void check_output(const GrassElement& r, const Rank1Options& opt) {
    if (opt.check_symmetry && !is_symmetric(r.f, Partition2::level(r.v, r.N)))
        throw SymmetryViolation("rank-1 operator produced a non-symmetric element");
}

// sigma sending the old first block [0, v0) onto `low`, the next n variables onto
// S, and leaving [v0 + n, N) fixed.
std::vector<int> raise_perm(int N, const std::vector<int>& low, const std::vector<int>& S) {
    std::vector<int> sigma(static_cast<std::size_t>(N));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::size_t i = 0;
    for (int x : low) sigma[i++] = x;
    for (int x : S) sigma[i++] = x;
    return sigma;
}

MultiLaurent numerator_factor(int N, int l, const std::vector<int>& others, const LaurentQ& a, const LaurentQ& b) {
    MultiLaurent r = one(N);
    for (int u : others) r *= var(N, l) * a - var(N, u) * b;
    return r;
}

} // namespace

GrassElement GrassElement::make(int N, int v, MultiLaurent f) {
    if (N < 1 || N > Monomial::kMaxVars) throw ValidationError("N out of range");
    if (v < 0 || v > N) throw ValidationError("level out of range");
    if (f.nvars() != N) throw ValidationError("polynomial has the wrong number of variables");
    if (!is_symmetric(f, Partition2::level(v, N)))
        throw SymmetryViolation("element is not S_v x S_{N-v} symmetric");
    return {N, v, std::move(f)};
}

GrassElement GrassElement::zero(int N, int v) { return {N, v, MultiLaurent(N)}; }

GrassElement GrassElement::vacuum(int N, int v) { return make(N, v, one(N)); }

bool operator==(const GrassElement& a, const GrassElement& b) {
    if (a.N != b.N) return false;
    if (a.f.is_zero() && b.f.is_zero()) return true;
    return a.v == b.v && a.f == b.f;
}

GrassElement apply_e(int r, const GrassElement& m, const Rank1Options& opt) {
    const int N = m.N;
    const int v = m.v;
    if (v == 0 || m.is_zero()) return GrassElement::zero(N, v - 1);
    const auto J = range(v - 1, N);
    auto numer = [&](const std::vector<int>& S, const std::vector<int>& rest) {
        const int k = S[0];
        // old variable v-1 -> k, old [v, N) -> rest
        std::vector<int> sigma = range(0, N);
        sigma[static_cast<std::size_t>(v - 1)] = k;
        for (std::size_t i = 0; i < rest.size(); ++i) sigma[static_cast<std::size_t>(v) + i] = rest[i];
        return m.f.permuted(sigma).times_x(k, r - N) *
               numerator_factor(N, k, rest, LaurentQ::q_power(1), LaurentQ::q_power(-1));
    };
    GrassElement out{N, v - 1, assemble(N, J, 1, numer)};
    check_output(out, opt);
    return out;
}

GrassElement apply_f(int s, const GrassElement& m, const Rank1Options& opt) {
    const int N = m.N;
    const int v = m.v + 1;
    if (m.v == N || m.is_zero()) return GrassElement::zero(N, v);
    const LaurentQ a = LaurentQ::q_power(opt.corrupt_f ? 1 : -1);
    auto numer = [&](const std::vector<int>& S, const std::vector<int>& rest) {
        const int l = S[0];
        return m.f.permuted(raise_perm(N, rest, S)).times_x(l, s + N) *
               numerator_factor(N, l, rest, a, LaurentQ::q_power(1));
    };
    GrassElement out{N, v, assemble(N, range(0, v), 1, numer)};
    check_output(out, opt);
    return out;
}

GrassElement apply_e_symmetrizer(int r, const GrassElement& m) {
    const int N = m.N;
    const int v = m.v;
    if (v == 0 || m.is_zero()) return GrassElement::zero(N, v - 1);
    const int k = v - 1;
    MultiLaurent num = m.f.times_x(k, r - N);
    MultiLaurent den = one(N);
    for (int t = v; t < N; ++t) {
        num *= var(N, k) * LaurentQ::q_power(1) - var(N, t) * LaurentQ::q_power(-1);
        den *= var(N, k) - var(N, t);
    }
    return GrassElement::make(N, v - 1,
                              symmetrize(RationalFn(num, den), Partition2::level(v, N), Partition2::level(v - 1, N)));
}

GrassElement apply_f_symmetrizer(int s, const GrassElement& m) {
    const int N = m.N;
    const int v = m.v + 1;
    if (m.v == N || m.is_zero()) return GrassElement::zero(N, v);
    const int l = v - 1;
    MultiLaurent num = m.f.times_x(l, s + N);
    MultiLaurent den = one(N);
    for (int u = 0; u < l; ++u) {
        num *= var(N, l) * LaurentQ::q_power(-1) - var(N, u) * LaurentQ::q_power(1);
        den *= var(N, l) - var(N, u);
    }
    return GrassElement::make(N, v,
                              symmetrize(RationalFn(num, den), Partition2::level(m.v, N), Partition2::level(v, N)));
}

namespace {

// (alpha z - beta x)/(z - x) expanded at z = infinity in y = 1/z (at_zero false)
// or at z = 0 in y = z (at_zero true).
TruncatedSeries linear_ratio(int N, int i, const LaurentQ& alpha, const LaurentQ& beta, bool at_zero, int order) {
    TruncatedSeries s(N, order);
    s[0] = MultiLaurent::constant(N, at_zero ? beta : alpha);
    const LaurentQ c = at_zero ? beta - alpha : alpha - beta;
    for (int n = 1; n <= order; ++n) s[n] = MultiLaurent::variable(N, i, at_zero ? -n : n) * c;
    return s;
}

void check_level(int N, int v) {
    if (N < 1 || N > Monomial::kMaxVars) throw ValidationError("N out of range");
    if (v < 0 || v > N) throw ValidationError("level out of range");
}

} // namespace

TruncatedSeries psi_series(Sign sign, int N, int v, int order) {
    check_level(N, v);
    const bool at_zero = sign == Sign::Minus;
    TruncatedSeries s = TruncatedSeries::constant(N, order, one(N));
    const LaurentQ q = LaurentQ::q_power(1);
    const LaurentQ qi = LaurentQ::q_power(-1);
    for (int u = 0; u < v; ++u) s *= linear_ratio(N, u, qi, q, at_zero, order);
    for (int t = v; t < N; ++t) s *= linear_ratio(N, t, q, qi, at_zero, order);
    return s;
}

TruncatedSeries p_series(Sign sign, int N, int v, int order) {
    check_level(N, v);
    TruncatedSeries s = TruncatedSeries::constant(N, order, one(N));
    const LaurentQ q = LaurentQ::q_power(1);
    const LaurentQ qi = LaurentQ::q_power(-1);
    if (sign == Sign::Plus) {
        // prod_u (1 - q x_u / z)^-1 prod_t (1 - q^-1 x_t / z)
        for (int u = 0; u < v; ++u) s *= TruncatedSeries::geometric(var(N, u) * q, order);
        for (int t = v; t < N; ++t) s *= TruncatedSeries::one_minus(var(N, t) * qi, order);
    } else {
        // prod_t (1 - q z / x_t) prod_u (1 - q^-1 z / x_u)^-1
        for (int t = v; t < N; ++t) s *= TruncatedSeries::one_minus(MultiLaurent::variable(N, t, -1) * q, order);
        for (int u = 0; u < v; ++u) s *= TruncatedSeries::geometric(MultiLaurent::variable(N, u, -1) * qi, order);
    }
    return s;
}

TruncatedSeries psi_from_p(Sign sign, int N, int v, int order) {
    const TruncatedSeries p = p_series(sign, N, v, order);
    const int h = N - 2 * v;
    // z -> q^{+-1} z is y -> q^{-+1} y at infinity and y -> q^{+-1} y at zero.
    const int k = sign == Sign::Plus ? -1 : 1;
    TruncatedSeries r = p.rescale_q(k) * p.rescale_q(-k).inverse();
    r *= MultiLaurent::constant(N, LaurentQ::q_power(sign == Sign::Plus ? h : -h));
    if (!(r == psi_series(sign, N, v, order))) throw MathError("psi and q^{+-h} p(qz)/p(z/q) disagree");
    return r;
}

MultiLaurent psi_mode(Sign sign, int N, int v, int n) {
    const int idx = sign == Sign::Plus ? n : -n;
    if (idx < 0) return MultiLaurent(N);
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, TruncatedSeries> cache;
    const auto key = std::make_tuple(sign == Sign::Plus ? 1 : -1, N, v);
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.order() >= idx) return it->second[idx];
    }
    TruncatedSeries s = psi_series(sign, N, v, std::max(idx, 6));
    MultiLaurent r = s[idx];
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it == cache.end() || it->second.order() < s.order()) cache.insert_or_assign(key, std::move(s));
    return r;
}

std::vector<GrassElement> psi_apply(Sign sign, const GrassElement& m, int order) {
    const TruncatedSeries s = psi_series(sign, m.N, m.v, order);
    std::vector<GrassElement> out;
    for (const auto& c : s.coefficients()) out.push_back({m.N, m.v, c * m.f});
    return out;
}

namespace {

void validate_divided(const std::vector<int>& p_list, const std::vector<int>& n_list, const GrassElement& m) {
    if (p_list.empty() || p_list.size() != n_list.size())
        throw ValidationError("p_list and n_list must be non-empty and of equal length");
    for (std::size_t i = 1; i < p_list.size(); ++i)
        if (p_list[i] <= p_list[i - 1]) throw ValidationError("p_list must be strictly increasing");
    int n = 0;
    for (int x : n_list) {
        if (x < 1) throw ValidationError("multiplicities must be positive");
        n += x;
    }
    if (n > m.N - m.v) throw ValidationError("divided power exceeds the available levels");
}

} // namespace

IntPartition divided_power_partition(const std::vector<int>& p_list, const std::vector<int>& n_list) {
    IntPartition lambda;
    for (std::size_t i = 0; i < p_list.size(); ++i)
        for (int c = 0; c < n_list[i]; ++c) lambda.push_back(p_list[i] - p_list[0]);
    std::sort(lambda.rbegin(), lambda.rend());
    return lambda;
}

GrassElement divided_power_f_raw(const std::vector<int>& p_list, const std::vector<int>& n_list,
                                 const GrassElement& m) {
    validate_divided(p_list, n_list, m);
    const int N = m.N;
    const int n = std::accumulate(n_list.begin(), n_list.end(), 0);
    const int v = m.v + n;
    if (m.is_zero()) return GrassElement::zero(N, v);
    const IntPartition lambda = divided_power_partition(p_list, n_list);
    const MultiLaurent P = hall_littlewood(lambda, n);
    auto numer = [&](const std::vector<int>& S, const std::vector<int>& rest) {
        MultiLaurent t = m.f.permuted(raise_perm(N, rest, S));
        for (int l : S) t = t.times_x(l, N + p_list[0]);
        t *= P.remap(N, S);
        for (int l : S) t *= numerator_factor(N, l, rest, LaurentQ::q_power(-1), LaurentQ::q_power(1));
        return t;
    };
    GrassElement out{N, v, assemble(N, range(0, v), n, numer)};
    check_output(out, {});
    return out;
}

LaurentQ divided_power_normalization(const std::vector<int>& n_list) {
    int n = 0;
    int L = 0;
    for (int x : n_list) {
        n += x;
        L += x * (x - 1) / 2;
    }
    return LaurentQ::q_power(L - n * (n - 1) / 2);
}

GrassElement divided_power_f(const std::vector<int>& p_list, const std::vector<int>& n_list, const GrassElement& m) {
    GrassElement r = divided_power_f_raw(p_list, n_list, m);
    r.f *= divided_power_normalization(n_list);
    return r;
}

GrassElement divided_power_f_iterated(const std::vector<int>& p_list, const std::vector<int>& n_list,
                                      const GrassElement& m) {
    validate_divided(p_list, n_list, m);
    GrassElement r = m;
    for (std::size_t i = 0; i < p_list.size(); ++i) {
        for (int c = 0; c < n_list[i]; ++c) r = apply_f(p_list[i], r);
        r.f = exact_divide(r.f, MultiLaurent::constant(m.N, q_factorial(n_list[i])));
    }
    return r;
}

} // namespace qloop
