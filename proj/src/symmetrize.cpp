#include "qloop/symmetrize.hpp"

#include "qloop/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qloop {

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Generators of S_I cap S_J: adjacent transpositions inside each block I_a cap J_b.
std::vector<std::vector<int>> blocks_of(const Partition2& inner, const Partition2& outer) {
    return {intersect(inner.first, outer.first), intersect(inner.first, outer.second),
            intersect(inner.second, outer.first), intersect(inner.second, outer.second)};
}

std::vector<int> transposition(int n, int a, int b) {
    std::vector<int> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
    return s;
}

template <typename F>
bool invariant_under_blocks(const F& f, int n, const std::vector<std::vector<int>>& blocks) {
    for (const auto& blk : blocks)
        for (std::size_t i = 0; i + 1 < blk.size(); ++i)
            if (!(f.permuted(transposition(n, blk[i], blk[i + 1])) == f)) return false;
    return true;
}

// Every way to place the sub-block `low` (kept in order) onto a subset of
// `block`, with `high` filling the rest; writes the assignment into sigma.
void for_each_split(const std::vector<int>& block, const std::vector<int>& low, const std::vector<int>& high,
                    std::vector<int>& sigma, const std::function<void()>& k) {
    const std::size_t m = block.size();
    const std::size_t a = low.size();
    std::vector<bool> choose(m, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(a), true);
    // prev_permutation over a sorted-descending mask enumerates all a-subsets.
    do {
        std::size_t li = 0;
        std::size_t hi = 0;
        for (std::size_t p = 0; p < m; ++p) {
            if (choose[p]) sigma[static_cast<std::size_t>(low[li++])] = block[p];
            else sigma[static_cast<std::size_t>(high[hi++])] = block[p];
        }
        k();
    } while (std::prev_permutation(choose.begin(), choose.end()));
}

} // namespace

Partition2 Partition2::level(int v, int n) {
    if (v < 0 || v > n) throw ValidationError("level out of range");
    Partition2 p;
    for (int i = 0; i < n; ++i) (i < v ? p.first : p.second).push_back(i);
    return p;
}

void Partition2::validate(int n) const {
    if (size() != n) throw ValidationError("partition does not cover all variables");
    std::vector<int> all = first;
    all.insert(all.end(), second.begin(), second.end());
    if (!std::is_sorted(first.begin(), first.end()) || !std::is_sorted(second.begin(), second.end()))
        throw ValidationError("partition parts must be sorted");
    std::sort(all.begin(), all.end());
    for (int i = 0; i < n; ++i)
        if (all[static_cast<std::size_t>(i)] != i) throw ValidationError("partition parts must be disjoint and cover 0..N-1");
}

bool is_symmetric(const MultiLaurent& f, const Partition2& part) {
    part.validate(f.nvars());
    return invariant_under_blocks(f, f.nvars(), {part.first, part.second});
}

bool is_symmetric(const RationalFn& f, const Partition2& part) {
    part.validate(f.nvars());
    return invariant_under_blocks(f, f.nvars(), {part.first, part.second});
}

std::vector<std::vector<int>> coset_representatives(const Partition2& inner, const Partition2& outer) {
    const int n = outer.size();
    inner.validate(n);
    outer.validate(n);
    std::vector<std::vector<int>> reps;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    const auto j1i1 = intersect(outer.first, inner.first);
    const auto j1i2 = intersect(outer.first, inner.second);
    const auto j2i1 = intersect(outer.second, inner.first);
    const auto j2i2 = intersect(outer.second, inner.second);
    for_each_split(outer.first, j1i1, j1i2, sigma, [&] {
        for_each_split(outer.second, j2i1, j2i2, sigma, [&] { reps.push_back(sigma); });
    });
    return reps;
}

MultiLaurent symmetrize(const MultiLaurent& f, const Partition2& inner, const Partition2& outer) {
    const int n = f.nvars();
    inner.validate(n);
    outer.validate(n);
    if (!invariant_under_blocks(f, n, blocks_of(inner, outer)))
        throw SymmetryViolation("symmetrizer input is not invariant under S_I cap S_J");
    MultiLaurent sum(n);
    for (const auto& sigma : coset_representatives(inner, outer)) sum += f.permuted(sigma);
    return sum;
}

MultiLaurent symmetrize(const RationalFn& f, const Partition2& inner, const Partition2& outer) {
    const int n = f.nvars();
    inner.validate(n);
    outer.validate(n);
    if (!invariant_under_blocks(f, n, blocks_of(inner, outer)))
        throw SymmetryViolation("symmetrizer input is not invariant under S_I cap S_J");
    const auto reps = coset_representatives(inner, outer);

    const MultiLaurent common = vandermonde(n, outer.first) * vandermonde(n, outer.second);
    MultiLaurent numerator(n);
    bool cleared = true;
    for (const auto& sigma : reps) {
        const RationalFn term = f.permuted(sigma);
        try {
            numerator += term.num() * exact_divide(common, term.den());
        } catch (const InexactDivision&) {
            cleared = false;
            break;
        }
    }
    if (cleared) return exact_divide(numerator, common);

    // Denominator is not a factor of the block Vandermonde: add fractions directly.
    RationalFn sum(n);
    for (const auto& sigma : reps) sum = sum + f.permuted(sigma);
    return sum.to_polynomial();
}

} // namespace qloop
