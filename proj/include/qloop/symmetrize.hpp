#pragma once

#include "qloop/multi_laurent.hpp"
#include "qloop/rational_fn.hpp"

#include <vector>

namespace qloop {

// Ordered pair (I1, I2) of disjoint subsets covering {0, ..., N-1}.  Variable
// indices are 0-based throughout the C++ API.
struct Partition2 {
    std::vector<int> first;
    std::vector<int> second;

    // ([0, v), [v, N)): the partition written [v] for the level-v Grassmannian.
    static Partition2 level(int v, int n);
    int size() const { return static_cast<int>(first.size() + second.size()); }
    // Throws ValidationError unless the parts are disjoint, sorted and cover 0..n-1.
    void validate(int n) const;
    friend bool operator==(const Partition2&, const Partition2&) = default;
};

// f is fixed by S_{I1} x S_{I2}.
bool is_symmetric(const MultiLaurent& f, const Partition2& part);
bool is_symmetric(const RationalFn& f, const Partition2& part);

// One permutation per left coset sigma (S_I cap S_J) in S_J.  Entry sigma[i]
// is the image of variable i.
std::vector<std::vector<int>> coset_representatives(const Partition2& inner, const Partition2& outer);

// sum of sigma(f) over S_J / (S_I cap S_J).  f must be S_I cap S_J invariant.
MultiLaurent symmetrize(const MultiLaurent& f, const Partition2& inner, const Partition2& outer);

// Same for a rational function whose symmetrization is known to be a Laurent
// polynomial.  The sum is assembled over the Vandermonde of the blocks of the
// outer partition and divided exactly; a non-polynomial result throws.
MultiLaurent symmetrize(const RationalFn& f, const Partition2& inner, const Partition2& outer);

} // namespace qloop
