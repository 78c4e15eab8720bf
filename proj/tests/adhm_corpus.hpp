#pragma once

#include "qloop/adhm.hpp"

#include <random>
#include <string>
#include <vector>

namespace qt {

struct StabilityCase {
    std::string name;
    qloop::ADHMData data;
    bool stable;
};

// B on the `index`-th (0-based) edge joining out -> in, in either orientation.
inline void set_B(qloop::ADHMData& d, int out, int in, const qloop::RationalMatrix& m, int index = 0) {
    const auto& hs = d.graph.oriented_edges();
    int seen = 0;
    for (std::size_t h = 0; h < hs.size(); ++h)
        if (hs[h].out == out && hs[h].in == in && seen++ == index) {
            d.B[h] = m;
            return;
        }
    throw std::logic_error("no such edge");
}

inline qloop::RationalMatrix M(const std::vector<std::vector<qloop::Rational>>& rows, int cols = -1) {
    return qloop::RationalMatrix::from_rows(rows, cols);
}

inline std::vector<StabilityCase> stability_corpus() {
    using qloop::ADHMData;
    using qloop::QuiverGraph;
    const QuiverGraph a1 = QuiverGraph::type_a(1);
    const QuiverGraph a2 = QuiverGraph::type_a(2);
    const QuiverGraph dbl({"1", "2"}, {{"1", "2"}, {"1", "2"}});
    std::vector<StabilityCase> out;

    ADHMData d = ADHMData::zero(a1, {1}, {2});
    d.i[0] = M({{1, 0}});
    d.j[0] = M({{0}, {1}});
    out.push_back({"A1 j injective", d, true});

    out.push_back({"A1 j = 0", ADHMData::zero(a1, {2}, {1}), false});

    d = ADHMData::zero(a1, {2}, {2});
    d.j[0] = M({{1, 0}, {0, 1}});
    out.push_back({"A1 j invertible", d, true});

    d = ADHMData::zero(a1, {2}, {1});
    d.j[0] = M({{1, 0}});
    out.push_back({"A1 j rank 1, no B", d, false});

    d = ADHMData::zero(a2, {1, 1}, {1, 0});
    d.j[0] = M({{1}});
    set_B(d, 1, 0, M({{1}}));
    out.push_back({"A2 rank-deficient j rescued by B", d, true});

    d = ADHMData::zero(a2, {1, 1}, {1, 0});
    d.j[0] = M({{1}});
    out.push_back({"A2 rank-deficient j, no B", d, false});

    d = ADHMData::zero(a2, {1, 1}, {1, 0});
    d.j[0] = M({{1}});
    set_B(d, 0, 1, M({{1}}));
    out.push_back({"A2 B in the wrong direction", d, false});

    out.push_back({"A1 v = 0", ADHMData::zero(a1, {0}, {1}), true});

    d = ADHMData::zero(a2, {1, 2}, {0, 1});
    d.j[1] = M({{1, 0}});
    set_B(d, 1, 0, M({{0, 1}}));
    set_B(d, 0, 1, M({{1}, {0}}));
    out.push_back({"A2 two-step rescue", d, true});

    d = ADHMData::zero(dbl, {1, 1}, {1, 0});
    d.j[0] = M({{1}});
    set_B(d, 1, 0, M({{1}}), 1);
    out.push_back({"double edge rescued by second edge", d, true});
    return out;
}

inline qloop::RationalMatrix random_invertible(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    while (true) {
        qloop::RationalMatrix g(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                g(r, c) = qloop::Rational(num(rng), den(rng));
                g(r, c).canonicalize();
            }
        if (g.is_invertible()) return g;
    }
}

inline std::vector<qloop::RationalMatrix> random_base_change(const qloop::ADHMData& d, std::mt19937& rng) {
    std::vector<qloop::RationalMatrix> g;
    for (int vk : d.v) g.push_back(random_invertible(vk, rng));
    return g;
}

} // namespace qt
