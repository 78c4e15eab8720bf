#include "qloop/relations.hpp"

#include "qloop/errors.hpp"
#include "qloop/symmetrize.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace qloop {

namespace {

enum Op : int { kE = 0, kF = 1, kPsiPlus = 2, kPsiMinus = 3 };

// Memoized words in the generators applied to one fixed element.  A word is a
// list of (op, mode) pairs, rightmost acting first.
class Words {
public:
    Words(const GrassElement& m, const Rank1Options& opt) : base_(m), opt_(opt) {}

    const GrassElement& get(const std::vector<std::pair<int, int>>& word) {
        if (word.empty()) return base_;
        auto it = memo_.find(word);
        if (it != memo_.end()) return it->second;
        const std::vector<std::pair<int, int>> tail(word.begin() + 1, word.end());
        const GrassElement inner = get(tail);
        const auto [op, mode] = word.front();
        GrassElement out;
        switch (op) {
        case kE: out = apply_e(mode, inner, opt_); break;
        case kF: out = apply_f(mode, inner, opt_); break;
        default: {
            const Sign sg = op == kPsiPlus ? Sign::Plus : Sign::Minus;
            out = inner;
            if (!inner.is_zero() && inner.v >= 0 && inner.v <= inner.N) out.f = psi_mode(sg, inner.N, inner.v, mode) * inner.f;
        }
        }
        return memo_.emplace(word, std::move(out)).first->second;
    }

    // Polynomial part, zero for the zero element at any level.
    MultiLaurent poly(const std::vector<std::pair<int, int>>& word) {
        const GrassElement& g = get(word);
        return g.is_zero() ? MultiLaurent(base_.N) : g.f;
    }

private:
    GrassElement base_;
    Rank1Options opt_;
    std::map<std::vector<std::pair<int, int>>, GrassElement> memo_;
};

RelationResult verdict(MultiLaurent lhs, const MultiLaurent& rhs) {
    lhs -= rhs;
    return {lhs.is_zero(), lhs};
}

RelationResult ef(Words& w, int N, int r, int s) {
    const GrassElement& m = w.get({});
    MultiLaurent lhs = w.poly({{kE, r}, {kF, s}}) - w.poly({{kF, s}, {kE, r}});
    lhs *= LaurentQ::q_power(1) - LaurentQ::q_power(-1);
    MultiLaurent rhs(N);
    if (!m.is_zero())
        rhs = (psi_mode(Sign::Plus, N, m.v, r + s) - psi_mode(Sign::Minus, N, m.v, r + s)) * m.f;
    return verdict(lhs, rhs);
}

RelationResult exe2(Words& w, int r, int s, Sign x_sign) {
    const int op = x_sign == Sign::Plus ? kE : kF;
    const LaurentQ q2 = LaurentQ::q_power(x_sign == Sign::Plus ? 2 : -2);
    MultiLaurent lhs = w.poly({{op, r + 1}, {op, s}}) - w.poly({{op, r}, {op, s + 1}}) * q2;
    MultiLaurent rhs = w.poly({{op, s}, {op, r + 1}}) * q2 - w.poly({{op, s + 1}, {op, r}});
    return verdict(lhs, rhs);
}

RelationResult he(Words& w, int a, int b, Sign psi_sign, Sign x_sign) {
    const int op = x_sign == Sign::Plus ? kE : kF;
    const int ps = psi_sign == Sign::Plus ? kPsiPlus : kPsiMinus;
    const LaurentQ q2 = LaurentQ::q_power(x_sign == Sign::Plus ? 2 : -2);
    MultiLaurent lhs = w.poly({{ps, a + 1}, {op, b}}) - w.poly({{ps, a}, {op, b + 1}}) * q2;
    MultiLaurent rhs = w.poly({{op, b}, {ps, a + 1}}) * q2 - w.poly({{op, b + 1}, {ps, a}});
    return verdict(lhs, rhs);
}

} // namespace

RelationResult check_relation_EF(int r, int s, const GrassElement& m, int order, const Rank1Options& opt) {
    if (order < std::abs(r + s)) throw ValidationError("series order must be at least |r + s|");
    Words w(m, opt);
    return ef(w, m.N, r, s);
}

RelationResult check_relation_exE2(int r, int s, const GrassElement& m, Sign x_sign, const Rank1Options& opt) {
    Words w(m, opt);
    return exe2(w, r, s, x_sign);
}

RelationResult check_relation_HE(int a, int b, const GrassElement& m, Sign psi_sign, Sign x_sign,
                                 const Rank1Options& opt) {
    Words w(m, opt);
    return he(w, a, b, psi_sign, x_sign);
}

std::vector<GrassElement> basis_elements(int N, int v, int max_degree) {
    std::vector<GrassElement> out;
    const int hi = N - v;
    std::vector<int> low_idx;
    std::vector<int> high_idx;
    for (int i = 0; i < v; ++i) low_idx.push_back(i);
    for (int i = v; i < N; ++i) high_idx.push_back(i);
    auto block = [&](const IntPartition& mu, int size, const std::vector<int>& idx) {
        if (mu.empty()) return MultiLaurent::constant(N, LaurentQ(1));
        return monomial_symmetric(mu, size).remap(N, idx);
    };
    for (int d1 = 0; d1 <= max_degree; ++d1) {
        for (const auto& mu : partitions_of(d1, v)) {
            for (int d2 = 0; d1 + d2 <= max_degree; ++d2) {
                for (const auto& nu : partitions_of(d2, hi)) {
                    out.push_back(GrassElement::make(N, v, block(mu, v, low_idx) * block(nu, hi, high_idx)));
                }
            }
        }
    }
    return out;
}

namespace {

struct Cell {
    int N;
    int v;
    GrassElement m;
};

struct CellResult {
    std::map<std::string, RelationCount> counts;
    std::optional<RelationFailure> failure;
};

CellResult run_cell(const Cell& cell, const RelationGrid& g) {
    CellResult res;
    Words w(cell.m, g.options);
    auto record = [&](const std::string& name, const RelationResult& r, std::vector<int> modes) {
        auto& c = res.counts[name];
        ++c.checked;
        if (r.ok) {
            ++c.passed;
        } else if (!res.failure) {
            res.failure = RelationFailure{name, cell.N, cell.v, cell.m.f.to_string(), std::move(modes), r.residual.to_string()};
        }
    };
    auto guarded = [&](const std::string& name, std::vector<int> modes, auto&& fn) {
        try {
            record(name, fn(), modes);
        } catch (const MathError& e) {
            RelationResult bad{false, MultiLaurent(cell.N)};
            record(name, bad, modes);
            if (res.failure && res.failure->residual == "0") res.failure->residual = e.what();
        }
    };
    for (int r = g.mode_min; r <= g.mode_max; ++r)
        for (int s = g.mode_min; s <= g.mode_max; ++s) {
            if (std::abs(r + s) <= g.order) guarded("EF", {r, s}, [&] { return ef(w, cell.N, r, s); });
            guarded("exE2+", {r, s}, [&] { return exe2(w, r, s, Sign::Plus); });
            guarded("exE2-", {r, s}, [&] { return exe2(w, r, s, Sign::Minus); });
        }
    for (int b = g.mode_min; b <= g.mode_max; ++b) {
        for (int a = -1; a + 1 <= g.order; ++a) {
            guarded("HE psi+ e", {a, b}, [&] { return he(w, a, b, Sign::Plus, Sign::Plus); });
            guarded("HE psi+ f", {a, b}, [&] { return he(w, a, b, Sign::Plus, Sign::Minus); });
        }
        for (int a = -g.order; a <= 0; ++a) {
            guarded("HE psi- e", {a, b}, [&] { return he(w, a, b, Sign::Minus, Sign::Plus); });
            guarded("HE psi- f", {a, b}, [&] { return he(w, a, b, Sign::Minus, Sign::Minus); });
        }
    }
    return res;
}

} // namespace

RelationReport run_relation_suite(const RelationGrid& g) {
    if (g.n_min < 1 || g.n_max < g.n_min || g.n_max > Monomial::kMaxVars) throw ValidationError("bad N range");
    if (g.mode_min > g.mode_max) throw ValidationError("empty mode range");
    if (g.order < 0) throw ValidationError("series order must be non-negative");
    if (g.jobs < 1) throw ValidationError("jobs must be positive");

    std::vector<Cell> cells;
    for (int N = g.n_min; N <= g.n_max; ++N)
        for (int v = 0; v <= N; ++v)
            for (auto& m : basis_elements(N, v, g.max_degree)) cells.push_back({N, v, std::move(m)});

    std::vector<CellResult> results(cells.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> crashed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next++;
            if (i >= cells.size() || crashed) return;
            try {
                results[i] = run_cell(cells[i], g);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
                crashed = true;
            }
        }
    };
    const int nthreads = std::min<int>(g.jobs, static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    RelationReport rep;
    rep.cells = static_cast<long>(cells.size());
    for (auto& r : results) {
        for (const auto& [name, c] : r.counts) {
            rep.counts[name].checked += c.checked;
            rep.counts[name].passed += c.passed;
        }
        if (r.failure && !rep.first_failure) rep.first_failure = r.failure;
    }
    return rep;
}

} // namespace qloop
