#include "adhm_corpus.hpp"
#include "qloop/fixedpoints.hpp"
#include "qloop/hall_littlewood.hpp"
#include "qloop/qnumbers.hpp"
#include "qloop/rank1.hpp"
#include "qloop/relations.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

using namespace qloop;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<SpectralParam> distinct_params(int n) {
    std::vector<SpectralParam> out;
    for (int i = 0; i < n; ++i) out.push_back({"a" + std::to_string(i + 1), 0});
    return out;
}

// strictly increasing lists from [-1, 1] with positive multiplicities summing to at most `cap`
std::vector<std::pair<std::vector<int>, std::vector<int>>> divided_power_data(int cap) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (int mask = 1; mask < 8; ++mask) {
        std::vector<int> p;
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) p.push_back(b - 1);
        const std::size_t s = p.size();
        std::vector<int> n(s, 1);
        while (true) {
            int total = 0;
            for (int x : n) total += x;
            if (total <= cap) out.emplace_back(p, n);
            std::size_t i = 0;
            while (i < s && n[i] == cap) n[i++] = 1;
            if (i == s) break;
            ++n[i];
        }
    }
    return out;
}

Outcome criterion1() {
    RelationGrid g;
    g.n_min = 1;
    g.n_max = 4;
    g.mode_min = -2;
    g.mode_max = 2;
    g.order = 4;
    g.max_degree = 2;
    g.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const auto t0 = Clock::now();
    const RelationReport rep = run_relation_suite(g);
    const double t = seconds_since(t0);
    long checked = 0;
    long passed = 0;
    for (const auto& [name, c] : rep.counts) {
        checked += c.checked;
        passed += c.passed;
    }
    std::ostringstream os;
    os << passed << "/" << checked << " identities over " << rep.cells << " cells in " << t << " s";
    if (rep.first_failure) os << "; first failure " << rep.first_failure->relation << " N=" << rep.first_failure->N;
    return {rep.ok() && passed == checked && checked > 0 && t <= 300.0, os.str()};
}

Outcome criterion2() {
    int cases = 0;
    bool ok = true;
    for (int N = 1; N <= 4; ++N)
        for (int v = 0; v <= N; ++v) {
            const GrassElement m = GrassElement::vacuum(N, v);
            const GrassElement ef = apply_e(0, apply_f(0, m));
            const GrassElement fe = apply_f(0, apply_e(0, m));
            MultiLaurent comm = ef.is_zero() ? MultiLaurent(N) : ef.f;
            if (!fe.is_zero()) comm -= fe.f;
            const MultiLaurent expect = MultiLaurent::constant(N, q_int(N - 2 * v));
            const MultiLaurent psi0 = psi_mode(Sign::Plus, N, v, 0) - psi_mode(Sign::Minus, N, v, 0);
            ok = ok && comm == expect && psi0 == expect * (LaurentQ::q_power(1) - LaurentQ::q_power(-1));
            ++cases;
        }
    return {ok, std::to_string(cases) + " levels, [e_0,f_0] 1 = [N-2v]_q"};
}

Outcome criterion3() {
    int cases = 0;
    bool ok = true;
    std::string fail;
    const auto data = divided_power_data(3);
    for (int N = 1; N <= 4; ++N)
        for (int v = 0; v < N; ++v)
            for (const auto& m : basis_elements(N, v, 1))
                for (const auto& [p, n] : data) {
                    int total = 0;
                    for (int x : n) total += x;
                    if (total > N - v) continue;
                    try {
                        if (!(divided_power_f(p, n, m) == divided_power_f_iterated(p, n, m))) {
                            ok = false;
                            fail = "mismatch at N=" + std::to_string(N) + " v=" + std::to_string(v);
                        }
                        if (p.size() == 1) {
                            GrassElement it = m;
                            for (int i = 0; i < n[0]; ++i) it = apply_f(p[0], it);
                            if (!it.is_zero()) exact_divide(it.f, MultiLaurent::constant(N, q_factorial(n[0])));
                        }
                    } catch (const std::exception& e) {
                        ok = false;
                        fail = e.what();
                    }
                    ++cases;
                }
    return {ok, std::to_string(cases) + " (p, n, element) cases" + (fail.empty() ? "" : "; " + fail)};
}

Outcome criterion4() {
    int cases = 0;
    bool ok = true;
    for (int n = 1; n <= 4; ++n)
        for (int size = 0; size <= 4; ++size)
            for (const auto& lam : partitions_of(size, n)) {
                ok = ok && hall_littlewood(lam, n).specialize_q(1) == monomial_symmetric(lam, n).specialize_q(1);
                ++cases;
            }
    return {ok, std::to_string(cases) + " (lambda, n) pairs"};
}

Outcome criterion5() {
    bool ok = true;
    const QuiverGraph g = QuiverGraph::type_a(1);
    for (int N = 1; N <= 6; ++N) {
        const auto ps = distinct_params(N);
        const QCharacter c = qchar_standard_sl2(ps);
        ok = ok && c.dimension() == (std::int64_t{1} << N);
        int ndom = 0;
        YMonomial top;
        for (const auto& [m, mult] : c.terms())
            if (is_l_dominant(m)) {
                ++ndom;
                top = m;
            }
        ok = ok && ndom == 1 && drinfeld_of(top).degree(kSl2Vertex) == N;
        QCharacter prod = QCharacter::one();
        for (const auto& a : ps) prod = qchar_multiply(prod, qchar_standard_sl2({a}));
        ok = ok && prod == c;
        const auto chi = restrict_to_character(c, g);
        std::int64_t binom = 1;
        for (int v = 0; v <= N; ++v) {
            const auto it = chi.find(IntVector{N - 2 * v});
            ok = ok && it != chi.end() && it->second == binom;
            binom = binom * (N - v) / (v + 1);
        }
        ok = ok && static_cast<int>(chi.size()) == N + 1;
    }
    return {ok, "N = 1..6"};
}

Outcome criterion6() {
    int cases = 0;
    bool ok = true;
    const QuiverGraph g = QuiverGraph::type_a(1);
    for (int N = 1; N <= 4; ++N) {
        const auto ps = distinct_params(N);
        std::vector<std::string> bases;
        for (const auto& a : ps) bases.push_back(a.base);
        for (const auto& fp : enumerate_fixed_points_sl2(ps)) {
            const YMonomial m = l_weight_of_rho(fp.dims, g, -1);
            for (const bool plus : {true, false}) {
                const LSeries a = psi_eigenvalue(m, plus, 4, {kSl2Vertex}, bases);
                const LSeries b = genweight_series(fp.dims, g, plus, 4, bases);
                ok = ok && a.series.at(kSl2Vertex) == b.series.at(kSl2Vertex);
            }
            ++cases;
        }
    }
    return {ok, std::to_string(cases) + " fixed points, both signs, order 4"};
}

Outcome criterion7() {
    bool ok = true;
    int points = 0;
    for (int N = 1; N <= 5; ++N)
        for (const auto& fp : enumerate_fixed_points_sl2(distinct_params(N))) {
            ok = ok && dim_M_rho(fp.dims, QuiverGraph::type_a(1)) == 0;
            ++points;
        }
    std::mt19937 rng(20240501);
    std::uniform_int_distribution<int> small(0, 2);
    std::uniform_int_distribution<int> shift(-3, 3);
    int corpus = 0;
    for (int n = 1; n <= 3; ++n) {
        const QuiverGraph g = QuiverGraph::type_a(n);
        const CartanData cd = cartan_matrix(g);
        for (int trial = 0; trial < 20; ++trial) {
            GradedDims d;
            for (const auto& k : g.vertices()) {
                for (int t = small(rng); t > 0; --t) d.addW(k, SpectralParam{small(rng) ? "a" : "b", shift(rng)});
                for (int t = small(rng); t > 0; --t) d.addV(k, SpectralParam{small(rng) ? "a" : "b", shift(rng)});
            }
            for (int k = 0; k < n; ++k) {
                const VertexId& id = g.vertices()[static_cast<std::size_t>(k)];
                int total = 0;
                for (const auto& l : rank_support(d, id, g)) total += rank_C_k_lambda(d, id, l, g);
                ok = ok && total == rank_Ck(cd, d.v_vector(g), d.w_vector(g), k);
            }
            ++corpus;
        }
    }
    return {ok && corpus >= 50, std::to_string(points) + " isolated fixed points, " + std::to_string(corpus) +
                                    " random graded data"};
}

Outcome criterion8() {
    bool ok = true;
    int cases = 0;
    int changes = 0;
    int tau_checks = 0;
    std::mt19937 rng(97);
    for (const auto& c : qt::stability_corpus()) {
        ok = ok && is_stable(c.data) == c.stable;
        for (int t = 0; t < 20; ++t) {
            const ADHMData e = base_change(c.data, qt::random_base_change(c.data, rng));
            ok = ok && is_stable(e) == c.stable;
            ++changes;
            if (moment_map_vanishes(e))
                for (const auto& k : e.graph.vertices()) {
                    const TauSigma ts = tau_sigma_at_point(e, k);
                    ok = ok && (ts.tau * ts.sigma).is_zero();
                    ++tau_checks;
                }
        }
        ++cases;
    }
    return {ok && cases == 10, std::to_string(cases) + " cases, " + std::to_string(changes) + " base changes, " +
                                   std::to_string(tau_checks) + " tau.sigma checks"};
}

Outcome criterion9() {
    const auto P = [](const char* s) { return SpectralParam::parse(s); };
    const std::vector<std::pair<std::vector<SpectralParam>, bool>> table = {
        {{P("a"), P("b")}, true},
        {{P("a"), P("a*e^2")}, false},
        {{P("a"), P("a")}, true},
        {{P("a")}, true},
        {{}, true},
        {{P("a"), P("a*e")}, false},
        {{P("a"), P("b"), P("b*e^-3")}, false},
        {{P("a"), P("a"), P("b"), P("b")}, true},
        {{P("a*e^2"), P("a*e^2"), P("c")}, true},
        {{P("a"), P("b*e"), P("a*e^-1")}, false},
    };
    int agree = 0;
    for (const auto& [ps, expect] : table)
        if (is_generic(ps) == expect) ++agree;
    return {agree == static_cast<int>(table.size()),
            std::to_string(agree) + "/" + std::to_string(table.size()) + " rows agree"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"relation suite", criterion1},          {"commutator normalization", criterion2},
        {"divided powers", criterion3},          {"Hall-Littlewood at q^2 = 1", criterion4},
        {"sl2 q-character", criterion5},         {"l-weight consistency", criterion6},
        {"fixed-point isolation", criterion7},   {"stability checker", criterion8},
        {"genericity", criterion9},
    };
    int failed = 0;
    const auto t0 = Clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("criterion %zu [%s]: %s (%s; %.1f s)\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), seconds_since(t));
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/%zu passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                seconds_since(t0));
    return failed == 0 ? 0 : 1;
}
