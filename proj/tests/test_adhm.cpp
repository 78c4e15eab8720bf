#include "adhm_corpus.hpp"
#include "qloop/errors.hpp"
#include "qloop/fixedpoints.hpp"

#include <doctest.h>

using namespace qloop;
using qt::M;

TEST_CASE("moment map") {
    const ADHMData z = ADHMData::zero(QuiverGraph::type_a(2), {1, 2}, {1, 1});
    CHECK(moment_map_vanishes(z));
    const auto cases = qt::stability_corpus();
    CHECK(moment_map(cases[0].data)[0] == M({{0}}));
    // A2 with both orientations: mu_1 = eps(h-bar) B_h-bar B_h, mu_2 = eps(h) B_h B_h-bar
    ADHMData d = ADHMData::zero(QuiverGraph::type_a(2), {1, 1}, {0, 0});
    qt::set_B(d, 0, 1, M({{2}}));
    qt::set_B(d, 1, 0, M({{3}}));
    const auto mu = moment_map(d);
    CHECK(mu[0] == M({{-6}}));
    CHECK(mu[1] == M({{6}}));
    d.B[0] = M({{1, 0}});
    CHECK_THROWS_AS(d.validate(), ValidationError);
}

TEST_CASE("stability corpus") {
    for (const auto& c : qt::stability_corpus()) {
        CAPTURE(c.name);
        const StabilityResult r = stability(c.data);
        CHECK(r.stable == c.stable);
        int total = 0;
        for (int vk : c.data.v) total += vk;
        CHECK(r.iterations <= total);
    }
}

TEST_CASE("stability under base change") {
    std::mt19937 rng(11);
    for (const auto& c : qt::stability_corpus())
        for (int t = 0; t < 5; ++t) {
            CAPTURE(c.name);
            const ADHMData e = base_change(c.data, qt::random_base_change(c.data, rng));
            CHECK(is_stable(e) == c.stable);
            CHECK(moment_map_vanishes(e) == moment_map_vanishes(c.data));
        }
}

TEST_CASE("tau and sigma") {
    const ADHMData z = ADHMData::zero(QuiverGraph::type_a(1), {2}, {1});
    CHECK(tau_sigma_at_point(z, "1").codim_image_tau == 2);
    for (const auto& c : qt::stability_corpus()) {
        if (!moment_map_vanishes(c.data)) continue;
        for (const auto& k : c.data.graph.vertices()) {
            CAPTURE(c.name);
            const TauSigma ts = tau_sigma_at_point(c.data, k);
            CHECK((ts.tau * ts.sigma).is_zero());
            if (c.stable) CHECK(ts.sigma_injective);
        }
    }
    const TauSigma ts = tau_sigma_at_point(qt::stability_corpus()[0].data, "1");
    CHECK(ts.rank_sigma == 1);
    CHECK(ts.codim_image_tau == 0);
    ADHMData bad = ADHMData::zero(QuiverGraph::type_a(1), {1}, {1});
    bad.i[0] = M({{1}});
    bad.j[0] = M({{1}});
    CHECK_THROWS_AS(tau_sigma_at_point(bad, "1"), MathError);
}

TEST_CASE("torus fixed points") {
    const QuiverGraph a1 = QuiverGraph::type_a(1);
    const auto P = [](const char* s) { return SpectralParam::parse(s); };
    ADHMData d = ADHMData::zero(a1, {1}, {2});
    d.j[0] = M({{1}, {0}});
    const std::vector<GradedBasis> vg{{RationalMatrix::identity(1), {P("a*e")}}};
    const std::vector<GradedBasis> wg{{RationalMatrix::identity(2), {P("a"), P("b")}}};
    CHECK(check_fixed(d, vg, wg));
    CHECK(check_fixed(ADHMData::zero(a1, {1}, {2}), vg, wg));
    ADHMData off = d;
    off.j[0] = M({{1}, {1}});
    CHECK_FALSE(check_fixed(off, vg, wg));
    // a non-coordinate eigenbasis of W
    ADHMData tilted = ADHMData::zero(a1, {1}, {2});
    tilted.j[0] = M({{1}, {1}});
    const std::vector<GradedBasis> wg2{{M({{1, 1}, {1, -1}}), {P("a"), P("b")}}};
    CHECK(check_fixed(tilted, vg, wg2));
    const std::vector<GradedBasis> sing{{M({{1, 1}, {1, 1}}), {P("a"), P("b")}}};
    CHECK_THROWS_AS(check_fixed(tilted, vg, sing), ValidationError);
    // every enumerated sl2 fixed point, realized with j sending each V-line to its W-line
    for (const auto& fp : enumerate_fixed_points_sl2({P("a"), P("b"), P("c")})) {
        const int n = fp.N;
        const int v = fp.level();
        ADHMData e = ADHMData::zero(a1, {v}, {n});
        std::vector<SpectralParam> vl;
        for (int r = 0; r < v; ++r) {
            e.j[0](fp.subset[static_cast<std::size_t>(r)], r) = 1;
            vl.push_back(fp.w_params[static_cast<std::size_t>(fp.subset[static_cast<std::size_t>(r)])].shifted(1));
        }
        CHECK(is_stable(e));
        CHECK(check_fixed(e, {{RationalMatrix::identity(v), vl}}, {{RationalMatrix::identity(n), fp.w_params}}));
    }
}
