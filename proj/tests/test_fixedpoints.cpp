#include "qloop/errors.hpp"
#include "qloop/fixedpoints.hpp"

#include <doctest.h>

#include <random>

using namespace qloop;

namespace {

SpectralParam P(const std::string& s) { return SpectralParam::parse(s); }

YMonomial Y(const std::string& a, int e = 1) { return YMonomial::Y(kSl2Vertex, P(a), e); }

std::vector<SpectralParam> params(std::initializer_list<const char*> names) {
    std::vector<SpectralParam> out;
    for (const auto* n : names) out.push_back(P(n));
    return out;
}

GradedDims sl2(std::initializer_list<const char*> w, std::initializer_list<const char*> v) {
    GradedDims g;
    for (const auto* a : w) g.addW(kSl2Vertex, P(a));
    for (const auto* a : v) g.addV(kSl2Vertex, P(a));
    return g;
}

} // namespace

TEST_CASE("dimension of fixed components") {
    const QuiverGraph g = QuiverGraph::type_a(1);
    CHECK(dim_M_rho(sl2({"a"}, {}), g) == 0);
    CHECK(dim_M_rho(sl2({"a"}, {"a*e"}), g) == 0);
    CHECK(dim_M_rho(sl2({"a", "a"}, {"a*e"}), g) == 1);
    CHECK(dim_M_rho(sl2({"a", "b"}, {"a*e", "b*e"}), g) == 0);
}

TEST_CASE("graded ranks refine the total") {
    const QuiverGraph g = QuiverGraph::type_a(1);
    const GradedDims w = sl2({"a"}, {});
    CHECK(rank_C_k_lambda(w, "1", P("a*e^-1"), g) == 1);
    CHECK(rank_C_k_lambda(w, "1", P("a"), g) == 0);
    const GradedDims x = sl2({"a"}, {"a*e"});
    CHECK(rank_C_k_lambda(x, "1", P("a*e"), g) == -1);
    CHECK(rank_C_k_lambda(x, "1", P("a*e^-1"), g) == 0);
    int total = 0;
    for (const auto& l : rank_support(x, "1", g)) total += rank_C_k_lambda(x, "1", l, g);
    CHECK(total == rank_Ck(cartan_matrix(g), x.v_vector(g), x.w_vector(g), 0));
}

TEST_CASE("l-weights of fixed components") {
    const QuiverGraph g = QuiverGraph::type_a(1);
    CHECK(l_weight_of_rho(sl2({"a", "b"}, {}), g) == Y("a*e^-1") * Y("b*e^-1"));
    CHECK(l_weight_of_rho(sl2({"a"}, {"a*e"}), g) == Y("a*e", -1));
    const GradedDims g1 = sl2({"a"}, {"a*e"});
    const GradedDims g2 = sl2({"b", "c"}, {"c*e"});
    CHECK(l_weight_of_rho(g1 + g2, g) == l_weight_of_rho(g1, g) * l_weight_of_rho(g2, g));
    const QuiverGraph a2 = QuiverGraph::type_a(2);
    GradedDims h;
    h.addW("1", P("a"));
    h.addV("1", P("a*e"));
    h.addV("2", P("a*e^2"));
    CHECK(l_weight_of_rho(h, a2) == YMonomial::Y("2", P("a*e^2"), -1));
}

TEST_CASE("genericity") {
    CHECK(is_generic(params({"a", "b", "c"})));
    CHECK_FALSE(is_generic(params({"a", "a*e^2"})));
    CHECK(is_generic(params({"a", "a"})));
    CHECK(is_generic(std::vector<SpectralParam>{}));
    GradedDims g;
    g.addW("1", P("a"));
    g.addW("2", P("a*e"));
    CHECK_FALSE(is_generic(g, QuiverGraph::type_a(2)));
    CHECK_THROWS_AS(is_generic(g, QuiverGraph({"1", "2"}, {{"1", "2"}, {"1", "2"}})), ValidationError);
    CHECK_THROWS_AS(enumerate_fixed_points_sl2(params({"a", "a*e"})), ValidationError);
}

TEST_CASE("sl2 fixed points") {
    CHECK(enumerate_fixed_points_sl2(params({"a"})).size() == 2);
    CHECK(enumerate_fixed_points_sl2(params({"a", "b", "c"}), 1).size() == 3);
    CHECK(enumerate_fixed_points_sl2(params({"a", "b", "c"})).size() == 8);
    CHECK(enumerate_fixed_points_sl2(params({"a", "a"})).size() == 4);
    CHECK(euler_product_check({1}, params({"a"})));
    CHECK(euler_product_check({3}, params({"a", "b", "c"})));
    CHECK(euler_product_check({0}, {}));
    for (const auto& fp : enumerate_fixed_points_sl2(params({"a", "b", "c", "d"}))) {
        CHECK(fp.dims.v_params_in_w_orbits());
        CHECK(dim_M_rho(fp.dims, QuiverGraph::type_a(1)) == 0);
    }
}

TEST_CASE("standard module q-characters") {
    const QuiverGraph g = QuiverGraph::type_a(1);
    const QCharacter one = qchar_standard_sl2(params({"a"}));
    QCharacter expect = QCharacter::single(Y("a*e^-1"));
    expect.add(Y("a*e", -1));
    CHECK(one == expect);
    const QCharacter ab = qchar_standard_sl2(params({"a", "b"}));
    CHECK(ab == qchar_multiply(one, qchar_standard_sl2(params({"b"}))));
    CHECK(restrict_to_character(ab, g) == std::map<IntVector, std::int64_t>{{{-2}, 1}, {{0}, 2}, {{2}, 1}});
    const auto ps = params({"a", "b", "c", "d", "e1"});
    for (std::size_t split = 1; split < ps.size(); ++split) {
        const std::vector<SpectralParam> l(ps.begin(), ps.begin() + static_cast<long>(split));
        const std::vector<SpectralParam> r(ps.begin() + static_cast<long>(split), ps.end());
        CHECK(qchar_standard_sl2(ps) == qchar_multiply(qchar_standard_sl2(l), qchar_standard_sl2(r)));
    }
    const QCharacter c = qchar_standard_sl2(ps);
    YMonomial top;
    int ndom = 0;
    for (const auto& [m, mult] : c.terms())
        if (is_l_dominant(m)) {
            top = m;
            ++ndom;
        }
    CHECK(ndom == 1);
    CHECK(drinfeld_of(top).degree(kSl2Vertex) == 5);
    for (const auto& [m, mult] : c.terms()) CHECK_NOTHROW(a_inverse_factors(m, top, g));
}

TEST_CASE("random graded data over type A") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> small(0, 2);
    std::uniform_int_distribution<int> shift(-3, 3);
    int checked = 0;
    for (int n = 1; n <= 3; ++n) {
        const QuiverGraph g = QuiverGraph::type_a(n);
        const CartanData cd = cartan_matrix(g);
        for (int trial = 0; trial < 20; ++trial) {
            GradedDims d;
            for (const auto& k : g.vertices()) {
                for (int t = small(rng); t > 0; --t) d.addW(k, SpectralParam{"a", shift(rng)});
                for (int t = small(rng); t > 0; --t) d.addV(k, SpectralParam{small(rng) ? "a" : "b", shift(rng)});
            }
            for (int k = 0; k < n; ++k) {
                const VertexId& id = g.vertices()[static_cast<std::size_t>(k)];
                int total = 0;
                for (const auto& l : rank_support(d, id, g)) total += rank_C_k_lambda(d, id, l, g);
                CHECK(total == rank_Ck(cd, d.v_vector(g), d.w_vector(g), k));
            }
            CHECK_NOTHROW(l_weight_of_rho(d, g, 4));
            ++checked;
        }
    }
    CHECK(checked == 60);
}
