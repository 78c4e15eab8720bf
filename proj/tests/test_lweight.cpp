#include "qloop/errors.hpp"
#include "qloop/lweight.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace qloop;

namespace {

SpectralParam P(const std::string& s) { return SpectralParam::parse(s); }

YMonomial Y(const VertexId& k, const std::string& a, int e = 1) { return YMonomial::Y(k, P(a), e); }

QuiverGraph double_edge() { return QuiverGraph({"1", "2"}, {{"1", "2"}, {"1", "2"}}); }

// Y_b + Y_{b e^2}^-1
QCharacter fundamental(const std::string& b) {
    QCharacter c = QCharacter::single(Y("1", b));
    c.add(Y("1", b + "*e^2", -1));
    return c;
}

} // namespace

TEST_CASE("spectral parameters") {
    CHECK(P("a").epow == 0);
    CHECK(P("a*e") == SpectralParam{"a", 1});
    CHECK(P("b*e^-3") == SpectralParam{"b", -3});
    CHECK(SpectralParam{"a", 2}.to_string() == "a*e^2");
    CHECK(P(SpectralParam{"z", -1}.to_string()) == SpectralParam{"z", -1});
    CHECK_THROWS_AS(P(""), ValidationError);
    CHECK_THROWS_AS(P("a*e^x"), ValidationError);
    CHECK_THROWS_AS(P("a*f^2"), ValidationError);
}

TEST_CASE("A monomials") {
    const QuiverGraph a1 = QuiverGraph::type_a(1);
    CHECK(a_monomial("1", P("a"), a1) == Y("1", "a*e") * Y("1", "a*e^-1"));
    const QuiverGraph a2 = QuiverGraph::type_a(2);
    CHECK(a_monomial("1", P("a"), a2) == Y("1", "a*e") * Y("1", "a*e^-1") * Y("2", "a", -1));
    const YMonomial d = a_monomial("1", P("a"), double_edge());
    CHECK(d.exponent("2", P("a*e")) == -1);
    CHECK(d.exponent("2", P("a*e^-1")) == -1);
    CHECK(d.exponent("2", P("a")) == 0);
    for (const QuiverGraph& g : {a1, a2, QuiverGraph::type_a(3), double_edge()}) {
        const CartanData cd = cartan_matrix(g);
        for (int k = 0; k < g.size(); ++k) {
            const YMonomial m = a_monomial(g.vertices()[static_cast<std::size_t>(k)], P("c"), g);
            const IntVector wt = monomial_weight(m, g);
            for (int l = 0; l < g.size(); ++l) CHECK(wt[static_cast<std::size_t>(l)] == cd.C[l][k]);
        }
    }
}

TEST_CASE("dominance and Drinfeld polynomials") {
    CHECK(is_l_dominant(Y("1", "a")));
    CHECK(drinfeld_of(Y("1", "a")).degree("1") == 1);
    CHECK(drinfeld_of(Y("1", "a")).to_string("1") == "(1 - u*a)");
    CHECK_FALSE(is_l_dominant(Y("1", "a") * Y("1", "a*e^2", -1)));
    CHECK_THROWS_AS(drinfeld_of(Y("1", "a", -1)), ValidationError);
    CHECK(is_l_dominant(YMonomial()));
    CHECK(drinfeld_of(YMonomial()).degree("1") == 0);
    CHECK(drinfeld_of(YMonomial()).to_string("1") == "1");
    const YMonomial m = Y("1", "a", 2) * Y("2", "b");
    CHECK(is_l_dominant(m * Y("2", "a*e")));
    CHECK(drinfeld_of(m).degree("1") == 2);
    CHECK(Y("1", "a") * Y("1", "a", -1) == YMonomial());
    CHECK(m.pow(2) * m.inverse() == m);
}

TEST_CASE("psi eigenvalues") {
    const LSeries s = psi_eigenvalue(Y("1", "a"), true, 3, {"1", "2"});
    const auto& ps = s.series.at("1");
    const LaurentQ eps = LaurentQ::q_power(1);
    CHECK(ps[0] == qt::cst(1, eps));
    // eps (1 - a/(eps z)) / (1 - a eps/z) = eps + (eps^2 - 1) a / z + ...
    CHECK(ps[1] == qt::mono(1, {1}, qt::lq({{2, 1}, {0, -1}})));
    CHECK(ps[2] == qt::mono(1, {2}, qt::lq({{3, 1}, {1, -1}})));
    CHECK(s.series.at("2") == TruncatedSeries::constant(1, 3, qt::cst(1, 1)));
    const LSeries m = psi_eigenvalue(Y("1", "a"), false, 3, {"1"});
    CHECK(m.series.at("1")[0] == qt::cst(1, LaurentQ::q_power(-1)));
    const LSeries two = psi_eigenvalue(Y("1", "a") * Y("1", "b"), true, 2, {"1"});
    CHECK(two.series.at("1")[0] == qt::cst(2, LaurentQ::q_power(2)));
    const LSeries one = psi_eigenvalue(YMonomial(), true, 2, {"1"});
    CHECK(one.series.at("1") == TruncatedSeries::constant(0, 2, qt::cst(0, 1)));
}

TEST_CASE("psi of dominant monomials matches the Drinfeld polynomial") {
    const std::vector<YMonomial> samples = {
        Y("1", "a"), Y("1", "a", 2), Y("1", "a") * Y("1", "a*e^2"), Y("1", "a") * Y("2", "b*e^-1"),
        Y("1", "a") * Y("2", "a*e^3", 2) * Y("1", "b*e^-2")};
    for (const auto& mon : samples)
        for (const bool plus : {true, false}) {
            const LSeries a = psi_eigenvalue(mon, plus, 4, {"1", "2"});
            const LSeries b = psi_from_drinfeld(drinfeld_of(mon), plus, 4, {"1", "2"}, a.bases);
            for (const auto& k : {"1", "2"}) CHECK(a.series.at(k) == b.series.at(k));
        }
}

TEST_CASE("q-character products and restriction") {
    const QCharacter a = fundamental("a");
    CHECK(qchar_multiply(a, QCharacter::one()) == a);
    const QCharacter ab = qchar_multiply(a, fundamental("b"));
    CHECK(ab.terms().size() == 4);
    CHECK(ab.dimension() == 4);
    QCharacter big = QCharacter::one();
    for (const auto* b : {"a", "b", "c", "d"}) big = qchar_multiply(big, fundamental(b));
    CHECK(big.dimension() == 16);
    const QuiverGraph g = QuiverGraph::type_a(1);
    const auto chi = restrict_to_character(big, g);
    CHECK(chi == std::map<IntVector, std::int64_t>{{{-4}, 1}, {{-2}, 4}, {{0}, 6}, {{2}, 4}, {{4}, 1}});
    CHECK(restrict_to_character(QCharacter::single(Y("1", "a")), g) == std::map<IntVector, std::int64_t>{{{1}, 1}});
    std::int64_t total = 0;
    for (const auto& [w, n] : chi) total += n;
    CHECK(total == big.dimension());
    // the same parameter twice: Y_a^2 + 2 Y_a Y_{a e^2}^-1 + Y_{a e^2}^-2
    const QCharacter aa = qchar_multiply(a, a);
    CHECK(aa.terms().size() == 3);
    CHECK(aa.terms().at(Y("1", "a") * Y("1", "a*e^2", -1)) == 2);
}

TEST_CASE("A-inverse factorization") {
    const QuiverGraph g = QuiverGraph::type_a(2);
    const YMonomial top = Y("1", "a");
    const YMonomial low = top * a_monomial("1", P("a*e"), g).inverse() * a_monomial("2", P("a*e^2"), g).inverse();
    const auto f = a_inverse_factors(low, top, g);
    CHECK(f.size() == 2);
    CHECK_THROWS_AS(a_inverse_factors(Y("1", "b"), top, g), MathError);
    CHECK(a_inverse_factors(top, top, g).empty());
}
