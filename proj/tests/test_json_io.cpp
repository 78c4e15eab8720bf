#include "adhm_corpus.hpp"
#include "qloop/errors.hpp"
#include "qloop/fixedpoints.hpp"
#include "qloop/hall_littlewood.hpp"
#include "qloop/json_io.hpp"
#include "qloop/rank1.hpp"

#include <doctest.h>

#include <cstdio>

using namespace qloop;

TEST_CASE("polynomials and module elements") {
    const MultiLaurent p = hall_littlewood({2, 1}, 3);
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_from_json(Json::parse(poly_to_json(p).dump())) == p);
    const LaurentQ c = LaurentQ::from_terms({{-3, Integer("123456789012345678901234567890")}, {2, -1}});
    CHECK(laurent_from_json(laurent_to_json(c)) == c);
    const GrassElement g = apply_e(1, GrassElement::vacuum(3, 2));
    CHECK(grass_from_json(grass_to_json(g)) == g);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"nvars":2,"terms":[{"x":[1],"q":{"0":"1"}}]})")), ValidationError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"nvars":1,"terms":[{"x":[1],"q":{"0":"1.5"}}]})")), ValidationError);
    CHECK_THROWS_AS(grass_from_json(Json::parse(R"({"N":3,"v":1,"poly":{"nvars":3,"terms":[{"x":[0,1,0],"q":{"0":"1"}}]}})")),
                    ValidationError);
}

TEST_CASE("characters") {
    const auto a = SpectralParam::parse("a");
    const auto b = SpectralParam::parse("b*e^-2");
    const QCharacter c = qchar_standard_sl2({a, b});
    CHECK(qchar_from_json(qchar_to_json(c)) == c);
    const YMonomial m = YMonomial::Y("1", a, 2) * YMonomial::Y("2", b, -1);
    CHECK(monomial_from_json(monomial_to_json(m)) == m);
    CHECK(qchar_from_json(monomial_to_json(m)) == QCharacter::single(m));
    CHECK(param_from_json(param_to_json(b)) == b);
    CHECK(param_from_json(Json("b*e^-2")) == b);
    GradedDims g;
    g.addW("1", a, 2);
    g.addV("1", a.shifted(1));
    CHECK(graded_dims_from_json(graded_dims_to_json(g)) == g);
    CHECK_THROWS_AS(qchar_from_json(Json::parse(R"({"terms":[{"mult":0,"Y":[]}]})")), ValidationError);
}

TEST_CASE("graphs and ADHM data") {
    const QuiverGraph g({"x", "y", "z"}, {{"x", "y"}, {"z", "y"}, {"x", "y"}});
    const QuiverGraph h = graph_from_json(graph_to_json(g));
    CHECK(h.vertices() == g.vertices());
    CHECK(graph_to_json(h) == graph_to_json(g));
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["1"],"edges":[{"out":"1","in":"1"}]})")),
                    ValidationError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), ValidationError);
    for (const auto& c : qt::stability_corpus()) {
        const ADHMData d = adhm_from_json(Json::parse(adhm_to_json(c.data).dump()));
        CHECK(adhm_to_json(d) == adhm_to_json(c.data));
        CHECK(is_stable(d) == c.stable);
    }
    const RationalMatrix m = qt::M({{Rational(-3, 7), 0}, {5, Rational(1, 2)}});
    CHECK(matrix_from_json(matrix_to_json(m), 2, 2) == m);
    CHECK(rational_from_string("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(rational_from_string("1/0"), ValidationError);
    CHECK_THROWS_AS(rational_from_string("x"), ValidationError);
}

TEST_CASE("file helpers") {
    CHECK_THROWS_AS(read_json_file("/nonexistent/qloop.json"), IoError);
    const std::string path = "qloop_json_io_test.json";
    write_text_file(path, "{not json");
    CHECK_THROWS_AS(read_json_file(path), ValidationError);
    write_text_file(path, "[1, 2]");
    CHECK(read_json_file(path) == Json::array({1, 2}));
    std::remove(path.c_str());
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/x.json", "1"), IoError);
}
