#include "qloop/json_io.hpp"

#include "qloop/errors.hpp"

#include <fstream>
#include <sstream>

namespace qloop {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ValidationError("bad JSON: " + what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Integer integer_from(const Json& j) {
    Integer z;
    if (j.is_number_integer()) return Integer(j.get<long>());
    const std::string s = as_string(j, "coefficient");
    if (z.set_str(s, 10) != 0) bad("coefficient '" + s + "' is not an integer");
    return z;
}

} // namespace

Json laurent_to_json(const LaurentQ& c) {
    Json o = Json::object();
    for (const auto& [e, v] : c.terms()) o[std::to_string(e)] = v.get_str();
    return o;
}

LaurentQ laurent_from_json(const Json& j) {
    if (!j.is_object()) bad("q-coefficients must be an object");
    std::vector<LaurentQ::Term> t;
    for (const auto& [k, v] : j.items()) {
        int e = 0;
        try {
            std::size_t used = 0;
            e = std::stoi(k, &used);
            if (used != k.size()) bad("q-exponent '" + k + "'");
        } catch (const std::logic_error&) {
            bad("q-exponent '" + k + "'");
        }
        t.emplace_back(e, integer_from(v));
    }
    return LaurentQ::from_terms(std::move(t));
}

Json poly_to_json(const MultiLaurent& p) {
    Json terms = Json::array();
    for (const auto& [x, c] : p.grouped()) terms.push_back({{"x", x}, {"q", laurent_to_json(c)}});
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

MultiLaurent poly_from_json(const Json& j) {
    const int n = as_int(field(j, "nvars"), "nvars");
    if (n < 0 || n > Monomial::kMaxVars) bad("nvars out of range");
    MultiLaurent p(n);
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("terms must be an array");
    for (const auto& t : terms) {
        const Json& x = field(t, "x");
        if (!x.is_array() || static_cast<int>(x.size()) != n) bad("exponent vector length");
        std::vector<int> e;
        for (const auto& v : x) e.push_back(as_int(v, "exponent"));
        p += MultiLaurent::monomial(n, e, laurent_from_json(field(t, "q")));
    }
    return p;
}

Json grass_to_json(const GrassElement& g) { return {{"N", g.N}, {"v", g.v}, {"poly", poly_to_json(g.f)}}; }

GrassElement grass_from_json(const Json& j) {
    const int N = as_int(field(j, "N"), "N");
    const int v = as_int(field(j, "v"), "v");
    MultiLaurent f = poly_from_json(field(j, "poly"));
    try {
        return GrassElement::make(N, v, std::move(f));
    } catch (const SymmetryViolation& e) {
        throw ValidationError(e.what());
    }
}

Json param_to_json(const SpectralParam& a) { return {{"base", a.base}, {"epow", a.epow}}; }

SpectralParam param_from_json(const Json& j) {
    if (j.is_string()) return SpectralParam::parse(j.get<std::string>());
    SpectralParam a = SpectralParam::parse(as_string(field(j, "base"), "base"));
    if (a.epow != 0) bad("base must be a bare symbol");
    a.epow = as_int(field(j, "epow"), "epow");
    return a;
}

Json monomial_to_json(const YMonomial& m) {
    Json ys = Json::array();
    for (const auto& [k, e] : m.exps())
        ys.push_back({{"k", k.first}, {"base", k.second.base}, {"epow", k.second.epow}, {"exp", e}});
    return {{"Y", ys}};
}

YMonomial monomial_from_json(const Json& j) {
    const Json& ys = field(j, "Y");
    if (!ys.is_array()) bad("Y must be an array");
    YMonomial m;
    for (const auto& y : ys) {
        const std::string k = as_string(field(y, "k"), "k");
        const SpectralParam a = param_from_json(y);
        m *= YMonomial::Y(k, a, as_int(field(y, "exp"), "exp"));
    }
    return m;
}

Json qchar_to_json(const QCharacter& c) {
    Json terms = Json::array();
    for (const auto& [m, mult] : c.terms()) {
        Json t = monomial_to_json(m);
        t["mult"] = mult;
        terms.push_back(std::move(t));
    }
    return {{"dimension", c.dimension()}, {"terms", terms}};
}

QCharacter qchar_from_json(const Json& j) {
    // A bare monomial is read as a character with one term.
    if (j.is_object() && j.contains("Y") && !j.contains("terms")) return QCharacter::single(monomial_from_json(j));
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("terms must be an array");
    QCharacter c;
    for (const auto& t : terms) {
        const long mult = t.contains("mult") ? as_int(t.at("mult"), "mult") : 1;
        if (mult < 1) bad("multiplicities must be positive");
        c.add(monomial_from_json(t), mult);
    }
    return c;
}

Json drinfeld_to_json(const DrinfeldPoly& p) {
    Json roots = Json::object();
    Json text = Json::object();
    for (const auto& [k, rs] : p.roots) {
        Json a = Json::array();
        for (const auto& r : rs) a.push_back(param_to_json(r));
        roots[k] = a;
        text[k] = p.to_string(k);
    }
    return {{"P", roots}, {"text", text}};
}

Json graph_to_json(const QuiverGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"out", g.vertices()[static_cast<std::size_t>(e.out)]},
                         {"in", g.vertices()[static_cast<std::size_t>(e.in)]}});
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

QuiverGraph graph_from_json(const Json& j) {
    const Json& vs = field(j, "vertices");
    if (!vs.is_array()) bad("vertices must be an array");
    std::vector<VertexId> vertices;
    for (const auto& v : vs) vertices.push_back(as_string(v, "vertex id"));
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (j.contains("edges")) {
        if (!j.at("edges").is_array()) bad("edges must be an array");
        for (const auto& e : j.at("edges"))
            edges.emplace_back(as_string(field(e, "out"), "out"), as_string(field(e, "in"), "in"));
    }
    return {vertices, edges};
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) bad("'" + s + "' is not a rational number");
    if (r.get_den() == 0) bad("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const Json& j, int rows, int cols) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    RationalMatrix m(rows, cols);
    if (rows == 0 && j.empty()) return m;
    if (static_cast<int>(j.size()) != rows) bad("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    for (int i = 0; i < rows; ++i) {
        const Json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            bad("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            const Json& x = row.at(static_cast<std::size_t>(c));
            m(i, c) = x.is_number_integer() ? Rational(x.get<long>()) : rational_from_string(as_string(x, "entry"));
        }
    }
    return m;
}

namespace {

IntVector dims_from(const Json& j, const QuiverGraph& g, const char* what) {
    IntVector d(static_cast<std::size_t>(g.size()), 0);
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != g.size()) bad(std::string(what) + " has the wrong length");
        for (std::size_t k = 0; k < j.size(); ++k) d[k] = as_int(j[k], what);
        return d;
    }
    if (!j.is_object()) bad(std::string(what) + " must be an object or array");
    for (const auto& [k, v] : j.items()) d[static_cast<std::size_t>(g.vertex_index(k))] = as_int(v, what);
    return d;
}

// Index of the p-th (1-based) edge joining out -> in as oriented edge.
int oriented_index(const QuiverGraph& g, int out, int in, int p) {
    int seen = 0;
    const auto& H = g.oriented_edges();
    for (std::size_t h = 0; h < H.size(); ++h) {
        if (H[h].out == out && H[h].in == in && ++seen == p) return static_cast<int>(h);
    }
    bad("no edge " + g.vertices()[static_cast<std::size_t>(out)] + " -> " + g.vertices()[static_cast<std::size_t>(in)] +
        " with index " + std::to_string(p));
}

} // namespace

Json adhm_to_json(const ADHMData& d) {
    Json v = Json::object();
    Json w = Json::object();
    Json i = Json::object();
    Json jj = Json::object();
    for (int k = 0; k < d.graph.size(); ++k) {
        const auto& id = d.graph.vertices()[static_cast<std::size_t>(k)];
        v[id] = d.v[static_cast<std::size_t>(k)];
        w[id] = d.w[static_cast<std::size_t>(k)];
        i[id] = matrix_to_json(d.i[static_cast<std::size_t>(k)]);
        jj[id] = matrix_to_json(d.j[static_cast<std::size_t>(k)]);
    }
    Json B = Json::array();
    const auto& H = d.graph.oriented_edges();
    for (std::size_t h = 0; h < H.size(); ++h) {
        int p = 0;
        for (std::size_t x = 0; x <= h; ++x)
            if (H[x].out == H[h].out && H[x].in == H[h].in) ++p;
        B.push_back({{"out", d.graph.vertices()[static_cast<std::size_t>(H[h].out)]},
                     {"in", d.graph.vertices()[static_cast<std::size_t>(H[h].in)]},
                     {"index", p},
                     {"matrix", matrix_to_json(d.B[h])}});
    }
    return {{"graph", graph_to_json(d.graph)}, {"v", v}, {"w", w}, {"B", B}, {"i", i}, {"j", jj}};
}

ADHMData adhm_from_json(const Json& j) {
    QuiverGraph g = graph_from_json(field(j, "graph"));
    const IntVector v = dims_from(field(j, "v"), g, "v");
    const IntVector w = dims_from(field(j, "w"), g, "w");
    ADHMData d = ADHMData::zero(g, v, w);
    if (j.contains("B")) {
        const Json& bs = j.at("B");
        if (!bs.is_array()) bad("B must be an array");
        for (const auto& b : bs) {
            const int out = g.vertex_index(as_string(field(b, "out"), "out"));
            const int in = g.vertex_index(as_string(field(b, "in"), "in"));
            const int p = b.contains("index") ? as_int(b.at("index"), "index") : 1;
            const int h = oriented_index(g, out, in, p);
            d.B[static_cast<std::size_t>(h)] = matrix_from_json(field(b, "matrix"), v[static_cast<std::size_t>(in)], v[static_cast<std::size_t>(out)]);
        }
    }
    for (const char* key : {"i", "j"}) {
        if (!j.contains(key)) continue;
        const Json& ms = j.at(key);
        if (!ms.is_object()) bad(std::string(key) + " must be an object keyed by vertex");
        for (const auto& [id, m] : ms.items()) {
            const auto k = static_cast<std::size_t>(g.vertex_index(id));
            if (std::string(key) == "i") d.i[k] = matrix_from_json(m, v[k], w[k]);
            else d.j[k] = matrix_from_json(m, w[k], v[k]);
        }
    }
    d.validate();
    return d;
}

bool adhm_has_grading(const Json& j) { return j.is_object() && j.contains("grading"); }

void grading_from_json(const Json& j, const ADHMData& d, std::vector<GradedBasis>& vg, std::vector<GradedBasis>& wg) {
    const Json& gr = field(j, "grading");
    auto read = [&](const char* key, const IntVector& dims, std::vector<GradedBasis>& out) {
        out.clear();
        const Json& side = field(gr, key);
        for (int k = 0; k < d.graph.size(); ++k) {
            const auto& id = d.graph.vertices()[static_cast<std::size_t>(k)];
            const int n = dims[static_cast<std::size_t>(k)];
            GradedBasis b{RationalMatrix::identity(n), {}};
            if (!side.contains(id)) {
                if (n != 0) bad(std::string("grading.") + key + " lacks vertex " + id);
                out.push_back(b);
                continue;
            }
            const Json& e = side.at(id);
            if (e.contains("basis")) b.basis = matrix_from_json(e.at("basis"), n, n);
            const Json& labels = field(e, "labels");
            if (!labels.is_array()) bad("labels must be an array");
            for (const auto& l : labels) b.labels.push_back(param_from_json(l));
            out.push_back(std::move(b));
        }
    };
    read("V", d.v, vg);
    read("W", d.w, wg);
}

Json graded_dims_to_json(const GradedDims& g) {
    auto side = [](const std::map<YMonomial::Key, int>& m) {
        Json a = Json::array();
        for (const auto& [k, d] : m) a.push_back({{"k", k.first}, {"param", k.second.to_string()}, {"dim", d}});
        return a;
    };
    return {{"V", side(g.V)}, {"W", side(g.W)}};
}

GradedDims graded_dims_from_json(const Json& j) {
    GradedDims g;
    for (const char* key : {"V", "W"}) {
        if (!j.contains(key)) continue;
        if (!j.at(key).is_array()) bad(std::string(key) + " must be an array");
        for (const auto& e : j.at(key)) {
            const std::string k = as_string(field(e, "k"), "k");
            const SpectralParam p = param_from_json(field(e, "param"));
            const int d = as_int(field(e, "dim"), "dim");
            if (std::string(key) == "V") g.addV(k, p, d);
            else g.addW(k, p, d);
        }
    }
    return g;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path + "'");
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("cannot write '" + path + "'");
}

} // namespace qloop
