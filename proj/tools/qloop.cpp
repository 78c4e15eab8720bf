#include "qloop/adhm.hpp"
#include "qloop/cartan.hpp"
#include "qloop/errors.hpp"
#include "qloop/fixedpoints.hpp"
#include "qloop/hall_littlewood.hpp"
#include "qloop/json_io.hpp"
#include "qloop/relations.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace qloop;

namespace {

enum Exit { kOk = 0, kValidation = 1, kMath = 2, kIo = 3 };

std::string out_path;

void emit(const Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) std::cout << text;
    else write_text_file(out_path, text);
}

void emit_text(const std::string& text) {
    if (out_path.empty()) std::cout << text;
    else write_text_file(out_path, text);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(t, &used));
            if (used != t.size()) throw ValidationError("bad integer '" + t + "'");
        } catch (const std::logic_error&) {
            throw ValidationError("bad integer '" + t + "'");
        }
    }
    return out;
}

// "a..b" with optional signs.
std::pair<int, int> mode_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw ValidationError("mode range must look like -2..2");
    const auto lo = int_list(s.substr(0, dots));
    const auto hi = int_list(s.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw ValidationError("bad mode range '" + s + "'");
    return {lo[0], hi[0]};
}

QuiverGraph graph_of_type(const std::string& type) {
    if (type.size() < 2 || (type[0] != 'A' && type[0] != 'a')) throw ValidationError("only type A_n is built in");
    const auto n = int_list(type.substr(1));
    if (n.size() != 1 || n[0] < 1) throw ValidationError("bad type '" + type + "'");
    return QuiverGraph::type_a(n[0]);
}

Json report_json(const RelationReport& rep) {
    Json counts = Json::object();
    for (const auto& [name, c] : rep.counts) counts[name] = {{"checked", c.checked}, {"passed", c.passed}};
    Json j = {{"ok", rep.ok()}, {"cells", rep.cells}, {"counts", counts}};
    if (rep.first_failure) {
        const auto& f = *rep.first_failure;
        j["first_failure"] = {{"relation", f.relation}, {"N", f.N},        {"v", f.v},
                              {"element", f.element},   {"modes", f.modes}, {"residual", f.residual}};
    }
    return j;
}

std::string weight_label(const IntVector& top, const IntVector& wt, const CartanData& cd) {
    // top - wt = C v for type A_1 reads v = (top - wt)/2.
    std::ostringstream os;
    if (cd.C.size() == 1) {
        const int v = (top[0] - wt[0]) / 2;
        os << top[0] << "L";
        if (v > 0) os << " - " << v << "a";
        return os.str();
    }
    for (std::size_t k = 0; k < wt.size(); ++k) os << (k ? "," : "") << wt[k];
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for quantum loop algebras and quiver varieties"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    // relations check
    auto* rel = app.add_subcommand("relations", "Drinfel'd relation checks in the rank-1 model");
    rel->require_subcommand(1);
    auto* rel_check = rel->add_subcommand("check", "Run the relation grid");
    int rel_n = 3;
    int rel_nmin = 1;
    std::string rel_modes = "-2..2";
    int rel_order = 4;
    int rel_degree = 2;
    int rel_jobs = 1;
    bool rel_corrupt = false;
    rel_check->add_option("--N", rel_n, "Largest N (the grid covers n-min..N)");
    rel_check->add_option("--n-min", rel_nmin, "Smallest N");
    rel_check->add_option("--modes", rel_modes, "Mode range a..b");
    rel_check->add_option("--order", rel_order, "Series truncation order");
    rel_check->add_option("--degree", rel_degree, "Maximal x-degree of basis elements");
    rel_check->add_option("--jobs", rel_jobs, "Worker threads");
    rel_check->add_flag("--corrupt-f", rel_corrupt, "Negative control: use a wrong f-operator");

    // qchar
    auto* qc = app.add_subcommand("qchar", "q-characters and l-weights");
    qc->require_subcommand(1);
    auto* qc_std = qc->add_subcommand("standard", "q-character of a standard module");
    std::string qc_type = "A1";
    std::string qc_params;
    bool qc_table = false;
    qc_std->add_option("--type", qc_type, "Graph type (A1)");
    qc_std->add_option("--params", qc_params, "Comma separated spectral parameters, e.g. a,b*e^2")->required();
    qc_std->add_flag("--table", qc_table, "Print a text table instead of JSON");
    auto* qc_mult = qc->add_subcommand("mult", "Product of two characters");
    std::string qc_a;
    std::string qc_b;
    qc_mult->add_option("first", qc_a, "Character or monomial JSON")->required();
    qc_mult->add_option("second", qc_b, "Character or monomial JSON")->required();
    auto* qc_dom = qc->add_subcommand("dominant", "Is the monomial l-dominant");
    std::string qc_m;
    qc_dom->add_option("monomial", qc_m, "Monomial or character JSON")->required();
    auto* qc_dr = qc->add_subcommand("drinfeld", "Drinfel'd polynomials of a dominant monomial");
    qc_dr->add_option("monomial", qc_m, "Monomial JSON")->required();

    // hl
    auto* hl = app.add_subcommand("hl", "Hall-Littlewood polynomial P_lambda(x; q^2)");
    std::string hl_part;
    int hl_vars = 1;
    hl->add_option("--partition", hl_part, "Parts, comma separated")->required();
    hl->add_option("--vars", hl_vars, "Number of variables")->required();

    // dim
    auto* dim = app.add_subcommand("dim", "Dimension (v, 2w - v) of a quiver variety");
    std::string dim_graph;
    std::string dim_type;
    std::string dim_v;
    std::string dim_w;
    dim->add_option("--graph", dim_graph, "Graph JSON file");
    dim->add_option("--type", dim_type, "Built-in type such as A2");
    dim->add_option("--v", dim_v, "Comma separated v")->required();
    dim->add_option("--w", dim_w, "Comma separated w")->required();

    // adhm check
    auto* adhm = app.add_subcommand("adhm", "Explicit ADHM data");
    adhm->require_subcommand(1);
    auto* adhm_check = adhm->add_subcommand("check", "Moment map, stability and tau/sigma ranks");
    std::string adhm_file;
    adhm_check->add_option("file", adhm_file, "ADHM JSON")->required();

    // graph validate
    auto* graph = app.add_subcommand("graph", "Quiver graphs");
    graph->require_subcommand(1);
    auto* graph_val = graph->add_subcommand("validate", "Validate a graph and print its Cartan data");
    std::string graph_file;
    graph_val->add_option("file", graph_file, "Graph JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    }

    try {
        if (rel_check->parsed()) {
            RelationGrid g;
            g.n_min = rel_nmin;
            g.n_max = rel_n;
            std::tie(g.mode_min, g.mode_max) = mode_range(rel_modes);
            g.order = rel_order;
            g.max_degree = rel_degree;
            g.jobs = rel_jobs;
            g.options.corrupt_f = rel_corrupt;
            const RelationReport rep = run_relation_suite(g);
            emit(report_json(rep));
            if (!rep.ok()) {
                const auto& f = *rep.first_failure;
                std::cerr << "relation " << f.relation << " fails at N=" << f.N << " v=" << f.v << " on " << f.element
                          << "\n";
                return kMath;
            }
            return kOk;
        }
        if (qc_std->parsed()) {
            const QuiverGraph g = graph_of_type(qc_type);
            if (g.size() != 1) throw ValidationError("standard q-characters are implemented for type A1 only");
            std::vector<SpectralParam> params;
            for (const auto& p : split(qc_params, ',')) params.push_back(SpectralParam::parse(p));
            const QCharacter c = qchar_standard_sl2(params);
            const CartanData cd = cartan_matrix(g);
            YMonomial top;
            int ndom = 0;
            for (const auto& [m, mult] : c.terms())
                if (is_l_dominant(m)) {
                    top = m;
                    ++ndom;
                }
            if (ndom != 1) throw MathError("standard module character must have exactly one l-dominant monomial");
            const DrinfeldPoly P = drinfeld_of(top);
            const IntVector topw = monomial_weight(top, g);
            Json weights = Json::array();
            std::ostringstream table;
            table << "weight\tdim\n";
            const auto chi = restrict_to_character(c, g);
            for (auto it = chi.rbegin(); it != chi.rend(); ++it) {
                const std::string label = weight_label(topw, it->first, cd);
                weights.push_back({{"weight", label}, {"fund", it->first}, {"dim", it->second}});
                table << label << "\t" << it->second << "\n";
            }
            table << "dimension\t" << c.dimension() << "\n";
            table << "P(u)\t" << P.to_string(kSl2Vertex) << "\n";
            if (qc_table) {
                emit_text(table.str());
            } else {
                emit({{"character", qchar_to_json(c)},
                      {"summary", {{"dimension", c.dimension()}, {"weights", weights},
                                   {"highest", monomial_to_json(top)}, {"drinfeld", drinfeld_to_json(P)}}}});
            }
            return kOk;
        }
        if (qc_mult->parsed()) {
            emit(qchar_to_json(qchar_multiply(qchar_from_json(read_json_file(qc_a)), qchar_from_json(read_json_file(qc_b)))));
            return kOk;
        }
        if (qc_dom->parsed()) {
            const QCharacter c = qchar_from_json(read_json_file(qc_m));
            Json terms = Json::array();
            for (const auto& [m, mult] : c.terms()) {
                Json t = monomial_to_json(m);
                t["dominant"] = is_l_dominant(m);
                terms.push_back(std::move(t));
            }
            if (terms.size() == 1) emit({{"dominant", terms[0]["dominant"]}});
            else emit({{"terms", terms}});
            return kOk;
        }
        if (qc_dr->parsed()) {
            const Json j = read_json_file(qc_m);
            const YMonomial m = j.contains("Y") ? monomial_from_json(j) : [&] {
                const QCharacter c = qchar_from_json(j);
                if (c.terms().size() != 1) throw ValidationError("expected a single monomial");
                return c.terms().begin()->first;
            }();
            emit(drinfeld_to_json(drinfeld_of(m)));
            return kOk;
        }
        if (hl->parsed()) {
            emit(poly_to_json(hall_littlewood(int_list(hl_part), hl_vars)));
            return kOk;
        }
        if (dim->parsed()) {
            if (dim_graph.empty() == dim_type.empty()) throw ValidationError("give exactly one of --graph and --type");
            const QuiverGraph g = dim_graph.empty() ? graph_of_type(dim_type) : graph_from_json(read_json_file(dim_graph));
            const auto v = int_list(dim_v);
            const auto w = int_list(dim_w);
            if (static_cast<int>(v.size()) != g.size() || static_cast<int>(w.size()) != g.size())
                throw ValidationError("v and w need one entry per vertex");
            emit(dim_quiver_variety(cartan_matrix(g), v, w));
            return kOk;
        }
        if (adhm_check->parsed()) {
            const Json j = read_json_file(adhm_file);
            const ADHMData d = adhm_from_json(j);
            const auto mu = moment_map(d);
            Json residual = Json::object();
            bool mu_zero = true;
            for (int k = 0; k < d.graph.size(); ++k) {
                residual[d.graph.vertices()[static_cast<std::size_t>(k)]] = matrix_to_json(mu[static_cast<std::size_t>(k)]);
                mu_zero = mu_zero && mu[static_cast<std::size_t>(k)].is_zero();
            }
            const StabilityResult st = stability(d);
            Json out = {{"mu_residual", residual}, {"mu_zero", mu_zero}, {"stable", st.stable},
                        {"stability_iterations", st.iterations}};
            Json codim = Json::object();
            Json inj = Json::object();
            for (const auto& k : d.graph.vertices()) {
                if (mu_zero) {
                    const TauSigma ts = tau_sigma_at_point(d, k);
                    codim[k] = ts.codim_image_tau;
                    inj[k] = ts.sigma_injective;
                } else {
                    codim[k] = nullptr;
                    inj[k] = nullptr;
                }
            }
            out["codim_im_tau"] = codim;
            out["sigma_injective"] = inj;
            if (adhm_has_grading(j)) {
                std::vector<GradedBasis> vg;
                std::vector<GradedBasis> wg;
                grading_from_json(j, d, vg, wg);
                out["fixed"] = check_fixed(d, vg, wg);
            }
            emit(out);
            return kOk;
        }
        if (graph_val->parsed()) {
            const QuiverGraph g = graph_from_json(read_json_file(graph_file));
            const CartanData cd = cartan_matrix(g);
            Json m = Json::array();
            for (const auto& h : g.oriented_edges())
                m.push_back({{"out", g.vertices()[static_cast<std::size_t>(h.out)]},
                             {"in", g.vertices()[static_cast<std::size_t>(h.in)]},
                             {"m", h.m},
                             {"eps", h.eps}});
            emit({{"valid", true}, {"graph", graph_to_json(g)}, {"C", cd.C}, {"A", cd.A}, {"A_omega", cd.A_omega},
                  {"C_omega", cd.C_omega}, {"oriented_edges", m}});
            return kOk;
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const MathError& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kMath;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIo;
    }
    return kValidation;
}
