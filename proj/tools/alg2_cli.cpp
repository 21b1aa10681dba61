#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alg2/json_io.hpp"
#include "alg2/subvariety.hpp"

using namespace alg2;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotRepresentable = 3;
constexpr int kExitUnknown = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string data_path;
    std::string backend;  // "", "exact", "numeric"
    double tol = Numeric::kDefaultEps;
    bool tol_set = false;
};

InputDocument load_document(const std::string& path, const Options& opt) {
    InputDocument doc = parse_input_document(read_file(path));
    if (opt.tol_set) {
        if (!doc.numeric && opt.backend != "numeric")
            throw ParseError("--tol applies to the numeric backend only");
        doc.tolerance = opt.tol;
    }
    if (opt.backend == "numeric" && !doc.numeric) {
        doc.numeric = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    doc.num.c[i][j][k] =
                        Numeric(doc.exact.c[i][j][k].to_double(), 0.0, doc.tolerance);
    } else if (opt.backend == "exact" && doc.numeric) {
        throw ParseError("numeric documents cannot be forced onto the exact backend");
    } else if (doc.numeric && opt.tol_set) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    Numeric& v = doc.num.c[i][j][k];
                    v = Numeric(v.value(), doc.tolerance);
                }
    }
    return doc;
}

int cmd_classify(const std::string& path, const Options& opt) {
    InputDocument doc = load_document(path, opt);
    if (doc.numeric)
        std::cout << classification_to_json(classify(doc.num)) << "\n";
    else
        std::cout << classification_to_json(classify(doc.exact)) << "\n";
    return kExitTrue;
}

int cmd_isomorphic(const std::string& a, const std::string& b, const Options& opt) {
    InputDocument da = load_document(a, opt);
    InputDocument db = load_document(b, opt);
    if (da.numeric != db.numeric)
        throw ParseError("isomorphic: both documents must use the same backend");
    bool iso = da.numeric ? is_isomorphic(da.num, db.num) : is_isomorphic(da.exact, db.exact);
    json j;
    j["isomorphic"] = iso;
    std::cout << j.dump() << "\n";
    return iso ? kExitTrue : kExitFalse;
}

int cmd_degenerates(const DataFile& data, const std::string& a, const std::string& b) {
    bool d = degenerates(data, parse_label(a), parse_label(b));
    json j;
    j["degenerates"] = d;
    std::cout << j.dump() << "\n";
    return d ? kExitTrue : kExitFalse;
}

int cmd_series_contains(const DataFile& data, const std::string& series,
                        const std::string& label) {
    bool c = series_closure_contains(data, series, parse_label(label));
    json j;
    j["series"] = series;
    j["contains"] = c;
    std::cout << j.dump() << "\n";
    return c ? kExitTrue : kExitFalse;
}

int cmd_level(const DataFile& data, const std::string& label) {
    json j;
    j["level"] = level(data, parse_label(label));
    std::cout << j.dump() << "\n";
    return kExitTrue;
}

int cmd_identities(const std::string& path, const std::vector<std::string>& extra,
                   const Options& opt) {
    InputDocument doc = load_document(path, opt);
    json j;
    auto check = [&](const std::string& name, const std::vector<std::string>& ids) {
        std::vector<TermIdentity> parsed;
        for (const auto& t : ids) parsed.push_back(parse_identity(t));
        j[name] = doc.numeric ? satisfies_identities(doc.num, parsed)
                              : satisfies_identities(doc.exact, parsed);
    };
    check("commutative", {"x*y = y*x"});
    check("anticommutative", {"x*x = 0"});
    check("flexible", {"(x*y)*x = x*(y*x)"});
    check("bicommutative", {"x*(y*z) = y*(x*z)", "(x*y)*z = (x*z)*y"});
    for (const auto& text : extra) check(text, {text});
    std::cout << j.dump() << "\n";
    return kExitTrue;
}

int cmd_components(const DataFile& data, const std::string& variety) {
    const SubvarietyData& spec = get_subvariety(data, variety);
    std::mt19937_64 rng(20240811);
    ComponentReport report = subvariety_components(data, spec, rng);
    json j;
    j["variety"] = variety;
    json comps = json::array();
    for (const auto& c : report.components) {
        json jc;
        jc["generator"] = c.generator;
        jc["members"] = c.members;
        jc["dimension"] = c.dimension;
        comps.push_back(jc);
    }
    j["components"] = comps;
    j["rigid"] = report.rigid;
    std::cout << j.dump() << "\n";
    return kExitTrue;
}

int cmd_verify(const DataFile& data, const std::string& edge_id, const std::string& nondeg_id,
               bool all, int samples) {
    std::mt19937_64 rng(987654321);
    json results = json::array();
    bool ok = true;

    auto run_edge = [&](const PrimaryEdge& edge) {
        for (std::size_t ti = 0; ti < edge.targets.size(); ++ti) {
            const EdgeTarget& target = edge.targets[ti];
            for (int s = 0; s < samples; ++s) {
                Env env = bind_params(edge.source,
                                      random_label_params(rng, edge.source));
                for (const auto& v : target.free_vars) env[v] = random_rational(rng);
                VerifyReport r = verify_edge_target(edge, target, env);
                json j;
                j["id"] = edge.id;
                j["target"] = static_cast<int>(ti);
                j["status"] = r.status_name();
                if (!r.ok()) j["detail"] = r.detail;
                results.push_back(j);
                ok = ok && r.ok();
            }
        }
    };
    auto run_series = [&](const SeriesCertificate& cert) {
        for (int s = 0; s < samples; ++s) {
            Env env;
            bool sampled = false;
            for (int attempt = 0; attempt < 200 && !sampled; ++attempt) {
                env.clear();
                for (const auto& v : cert.free_vars) env[v] = random_rational(rng);
                sampled = true;
                for (const auto& g : cert.guards_nonzero)
                    sampled = sampled && !g.eval(env).is_zero();
            }
            VerifyReport r = verify_series_certificate(cert, env);
            json j;
            j["id"] = cert.id;
            j["status"] = r.status_name();
            if (!r.ok()) j["detail"] = r.detail;
            results.push_back(j);
            ok = ok && r.ok();
        }
    };
    auto run_nondeg = [&](const NonDegRow& row) {
        Env env;
        if (static_cast<int>(row.source_free.size()) == family_arity(row.source)) {
            auto params = random_label_params(rng, row.source);
            for (std::size_t i = 0; i < row.source_free.size(); ++i)
                env[row.source_free[i]] = params[i];
        } else {
            for (const auto& v : row.source_free) env[v] = random_nonzero_rational(rng);
        }
        EvidenceOptions opt;
        opt.members = 20;
        opt.transforms = 10;
        opt.orbit_samples = 100;
        EvidenceReport r = nondegeneration_evidence(data, row, env, rng, opt);
        json j;
        j["id"] = row.id;
        j["membership"] = r.membership;
        j["invariance"] = r.invariance;
        j["orbit_avoidance"] = r.orbit_avoidance;
        j["dims_consistent"] = r.dims_consistent;
        j["status"] = r.pass() ? "PASS" : "FAIL";
        if (!r.pass()) j["detail"] = r.detail;
        results.push_back(j);
        ok = ok && r.pass();
    };

    if (all) {
        for (const auto& e : data.primary_edges) run_edge(e);
        for (const auto& c : data.series_certificates) run_series(c);
        for (const auto& r : data.nondegenerations) run_nondeg(r);
    } else if (!edge_id.empty()) {
        if (const PrimaryEdge* e = data.find_edge(edge_id))
            run_edge(*e);
        else if (const SeriesCertificate* c = data.find_series_certificate(edge_id))
            run_series(*c);
        else
            return kExitUnknown;
    } else if (!nondeg_id.empty()) {
        const NonDegRow* r = data.find_nondegeneration(nondeg_id);
        if (!r) return kExitUnknown;
        run_nondeg(*r);
    } else {
        return kExitParse;
    }
    json out;
    out["results"] = results;
    out["status"] = ok ? "PASS" : "FAIL";
    std::cout << out.dump() << "\n";
    return ok ? kExitTrue : kExitFalse;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"') out += "\\\"";
        else out += c;
    }
    return out;
}

int cmd_export_dot(const DataFile& data, const std::string& which) {
    std::ostringstream dot;
    if (which == "full") {
        dot << "digraph degenerations {\n  rankdir=TB;\n";
        for (Family f : all_families()) {
            std::string label = family_name(f);
            auto names = param_names(family_arity(f));
            if (!names.empty()) {
                label += "(";
                for (std::size_t i = 0; i < names.size(); ++i)
                    label += (i ? "," : "") + names[i];
                label += ")";
            }
            if (f == Family::Trivial) label = "k2";
            dot << "  \"" << family_name(f) << "\" [label=\"" << dot_escape(label) << "\"];\n";
        }
        for (const auto& e : data.primary_edges)
            for (const auto& t : e.targets) {
                dot << "  \"" << family_name(e.source) << "\" -> \"" << family_name(t.family)
                    << "\"";
                if (!t.condition.empty())
                    dot << " [condition=\"" << dot_escape(t.condition) << "\" label=\""
                        << dot_escape(t.condition) << "\"]";
                dot << ";\n";
            }
        dot << "}\n";
    } else if (which == "flexible" || which == "bicommutative" || which == "commutative" ||
               which == "anticommutative") {
        const SubvarietyData& spec = get_subvariety(data, which);
        dot << "digraph " << which << " {\n  rankdir=TB;\n";
        for (std::size_t i = 0; i < spec.graph.nodes.size(); ++i)
            dot << "  n" << i << " [label=\"" << dot_escape(spec.graph.nodes[i]) << "\"];\n";
        for (const auto& e : spec.graph.edges) {
            dot << "  n" << e.src << " -> n" << e.dst;
            if (!e.condition.empty())
                dot << " [condition=\"" << dot_escape(e.condition) << "\" label=\""
                    << dot_escape(e.condition) << "\"]";
            dot << ";\n";
        }
        dot << "}\n";
    } else if (which == "lattice" || which == "commutative-lattice") {
        const Lattice& lat = which == "lattice" ? data.lattice : data.commutative_lattice;
        dot << "digraph lattice {\n  rankdir=LR;\n";
        for (std::size_t i = 0; i < lat.nodes.size(); ++i)
            dot << "  n" << i << " [label=\"" << dot_escape(lat.nodes[i].name) << " (dim "
                << lat.nodes[i].dim << ")\"];\n";
        for (const auto& [container, contained] : lat.edges)
            dot << "  n" << container << " -> n" << contained << ";\n";
        dot << "}\n";
    } else {
        return kExitUnknown;
    }
    std::cout << dot.str();
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification, degenerations and subvarieties of 2-dimensional algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--data", opt.data_path, "Override the bundled graph data file");
    app.add_option("--backend", opt.backend, "Force the backend (exact|numeric)")
        ->check(CLI::IsMember({"exact", "numeric"}));
    auto* tol = app.add_option("--tol", opt.tol, "Zero tolerance (numeric backend)");

    std::string file_a, file_b, label_a, label_b, series, variety = "flexible";
    std::vector<std::string> extra_identities;
    std::string edge_id, nondeg_id, graph_name = "full";
    bool verify_all = false;
    int samples = 5;

    auto* c_classify = app.add_subcommand("classify", "Classify an algebra document");
    c_classify->add_option("file", file_a)->required();

    auto* c_iso = app.add_subcommand("isomorphic", "Decide isomorphism of two documents");
    c_iso->add_option("file1", file_a)->required();
    c_iso->add_option("file2", file_b)->required();

    auto* c_deg = app.add_subcommand("degenerates", "Does label A degenerate to label B?");
    c_deg->add_option("labelA", label_a)->required();
    c_deg->add_option("labelB", label_b)->required();

    auto* c_series = app.add_subcommand("series-contains",
                                        "Is the label in the closure of the named series?");
    c_series->add_option("series", series)->required();
    c_series->add_option("label", label_b)->required();

    auto* c_level = app.add_subcommand("level", "Level of a canonical label");
    c_level->add_option("label", label_a)->required();

    auto* c_ident = app.add_subcommand("identities", "Evaluate identities on a document");
    c_ident->add_option("file", file_a)->required();
    c_ident->add_option("--identity", extra_identities, "Extra identity, e.g. '(x*y)*x = x*(y*x)'");

    auto* c_comp = app.add_subcommand("components", "Irreducible components of a subvariety");
    c_comp->add_option("--variety", variety, "flexible|bicommutative|commutative|anticommutative")
        ->required();

    auto* c_verify = app.add_subcommand("verify", "Verify certificates from the data file");
    c_verify->add_option("--edge", edge_id, "Primary edge or series certificate id");
    c_verify->add_option("--nondeg", nondeg_id, "Non-degeneration row id");
    c_verify->add_flag("--all", verify_all, "Verify every certificate and row");
    c_verify->add_option("--samples", samples, "Parameter samples per certificate");

    auto* c_dot = app.add_subcommand("export-dot", "Emit a graph in Graphviz DOT form");
    c_dot->add_option("--graph", graph_name,
                      "full|flexible|bicommutative|commutative|lattice|commutative-lattice");

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }
    opt.tol_set = tol->count() > 0;

    try {
        DataFile data = load_data_or_default(opt.data_path);
        if (c_classify->parsed()) return cmd_classify(file_a, opt);
        if (c_iso->parsed()) return cmd_isomorphic(file_a, file_b, opt);
        if (c_deg->parsed()) return cmd_degenerates(data, label_a, label_b);
        if (c_series->parsed()) return cmd_series_contains(data, series, label_b);
        if (c_level->parsed()) return cmd_level(data, label_a);
        if (c_ident->parsed()) return cmd_identities(file_a, extra_identities, opt);
        if (c_comp->parsed()) return cmd_components(data, variety);
        if (c_verify->parsed()) return cmd_verify(data, edge_id, nondeg_id, verify_all, samples);
        if (c_dot->parsed()) return cmd_export_dot(data, graph_name);
    } catch (const NotRepresentable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotRepresentable;
    } catch (const UnknownSeries& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const UnknownSet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const UnknownSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
