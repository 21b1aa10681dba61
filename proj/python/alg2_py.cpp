#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "alg2/json_io.hpp"
#include "alg2/subvariety.hpp"

namespace py = pybind11;
using namespace alg2;

namespace {

const DataFile& data() { return bundled_data(); }

py::dict label_dict(const ExactLabel& l) {
    py::dict d;
    d["family"] = family_name(l.family);
    py::list params;
    for (const auto& p : l.params) params.append(p.to_string());
    d["params"] = params;
    d["label"] = l.to_string();
    return d;
}

template <class K>
py::dict classification_dict(const Classification<K>& c) {
    py::dict d;
    d["family"] = family_name(c.label.family);
    py::list params;
    for (const auto& p : c.label.params) params.append(p.to_string());
    d["params"] = params;
    d["label"] = c.label.to_string();
    py::list witness;
    for (int r = 0; r < 2; ++r) {
        py::list row;
        for (int col = 0; col < 2; ++col) row.append(c.witness.m[r][col].to_string());
        witness.append(row);
    }
    d["witness"] = witness;
    return d;
}

py::dict py_classify(const std::string& document_json) {
    InputDocument doc = parse_input_document(document_json);
    if (doc.numeric) return classification_dict(classify(doc.num));
    return classification_dict(classify(doc.exact));
}

py::dict py_classify_label(const std::string& label_text) {
    return label_dict(parse_label(label_text));
}

bool py_isomorphic(const std::string& a, const std::string& b) {
    InputDocument da = parse_input_document(a), db = parse_input_document(b);
    if (da.numeric != db.numeric)
        throw InvalidInput("isomorphic: both documents must use the same backend");
    return da.numeric ? is_isomorphic(da.num, db.num) : is_isomorphic(da.exact, db.exact);
}

bool py_degenerates(const std::string& a, const std::string& b) {
    return degenerates(data(), parse_label(a), parse_label(b));
}

int py_level(const std::string& l) { return level(data(), parse_label(l)); }

bool py_series_contains(const std::string& series, const std::string& l) {
    return series_closure_contains(data(), series, parse_label(l));
}

py::dict py_identities(const std::string& document_json) {
    InputDocument doc = parse_input_document(document_json);
    py::dict out;
    auto check = [&](const char* name, const std::vector<std::string>& texts) {
        std::vector<TermIdentity> parsed;
        for (const auto& t : texts) parsed.push_back(parse_identity(t));
        out[name] = doc.numeric ? satisfies_identities(doc.num, parsed)
                                : satisfies_identities(doc.exact, parsed);
    };
    check("commutative", {"x*y = y*x"});
    check("anticommutative", {"x*x = 0"});
    check("flexible", {"(x*y)*x = x*(y*x)"});
    check("bicommutative", {"x*(y*z) = y*(x*z)", "(x*y)*z = (x*z)*y"});
    return out;
}

py::dict py_components(const std::string& variety) {
    std::mt19937_64 rng(20240811);
    ComponentReport rep = subvariety_components(data(), get_subvariety(data(), variety), rng);
    py::dict d;
    py::list comps;
    for (const auto& c : rep.components) {
        py::dict jc;
        jc["generator"] = c.generator;
        jc["members"] = c.members;
        jc["dimension"] = c.dimension;
        comps.append(jc);
    }
    d["components"] = comps;
    d["rigid"] = rep.rigid;
    return d;
}

bool py_verify_edge(const std::string& id, int samples) {
    std::mt19937_64 rng(424242);
    if (const PrimaryEdge* e = data().find_edge(id)) {
        for (const auto& target : e->targets)
            for (int s = 0; s < samples; ++s) {
                Env env = bind_params(e->source, random_label_params(rng, e->source));
                for (const auto& v : target.free_vars) env[v] = random_rational(rng);
                if (!verify_edge_target(*e, target, env).ok()) return false;
            }
        return true;
    }
    if (const SeriesCertificate* cert = data().find_series_certificate(id)) {
        for (int s = 0; s < samples; ++s) {
            Env env;
            for (int attempt = 0; attempt < 400; ++attempt) {
                env.clear();
                for (const auto& v : cert->free_vars) env[v] = random_rational(rng);
                bool ok = true;
                for (const auto& g : cert->guards_nonzero)
                    ok = ok && !g.eval(env).is_zero();
                if (ok) break;
            }
            if (!verify_series_certificate(*cert, env).ok()) return false;
        }
        return true;
    }
    throw UnknownSet(id);
}

bool py_verify_nondegeneration(const std::string& id) {
    const NonDegRow* row = data().find_nondegeneration(id);
    if (!row) throw UnknownSet(id);
    std::mt19937_64 rng(424243);
    Env env;
    if (static_cast<int>(row->source_free.size()) == family_arity(row->source)) {
        auto params = random_label_params(rng, row->source);
        for (std::size_t i = 0; i < row->source_free.size(); ++i)
            env[row->source_free[i]] = params[i];
    } else {
        for (const auto& v : row->source_free) env[v] = random_nonzero_rational(rng);
    }
    EvidenceOptions opt;
    opt.members = 20;
    opt.transforms = 10;
    opt.orbit_samples = 100;
    return nondegeneration_evidence(data(), *row, env, rng, opt).pass();
}

int py_closure_dimension(const std::string& name) {
    return closure_dimension(data().lattice, name);
}

std::vector<std::string> py_lattice_intersection(const std::string& a, const std::string& b) {
    return lattice_intersection(data().lattice, a, b);
}

int py_derivation_dimension(const std::string& label_text) {
    return derivation_dimension(canonical_tensor(parse_label(label_text)));
}

}  // namespace

PYBIND11_MODULE(_alg2, m) {
    m.doc() = "Exact classification, degenerations and subvarieties of 2-dimensional algebras";

    py::register_exception<NotRepresentable>(m, "NotRepresentableError");
    py::register_exception<InvalidInput>(m, "InvalidInputError");
    py::register_exception<ParseError>(m, "ParseFailure");

    m.def("classify", &py_classify, py::arg("document_json"),
          "Classify a structure-constant document (JSON text); returns family, "
          "parameters and the exact witness basis change.");
    m.def("classify_label", &py_classify_label, py::arg("label"),
          "Normalize a label such as 'D2(2,3)' to its canonical form.");
    m.def("isomorphic", &py_isomorphic, py::arg("document_a"), py::arg("document_b"));
    m.def("degenerates", &py_degenerates, py::arg("label_a"), py::arg("label_b"),
          "Does the first algebra degenerate to the second?");
    m.def("level", &py_level, py::arg("label"));
    m.def("series_contains", &py_series_contains, py::arg("series"), py::arg("label"));
    m.def("identities", &py_identities, py::arg("document_json"));
    m.def("components", &py_components, py::arg("variety"));
    m.def("verify_edge", &py_verify_edge, py::arg("id"), py::arg("samples") = 5);
    m.def("verify_nondegeneration", &py_verify_nondegeneration, py::arg("id"));
    m.def("closure_dimension", &py_closure_dimension, py::arg("set_name"));
    m.def("lattice_intersection", &py_lattice_intersection, py::arg("a"), py::arg("b"));
    m.def("derivation_dimension", &py_derivation_dimension, py::arg("label"));
}
