#include "alg2/data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace alg2 {

namespace {

using nlohmann::json;

Family parse_family(const json& j) {
    auto f = family_from_string(j.get<std::string>());
    if (!f) throw DataError("data: unknown family " + j.get<std::string>());
    return *f;
}

Expr parse_expr_field(const json& j) { return Expr::parse(j.get<std::string>()); }

std::vector<Expr> parse_expr_list(const json& j) {
    std::vector<Expr> out;
    for (const auto& e : j) out.push_back(parse_expr_field(e));
    return out;
}

std::array<Expr, 4> parse_expr4(const json& j) {
    if (j.size() != 4) throw DataError("data: expected 4 expressions");
    return {parse_expr_field(j[0]), parse_expr_field(j[1]), parse_expr_field(j[2]),
            parse_expr_field(j[3])};
}

std::vector<std::string> parse_string_list(const json& j) {
    std::vector<std::string> out;
    for (const auto& e : j) out.push_back(e.get<std::string>());
    return out;
}

std::vector<Rational> parse_rational_list(const json& j) {
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(Rational::parse(e.get<std::string>()));
    return out;
}

MemberPattern parse_member_pattern(const json& j) {
    MemberPattern m;
    m.family = parse_family(j.at("family"));
    std::string kind = j.value("kind", "any");
    if (kind == "any")
        m.kind = MemberPattern::Any;
    else if (kind == "fixed")
        m.kind = MemberPattern::Fixed;
    else if (kind == "antidiag")
        m.kind = MemberPattern::AntiDiagonal;
    else
        throw DataError("data: unknown member pattern kind " + kind);
    if (m.kind == MemberPattern::Fixed) m.fixed = parse_rational_list(j.at("params"));
    return m;
}

Lattice parse_lattice(const json& j) {
    Lattice l;
    for (const auto& n : j.at("nodes")) {
        LatticeNode node;
        node.name = n.at("name").get<std::string>();
        node.dim = n.at("dim").get<int>();
        node.family = parse_family(n.at("family"));
        node.rep_params = parse_rational_list(n.at("rep_params"));
        node.free_params = n.at("free_params").get<int>();
        l.nodes.push_back(std::move(node));
    }
    for (const auto& e : j.at("edges")) {
        int a = l.index_of(e[0].get<std::string>());
        int b = l.index_of(e[1].get<std::string>());
        l.edges.emplace_back(a, b);
    }
    return l;
}

// The equations of the closed upper invariant set G(Gamma), written over the
// bindings ga, gb, gc, gd for the four Gamma components.
const char* kGammaSetLets[][2] = {
    {"gD", "(ga+gc)*(gb+gd)-1"},
    {"gA", "1-ga-gb*(ga+gc)"},
    {"gB", "1-gc-gd*(ga+gc)"},
    {"gP", "(ga-1)*(gd-1)-gb*gc"},
    {"gQ", "(gb-1)*(gc-1)-ga*gd"},
};

const char* kGammaSetEquations[][2] = {
    {"c22_1", "0"},
    {"c21_1", "gc*c22_2"},
    {"c12_1", "ga*c22_2"},
    {"gB*c12_2 - gA*c21_2", "(gb*(1-gc) - gd*(1-ga))*c11_1"},
    {"gA^2*c11_2*c22_2", "(gb*c11_1 - c12_2)*(gD*c12_2 + gP*c11_1)"},
    {"gB^2*c11_2*c22_2", "(gd*c11_1 - c21_2)*(gD*c21_2 + gQ*c11_1)"},
    {"gA*gB*c11_2*c22_2", "(gb*c11_1 - c12_2)*(gD*c21_2 + gQ*c11_1)"},
    {"gA*gB*c11_2*c22_2", "(gd*c11_1 - c21_2)*(gD*c12_2 + gP*c11_1)"},
};

NonDegRow parse_nondeg(const json& j) {
    NonDegRow row;
    row.id = j.at("id").get<std::string>();
    row.source = parse_family(j.at("source"));
    static const char* kParamNames[4] = {"alpha", "beta", "gamma", "delta"};
    if (j.contains("source_params")) {
        row.source_params = parse_expr_list(j.at("source_params"));
        if (j.contains("source_free"))
            row.source_free = parse_string_list(j.at("source_free"));
        else
            for (std::size_t i = 0; i < row.source_params.size() - 1; ++i)
                row.source_free.push_back(kParamNames[i]);
    } else {
        for (int i = 0; i < family_arity(row.source); ++i) {
            row.source_free.push_back(kParamNames[i]);
            row.source_params.push_back(Expr::parse(kParamNames[i]));
        }
    }
    if (j.contains("gamma_set")) {
        auto args = parse_expr_list(j.at("gamma_set"));
        if (args.size() != 4) throw DataError("data: gamma_set needs 4 expressions");
        const char* names[4] = {"ga", "gb", "gc", "gd"};
        for (int i = 0; i < 4; ++i) row.lets.emplace_back(names[i], args[i]);
        for (const auto& [name, text] : kGammaSetLets)
            row.lets.emplace_back(name, Expr::parse(text));
        for (const auto& [lhs, rhs] : kGammaSetEquations)
            row.equations.push_back({Expr::parse(lhs), Expr::parse(rhs)});
    } else {
        if (j.contains("lets"))
            for (const auto& l : j.at("lets"))
                row.lets.emplace_back(l[0].get<std::string>(), parse_expr_field(l[1]));
        for (const auto& e : j.at("equations"))
            row.equations.push_back({parse_expr_field(e[0]), parse_expr_field(e[1])});
    }
    if (j.contains("pre_change")) row.pre_change = parse_expr4(j.at("pre_change"));
    for (const auto& t : j.at("targets")) {
        NonDegRow::Target target;
        target.family = parse_family(t.at("family"));
        target.params = parse_expr_list(t.at("params"));
        target.fresh_count = t.value("fresh", 0);
        if (t.contains("reject"))
            for (const auto& r : t.at("reject")) target.reject_if_all_zero.push_back(parse_expr_list(r));
        target.condition = t.value("condition", "");
        row.targets.push_back(std::move(target));
    }
    return row;
}

SubvarietyData parse_subvariety(const std::string& name, const json& j) {
    SubvarietyData s;
    s.name = name;
    s.identity_texts = parse_string_list(j.at("identities"));
    for (const auto& text : s.identity_texts) s.identities.push_back(parse_identity(text));
    for (const auto& m : j.at("members")) {
        SubvarietyMember member;
        member.display = m.at("display").get<std::string>();
        member.family = parse_family(m.at("family"));
        if (m.contains("free")) member.free_vars = parse_string_list(m.at("free"));
        member.params = parse_expr_list(m.at("params"));
        if (m.contains("reject"))
            for (const auto& r : m.at("reject"))
                member.reject_if_all_zero.push_back(parse_expr_list(r));
        s.members.push_back(std::move(member));
    }
    if (j.contains("graph")) {
        s.graph.nodes = parse_string_list(j.at("graph").at("nodes"));
        for (const auto& e : j.at("graph").at("edges")) {
            RestrictedGraphData::Edge edge;
            edge.src = e.at("src").get<int>();
            edge.dst = e.at("dst").get<int>();
            edge.condition = e.value("condition", "");
            s.graph.edges.push_back(edge);
        }
    }
    return s;
}

}  // namespace

int Lattice::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].name == name) return static_cast<int>(i);
    throw UnknownSet(name);
}

const PrimaryEdge* DataFile::find_edge(const std::string& id) const {
    for (const auto& e : primary_edges)
        if (e.id == id) return &e;
    return nullptr;
}

const SeriesCertificate* DataFile::find_series_certificate(const std::string& id) const {
    for (const auto& c : series_certificates)
        if (c.id == id) return &c;
    return nullptr;
}

const NonDegRow* DataFile::find_nondegeneration(const std::string& id) const {
    for (const auto& r : nondegenerations)
        if (r.id == id) return &r;
    return nullptr;
}

const SeriesClosure* DataFile::find_series_closure(const std::string& name) const {
    for (const auto& s : series_closures)
        if (s.name == name) return &s;
    return nullptr;
}

DataFile load_data(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw DataError(std::string("data: JSON parse failure: ") + e.what());
    }
    try {
        DataFile d;
        d.version = j.at("version").get<int>();
        for (const auto& [key, value] : j.at("derivation_dims").items())
            d.derivation_dims[parse_family(json(key))] = value.get<int>();
        for (const auto& [key, value] : j.at("levels").items())
            d.levels[parse_family(json(key))] = value.get<int>();
        for (const auto& e : j.at("primary_edges")) {
            PrimaryEdge edge;
            edge.id = e.at("id").get<std::string>();
            edge.source = parse_family(e.at("source"));
            for (const auto& t : e.at("targets")) {
                EdgeTarget target;
                target.family = parse_family(t.at("family"));
                target.params = parse_expr_list(t.at("params"));
                if (t.contains("free")) target.free_vars = parse_string_list(t.at("free"));
                target.basis = parse_expr4(t.at("basis"));
                if (t.contains("nonzero")) target.guards_nonzero = parse_expr_list(t.at("nonzero"));
                target.condition = t.value("condition", "");
                edge.targets.push_back(std::move(target));
            }
            d.primary_edges.push_back(std::move(edge));
        }
        for (const auto& c : j.at("series_certificates")) {
            SeriesCertificate cert;
            cert.id = c.at("id").get<std::string>();
            cert.source = parse_family(c.at("source"));
            cert.index = parse_expr_list(c.at("index"));
            cert.basis = parse_expr4(c.at("basis"));
            cert.target = parse_family(c.at("target"));
            cert.target_params = parse_expr_list(c.at("target_params"));
            if (c.contains("free")) cert.free_vars = parse_string_list(c.at("free"));
            if (c.contains("nonzero")) cert.guards_nonzero = parse_expr_list(c.at("nonzero"));
            d.series_certificates.push_back(std::move(cert));
        }
        for (const auto& r : j.at("nondegenerations")) d.nondegenerations.push_back(parse_nondeg(r));
        for (const auto& s : j.at("series_closures")) {
            SeriesClosure closure;
            closure.name = s.at("name").get<std::string>();
            for (const auto& m : s.at("members")) closure.members.push_back(parse_member_pattern(m));
            d.series_closures.push_back(std::move(closure));
        }
        d.lattice = parse_lattice(j.at("lattice"));
        d.commutative_lattice = parse_lattice(j.at("commutative_lattice"));
        for (const auto& [name, value] : j.at("subvarieties").items())
            d.subvarieties.emplace(name, parse_subvariety(name, value));
        return d;
    } catch (const DataError&) {
        throw;
    } catch (const std::exception& e) {
        throw DataError(std::string("data: malformed content: ") + e.what());
    }
}

const DataFile& bundled_data() {
    static const DataFile d = load_data(embedded_data_json());
    return d;
}

DataFile load_data_or_default(const std::string& path_override) {
    std::string path = path_override;
    if (path.empty()) {
        if (const char* env = std::getenv("ALG2_DATA")) path = env;
    }
    if (path.empty()) return bundled_data();
    std::ifstream in(path);
    if (!in) throw DataError("data: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_data(ss.str());
}

}  // namespace alg2
