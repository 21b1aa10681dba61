#include "alg2/subvariety.hpp"

#include <algorithm>
#include <set>

namespace alg2 {

const SubvarietyData& get_subvariety(const DataFile& data, const std::string& name) {
    auto it = data.subvarieties.find(name);
    if (it == data.subvarieties.end()) throw UnknownSpec(name);
    return it->second;
}

bool subvariety_membership(const SubvarietyData& spec, const ExactLabel& label) {
    ExactTensor t = canonical_tensor(normalize_raw_label(label.family, label.params));
    return satisfies_identities(t, spec.identities);
}

bool matches_subvariety_member(const SubvarietyMember& member, const ExactLabel& label) {
    if (member.free_vars.empty()) {
        // a fixed member names one orbit; compare canonical forms so that a
        // non-representative spelling (e.g. D1(1,0)) still matches
        Env empty;
        std::vector<Rational> params;
        for (const auto& p : member.params) params.push_back(p.eval(empty));
        return normalize_raw_label(member.family, params) == label;
    }
    if (member.family != label.family) return false;
    // bind free variables from positions whose expression is that bare variable
    Env env;
    for (const auto& v : member.free_vars) {
        for (std::size_t i = 0; i < member.params.size(); ++i) {
            if (member.params[i].text() == v) {
                env[v] = label.params[i];
                break;
            }
        }
        if (!env.count(v)) return false;  // unbound pattern variable
    }
    for (std::size_t i = 0; i < member.params.size(); ++i)
        if (member.params[i].eval(env) != label.params[i]) return false;
    for (const auto& conj : member.reject_if_all_zero) {
        bool all_zero = true;
        for (const auto& e : conj) all_zero = all_zero && e.eval(env).is_zero();
        if (all_zero) return false;
    }
    return true;
}

std::vector<MemberInstance> sample_member_instances(const SubvarietyData& spec,
                                                    std::mt19937_64& rng) {
    std::vector<MemberInstance> out;
    for (const auto& m : spec.members) {
        Env env;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 500)
                throw Error("subvariety: cannot sample member " + m.display);
            env.clear();
            for (const auto& v : m.free_vars) env[v] = random_rational(rng);
            bool rejected = false;
            for (const auto& conj : m.reject_if_all_zero) {
                bool all_zero = true;
                for (const auto& e : conj) all_zero = all_zero && e.eval(env).is_zero();
                rejected = rejected || all_zero;
            }
            if (rejected) continue;
            std::vector<Rational> params;
            for (const auto& p : m.params) params.push_back(p.eval(env));
            try {
                out.push_back({&m, normalize_raw_label(m.family, params)});
                break;
            } catch (const Error&) {
                continue;  // degenerate sample (e.g. outside the family class)
            }
        }
    }
    return out;
}

namespace {

// Reachable normalized labels from `from` through the full primary graph.
std::vector<ExactLabel> reachable_labels(const DataFile& data, const ExactLabel& from) {
    std::vector<ExactLabel> out{from};
    std::set<std::string> seen{from.to_string()};
    std::size_t head = 0;
    while (head < out.size()) {
        ExactLabel cur = out[head++];
        for (const auto& next : primary_successors(data, cur))
            if (seen.insert(next.to_string()).second) out.push_back(next);
    }
    return out;
}

struct PatternNode {
    std::string display;
    const SubvarietyMember* pattern = nullptr;       // null for the k2 node
    std::vector<ExactLabel> instances;               // sampled (single: exactly one)
};

// Does the closure of pattern node `p` contain some instance of node `q`?
// Decided on reachable-label sets of p's sampled instances, matched against
// q's pattern; series sources must succeed for every sample.
bool closure_contains(const DataFile& data, const PatternNode& p, const PatternNode& q) {
    for (const auto& inst : p.instances) {
        bool found = false;
        for (const auto& lab : reachable_labels(data, inst)) {
            if (q.pattern == nullptr) {
                found = found || lab.family == Family::Trivial;
            } else {
                found = found || matches_subvariety_member(*q.pattern, lab);
            }
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

std::vector<PatternNode> build_nodes(const SubvarietyData& spec,
                                      std::mt19937_64& rng, int series_samples) {
    std::vector<PatternNode> nodes;
    for (const auto& m : spec.members) {
        PatternNode n;
        n.display = m.display;
        n.pattern = &m;
        int count = m.free_vars.empty() ? 1 : series_samples;
        std::set<std::string> seen;
        for (int s = 0; s < count; ++s) {
            for (int attempt = 0; attempt < 50; ++attempt) {
                std::mt19937_64& r = rng;
                SubvarietyData one;  // sample a single member
                one.members = {m};
                auto insts = sample_member_instances(one, r);
                if (seen.insert(insts[0].label.to_string()).second) {
                    n.instances.push_back(insts[0].label);
                    break;
                }
            }
        }
        nodes.push_back(std::move(n));
    }
    PatternNode trivial;
    trivial.display = "k2";
    trivial.instances.push_back(ExactLabel{Family::Trivial, {}});
    nodes.push_back(std::move(trivial));
    return nodes;
}

}  // namespace

ComputedGraph restricted_graph(const DataFile& data, const SubvarietyData& spec,
                               std::mt19937_64& rng, int series_samples) {
    auto nodes = build_nodes(spec, rng, series_samples);
    const std::size_t n = nodes.size();
    // full containment relation between pattern nodes
    std::vector<std::vector<bool>> contains(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) contains[i][j] = closure_contains(data, nodes[i], nodes[j]);
    ComputedGraph g;
    for (const auto& node : nodes) g.nodes.push_back(node.display);
    // covering relations: prune edges with a strictly intermediate member
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!contains[i][j] || contains[j][i]) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k) {
                if (k == i || k == j) continue;
                if (contains[i][k] && !contains[k][i] && contains[k][j] && !contains[j][k])
                    covered = false;
            }
            if (covered) g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

namespace {

// Lattice node name for a member display, when the subvariety's closure data
// lives in the curated commutative lattice.
std::optional<int> lattice_node_for(const Lattice& lattice, const std::string& display) {
    std::string name = display == "k2" ? display : "O(" + display + ")";
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
        if (lattice.nodes[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

bool lattice_reaches(const Lattice& lattice, int from, int to) {
    if (from == to) return true;
    for (const auto& [container, contained] : lattice.edges)
        if (container == from && lattice_reaches(lattice, contained, to)) return true;
    return false;
}

}  // namespace

ComponentReport subvariety_components(const DataFile& data, const SubvarietyData& spec,
                                      std::mt19937_64& rng) {
    auto nodes = build_nodes(spec, rng, 3);
    const std::size_t n = nodes.size();
    const Lattice& clat = data.commutative_lattice;

    // Containment of closure sets. Series-to-series containments are a
    // series-limit fact and come from the curated lattice; every other pair
    // is decided by degeneration reachability at sampled instances.
    std::vector<std::vector<bool>> contains(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                contains[i][j] = true;
                continue;
            }
            auto li = lattice_node_for(clat, nodes[i].display);
            auto lj = lattice_node_for(clat, nodes[j].display);
            if (li && lj)
                contains[i][j] = lattice_reaches(clat, *li, *lj);
            else
                contains[i][j] = closure_contains(data, nodes[i], nodes[j]);
        }

    ComponentReport report;
    std::vector<std::vector<std::string>> member_sets;
    auto members_of = [&](std::size_t i) {
        std::vector<std::string> members;
        for (std::size_t j = 0; j < n; ++j)
            if (contains[i][j]) members.push_back(nodes[j].display);
        std::sort(members.begin(), members.end());
        return members;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (nodes[i].pattern == nullptr) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && contains[j][i] && !contains[i][j]) maximal = false;
        if (!maximal) continue;
        std::vector<std::string> members = members_of(i);
        if (std::find(member_sets.begin(), member_sets.end(), members) != member_sets.end())
            continue;  // the same closure set under another generator name
        member_sets.push_back(members);
        Component c;
        c.generator = nodes[i].display;
        c.members = members;
        if (auto li = lattice_node_for(clat, nodes[i].display))
            c.dimension = computed_closure_dimension(clat.nodes[*li]);
        else
            c.dimension = orbit_dimension(canonical_tensor(nodes[i].instances[0])) +
                          static_cast<int>(nodes[i].pattern->free_vars.size());
        c.generated_by_single_algebra = nodes[i].pattern->free_vars.empty();
        report.components.push_back(std::move(c));
    }
    // rigid members: single algebras whose orbit closure is a component
    for (std::size_t i = 0; i < n; ++i) {
        if (nodes[i].pattern == nullptr || !nodes[i].pattern->free_vars.empty()) continue;
        std::vector<std::string> members = members_of(i);
        for (const auto& c : report.components)
            if (c.members == members) {
                report.rigid.push_back(nodes[i].display);
                break;
            }
    }
    return report;
}

const Lattice& commutative_lattice(const DataFile& data) { return data.commutative_lattice; }

}  // namespace alg2
