#ifndef ALG2_DATA_HPP
#define ALG2_DATA_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alg2/expr.hpp"
#include "alg2/families.hpp"
#include "alg2/identity.hpp"

namespace alg2 {

/// The bundled graph/certificate data (data/alg2_data.json at build time).
const char* embedded_data_json();

/// One target of a primary-degeneration edge: parameter expressions over the
/// source parameters (alpha, beta, gamma, delta) plus optional free
/// variables, and the parametrized basis certifying the degeneration.
struct EdgeTarget {
    Family family = Family::Trivial;
    std::vector<Expr> params;
    std::vector<std::string> free_vars;       // e.g. the free alpha of E4 -> E5(alpha)
    std::array<Expr, 4> basis;                // E1^t = (b0, b1), E2^t = (b2, b3), in t
    std::vector<Expr> guards_nonzero;         // instantiation guards
    std::string condition;                     // display form of the parameter condition
};

struct PrimaryEdge {
    std::string id;
    Family source = Family::Trivial;
    std::vector<EdgeTarget> targets;
};

/// A series-closure certificate (Theorem inf2 rows and the substituted-index
/// rows of the flexible subvariety): a parametrized index feeding the source
/// family's parameters plus a parametrized basis.
struct SeriesCertificate {
    std::string id;
    Family source = Family::Trivial;
    std::vector<Expr> index;                  // in t and the free variables
    std::array<Expr, 4> basis;
    Family target = Family::Trivial;
    std::vector<Expr> target_params;          // in the free variables
    std::vector<std::string> free_vars;
    std::vector<Expr> guards_nonzero;         // sampling guards on the free variables
};

struct SetEquation {
    Expr lhs, rhs;
};

/// A separating-set row of a non-degeneration table.
struct NonDegRow {
    struct Target {
        Family family = Family::Trivial;
        std::vector<Expr> params;                       // over source params + f0,f1,...
        int fresh_count = 0;
        std::vector<std::vector<Expr>> reject_if_all_zero;  // sample rejection rules
        std::string condition;
    };

    std::string id;
    Family source = Family::Trivial;
    std::vector<std::string> source_free;               // sampled variable names
    std::vector<Expr> source_params;                    // family parameters over them
    std::vector<std::pair<std::string, Expr>> lets;     // sequential local bindings
    std::vector<SetEquation> equations;                 // over c11_1..c22_2, params, lets
    std::optional<std::array<Expr, 4>> pre_change;      // g, row-major, over source params
    std::vector<Target> targets;
};

/// Membership pattern of a series-closure row or subvariety member list.
struct MemberPattern {
    enum Kind { Any, Fixed, AntiDiagonal } kind = Any;
    Family family = Family::Trivial;
    std::vector<Rational> fixed;              // Fixed: the exact parameters
};

struct SeriesClosure {
    std::string name;                          // e.g. "D2'(*)"
    std::vector<MemberPattern> members;
};

struct LatticeNode {
    std::string name;                          // e.g. "O(D2'(*))", "O(A2)", "k2"
    int dim = 0;
    Family family = Family::Trivial;
    std::vector<Rational> rep_params;          // a generic member, for the dimension check
    int free_params = 0;
};

struct Lattice {
    std::vector<LatticeNode> nodes;
    std::vector<std::pair<int, int>> edges;    // (container, contained), by node index

    int index_of(const std::string& name) const;
};

/// A subvariety member family: parameter expressions over free variables,
/// with rejection rules encoding the domain restriction.
struct SubvarietyMember {
    std::string display;                       // e.g. "E2c(*)", "A1(1/2)"
    Family family = Family::Trivial;
    std::vector<std::string> free_vars;
    std::vector<Expr> params;
    std::vector<std::vector<Expr>> reject_if_all_zero;
};

struct RestrictedGraphData {
    std::vector<std::string> nodes;            // member display names + "k2"
    struct Edge {
        int src = 0, dst = 0;
        std::string condition;
    };
    std::vector<Edge> edges;
};

struct SubvarietyData {
    std::string name;
    std::vector<std::string> identity_texts;
    std::vector<TermIdentity> identities;
    std::vector<SubvarietyMember> members;
    RestrictedGraphData graph;                 // the curated subvariety figure
};

struct DataFile {
    int version = 0;
    std::map<Family, int> derivation_dims;     // the Corollaries' dim Aut table
    std::map<Family, int> levels;              // the level table
    std::vector<PrimaryEdge> primary_edges;
    std::vector<SeriesCertificate> series_certificates;
    std::vector<NonDegRow> nondegenerations;
    std::vector<SeriesClosure> series_closures;
    Lattice lattice;                           // the full closure lattice
    Lattice commutative_lattice;               // the commutative closure lattice
    std::map<std::string, SubvarietyData> subvarieties;

    const PrimaryEdge* find_edge(const std::string& id) const;
    const SeriesCertificate* find_series_certificate(const std::string& id) const;
    const NonDegRow* find_nondegeneration(const std::string& id) const;
    const SeriesClosure* find_series_closure(const std::string& name) const;
};

/// Parses a data file; throws DataError on malformed content.
DataFile load_data(const std::string& json_text);

/// The bundled data, parsed once.
const DataFile& bundled_data();

/// Loads from an explicit path, the ALG2_DATA environment variable, or the
/// bundled copy, in that order of preference.
DataFile load_data_or_default(const std::string& path_override);

}  // namespace alg2

#endif
