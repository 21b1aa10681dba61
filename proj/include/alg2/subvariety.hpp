#ifndef ALG2_SUBVARIETY_HPP
#define ALG2_SUBVARIETY_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "alg2/degeneration.hpp"

namespace alg2 {

const SubvarietyData& get_subvariety(const DataFile& data, const std::string& name);

/// True iff the canonical structure of the (normalized) label satisfies all
/// defining identities of the subvariety, by exact formal expansion.
bool subvariety_membership(const SubvarietyData& spec, const ExactLabel& label);

/// Does the normalized label instantiate the member pattern for some value
/// of its free variables?
bool matches_subvariety_member(const SubvarietyMember& member, const ExactLabel& label);

/// A concrete instance of a member pattern (series members get sampled
/// parameters; the label is classifier-normalized).
struct MemberInstance {
    const SubvarietyMember* pattern = nullptr;
    ExactLabel label;
};

std::vector<MemberInstance> sample_member_instances(const SubvarietyData& spec,
                                                    std::mt19937_64& rng);

/// The subvariety's primary-degeneration graph, recomputed as covering
/// relations of the restricted degeneration order at sampled parameters.
struct ComputedGraph {
    std::vector<std::string> nodes;                 // member displays plus "k2"
    std::vector<std::pair<int, int>> edges;         // covering relations
};

ComputedGraph restricted_graph(const DataFile& data, const SubvarietyData& spec,
                               std::mt19937_64& rng, int series_samples = 3);

struct Component {
    std::string generator;                           // display name of the top set
    std::vector<std::string> members;                // member displays plus "k2"
    int dimension = 0;
    bool generated_by_single_algebra = false;
};

struct ComponentReport {
    std::vector<Component> components;
    std::vector<std::string> rigid;                  // member algebras whose closure is a component
};

ComponentReport subvariety_components(const DataFile& data, const SubvarietyData& spec,
                                      std::mt19937_64& rng);

/// The closure lattice of the commutative subvariety (curated, with
/// dimensions recomputable through closure_dimension).
const Lattice& commutative_lattice(const DataFile& data);

}  // namespace alg2

#endif
