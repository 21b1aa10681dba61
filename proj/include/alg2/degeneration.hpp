#ifndef ALG2_DEGENERATION_HPP
#define ALG2_DEGENERATION_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "alg2/classifier.hpp"
#include "alg2/data.hpp"
#include "alg2/poly.hpp"

namespace alg2 {

using ExactLabel = CanonicalLabel<Rational>;
using ExactTensor = Tensor<Rational>;
using Env = std::map<std::string, Rational>;

/// Positional parameter names used by data-file expressions.
std::vector<std::string> param_names(int arity);
Env bind_params(Family f, const std::vector<Rational>& values);

/// Canonical form of a possibly raw label (parameters outside the
/// representative sets are folded back through the classifier).
ExactLabel normalize_raw_label(Family f, const std::vector<Rational>& params);

// ---------------------------------------------------------------------------
// Degeneration graph reachability
// ---------------------------------------------------------------------------

/// Concrete primary-degeneration successors of a canonical label. Wildcard
/// targets (a free target parameter, as in E4 -> E5(alpha)) instantiate at
/// `wildcard_value`.
std::vector<ExactLabel> primary_successors(const DataFile& data, const ExactLabel& l,
                                           const Rational& wildcard_value = Rational(22, 7));

/// True iff B is reachable from A through primary edges, B is trivial, or
/// A and B are isomorphic. Both labels are normalized first.
bool degenerates(const DataFile& data, const ExactLabel& a, const ExactLabel& b);

/// Length of the longest proper-degeneration chain from the zero algebra.
int level(const DataFile& data, const ExactLabel& l);

/// Membership in the closure of a named series per the series-closure table.
bool series_closure_contains(const DataFile& data, const std::string& series,
                             const ExactLabel& b);
bool matches_member_pattern(const MemberPattern& m, const ExactLabel& l);

// ---------------------------------------------------------------------------
// Certificate verification over Q(t)
// ---------------------------------------------------------------------------

struct VerifyReport {
    enum Status { Pass, DegenerateBasis, PoleAtZero, Mismatch } status = Pass;
    std::string detail;
    bool ok() const { return status == Pass; }
    std::string status_name() const;
};

/// Core check: the structure constants of `source` (over Q(t)) in the given
/// parametrized basis must be polynomials in t whose value at t = 0 is the
/// target tensor, entry by entry.
VerifyReport verify_parametrized_basis(const Tensor<RationalFunction>& source,
                                       const Mat2<RationalFunction>& basis,
                                       const ExactTensor& target);

/// Verifies one conditional target of a primary edge at a parameter sample
/// (source parameters plus any free target variables).
VerifyReport verify_edge_target(const PrimaryEdge& edge, const EdgeTarget& target,
                                const Env& sample);

/// Verifies a series-closure certificate (parametrized index + basis) at a
/// sample of its free variables.
VerifyReport verify_series_certificate(const SeriesCertificate& cert, const Env& sample);

// ---------------------------------------------------------------------------
// Separating sets and non-degeneration evidence
// ---------------------------------------------------------------------------

/// Exact evaluation of all equations of the row's separating set.
bool separating_membership(const NonDegRow& row, const Env& source_sample,
                           const ExactTensor& candidate);

struct EvidenceReport {
    bool membership = false;        // (i)  source (after pre-change) lies in R
    bool invariance = false;        // (ii) R is stable under sampled transforms
    bool orbit_avoidance = false;   // (iii) target orbits stay outside R
    bool dims_consistent = false;   // (iv) dim Der values match the table
    std::string detail;
    bool pass() const { return membership && invariance && orbit_avoidance && dims_consistent; }
};

struct EvidenceOptions {
    int members = 100;         // random walk members of R
    int transforms = 20;       // transforms applied (and re-checked) per member
    int orbit_samples = 500;   // random basis changes per target
    int target_samples = 3;    // distinct target parameter samples per target family
};

EvidenceReport nondegeneration_evidence(const DataFile& data, const NonDegRow& row,
                                        const Env& source_sample, std::mt19937_64& rng,
                                        const EvidenceOptions& opt = {});

// ---------------------------------------------------------------------------
// Orbit and closure dimensions; the closure lattice
// ---------------------------------------------------------------------------

template <class K>
int orbit_dimension(const Tensor<K>& t) {
    return 4 - derivation_dimension(t);
}

int computed_closure_dimension(const LatticeNode& node);
int closure_dimension(const Lattice& lattice, const std::string& set_name);

/// Names of all sets contained in the named one (reflexive-transitive).
std::vector<std::string> lattice_descendants(const Lattice& lattice, const std::string& name);

/// The meet per the lattice path rule: the union of maximal common
/// descendants of the two named sets.
std::vector<std::string> lattice_intersection(const Lattice& lattice, const std::string& a,
                                              const std::string& b);

// ---------------------------------------------------------------------------
// Sampling helpers shared by the evidence checks, tests and the CLI
// ---------------------------------------------------------------------------

Rational random_rational(std::mt19937_64& rng, int max_abs_num = 9, int max_den = 9);
Rational random_nonzero_rational(std::mt19937_64& rng, int max_abs_num = 9, int max_den = 9);
Mat2<Rational> random_invertible(std::mt19937_64& rng);
ExactTensor random_transform_in_place(std::mt19937_64& rng, const ExactTensor& t);

/// A random parameter tuple in the family's canonical domain.
std::vector<Rational> random_label_params(std::mt19937_64& rng, Family f);

}  // namespace alg2

#endif
