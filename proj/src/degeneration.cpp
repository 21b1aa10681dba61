#include "alg2/degeneration.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace alg2 {

std::vector<std::string> param_names(int arity) {
    static const char* kNames[4] = {"alpha", "beta", "gamma", "delta"};
    std::vector<std::string> out;
    for (int i = 0; i < arity; ++i) out.emplace_back(kNames[i]);
    return out;
}

Env bind_params(Family f, const std::vector<Rational>& values) {
    Env env;
    auto names = param_names(family_arity(f));
    for (std::size_t i = 0; i < names.size(); ++i) env[names[i]] = values[i];
    return env;
}

ExactLabel normalize_raw_label(Family f, const std::vector<Rational>& params) {
    return classify(family_tensor(f, params)).label;
}

// ---------------------------------------------------------------------------
// Reachability
// ---------------------------------------------------------------------------

namespace {

bool guards_hold(const std::vector<Expr>& guards, const Env& env) {
    for (const auto& g : guards)
        if (g.eval(env).is_zero()) return false;
    return true;
}

std::vector<Rational> eval_params(const std::vector<Expr>& exprs, const Env& env) {
    std::vector<Rational> out;
    out.reserve(exprs.size());
    for (const auto& e : exprs) out.push_back(e.eval(env));
    return out;
}

}  // namespace

std::vector<ExactLabel> primary_successors(const DataFile& data, const ExactLabel& l,
                                           const Rational& wildcard_value) {
    std::vector<ExactLabel> out;
    Env env = bind_params(l.family, l.params);
    for (const auto& edge : data.primary_edges) {
        if (edge.source != l.family) continue;
        for (const auto& target : edge.targets) {
            Env e = env;
            for (const auto& v : target.free_vars) e[v] = wildcard_value;
            if (!guards_hold(target.guards_nonzero, e)) continue;
            out.push_back(normalize_raw_label(target.family, eval_params(target.params, e)));
        }
    }
    return out;
}

bool degenerates(const DataFile& data, const ExactLabel& a, const ExactLabel& b) {
    ExactLabel from = normalize_raw_label(a.family, a.params);
    ExactLabel to = normalize_raw_label(b.family, b.params);
    if (to.family == Family::Trivial) return true;
    std::deque<ExactLabel> queue{from};
    std::set<std::string> seen{from.to_string()};
    while (!queue.empty()) {
        ExactLabel cur = queue.front();
        queue.pop_front();
        if (cur == to) return true;
        Env env = bind_params(cur.family, cur.params);
        for (const auto& edge : data.primary_edges) {
            if (edge.source != cur.family) continue;
            for (const auto& target : edge.targets) {
                // free target parameters match any member of the target family
                if (!target.free_vars.empty() && target.family == to.family) return true;
                Env e = env;
                for (const auto& v : target.free_vars) e[v] = Rational(22, 7);
                if (!guards_hold(target.guards_nonzero, e)) continue;
                ExactLabel next =
                    normalize_raw_label(target.family, eval_params(target.params, e));
                if (seen.insert(next.to_string()).second) queue.push_back(next);
            }
        }
    }
    return false;
}

int level(const DataFile& data, const ExactLabel& l) {
    ExactLabel cur = normalize_raw_label(l.family, l.params);
    if (cur.family == Family::Trivial) return 0;
    int best = 0;
    for (const auto& next : primary_successors(data, cur))
        best = std::max(best, level(data, next));
    return 1 + best;
}

bool matches_member_pattern(const MemberPattern& m, const ExactLabel& l) {
    if (m.family != l.family) return false;
    switch (m.kind) {
        case MemberPattern::Any: return true;
        case MemberPattern::Fixed: return l.params == m.fixed;
        case MemberPattern::AntiDiagonal:
            return (l.params[0] + l.params[1]).is_zero();
    }
    return false;
}

bool series_closure_contains(const DataFile& data, const std::string& series,
                             const ExactLabel& b) {
    const SeriesClosure* row = data.find_series_closure(series);
    if (!row) throw UnknownSeries(series);
    ExactLabel l = normalize_raw_label(b.family, b.params);
    for (const auto& m : row->members)
        if (matches_member_pattern(m, l)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

std::string VerifyReport::status_name() const {
    switch (status) {
        case Pass: return "PASS";
        case DegenerateBasis: return "DegenerateBasis";
        case PoleAtZero: return "PoleAtZero";
        case Mismatch: return "Mismatch";
    }
    return "?";
}

VerifyReport verify_parametrized_basis(const Tensor<RationalFunction>& source,
                                       const Mat2<RationalFunction>& basis,
                                       const ExactTensor& target) {
    if (basis.det().is_zero())
        return {VerifyReport::DegenerateBasis, "basis determinant vanishes identically"};
    Tensor<RationalFunction> nt = in_basis(source, basis);
    static const char* names[2][2] = {{"c11", "c12"}, {"c21", "c22"}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const RationalFunction& r = nt.c[i][j][k];
                if (!r.is_polynomial())
                    return {VerifyReport::PoleAtZero,
                            std::string(names[i][j]) + "^" + std::to_string(k + 1) +
                                "(t) = " + r.to_string() + " is not polynomial in t"};
                Rational at0 = r.as_polynomial().coeff(0);
                if (at0 != target.c[i][j][k])
                    return {VerifyReport::Mismatch,
                            std::string(names[i][j]) + "^" + std::to_string(k + 1) + "(0) = " +
                                at0.to_string() + ", expected " + target.c[i][j][k].to_string()};
            }
    return {};
}

namespace {

std::map<std::string, RationalFunction> lift_env(const Env& env) {
    std::map<std::string, RationalFunction> out;
    for (const auto& [k, v] : env) out.emplace(k, RationalFunction(v));
    out.emplace("t", RationalFunction::t());
    return out;
}

Mat2<RationalFunction> eval_basis(const std::array<Expr, 4>& basis,
                                  const std::map<std::string, RationalFunction>& env) {
    Vec2<RationalFunction> e1{basis[0].eval(env), basis[1].eval(env)};
    Vec2<RationalFunction> e2{basis[2].eval(env), basis[3].eval(env)};
    return Mat2<RationalFunction>::from_columns(e1, e2);
}

}  // namespace

VerifyReport verify_edge_target(const PrimaryEdge& edge, const EdgeTarget& target,
                                const Env& sample) {
    if (!guards_hold(target.guards_nonzero, sample))
        return {VerifyReport::DegenerateBasis, "instantiation guard violated at this sample"};
    auto rf_env = lift_env(sample);
    std::vector<RationalFunction> src_params;
    for (const auto& name : param_names(family_arity(edge.source)))
        src_params.push_back(rf_env.at(name));
    Tensor<RationalFunction> src = family_tensor(edge.source, src_params);
    ExactTensor tgt = family_tensor(target.family, eval_params(target.params, sample));
    return verify_parametrized_basis(src, eval_basis(target.basis, rf_env), tgt);
}

VerifyReport verify_series_certificate(const SeriesCertificate& cert, const Env& sample) {
    if (!guards_hold(cert.guards_nonzero, sample))
        return {VerifyReport::DegenerateBasis, "instantiation guard violated at this sample"};
    auto rf_env = lift_env(sample);
    std::vector<RationalFunction> src_params;
    for (const auto& e : cert.index) src_params.push_back(e.eval(rf_env));
    Tensor<RationalFunction> src = family_tensor(cert.source, src_params);
    ExactTensor tgt = family_tensor(cert.target, eval_params(cert.target_params, sample));
    return verify_parametrized_basis(src, eval_basis(cert.basis, rf_env), tgt);
}

// ---------------------------------------------------------------------------
// Separating sets
// ---------------------------------------------------------------------------

namespace {

Env set_env(const NonDegRow& row, const Env& source_sample, const ExactTensor& candidate) {
    Env env = source_sample;
    static const char* cnames[2][2] = {{"c11", "c12"}, {"c21", "c22"}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                env[std::string(cnames[i][j]) + "_" + std::to_string(k + 1)] =
                    candidate.c[i][j][k];
    for (const auto& [name, expr] : row.lets) env[name] = expr.eval(env);
    return env;
}

}  // namespace

bool separating_membership(const NonDegRow& row, const Env& source_sample,
                           const ExactTensor& candidate) {
    Env env = set_env(row, source_sample, candidate);
    for (const auto& eq : row.equations)
        if (eq.lhs.eval(env) != eq.rhs.eval(env)) return false;
    return true;
}

EvidenceReport nondegeneration_evidence(const DataFile& data, const NonDegRow& row,
                                        const Env& source_sample, std::mt19937_64& rng,
                                        const EvidenceOptions& opt) {
    EvidenceReport rep;
    std::vector<Rational> src_params = eval_params(row.source_params, source_sample);
    ExactTensor src = family_tensor(row.source, src_params);

    // (i) membership of the (possibly pre-changed) source structure
    ExactTensor base = src;
    if (row.pre_change) {
        Mat2<Rational> g{{{(*row.pre_change)[0].eval(source_sample),
                           (*row.pre_change)[1].eval(source_sample)},
                          {(*row.pre_change)[2].eval(source_sample),
                           (*row.pre_change)[3].eval(source_sample)}}};
        base = act(g, src);
    }
    rep.membership = separating_membership(row, source_sample, base);
    if (!rep.membership) rep.detail += "source structure not in the separating set; ";

    // (ii) invariance along random scaling/shear walks from the base point
    rep.invariance = true;
    for (int m = 0; m < opt.members && rep.invariance; ++m) {
        ExactTensor p = base;
        for (int j = 0; j < opt.transforms; ++j) {
            p = random_transform_in_place(rng, p);
            if (!separating_membership(row, source_sample, p)) {
                rep.invariance = false;
                rep.detail += "invariance failed after a transform walk; ";
                break;
            }
        }
    }

    // (iii) targets and their sampled orbits avoid the set
    rep.orbit_avoidance = true;
    rep.dims_consistent = true;
    int src_dim = derivation_dimension(src);
    if (src_dim != data.derivation_dims.at(row.source)) {
        rep.dims_consistent = false;
        rep.detail += "source dim Der differs from the table; ";
    }
    for (const auto& target : row.targets) {
        for (int s = 0; s < opt.target_samples; ++s) {
            Env env = source_sample;
            bool ok = false;
            for (int attempt = 0; attempt < 500 && !ok; ++attempt) {
                for (int f = 0; f < target.fresh_count; ++f)
                    env["f" + std::to_string(f)] = random_rational(rng);
                ok = true;
                for (const auto& conj : target.reject_if_all_zero) {
                    bool all_zero = true;
                    for (const auto& e : conj) all_zero = all_zero && e.eval(env).is_zero();
                    if (all_zero) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) {
                rep.orbit_avoidance = false;
                rep.detail += "could not sample target parameters for " +
                              std::string(family_name(target.family)) + "; ";
                continue;
            }
            ExactTensor tgt = family_tensor(target.family, eval_params(target.params, env));
            if (derivation_dimension(tgt) != data.derivation_dims.at(target.family)) {
                rep.dims_consistent = false;
                rep.detail += "target dim Der differs from the table; ";
            }
            if (separating_membership(row, source_sample, tgt)) {
                rep.orbit_avoidance = false;
                rep.detail += "canonical " + std::string(family_name(target.family)) +
                              " lies in the set; ";
                continue;
            }
            for (int g = 0; g < opt.orbit_samples; ++g) {
                ExactTensor moved = act(random_invertible(rng), tgt);
                if (separating_membership(row, source_sample, moved)) {
                    rep.orbit_avoidance = false;
                    rep.detail += "a basis change of " +
                                  std::string(family_name(target.family)) +
                                  " entered the set; ";
                    break;
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Lattice
// ---------------------------------------------------------------------------

int computed_closure_dimension(const LatticeNode& node) {
    return orbit_dimension(family_tensor(node.family, node.rep_params)) + node.free_params;
}

int closure_dimension(const Lattice& lattice, const std::string& set_name) {
    return computed_closure_dimension(lattice.nodes[lattice.index_of(set_name)]);
}

namespace {

void collect_descendants(const Lattice& lattice, int node, std::set<int>& out) {
    if (!out.insert(node).second) return;
    for (const auto& [container, contained] : lattice.edges)
        if (container == node) collect_descendants(lattice, contained, out);
}

}  // namespace

std::vector<std::string> lattice_descendants(const Lattice& lattice, const std::string& name) {
    std::set<int> ids;
    collect_descendants(lattice, lattice.index_of(name), ids);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
        if (ids.count(static_cast<int>(i))) out.push_back(lattice.nodes[i].name);
    return out;
}

std::vector<std::string> lattice_intersection(const Lattice& lattice, const std::string& a,
                                              const std::string& b) {
    std::set<int> da, db;
    collect_descendants(lattice, lattice.index_of(a), da);
    collect_descendants(lattice, lattice.index_of(b), db);
    std::vector<int> common;
    for (int x : da)
        if (db.count(x)) common.push_back(x);
    std::vector<std::string> out;
    for (int x : common) {
        bool maximal = true;
        for (int y : common) {
            if (x == y) continue;
            std::set<int> dy;
            collect_descendants(lattice, y, dy);
            if (dy.count(x)) maximal = false;
        }
        if (maximal) out.push_back(lattice.nodes[x].name);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

Rational random_rational(std::mt19937_64& rng, int max_abs_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

Rational random_nonzero_rational(std::mt19937_64& rng, int max_abs_num, int max_den) {
    while (true) {
        Rational r = random_rational(rng, max_abs_num, max_den);
        if (!r.is_zero()) return r;
    }
}

Mat2<Rational> random_invertible(std::mt19937_64& rng) {
    while (true) {
        Mat2<Rational> g{{{random_rational(rng, 5, 3), random_rational(rng, 5, 3)},
                          {random_rational(rng, 5, 3), random_rational(rng, 5, 3)}}};
        if (!g.det().is_zero()) return g;
    }
}

ExactTensor random_transform_in_place(std::mt19937_64& rng, const ExactTensor& t) {
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng) == 0)
        return scaling_transform(t, random_nonzero_rational(rng, 3, 2),
                                 random_nonzero_rational(rng, 3, 2));
    return shear_transform(t, random_rational(rng, 3, 2));
}

std::vector<Rational> random_label_params(std::mt19937_64& rng, Family f) {
    RepresentativeConvention<Rational> conv;
    while (true) {
        std::vector<Rational> p;
        for (int i = 0; i < family_arity(f); ++i) p.push_back(random_rational(rng));
        switch (f) {
            case Family::A4:
                p[0] = conv.sign_rep(p[0]);
                break;
            case Family::C:
                p[1] = conv.sign_rep(p[1]);
                break;
            case Family::D1: {
                auto u = conv.u_rep({p[0], p[1]});
                p = {u.first, u.second};
                break;
            }
            case Family::D2:
            case Family::D3:
                if ((p[0] + p[1]).is_one()) continue;
                break;
            case Family::E1: {
                auto gi = gamma_invariants(p[0], p[1], p[2], p[3]);
                if (gi.D.is_zero() || in_T(gi.C1) || in_T(gi.C2)) continue;
                auto rep = conv.v_rep(PairTriple<Rational>{gi.C1, gi.C2, *gi.C3});
                p = {rep[1].second, rep[0].first, rep[1].first, rep[0].second};
                break;
            }
            case Family::E2:
                if ((p[1] + p[2]).is_one()) continue;
                break;
            case Family::E3:
                if (p[2].is_zero() || p[2].is_one()) continue;
                p[2] = conv.inverse_rep(p[2]);
                if (p[2] == Rational(-1) && total_less(p[1], p[0])) std::swap(p[0], p[1]);
                break;
            default:
                break;
        }
        if (!label_domain_violation(CanonicalLabel<Rational>{f, p})) return p;
    }
}

}  // namespace alg2
