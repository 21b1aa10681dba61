#ifndef ALG2_FAMILIES_HPP
#define ALG2_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "alg2/scalar.hpp"
#include "alg2/tensor.hpp"

namespace alg2 {

enum class Family {
    A1, A2, A3, A4, B1, B2, B3, C, D1, D2, D3, E1, E2, E3, E4, E5, Trivial
};

constexpr int kFamilyCount = 17;

int family_arity(Family f);
const char* family_name(Family f);
std::optional<Family> family_from_string(const std::string& name);
std::vector<Family> all_families();

/// A canonical structure named by its family and parameter tuple. Domain
/// constraints are validated at construction.
template <class K>
struct CanonicalLabel {
    Family family = Family::Trivial;
    std::vector<K> params;

    bool operator==(const CanonicalLabel& o) const {
        return family == o.family && params == o.params;
    }
    bool operator!=(const CanonicalLabel& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = family_name(family);
        if (!params.empty()) {
            s += "(";
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i) s += ",";
                s += params[i].to_string();
            }
            s += ")";
        }
        return s;
    }
};

/// The multiplication table of the named family at the given parameters,
/// over any scalar field (no domain validation; used for sweeps and for
/// parametrized indices over Q(t)).
template <class K>
Tensor<K> family_tensor(Family f, const std::vector<K>& p) {
    if (static_cast<int>(p.size()) != family_arity(f))
        throw InvalidInput(std::string("family ") + family_name(f) + ": expected " +
                           std::to_string(family_arity(f)) + " parameters");
    const K zero(0), one(1);
    Tensor<K> t = Tensor<K>::zero();
    auto set = [&](int i, int j, K c1, K c2) {
        t.c[i - 1][j - 1][0] = std::move(c1);
        t.c[i - 1][j - 1][1] = std::move(c2);
    };
    switch (f) {
        case Family::A1:
            set(1, 1, one, one);
            set(1, 2, zero, p[0]);
            set(2, 1, zero, one - p[0]);
            break;
        case Family::A2:
            set(1, 1, zero, one);
            set(1, 2, zero, one);
            set(2, 1, zero, zero - one);
            break;
        case Family::A3:
            set(1, 1, zero, one);
            break;
        case Family::A4:
            set(1, 1, p[0], one);
            set(1, 2, one, p[0]);
            set(2, 1, zero - one, zero);
            break;
        case Family::B1:
            set(1, 2, one - p[0], one);
            set(2, 1, p[0], zero - one);
            break;
        case Family::B2:
            set(1, 2, one - p[0], zero);
            set(2, 1, p[0], zero);
            break;
        case Family::B3:
            set(1, 2, zero, one);
            set(2, 1, zero, zero - one);
            break;
        case Family::C:
            set(1, 1, zero, one);
            set(1, 2, one - p[0], p[1]);
            set(2, 1, p[0], zero - p[1]);
            set(2, 2, zero, one);
            break;
        case Family::D1:
            set(1, 1, one, zero);
            set(1, 2, one - p[0], p[1]);
            set(2, 1, p[0], zero - p[1]);
            break;
        case Family::D2:
            set(1, 1, one, zero);
            set(1, 2, zero, p[0]);
            set(2, 1, zero, p[1]);
            break;
        case Family::D3:
            set(1, 1, one, zero);
            set(1, 2, one, p[0]);
            set(2, 1, zero - one, p[1]);
            break;
        case Family::E1:
            set(1, 1, one, zero);
            set(1, 2, p[0], p[1]);
            set(2, 1, p[2], p[3]);
            set(2, 2, zero, one);
            break;
        case Family::E2:
            set(1, 1, one, zero);
            set(1, 2, one - p[0], p[1]);
            set(2, 1, p[0], p[2]);
            set(2, 2, zero, one);
            break;
        case Family::E3:
            set(1, 1, one, zero);
            set(1, 2, (one - p[0]) * p[2], p[1] / p[2]);
            set(2, 1, p[0] * p[2], (one - p[1]) / p[2]);
            set(2, 2, zero, one);
            break;
        case Family::E4:
            set(1, 1, one, zero);
            set(1, 2, one, one);
            set(2, 2, zero, one);
            break;
        case Family::E5:
            set(1, 1, one, zero);
            set(1, 2, one - p[0], p[0]);
            set(2, 1, p[0], one - p[0]);
            set(2, 2, zero, one);
            break;
        case Family::Trivial:
            break;
    }
    return t;
}

template <class K>
Tensor<K> canonical_tensor(const CanonicalLabel<K>& label) {
    return family_tensor(label.family, label.params);
}

/// The invariants attached to an E-class parameter tuple Gamma:
/// C1 = (beta, delta), C2 = (gamma, alpha),
/// D = (alpha+gamma)(beta+delta) - 1 and, when D != 0,
/// C3 = ((beta gamma - (alpha-1)(delta-1))/D, (alpha delta - (beta-1)(gamma-1))/D).
template <class K>
struct GammaInvariants {
    std::pair<K, K> C1, C2;
    K D;
    std::optional<std::pair<K, K>> C3;
};

template <class K>
GammaInvariants<K> gamma_invariants(const K& a, const K& b, const K& g, const K& d) {
    GammaInvariants<K> r;
    r.C1 = {b, d};
    r.C2 = {g, a};
    const K one(1);
    r.D = (a + g) * (b + d) - one;
    if (!r.D.is_zero()) {
        r.C3 = std::pair<K, K>{(b * g - (a - one) * (d - one)) / r.D,
                               (a * d - (b - one) * (g - one)) / r.D};
    }
    return r;
}

template <class K>
bool in_T(const std::pair<K, K>& p) {  // T = { (a,b) : a + b = 1 }
    return (p.first + p.second - K(1)).is_zero();
}

/// A rejected label: `hard` marks parameters naming a structure outside the
/// family's class (e.g. a D2 pair on alpha+beta=1), as opposed to a valid
/// algebra written with a non-representative parameter form.
struct DomainIssue {
    bool hard = false;
    std::string why;
};

/// Domain validation for canonical labels under the given representative
/// convention. Returns an explanation for rejection, or nullopt when valid.
template <class K>
std::optional<DomainIssue> label_domain_violation(
    const CanonicalLabel<K>& l, const RepresentativeConvention<K>& conv = {}) {
    const auto& p = l.params;
    auto soft = [](const char* why) { return DomainIssue{false, why}; };
    auto hard = [](const char* why) { return DomainIssue{true, why}; };
    switch (l.family) {
        case Family::A4:
            if (conv.sign_rep(p[0]) != p[0])
                return soft("A4 parameter must be the k>=0 representative");
            break;
        case Family::C:
            if (conv.sign_rep(p[1]) != p[1])
                return soft("C second parameter must be the k>=0 representative");
            break;
        case Family::D1:
            if (conv.u_rep({p[0], p[1]}) != std::pair<K, K>{p[0], p[1]})
                return soft("D1 pair must be the U representative");
            break;
        case Family::D2:
        case Family::D3:
            if (in_T<K>({p[0], p[1]})) return hard("D2/D3 pair must avoid alpha+beta=1");
            break;
        case Family::E1: {
            auto gi = gamma_invariants(p[0], p[1], p[2], p[3]);
            if (gi.D.is_zero()) return hard("E1 tuple needs D(Gamma) != 0");
            if (in_T(gi.C1) || in_T(gi.C2)) return hard("E1 tuple needs C1, C2 outside T");
            PairTriple<K> t{gi.C1, gi.C2, *gi.C3};
            if (conv.v_rep(t) != t) return soft("E1 triple must be the V representative");
            break;
        }
        case Family::E2:
            if (in_T<K>({p[1], p[2]})) return hard("E2 needs (beta,gamma) outside T");
            break;
        case Family::E3:
            if (p[2].is_zero() || p[2].is_one())
                return hard("E3 third parameter must avoid {0,1}");
            if (conv.inverse_rep(p[2]) != p[2])
                return soft("E3 third parameter must be the k*>1 representative");
            // at the self-inverse scale the swap of basis idempotents gives
            // E3(a,b,-1) ~ E3(b,a,-1); order the pair to keep labels unique
            if ((p[2] + K(1)).is_zero() && total_less(p[1], p[0]))
                return soft("E3 pair must be ordered at gamma = -1");
            break;
        default:
            break;
    }
    return std::nullopt;
}

template <class K>
CanonicalLabel<K> make_label(Family f, std::vector<K> params,
                             const RepresentativeConvention<K>& conv = {}) {
    CanonicalLabel<K> l{f, std::move(params)};
    if (static_cast<int>(l.params.size()) != family_arity(f))
        throw InvalidInput(std::string("label ") + family_name(f) + ": wrong parameter count");
    if (auto issue = label_domain_violation(l, conv))
        throw InvalidInput(l.to_string() + ": " + issue->why);
    return l;
}

}  // namespace alg2

#endif
