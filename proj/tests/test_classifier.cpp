#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "alg2/degeneration.hpp"

using namespace alg2;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

ExactTensor tensor_of(Family f, std::vector<Rational> p = {}) { return family_tensor(f, p); }

}  // namespace

TEST_CASE("class_of follows the five-class partition") {
    std::mt19937_64 rng(31);
    auto expect = [](Family f) {
        switch (f) {
            case Family::A1: case Family::A2: case Family::A3: case Family::A4:
                return ClassTag::A;
            case Family::B1: case Family::B2: case Family::B3:
                return ClassTag::B;
            case Family::C:
                return ClassTag::C;
            case Family::D1: case Family::D2: case Family::D3:
                return ClassTag::D;
            case Family::Trivial:
                return ClassTag::Trivial;
            default:
                return ClassTag::E;
        }
    };
    for (Family f : all_families())
        for (int s = 0; s < 10; ++s) {
            auto params = random_label_params(rng, f);
            CHECK(class_of(family_tensor(f, params)) == expect(f));
            if (family_arity(f) == 0) break;
        }
    CHECK(class_of(tensor_of(Family::A4, {rat(2)})) == ClassTag::A);
    CHECK(class_of(tensor_of(Family::D2, {rat(0), rat(0)})) == ClassTag::D);
    CHECK(class_of(ExactTensor::zero()) == ClassTag::Trivial);
}

TEST_CASE("classify is the identity on canonical structures") {
    std::mt19937_64 rng(32);
    for (Family f : all_families()) {
        for (int s = 0; s < 50; ++s) {
            auto params = random_label_params(rng, f);
            CanonicalLabel<Rational> label{f, params};
            auto result = classify(canonical_tensor(label));
            CHECK(result.label == label);
            // witness soundness, checked once more from the outside
            CHECK(act(result.witness, canonical_tensor(label)) ==
                  canonical_tensor(result.label));
            if (family_arity(f) == 0) break;
        }
    }
}

TEST_CASE("classify is constant on orbits") {
    std::mt19937_64 rng(33);
    for (Family f : all_families()) {
        for (int s = 0; s < 6; ++s) {
            auto params = random_label_params(rng, f);
            CanonicalLabel<Rational> label{f, params};
            ExactTensor t = canonical_tensor(label);
            for (int k = 0; k < 5; ++k) {
                ExactTensor moved = act(random_invertible(rng), t);
                auto result = classify(moved);
                CHECK(result.label == label);
                CHECK(act(result.witness, moved) == canonical_tensor(label));
            }
            if (family_arity(f) == 0) break;
        }
    }
}

TEST_CASE("spec examples: canonical A3, raw E1(1,1,0,0), a moved D2(2,3)") {
    auto a3 = classify(tensor_of(Family::A3));
    CHECK(a3.label.family == Family::A3);
    CHECK(a3.witness == Mat2<Rational>::identity());

    // the tuple (1,1,0,0) is the E4 structure in E1 form
    auto e4 = classify(tensor_of(Family::E1, {rat(1), rat(1), rat(0), rat(0)}));
    CHECK(e4.label.family == Family::E4);

    Mat2<Rational> g{{{rat(1), rat(1)}, {rat(0), rat(1)}}};
    ExactTensor moved = act(g, tensor_of(Family::D2, {rat(2), rat(3)}));
    auto r = classify(moved);
    CHECK(r.label == CanonicalLabel<Rational>{Family::D2, {rat(2), rat(3)}});
    CHECK(act(r.witness, moved) == tensor_of(Family::D2, {rat(2), rat(3)}));
}

TEST_CASE("gamma invariants: the three spec examples") {
    auto z = gamma_invariants(rat(0), rat(0), rat(0), rat(0));
    CHECK(z.C1 == std::pair<Rational, Rational>{rat(0), rat(0)});
    CHECK(z.C2 == std::pair<Rational, Rational>{rat(0), rat(0)});
    CHECK(z.D == rat(-1));
    REQUIRE(z.C3.has_value());
    CHECK(*z.C3 == std::pair<Rational, Rational>{rat(1), rat(1)});

    auto e = gamma_invariants(rat(1), rat(1), rat(0), rat(0));
    CHECK(e.C1 == std::pair<Rational, Rational>{rat(1), rat(0)});
    CHECK(e.C2 == std::pair<Rational, Rational>{rat(0), rat(1)});
    CHECK(e.D == rat(0));
    CHECK_FALSE(e.C3.has_value());

    auto m = gamma_invariants(rat(-1), rat(-1), rat(-1), rat(-1));
    CHECK(m.C1 == std::pair<Rational, Rational>{rat(-1), rat(-1)});
    CHECK(m.D == rat(3));
    REQUIRE(m.C3.has_value());
    CHECK(*m.C3 == std::pair<Rational, Rational>{rat(-1), rat(-1)});
}

TEST_CASE("is_isomorphic: A2 vs A3, orbits, and the E1 swap") {
    CHECK_FALSE(is_isomorphic(tensor_of(Family::A2), tensor_of(Family::A3)));

    std::mt19937_64 rng(34);
    for (int k = 0; k < 30; ++k) {
        Family f = all_families()[k % 16];
        auto params = random_label_params(rng, f);
        ExactTensor t = family_tensor(f, params);
        CHECK(is_isomorphic(t, act(random_invertible(rng), t)));
    }

    // swapping the two basis idempotents relates Gamma and its reversal
    for (int k = 0; k < 40; ++k) {
        auto p = random_label_params(rng, Family::E1);
        ExactTensor a = tensor_of(Family::E1, {p[0], p[1], p[2], p[3]});
        ExactTensor b = tensor_of(Family::E1, {p[3], p[2], p[1], p[0]});
        CHECK(is_isomorphic(a, b));
    }
}

TEST_CASE("E-family: all S3 permutations of the invariant triple classify alike") {
    std::mt19937_64 rng(35);
    for (int k = 0; k < 25; ++k) {
        auto p = random_label_params(rng, Family::E1);
        ExactTensor t = tensor_of(Family::E1, p);
        auto base = classify(t).label;
        auto gi = gamma_invariants(p[0], p[1], p[2], p[3]);
        REQUIRE(gi.C3.has_value());
        PairTriple<Rational> triple{gi.C1, gi.C2, *gi.C3};
        static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& s : perms) {
            // rebuild Gamma' from the permuted triple: C1 = (beta', delta'),
            // C2 = (gamma', alpha')
            auto c1 = triple[s[0]];
            auto c2 = triple[s[1]];
            std::vector<Rational> q = {c2.second, c1.first, c2.first, c1.second};
            CHECK(classify(tensor_of(Family::E1, q)).label == base);
        }
    }
}

TEST_CASE("uniqueness: pairwise distinct canonical labels are non-isomorphic") {
    std::mt19937_64 rng(36);
    std::vector<CanonicalLabel<Rational>> sample;
    std::set<std::string> seen;
    for (Family f : all_families()) {
        for (int s = 0; s < 4; ++s) {
            CanonicalLabel<Rational> l{f, random_label_params(rng, f)};
            if (seen.insert(l.to_string()).second) sample.push_back(l);
            if (family_arity(f) == 0) break;
        }
    }
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i + 1; j < sample.size(); ++j)
            CHECK_FALSE(is_isomorphic(canonical_tensor(sample[i]), canonical_tensor(sample[j])));
}

TEST_CASE("classify agrees with class_of and the dependence counts") {
    std::mt19937_64 rng(37);
    for (Family f : all_families()) {
        auto params = random_label_params(rng, f);
        ExactTensor t = family_tensor(f, params);
        ClassTag tag = class_of(t);
        auto a = analyze_dependence(t);
        std::size_t idem = a.idempotents.line ? 2 : a.idempotents.points.size();
        switch (tag) {
            case ClassTag::A:
                CHECK(idem == 0);
                CHECK(a.two_nil.kind == TwoNilLines<Rational>::One);
                break;
            case ClassTag::B:
                CHECK(idem == 0);
                CHECK(a.two_nil.kind != TwoNilLines<Rational>::One);
                break;
            case ClassTag::C:
                CHECK(idem == 1);
                CHECK(a.two_nil.kind == TwoNilLines<Rational>::Empty);
                break;
            case ClassTag::D:
                CHECK(idem == 1);
                CHECK(a.two_nil.kind != TwoNilLines<Rational>::Empty);
                break;
            case ClassTag::E:
                CHECK(idem >= 2);
                break;
            case ClassTag::Trivial:
                CHECK(t.is_zero());
                break;
        }
    }
}

TEST_CASE("NotRepresentable: square-root obstructions carry the polynomial") {
    // class C structure whose normalization needs a = sqrt(1/2)
    ExactTensor c = ExactTensor::zero();
    c.c[0][0][1] = rat(2);   // e1e1 = 2 e2
    c.c[0][1][0] = rat(1);   // e1e2 = e1
    c.c[1][1][1] = rat(1);   // e2e2 = e2
    CHECK(class_of(c) == ClassTag::C);
    CHECK_THROWS_AS(classify(c), NotRepresentable);

    // class A structure on the A4 branch with an irrational scale
    ExactTensor a = ExactTensor::zero();
    a.c[0][0][1] = rat(2);   // e1e1 = 2 e2
    a.c[0][1][0] = rat(1);   // e1e2 = e1
    a.c[1][0][0] = rat(-1);  // e2e1 = -e1
    CHECK(class_of(a) == ClassTag::A);
    try {
        classify(a);
        FAIL("expected NotRepresentable");
    } catch (const NotRepresentable& e) {
        CHECK(!e.polynomial.empty());
    }
}

TEST_CASE("numeric backend classifies the obstructed exact inputs") {
    // same tensors as above, now over complex doubles
    Tensor<Numeric> c = Tensor<Numeric>::zero();
    c.c[0][0][1] = Numeric(2.0);
    c.c[0][1][0] = Numeric(1.0);
    c.c[1][1][1] = Numeric(1.0);
    auto rc = classify(c);
    CHECK(rc.label.family == Family::C);

    Tensor<Numeric> a = Tensor<Numeric>::zero();
    a.c[0][0][1] = Numeric(2.0);
    a.c[0][1][0] = Numeric(1.0);
    a.c[1][0][0] = Numeric(-1.0);
    auto ra = classify(a);
    CHECK(ra.label.family == Family::A4);

    auto r3 = classify(family_tensor<Numeric>(Family::A3, {}));
    CHECK(r3.label.family == Family::A3);
}

TEST_CASE("normalize_label folds non-representative parameters") {
    // D1(1,0) and D1(0,0) name the same orbit: e2 -> e1 - e2 identifies them
    auto n = normalize_raw_label(Family::D1, {rat(1), rat(0)});
    CHECK(n == CanonicalLabel<Rational>{Family::D1, {rat(0), rat(0)}});
    // A4(-2) folds to A4(2)
    CHECK(normalize_raw_label(Family::A4, {rat(-2)}) ==
          CanonicalLabel<Rational>{Family::A4, {rat(2)}});
    // E3 third parameter folds into the representative set; the swap of
    // basis idempotents gives E3(a,b,c) ~ E3(b,a,1/c)
    CHECK(normalize_raw_label(Family::E3, {rat(2), rat(3), rat(1, 5)}) ==
          CanonicalLabel<Rational>{Family::E3, {rat(3), rat(2), rat(5)}});
}

TEST_CASE("fuzz: arbitrary rational tensors classify soundly or refuse honestly") {
    std::mt19937_64 rng(38);
    int classified = 0, refused = 0;
    for (int k = 0; k < 300; ++k) {
        ExactTensor t;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l) t.c[i][j][l] = random_rational(rng, 4, 3);
        try {
            auto r = classify(t);
            ++classified;
            CHECK(act(r.witness, t) == canonical_tensor(r.label));
            CHECK_FALSE(label_domain_violation(r.label).has_value());
            // a second classification through a random basis change agrees
            CHECK(classify(act(random_invertible(rng), t)).label == r.label);
        } catch (const NotRepresentable& e) {
            ++refused;
            CHECK_FALSE(e.polynomial.empty());
        }
    }
    CHECK(classified > 0);
    // most random tensors classify; refusals only come from irrational roots
    CHECK(classified + refused == 300);
}

TEST_CASE("numeric backend: every family classifies to the same label") {
    std::mt19937_64 rng(39);
    for (Family f : all_families()) {
        for (int s = 0; s < 5; ++s) {
            auto params = random_label_params(rng, f);
            Tensor<Numeric> t = Tensor<Numeric>::zero();
            ExactTensor e = family_tensor(f, params);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                        t.c[i][j][k] = Numeric(e.c[i][j][k].to_double());
            auto r = classify(t);
            CHECK(r.label.family == f);
            REQUIRE(r.label.params.size() == params.size());
            for (std::size_t i = 0; i < params.size(); ++i)
                CHECK(std::abs(r.label.params[i].value() -
                               std::complex<double>(params[i].to_double())) < 1e-6);
            if (family_arity(f) == 0) break;
        }
    }
}

TEST_CASE("make_label validates domains") {
    CHECK_THROWS_AS(make_label(Family::D2, std::vector<Rational>{rat(1, 2), rat(1, 2)}),
                    InvalidInput);
    CHECK_THROWS_AS(make_label(Family::E3, std::vector<Rational>{rat(0), rat(0), rat(1)}),
                    InvalidInput);
    CHECK_THROWS_AS(make_label(Family::A4, std::vector<Rational>{rat(-1)}), InvalidInput);
    CHECK_NOTHROW(make_label(Family::D2, std::vector<Rational>{rat(1, 2), rat(1, 3)}));
}
