#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "rees/derived.hpp"

using namespace rees;

namespace {

Poly random_poly(const RingPtr& R, std::mt19937& rng, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> de(0, max_deg), dc(-3, 3), dt(1, max_terms);
    std::vector<Term> terms;
    for (int t = 0, n = dt(rng); t < n; ++t) {
        Monomial m(R->nvars());
        int budget = max_deg;
        for (std::size_t i = 0; i < R->nvars(); ++i) {
            int e = std::min(de(rng), budget);
            m.exps[i] = e;
            budget -= e;
        }
        int c = dc(rng);
        if (c == 0) c = 1;
        terms.push_back({m, rat(c)});
    }
    return Poly::from_terms(R->ctx(), std::move(terms));
}

bool in_span(const SyzygyModule& syz, const VecPoly& v) {
    std::vector<VecPoly> gens = syz.gens;
    for (const auto& r : syz.ring->relations())
        for (std::size_t t = 0; t < syz.inputs.size(); ++t) {
            VecPoly e(syz.ring->ctx(), syz.inputs.size());
            e.c[t] = r;
            gens.push_back(std::move(e));
        }
    ModuleGB gb(syz.ring->ctx(), syz.inputs.size(), gens);
    return gb.contains(v);
}

} // namespace

TEST_CASE("brute-force syzygy cross-check on random small instances") {
    auto P = PresentedRing::parse({"x", "y"}, {});
    auto N = PresentedRing::parse({"x", "y"}, {"x*y"});
    std::mt19937 rng(2024);

    int instances = 0;
    for (int iter = 0; instances < 10; ++iter) {
        const RingPtr& R = (iter % 2 == 0) ? P : N;
        std::uniform_int_distribution<int> dn(2, 3);
        std::vector<Poly> f;
        for (int i = 0, n = dn(rng); i < n; ++i) {
            Poly p = R->normal_form(random_poly(R, rng, 2, 2));
            if (!p.is_zero()) f.push_back(p);
        }
        if (f.size() < 2) continue;
        ++instances;

        SyzygyModule syz = syzygies(f, R);
        // every emitted generator evaluates to zero
        for (const auto& s : syz.gens) {
            Poly acc = R->zero();
            for (std::size_t i = 0; i < f.size(); ++i) acc = acc + s.c[i] * f[i];
            CHECK(R->is_zero_elem(acc));
        }
        // all degree-bounded syzygies found by dense linear algebra lie in
        // the span of the emitted generators
        for (const auto& bf : oracle::brute_syzygies(R, f, 3)) {
            VecPoly v = bf;
            for (auto& p : v.c) p = R->normal_form(p);
            if (v.is_zero()) continue;
            CHECK(in_span(syz, v));
        }
    }
    CHECK(instances == 10);
}

TEST_CASE("the oracle agrees with the worked node example") {
    auto N = PresentedRing::parse({"u", "v"}, {"u*v"});
    std::vector<Poly> f = {N->var("u"), N->var("v")};
    auto brute = oracle::brute_syzygies(N, f, 2);
    // (v, 0), (0, u) and (v, -u) all appear in the brute-force kernel span
    SyzygyModule as_module{N, f, brute};
    VecPoly s1(N->ctx(), 2), s2(N->ctx(), 2), s3(N->ctx(), 2);
    s1.c[0] = N->var("v");
    s2.c[1] = N->var("u");
    s3.c[0] = N->var("v");
    s3.c[1] = -N->var("u");
    CHECK(in_span(as_module, s1));
    CHECK(in_span(as_module, s2));
    CHECK(in_span(as_module, s3));
}

TEST_CASE("reduced bases do not depend on generator order or scaling") {
    auto P = PresentedRing::parse({"x", "y", "z"}, {});
    std::mt19937 rng(99);
    for (int iter = 0; iter < 8; ++iter) {
        std::vector<Poly> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_poly(P, rng, 2, 3));
        Ideal I = Ideal::make(P, gens);
        std::vector<Poly> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (auto& g : shuffled) g = g.scaled(rat(3));
        Ideal J = Ideal::make(P, shuffled);
        CHECK(saturated_basis(I) == saturated_basis(J));
    }
}

TEST_CASE("random ring maps transport pi_0 ideals correctly") {
    auto P = PresentedRing::parse({"T1", "T2"}, {});
    std::vector<RingPtr> targets = {
        PresentedRing::parse({"u"}, {}),
        PresentedRing::parse({"u", "v"}, {"u*v"}),
        PresentedRing::parse({"a", "b"}, {}),
    };
    std::mt19937 rng(7);
    for (const auto& B : targets) {
        for (int iter = 0; iter < 3; ++iter) {
            std::vector<Poly> images = {B->normal_form(random_poly(B, rng, 2, 2)),
                                        B->normal_form(random_poly(B, rng, 2, 2))};
            RingMap phi(P, B, images);
            DerivedLocus Z = DerivedLocus::make(P, {P->var("T1"), P->parse_elem("T1 + T2^2")});
            DerivedLocus W = base_change(Z, phi);
            CHECK(W.seq.size() == Z.seq.size());
            Ideal direct = W.pi0_ideal();
            Ideal pushed = Ideal::make(B, phi.apply(Z.seq));
            CHECK(ideal_equal(direct, pushed));
        }
    }
}

TEST_CASE("krull dimension drops by at most the number of cut elements") {
    auto P = PresentedRing::parse({"x", "y", "z"}, {});
    std::mt19937 rng(5);
    for (int iter = 0; iter < 6; ++iter) {
        std::vector<Poly> f = {P->normal_form(random_poly(P, rng, 2, 2)),
                               P->normal_form(random_poly(P, rng, 2, 2))};
        Ideal I = Ideal::make(P, f);
        int d = krull_dim(I);
        if (d >= 0) CHECK(d >= 1); // at most two hypersurfaces cut from dim 3
        CHECK(d <= 3);
    }
}

TEST_CASE("koszul complexes over random sequences have d*d = 0 and stable verdicts") {
    auto N = PresentedRing::parse({"x", "y"}, {"x*y"});
    std::mt19937 rng(31);
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<Poly> f = {N->normal_form(random_poly(N, rng, 2, 2)),
                               N->normal_form(random_poly(N, rng, 2, 2))};
        DerivedLocus Z = DerivedLocus::make(N, f);
        CHECK_NOTHROW(koszul_complex(Z)); // construction validates d*d = 0
        bool cls = is_classical(Z);
        bool via_modules = true;
        for (std::size_t i = 1; i <= Z.length(); ++i)
            via_modules = via_modules && is_zero_module(homotopy_module(Z, i));
        CHECK(cls == via_modules);
    }
}
