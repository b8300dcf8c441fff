#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rees/groebner.hpp"
#include "rees/diagnostics.hpp"

using namespace rees;

namespace {

std::vector<std::string> basis_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : groebner_basis(I).gens) out.push_back(g.str());
    return out;
}

bool syzygy_in_span(const SyzygyModule& syz, const VecPoly& v) {
    ModuleGB gb(syz.ring->ctx(), syz.inputs.size(), [&] {
        std::vector<VecPoly> gens = syz.gens;
        for (const auto& r : syz.ring->relations())
            for (std::size_t t = 0; t < syz.inputs.size(); ++t) {
                VecPoly e(syz.ring->ctx(), syz.inputs.size());
                e.c[t] = r;
                gens.push_back(std::move(e));
            }
        return gens;
    }());
    return gb.contains(v);
}

} // namespace

TEST_CASE("reduced bases of the worked ideals") {
    auto P = PresentedRing::parse({"x", "y"}, {});

    // (x^2, xy, y^2) is its own reduced basis in degrevlex
    Ideal I = Ideal::make(P, {P->parse_elem("x^2"), P->parse_elem("x*y"), P->parse_elem("y^2")});
    auto gb = basis_strings(I);
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == "x^2");
    CHECK(gb[1] == "x*y");
    CHECK(gb[2] == "y^2");

    // (x - y, y) triangularizes to (x, y)
    Ideal J = Ideal::make(P, {P->parse_elem("x - y"), P->parse_elem("y")});
    auto gbj = basis_strings(J);
    REQUIRE(gbj.size() == 2);
    CHECK(gbj[0] == "x");
    CHECK(gbj[1] == "y");

    // zero ideal has the empty basis
    CHECK(basis_strings(Ideal::make(P, {})).empty());
    CHECK(basis_strings(Ideal::make(P, {P->zero()})).empty());
}

TEST_CASE("reduced basis is deterministic and generator-order independent") {
    auto P = PresentedRing::parse({"x", "y", "z"}, {});
    std::vector<Poly> gens = {P->parse_elem("x*y - z"), P->parse_elem("y*z - x"),
                              P->parse_elem("x*z - y")};
    Ideal I1 = Ideal::make(P, gens);
    std::vector<Poly> rev(gens.rbegin(), gens.rend());
    Ideal I2 = Ideal::make(P, rev);
    CHECK(basis_strings(I1) == basis_strings(I1));
    CHECK(basis_strings(I1) == basis_strings(I2));
    CHECK(ideal_equal(I1, I2));
}

TEST_CASE("membership and equality") {
    auto P = PresentedRing::parse({"x", "y"}, {});
    Ideal I = Ideal::make(P, {P->parse_elem("x - y"), P->parse_elem("y")});
    CHECK(ideal_member(P->var("x"), I));
    Ideal J1 = Ideal::make(P, {P->var("x"), P->var("y")});
    Ideal J2 = Ideal::make(P, {P->parse_elem("x + y"), P->var("y")});
    CHECK(ideal_equal(J1, J2));

    // membership matches extension equality
    for (const char* cand : {"x", "x^2 + y", "x + 1", "y^5", "1"}) {
        Poly p = P->parse_elem(cand);
        CHECK(ideal_member(p, J1) == ideal_equal(J1, J1.plus(p)));
    }

    // the classical chart separator: v not in (v - u*X2) over the node
    auto N = PresentedRing::parse({"u", "v", "X2"}, {"u*v"});
    Ideal C = Ideal::make(N, {N->parse_elem("v - u*X2")});
    CHECK_FALSE(ideal_member(N->var("v"), C));
    CHECK(ideal_member(N->parse_elem("v - u*X2"), C));
}

TEST_CASE("ideal equality is an equivalence relation on sample ideals") {
    auto P = PresentedRing::parse({"x", "y"}, {});
    std::vector<Ideal> ideals = {
        Ideal::make(P, {P->var("x")}),
        Ideal::make(P, {P->parse_elem("x + x*y"), P->parse_elem("x*y")}),
        Ideal::make(P, {P->var("x"), P->var("y")}),
        Ideal::make(P, {P->parse_elem("x+y"), P->var("y")}),
    };
    for (const auto& A : ideals) CHECK(ideal_equal(A, A));
    for (const auto& A : ideals)
        for (const auto& B : ideals) CHECK(ideal_equal(A, B) == ideal_equal(B, A));
    for (const auto& A : ideals)
        for (const auto& B : ideals)
            for (const auto& C : ideals)
                if (ideal_equal(A, B) && ideal_equal(B, C)) CHECK(ideal_equal(A, C));
}

TEST_CASE("syzygies of the worked examples") {
    // (u, v) over the node: (v,0), (0,u), (v,-u) generate
    auto N = PresentedRing::parse({"u", "v"}, {"u*v"});
    SyzygyModule syz = syzygies({N->var("u"), N->var("v")}, N);
    CHECK(!syz.gens.empty());
    VecPoly s1(N->ctx(), 2), s2(N->ctx(), 2), s3(N->ctx(), 2);
    s1.c[0] = N->var("v");
    s2.c[1] = N->var("u");
    s3.c[0] = N->var("v");
    s3.c[1] = -N->var("u");
    CHECK(syzygy_in_span(syz, s1));
    CHECK(syzygy_in_span(syz, s2));
    CHECK(syzygy_in_span(syz, s3));

    // and conversely the emitted generators lie in the span of the three
    SyzygyModule hand{N, syz.inputs, {s1, s2, s3}};
    for (const auto& g : syz.gens) CHECK(syzygy_in_span(hand, g));

    // (T1..Tn) over the polynomial ring: Koszul syzygies generate
    for (std::size_t n : {2u, 3u}) {
        std::vector<std::string> vars;
        for (std::size_t i = 1; i <= n; ++i) vars.push_back("T" + std::to_string(i));
        auto P = PresentedRing::parse(vars, {});
        std::vector<Poly> f;
        for (const auto& v : vars) f.push_back(P->var(v));
        SyzygyModule sz = syzygies(f, P);
        SyzygyModule koszul{P, f, {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                VecPoly k(P->ctx(), n);
                k.c[i] = f[j];
                k.c[j] = -f[i];
                koszul.gens.push_back(std::move(k));
            }
        for (const auto& g : sz.gens) CHECK(syzygy_in_span(koszul, g));
        for (const auto& g : koszul.gens) CHECK(syzygy_in_span(sz, g));
    }

    // a unit has no syzygies
    auto P1 = PresentedRing::parse({"x"}, {});
    CHECK(syzygies({P1->one()}, P1).gens.empty());
}

TEST_CASE("annihilators") {
    auto N = PresentedRing::parse({"u", "v"}, {"u*v"});
    Ideal ann_u = annihilator(N->var("u"), N);
    CHECK(ideal_equal(ann_u, Ideal::make(N, {N->var("v")})));
    Ideal ann_unit = annihilator(N->one(), N);
    CHECK(ideal_is_zero(ann_unit));
    auto P = PresentedRing::parse({"x"}, {});
    CHECK(ideal_equal(annihilator(P->zero(), P), Ideal::make(P, {P->one()})));
}

TEST_CASE("elimination") {
    auto P = PresentedRing::parse({"x", "y"}, {});
    Ideal I = Ideal::make(P, {P->parse_elem("y - x^2"), P->var("y")});
    Ideal E = eliminate(I, {"y"});
    auto gb = basis_strings(E);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == "x^2");

    // eliminating nothing returns the same ideal
    CHECK(ideal_equal(eliminate(I, {}), I));
    CHECK_THROWS_AS(eliminate(I, {"zz"}), AlgebraError);

    // over a quotient ring: contract (v - u*X2) + (uv) to Q[u,v]
    auto N = PresentedRing::parse({"u", "v", "X2"}, {"u*v"});
    Ideal C = eliminate(Ideal::make(N, {N->parse_elem("v - u*X2")}), {"X2"});
    // v - u*X2 has X2 in every relation involving v; contraction is (v^2)
    // computed independently: v*(v - u*X2) = v^2 - (uv)*X2 = v^2 mod uv
    CHECK(ideal_member(N->parse_elem("v^2"), C));
}

TEST_CASE("krull dimension") {
    auto N = PresentedRing::parse({"x", "y"}, {"x*y"});
    CHECK(krull_dim(N) == 1);

    auto P3 = PresentedRing::parse({"T1", "T2", "T3"}, {});
    Ideal origin = Ideal::make(P3, {P3->var("T1"), P3->var("T2"), P3->var("T3")});
    CHECK(krull_dim(origin) == 0);
    CHECK(krull_dim(P3) == 3);

    // unit ideal: empty scheme has dimension -1
    Ideal unit = Ideal::make(P3, {P3->one()});
    CHECK(krull_dim(unit) == -1);

    auto P0 = PresentedRing::parse(std::vector<std::string>{}, {});
    CHECK(krull_dim(P0) == 0);
}
