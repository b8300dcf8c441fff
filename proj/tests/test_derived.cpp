#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rees/derived.hpp"
#include "rees/diagnostics.hpp"

using namespace rees;

namespace {

DerivedLocus origin_locus(std::size_t n) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("T" + std::to_string(i));
    auto P = PresentedRing::parse(vars, {});
    std::vector<Poly> f;
    for (const auto& v : vars) f.push_back(P->var(v));
    return DerivedLocus::make(P, f);
}

} // namespace

TEST_CASE("koszul complex shapes") {
    auto A = PresentedRing::parse({"x"}, {});

    // empty sequence: concentrated in degree zero
    FreeComplex K0 = koszul_complex(DerivedLocus::make(A, {}));
    CHECK(K0.length() == 0);
    CHECK(K0.rank(0) == 1);
    FpModule H0 = homology(K0, 0);
    CHECK(H0.rank() == 1);
    CHECK(H0.relations().empty());

    // single zero element: two copies of A with zero differential
    FreeComplex Kz = koszul_complex(DerivedLocus::make(A, {A->zero()}));
    CHECK(Kz.length() == 1);
    CHECK(Kz.diff(1).cols[0].is_zero());

    // n = 2: ranks 1,2,1 and d2 = (-T2, T1) up to sign
    DerivedLocus Z2 = origin_locus(2);
    FreeComplex K2 = koszul_complex(Z2);
    CHECK(K2.rank(0) == 1);
    CHECK(K2.rank(1) == 2);
    CHECK(K2.rank(2) == 1);
    const VecPoly& d2 = K2.diff(2).cols[0];
    const RingPtr& P2 = Z2.ambient;
    bool plus = d2.c[0] == -P2->var("T2") && d2.c[1] == P2->var("T1");
    bool minus = d2.c[0] == P2->var("T2") && d2.c[1] == -P2->var("T1");
    CHECK((plus || minus));
}

TEST_CASE("homotopy modules of the worked examples") {
    auto Pxy = PresentedRing::parse({"x", "y"}, {});
    DerivedLocus O = DerivedLocus::make(Pxy, {Pxy->var("x"), Pxy->var("y")});
    FpModule pi0 = homotopy_module(O, 0);
    CHECK(pi0.rank() == 1);
    CHECK(pi0.relations().size() == 2);

    auto Px = PresentedRing::parse({"x"}, {});
    DerivedLocus Z0 = DerivedLocus::make(Px, {Px->zero()});
    FpModule pi1 = homotopy_module(Z0, 1);
    CHECK(pi1.rank() == 1);
    CHECK(pi1.relations().empty());
    CHECK(is_zero_module(homotopy_module(Z0, 2)));
    CHECK(is_zero_module(homotopy_module(Z0, 5)));

    auto N = PresentedRing::parse({"u", "v"}, {"u*v"});
    DerivedLocus Zn = DerivedLocus::make(N, {N->var("u"), N->var("v")});
    CHECK_FALSE(is_zero_module(homotopy_module(Zn, 1)));
}

TEST_CASE("classicality = regularity, three routes agree") {
    std::vector<std::pair<DerivedLocus, bool>> cases;
    for (std::size_t n : {1u, 2u, 3u}) cases.push_back({origin_locus(n), true});
    auto N = PresentedRing::parse({"u", "v"}, {"u*v"});
    cases.push_back({DerivedLocus::make(N, {N->var("u"), N->var("v")}), false});
    auto A = PresentedRing::parse({"a"}, {});
    cases.push_back({DerivedLocus::make(A, {}), true});
    cases.push_back({DerivedLocus::make(A, {A->var("a"), A->var("a")}), false});

    for (const auto& [Z, expected] : cases) {
        CHECK(is_classical(Z) == expected);
        CHECK(is_regular_sequence(Z) == expected);
        bool all_zero = true;
        for (std::size_t i = 1; i <= Z.length(); ++i)
            all_zero = all_zero && is_zero_module(homotopy_module(Z, i));
        CHECK(all_zero == expected);
    }
}

TEST_CASE("pi_1 of a single element presents its annihilator") {
    auto N = PresentedRing::parse({"u", "v"}, {"u*v"});
    for (const char* elem : {"u", "v", "u + v", "0"}) {
        Poly f = N->parse_elem(elem);
        DerivedLocus Z = DerivedLocus::make(N, {f});
        FreeComplex K = koszul_complex(Z);
        std::vector<VecPoly> cycles = kernel_over(N, K.diff(1), {});
        std::vector<Poly> cycle_gens;
        for (const auto& c : cycles) cycle_gens.push_back(c.c[0]);
        CHECK(ideal_equal(Ideal::make(N, cycle_gens), annihilator(f, N)));
    }
}

TEST_CASE("base change") {
    DerivedLocus Z = origin_locus(2);
    const RingPtr& P = Z.ambient;
    auto U = PresentedRing::parse({"u"}, {});
    RingMap phi(P, U, {U->var("u"), U->zero()});
    DerivedLocus W = base_change(Z, phi);
    CHECK(W.ambient == U);
    REQUIRE(W.seq.size() == 2);
    CHECK(W.seq[0] == U->var("u"));
    CHECK(W.seq[1].is_zero());

    DerivedLocus Wid = base_change(Z, RingMap::identity(P));
    CHECK(Wid.seq == Z.seq);

    auto Pxy = PresentedRing::parse({"x", "y"}, {});
    auto T = PresentedRing::parse({"T"}, {});
    RingMap psi(T, Pxy, {Pxy->parse_elem("x*y")});
    DerivedLocus V = base_change(DerivedLocus::make(T, {T->var("T")}), psi);
    CHECK(V.seq[0] == Pxy->parse_elem("x*y"));

    // pi_0 commutes with base change at the ideal level
    Ideal direct = V.pi0_ideal();
    Ideal pushed = Ideal::make(Pxy, psi.apply(std::vector<Poly>{T->var("T")}));
    CHECK(ideal_equal(direct, pushed));

    CHECK_THROWS_AS(base_change(V, psi), AlgebraError);
}

TEST_CASE("codimensions") {
    DerivedLocus O2 = origin_locus(2);
    CHECK(codim_virtual(O2) == 2);
    CHECK(codim_topological(O2) == 2);

    auto N = PresentedRing::parse({"u", "v"}, {"u*v"});
    DerivedLocus Zn = DerivedLocus::make(N, {N->var("u"), N->var("v")});
    CHECK(codim_virtual(Zn) == 2);
    CHECK(codim_topological(Zn) == 1);

    auto A = PresentedRing::parse({"a"}, {});
    DerivedLocus empty_seq = DerivedLocus::make(A, {});
    CHECK(codim_virtual(empty_seq) == 0);
    CHECK(codim_topological(empty_seq) == 0);

    // empty locus: topological codimension undefined
    DerivedLocus unit = DerivedLocus::make(A, {A->one()});
    CHECK_THROWS_AS(codim_topological(unit), AlgebraError);
}

TEST_CASE("derived products") {
    // two charts of the blow-up of the plane origin intersect classically
    auto P = PresentedRing::parse({"T1", "T2"}, {});
    auto C1 = P->extended({"X"});
    auto C2 = P->extended({"Y"});
    DerivedLocus Z1 = DerivedLocus::make(C1, {C1->parse_elem("T2 - X*T1")});
    DerivedLocus Z2 = DerivedLocus::make(C2, {C2->parse_elem("T2 - Y*T1")});
    DerivedLocus prod = derived_product(Z1, Z2, P);
    CHECK(prod.ambient->nvars() == 4);
    CHECK(prod.seq.size() == 2);
    CHECK(is_classical(prod));

    // unit: product with the bare base recovers the same presentation
    DerivedLocus unit = DerivedLocus::make(P, {});
    DerivedLocus same = derived_product(Z1, unit, P);
    CHECK(same.ambient->vars() == C1->vars());
    CHECK(same.seq.size() == Z1.seq.size());
    CHECK(same.seq[0].str() == Z1.seq[0].str());

    // derived self-intersection of the origin in the plane: not classical
    DerivedLocus O = DerivedLocus::make(P, {P->var("T1"), P->var("T2")});
    DerivedLocus self = derived_product(O, O, P);
    CHECK(self.ambient->nvars() == 2);
    REQUIRE(self.seq.size() == 4);
    CHECK_FALSE(is_classical(self));

    // refusal: ambient with non-base relations is not a polynomial extension
    auto Bad = PresentedRing::parse({"T1", "T2", "s"}, {"s^2"});
    DerivedLocus Zb = DerivedLocus::make(Bad, {Bad->var("T1")});
    CHECK_THROWS_AS(derived_product(Zb, Z1, P), AlgebraError);
    CHECK(is_polynomial_extension(C1, P));
    CHECK_FALSE(is_polynomial_extension(Bad, P));
}

TEST_CASE("derived product verdicts are order independent") {
    auto P = PresentedRing::parse({"T1", "T2"}, {});
    auto C1 = P->extended({"X"});
    DerivedLocus Z1 = DerivedLocus::make(C1, {C1->parse_elem("T2 - X*T1")});
    DerivedLocus O = DerivedLocus::make(P, {P->var("T1"), P->var("T2")});

    for (const auto& [A, B] : std::vector<std::pair<DerivedLocus, DerivedLocus>>{
             {Z1, O}, {O, Z1}, {O, O}}) {
        DerivedLocus ab = derived_product(A, B, P);
        DerivedLocus ba = derived_product(B, A, P);
        CHECK(is_classical(ab) == is_classical(ba));
        for (std::size_t i = 1; i <= ab.length(); ++i)
            CHECK(is_zero_module(homotopy_module(ab, i)) ==
                  is_zero_module(homotopy_module(ba, i)));
    }

    // associativity of the verdicts on a triple product
    DerivedLocus t1 = derived_product(derived_product(Z1, O, P), O, P);
    DerivedLocus t2 = derived_product(Z1, derived_product(O, O, P), P);
    CHECK(is_classical(t1) == is_classical(t2));
}

TEST_CASE("derived structures from generators") {
    auto Pxy = PresentedRing::parse({"x", "y"}, {});
    DerivedLocus classical = derived_structure_from_generators(Pxy, {Pxy->var("x"), Pxy->var("y")});
    CHECK(is_classical(classical));

    auto N = PresentedRing::parse({"u", "v"}, {"u*v"});
    DerivedLocus node_origin = derived_structure_from_generators(N, {N->var("u"), N->var("v")});
    CHECK_FALSE(is_classical(node_origin));

    // duplicated generator thickens the structure: pi_1 != 0
    auto Px = PresentedRing::parse({"x"}, {});
    DerivedLocus thick = derived_structure_from_generators(Px, {Px->var("x"), Px->var("x")});
    CHECK_FALSE(is_zero_module(homotopy_module(thick, 1)));
}

TEST_CASE("virtual codimension dominates topological codimension") {
    std::vector<DerivedLocus> corpus;
    corpus.push_back(origin_locus(1));
    corpus.push_back(origin_locus(2));
    corpus.push_back(origin_locus(3));
    auto N = PresentedRing::parse({"u", "v"}, {"u*v"});
    corpus.push_back(DerivedLocus::make(N, {N->var("u"), N->var("v")}));
    corpus.push_back(DerivedLocus::make(N, {N->var("u")}));
    auto Px = PresentedRing::parse({"x"}, {});
    corpus.push_back(DerivedLocus::make(Px, {Px->var("x"), Px->var("x")}));
    for (const auto& Z : corpus)
        CHECK(codim_virtual(Z) >= codim_topological(Z));
}

TEST_CASE("divisors from generalized divisors") {
    auto R = PresentedRing::parse({"x", "y"}, {});

    // free rank one, section f: single global chart (R, (f))
    GeneralizedDivisor triv =
        GeneralizedDivisor::make(FpModule::free(R, 1), {R->parse_elem("x^2 - y")});
    auto charts = divisor_from_generalized(triv);
    REQUIRE(charts.size() == 1);
    CHECK(charts[0].chart_ring == R);
    CHECK(charts[0].locus.seq[0] == R->parse_elem("x^2 - y"));

    // zero section: the non-classical divisor (R, (0))
    GeneralizedDivisor zero = GeneralizedDivisor::make(FpModule::free(R, 1), {R->zero()});
    auto zcharts = divisor_from_generalized(zero);
    REQUIRE(zcharts.size() == 1);
    CHECK(zcharts[0].locus.seq[0].is_zero());
    CHECK_FALSE(is_classical(zcharts[0].locus));

    // rank-two free input fails certification
    GeneralizedDivisor bad =
        GeneralizedDivisor::make(FpModule::free(R, 2), {R->var("x"), R->var("y")});
    CHECK_THROWS_AS(divisor_from_generalized(bad), AlgebraError);

    // a unimodular-column presentation: L = R^2 / (x, x-1)^T is free of
    // rank 1 but needs two charts; sections glue across them
    VecPoly col(R->ctx(), 2);
    col.c[0] = R->var("x");
    col.c[1] = R->parse_elem("x - 1");
    FpModule L(R, 2, {col});
    // section must kill the relation: s0*x + s1*(x-1) = 0
    GeneralizedDivisor D =
        GeneralizedDivisor::make(L, {R->parse_elem("x - 1"), R->parse_elem("-x")});
    auto dcharts = divisor_from_generalized(D);
    REQUIRE(dcharts.size() == 2);
    for (const auto& chart : dcharts) {
        // round-trip: on each chart the other section entry is the
        // recorded multiple of the cutting element
        for (std::size_t j = 0; j < 2; ++j) {
            Poly lhs = transport_elem(D.section[j], chart.chart_ring);
            Poly rhs = chart.gen_coeffs[j] * chart.locus.seq[0];
            CHECK(chart.chart_ring->is_zero_elem(lhs - rhs));
        }
    }

    // certification rejects a non-locally-free rank-1 candidate
    auto Nd = PresentedRing::parse({"u", "v"}, {"u*v"});
    VecPoly kcol(Nd->ctx(), 2);
    kcol.c[0] = -Nd->var("v");
    kcol.c[1] = Nd->var("u");
    FpModule I0(Nd, 2, {kcol});
    GeneralizedDivisor nonfree = GeneralizedDivisor::make(I0, {Nd->var("u"), Nd->var("v")});
    CHECK_THROWS_AS(divisor_from_generalized(nonfree), AlgebraError);
}
