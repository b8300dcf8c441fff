#pragma once

#include <string>
#include <vector>

#include "rees/homalg.hpp"

namespace rees {

// Derived zero locus of a sequence (f_1..f_n) in a presented ring A:
// the pair (A, f) stands for the locus cut out by the f_i together with
// its Koszul presentation. pi_0 is A/(f_1..f_n); higher homotopy is
// Koszul homology of the sequence.
struct DerivedLocus {
    RingPtr ambient;
    std::vector<Poly> seq; // kept in normal form

    static DerivedLocus make(RingPtr ambient, std::vector<Poly> seq);
    std::size_t length() const { return seq.size(); }
    Ideal pi0_ideal() const { return Ideal::make(ambient, seq); }
    bool pi0_is_empty() const { return ideal_is_unit(pi0_ideal()); }
};

// Length-n complex with free ranks C(n,k) and the usual signed Koszul
// differentials; the empty sequence yields the complex concentrated in
// degree zero.
FreeComplex koszul_complex(const DerivedLocus& Z);

// pi_i = H_i of the Koszul complex; pi_0 is the quotient presentation.
// Degrees above the sequence length give the zero module.
FpModule homotopy_module(const DerivedLocus& Z, std::size_t i);

// True iff the Koszul complex is acyclic in positive degrees (checked
// exhaustively in degrees 1..n). is_regular_sequence is the same test
// under its classical name.
bool is_classical(const DerivedLocus& Z);
bool is_regular_sequence(const DerivedLocus& Z);

// Transport along a ring map out of the ambient ring; the sequence
// length (virtual codimension) is preserved on the nose.
DerivedLocus base_change(const DerivedLocus& Z, const RingMap& phi);

// Virtual codimension = sequence length. Topological codimension =
// dim(ambient) - dim(pi_0); requires pi_0 nonzero.
int codim_virtual(const DerivedLocus& Z);
int codim_topological(const DerivedLocus& Z);

// The quasi-smooth structure on V(gens) determined by the chosen
// generators; distinct generator lists give distinct structures.
DerivedLocus derived_structure_from_generators(const RingPtr& R, std::vector<Poly> gens);

// Derived product of Z1 and Z2 over a common base ring S. Both ambient
// rings must be polynomial extensions of S (their relations use only
// S-variables and generate the same ideal as S's relations); otherwise
// the construction refuses. Variables of the second factor are renamed
// when they collide.
DerivedLocus derived_product(const DerivedLocus& Z1, const DerivedLocus& Z2, const RingPtr& base);

// Is `ring` a polynomial extension of `base`? (Every base variable
// present, relations only in base variables, same relation ideal.)
bool is_polynomial_extension(const RingPtr& ring, const RingPtr& base);

// Generalized divisor: a rank-one module with a section to the ring.
struct GeneralizedDivisor {
    FpModule line_module;
    std::vector<Poly> section; // one entry per module generator

    // Validates that the section kills the presentation relations.
    static GeneralizedDivisor make(FpModule line_module, std::vector<Poly> section);
};

// One chart of the divisor attached to a generalized divisor: the base
// localized at a maximal minor, the index of the module generator that
// trivializes there, the coefficients expressing the other generators
// in terms of it, and the one-element locus cut by the section.
struct DivisorChart {
    Poly minor;                  // inverted element (in the base ring)
    RingPtr chart_ring;          // base or its localization
    std::size_t generator_index; // trivializing generator
    std::vector<Poly> gen_coeffs; // e_j = gen_coeffs[j] * e_{i0} in the chart
    DerivedLocus locus;          // (chart_ring, (d)) with d the trivialized section
};

// Zero locus of the section on a trivializing cover. Requires the
// rank-one certification Fitt_0 = 0 and Fitt_1 = (1); throws otherwise.
std::vector<DivisorChart> divisor_from_generalized(const GeneralizedDivisor& D);

} // namespace rees
