#pragma once

#include <string>
#include <vector>

#include "rees/ring.hpp"

namespace rees {

// Ideal of a presented ring, given by generators. The canonical form is
// the reduced Groebner basis of (generators + ring relations) with the
// ring's relation basis elements removed; this makes the zero ideal
// print as an empty basis and gives a deterministic fingerprint.
struct Ideal {
    RingPtr ring;
    std::vector<Poly> gens;

    static Ideal make(RingPtr ring, std::vector<Poly> gens);
    Ideal plus(const Poly& p) const;
    Ideal plus(const std::vector<Poly>& ps) const;
};

// Reduced basis of the ideal as an ideal of its ring (see above).
Ideal groebner_basis(const Ideal& I);

// Reduced basis of the full preimage ideal (generators + relations) in
// the polynomial cover; the canonical fingerprint used for equality.
std::vector<Poly> saturated_basis(const Ideal& I);

bool ideal_member(const Poly& p, const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);
bool ideal_is_unit(const Ideal& I);
bool ideal_is_zero(const Ideal& I);

// Finite generating set of the syzygy module of (f_1..f_n) over I's
// ring: all vectors (s_1..s_n) with sum(s_i f_i) = 0 in the ring.
// Computed over the polynomial cover on the extended tuple
// (f_1..f_n, relations) and truncated. Every output is re-checked to
// evaluate to normal form zero.
struct SyzygyModule {
    RingPtr ring;
    std::vector<Poly> inputs;
    std::vector<VecPoly> gens; // each of rank inputs.size()
};
SyzygyModule syzygies(const std::vector<Poly>& f, const RingPtr& R);

// Annihilator ideal of f: all g with g*f = 0 in the ring.
Ideal annihilator(const Poly& f, const RingPtr& R);

// Contraction of I to the subring generated by the variables NOT listed
// in vars_to_drop, via a block elimination order. Generators of the
// result involve only the kept variables.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars_to_drop);

// Krull dimension of ring/I, computed combinatorially from the leading
// term ideal (maximal independent sets of variables). The unit ideal
// (empty scheme) has dimension -1.
int krull_dim(const Ideal& I);
int krull_dim(const RingPtr& R);

} // namespace rees
