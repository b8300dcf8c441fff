#pragma once

#include <cstddef>
#include <vector>

#include "rees/groebner.hpp"
#include "rees/ring.hpp"

namespace rees {

// Matrix over a ring, stored columnwise: cols[j] is the image of the
// j-th basis vector, an element of ring^rows.
struct FpMat {
    std::size_t rows = 0;
    std::vector<VecPoly> cols;

    std::size_t ncols() const { return cols.size(); }
    static FpMat from_cols(std::size_t rows, std::vector<VecPoly> cols);
    const Poly& at(std::size_t r, std::size_t c) const { return cols[c].c[r]; }
};

// Finitely presented module: cokernel of a matrix acting on ring^rank.
class FpModule {
public:
    FpModule(RingPtr ring, std::size_t rank, std::vector<VecPoly> relations);

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<VecPoly>& relations() const { return rels_; }
    FpMat presentation() const { return FpMat{rank_, rels_}; }

    static FpModule zero(RingPtr ring) { return FpModule(std::move(ring), 0, {}); }
    static FpModule free(RingPtr ring, std::size_t rank) {
        return FpModule(std::move(ring), rank, {});
    }

private:
    RingPtr ring_;
    std::size_t rank_;
    std::vector<VecPoly> rels_;
};

// Chain complex of free modules F_n -> ... -> F_1 -> F_0 with
// differentials d_i : F_i -> F_{i-1}. Construction verifies d*d = 0
// modulo the ring relations and fails hard otherwise.
class FreeComplex {
public:
    FreeComplex(RingPtr ring, std::vector<std::size_t> ranks, std::vector<FpMat> diffs);

    const RingPtr& ring() const { return ring_; }
    std::size_t length() const { return diffs_.size(); } // top homological degree
    std::size_t rank(std::size_t i) const { return ranks_.at(i); }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    const FpMat& diff(std::size_t i) const; // d_i, 1 <= i <= length

private:
    RingPtr ring_;
    std::vector<std::size_t> ranks_;
    std::vector<FpMat> diffs_;
};

// --- quotient-aware module primitives ------------------------------------

// Generators of {v : M v lies in span(target_sub) modulo the ring
// relations}. target_sub vectors live in ring^rows.
std::vector<VecPoly> kernel_over(const RingPtr& R, const FpMat& M,
                                 const std::vector<VecPoly>& target_sub);

// Membership of v in span(gens) + (relations)*ring^rank.
bool submodule_contains(const RingPtr& R, std::size_t rank,
                        const std::vector<VecPoly>& gens, const VecPoly& v);

// Presentation of span(gens)/span(sub) on the given generators; sub must
// lie in span(gens) modulo the ring relations.
FpModule subquotient(const RingPtr& R, std::size_t ambient_rank,
                     const std::vector<VecPoly>& gens, const std::vector<VecPoly>& sub);

// --- operations -----------------------------------------------------------

// H_i(C) as a presented module; H_0 = coker(d_1), H_len = ker(d_len).
FpModule homology(const FreeComplex& C, std::size_t i);

bool is_zero_module(const FpModule& M);

// Ideal of (rank - r)-minors of the presentation matrix. Unit ideal when
// rank - r <= 0, zero ideal when rank - r exceeds the matrix size.
Ideal fitting_ideal(const FpModule& M, std::size_t r);

// Whether M is locally free of rank r: Fitt_{r-1} = 0 and Fitt_r = (1).
bool is_locally_free_of_rank(const FpModule& M, std::size_t r);

struct Resolution {
    FreeComplex complex; // d_1 = presentation of M
    bool complete;       // false when the length bound was exhausted
};
Resolution free_resolution(const FpModule& M, std::size_t length_bound);

// Tor_i(M, N) over the common ring, via a bounded free resolution of M
// tensored with N.
FpModule tor(const FpModule& M, const FpModule& N, std::size_t i);

} // namespace rees
