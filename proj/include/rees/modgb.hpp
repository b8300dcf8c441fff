#pragma once

#include <cstddef>
#include <vector>

#include "rees/poly.hpp"

namespace rees {

// Element of a free module ctx^rank: one polynomial per component.
struct VecPoly {
    std::vector<Poly> c;

    VecPoly() = default;
    VecPoly(CtxPtr ctx, std::size_t rank);
    explicit VecPoly(std::vector<Poly> comps) : c(std::move(comps)) {}

    std::size_t rank() const { return c.size(); }
    bool is_zero() const;
    bool operator==(const VecPoly& o) const { return c == o.c; }

    VecPoly operator+(const VecPoly& o) const;
    VecPoly operator-(const VecPoly& o) const;
    VecPoly scaled(const Rat& r) const;
    VecPoly times_monomial(const Monomial& m, const Rat& r) const;
    VecPoly times(const Poly& p) const;
    VecPoly primitive_part() const;
};

VecPoly vp_unit(CtxPtr ctx, std::size_t rank, std::size_t comp); // e_comp

// Leading module term under the position-over-term order: the smallest
// nonzero component wins, ties broken by the ring order within it.
struct ModLead {
    std::size_t comp;
    Monomial mon;
    Rat coeff;
};

// Reduced Groebner basis of a submodule of ctx^rank under POT over the
// context's active ring order. With rank one this is an ideal basis.
class ModuleGB {
public:
    ModuleGB(CtxPtr ctx, std::size_t rank, const std::vector<VecPoly>& gens);

    const CtxPtr& ctx() const { return ctx_; }
    std::size_t rank() const { return rank_; }
    const std::vector<VecPoly>& basis() const { return basis_; }

    // Full normal form. If quotients is non-null it receives one Poly per
    // basis element with v = sum(q_i * basis_i) + remainder.
    VecPoly reduce(const VecPoly& v, std::vector<Poly>* quotients = nullptr) const;
    bool contains(const VecPoly& v) const { return reduce(v).is_zero(); }

private:
    CtxPtr ctx_;
    std::size_t rank_;
    std::vector<VecPoly> basis_;
    std::vector<ModLead> leads_;
};

// Generators of the kernel of the map ctx^m -> ctx^target_rank sending
// e_i to images[i]. Computed from the graph module with the target
// components eliminated first. Every returned vector is checked to map
// to zero.
std::vector<VecPoly> kernel_generators(const CtxPtr& ctx, std::size_t target_rank,
                                       const std::vector<VecPoly>& images);

} // namespace rees
