#include "rees/groebner.hpp"

#include <algorithm>

#include "rees/diagnostics.hpp"

namespace rees {

Ideal Ideal::make(RingPtr ring, std::vector<Poly> gens) {
    std::vector<Poly> normalized;
    normalized.reserve(gens.size());
    for (auto& g : gens) {
        Poly n = ring->normal_form(g);
        if (!n.is_zero()) normalized.push_back(std::move(n));
    }
    return Ideal{std::move(ring), std::move(normalized)};
}

Ideal Ideal::plus(const Poly& p) const {
    std::vector<Poly> g = gens;
    g.push_back(p);
    return Ideal::make(ring, std::move(g));
}

Ideal Ideal::plus(const std::vector<Poly>& ps) const {
    std::vector<Poly> g = gens;
    g.insert(g.end(), ps.begin(), ps.end());
    return Ideal::make(ring, std::move(g));
}

namespace {

ModuleGB cover_gb(const Ideal& I) {
    std::vector<VecPoly> gens;
    gens.reserve(I.gens.size() + I.ring->relations().size());
    for (const auto& g : I.gens) gens.push_back(VecPoly{{g}});
    for (const auto& r : I.ring->relations()) gens.push_back(VecPoly{{r}});
    return ModuleGB(I.ring->ctx(), 1, gens);
}

} // namespace

std::vector<Poly> saturated_basis(const Ideal& I) {
    ModuleGB gb = cover_gb(I);
    std::vector<Poly> basis;
    basis.reserve(gb.basis().size());
    for (const auto& v : gb.basis()) basis.push_back(v.c[0]);
    return basis;
}

Ideal groebner_basis(const Ideal& I) {
    std::vector<Poly> total = saturated_basis(I);
    const std::vector<Poly>& ring_basis = I.ring->relation_basis();
    std::vector<Poly> reduced;
    for (const auto& g : total) {
        bool from_ring = std::any_of(ring_basis.begin(), ring_basis.end(),
                                     [&](const Poly& r) { return r == g; });
        if (!from_ring) reduced.push_back(g);
    }
    return Ideal{I.ring, std::move(reduced)};
}

bool ideal_member(const Poly& p, const Ideal& I) {
    if (p.ctx() != I.ring->ctx()) throw AlgebraError("ideal membership across rings");
    ModuleGB gb = cover_gb(I);
    return gb.contains(VecPoly{{p}});
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (I.ring->ctx() != J.ring->ctx()) throw AlgebraError("ideal comparison across rings");
    return saturated_basis(I) == saturated_basis(J);
}

bool ideal_is_unit(const Ideal& I) {
    return ideal_member(I.ring->one(), I);
}

bool ideal_is_zero(const Ideal& I) {
    return groebner_basis(I).gens.empty();
}

SyzygyModule syzygies(const std::vector<Poly>& f, const RingPtr& R) {
    const std::size_t n = f.size();
    for (const auto& p : f)
        if (p.ctx() != R->ctx()) throw AlgebraError("syzygy input not in ring");
    // kernel over the cover of the map on the extended tuple (f, relations)
    std::vector<VecPoly> images;
    images.reserve(n + R->relations().size());
    for (const auto& p : f) images.push_back(VecPoly{{p}});
    for (const auto& r : R->relations()) images.push_back(VecPoly{{r}});
    std::vector<VecPoly> ker = kernel_generators(R->ctx(), 1, images);
    SyzygyModule out{R, f, {}};
    for (const auto& k : ker) {
        VecPoly s(R->ctx(), n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            s.c[i] = R->normal_form(k.c[i]);
            nonzero = nonzero || !s.c[i].is_zero();
        }
        if (!nonzero) continue;
        out.gens.push_back(std::move(s));
    }
    // every emitted syzygy evaluates to normal form zero
    for (const auto& s : out.gens) {
        Poly acc = R->zero();
        for (std::size_t i = 0; i < n; ++i) acc = acc + s.c[i] * f[i];
        if (!R->is_zero_elem(acc))
            throw AlgebraError("internal: syzygy fails to evaluate to zero");
    }
    return out;
}

Ideal annihilator(const Poly& f, const RingPtr& R) {
    SyzygyModule syz = syzygies({f}, R);
    std::vector<Poly> gens;
    gens.reserve(syz.gens.size());
    for (const auto& s : syz.gens) gens.push_back(s.c[0]);
    return Ideal::make(R, std::move(gens));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars_to_drop) {
    const RingPtr& R = I.ring;
    const auto& names = R->vars();
    std::vector<bool> drop(names.size(), false);
    for (const auto& v : vars_to_drop) {
        auto idx = R->ctx()->index_of(v);
        if (!idx) throw AlgebraError("eliminate: unknown variable '" + v + "'");
        drop[*idx] = true;
    }
    // permuted context: dropped variables first, then a block order
    std::vector<std::string> perm_names;
    std::vector<std::size_t> var_map(names.size()); // old index -> new index
    for (std::size_t i = 0; i < names.size(); ++i)
        if (drop[i]) {
            var_map[i] = perm_names.size();
            perm_names.push_back(names[i]);
        }
    const std::size_t split = perm_names.size();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!drop[i]) {
            var_map[i] = perm_names.size();
            perm_names.push_back(names[i]);
        }
    CtxPtr ectx = VarCtx::make(perm_names, MonomialOrder::block(static_cast<int>(split)));

    std::vector<VecPoly> gens;
    for (const auto& g : I.gens) gens.push_back(VecPoly{{g.transported(ectx, var_map)}});
    for (const auto& r : R->relations()) gens.push_back(VecPoly{{r.transported(ectx, var_map)}});
    ModuleGB gb(ectx, 1, gens);

    // keep basis elements free of the dropped block, map back
    std::vector<std::size_t> back_map(names.size()); // new index -> old index
    for (std::size_t i = 0; i < names.size(); ++i) back_map[var_map[i]] = i;
    std::vector<Poly> kept;
    for (const auto& v : gb.basis()) {
        const Poly& g = v.c[0];
        bool uses_dropped = false;
        for (const auto& t : g.terms())
            for (std::size_t i = 0; i < split && !uses_dropped; ++i)
                if (t.mon.exps[i] > 0) uses_dropped = true;
        if (uses_dropped) continue;
        kept.push_back(g.transported(R->ctx(), back_map));
    }
    return Ideal::make(R, std::move(kept));
}

namespace {

// Largest subset S of variables such that no leading monomial is
// supported entirely inside S; -1 when the ideal is the unit ideal.
int dim_of_leading_terms(const std::vector<Monomial>& lms, std::size_t nvars) {
    for (const auto& m : lms)
        if (m.is_one()) return -1;
    int best = -1;
    const std::size_t limit = std::size_t(1) << nvars;
    for (std::size_t mask = 0; mask < limit; ++mask) {
        int size = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (mask & (std::size_t(1) << i)) ++size;
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : lms) {
            bool inside = true;
            for (std::size_t i = 0; i < nvars && inside; ++i)
                if (m.exps[i] > 0 && !(mask & (std::size_t(1) << i))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

} // namespace

int krull_dim(const Ideal& I) {
    const std::size_t n = I.ring->nvars();
    if (n > 24) throw AlgebraError("krull_dim: too many variables for subset search");
    std::vector<Poly> basis = saturated_basis(I);
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const auto& g : basis) lms.push_back(g.leading_monomial());
    if (basis.empty()) return static_cast<int>(n); // zero ideal in a polynomial ring
    return dim_of_leading_terms(lms, n);
}

int krull_dim(const RingPtr& R) {
    return krull_dim(Ideal::make(R, {}));
}

} // namespace rees
