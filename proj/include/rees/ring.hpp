#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rees/modgb.hpp"
#include "rees/poly.hpp"

namespace rees {

class PresentedRing;
using RingPtr = std::shared_ptr<const PresentedRing>;

// Finitely presented Q-algebra Q[x_1..x_m]/(r_1..r_k). Elements are
// polynomials over the ring's context; normal forms against the reduced
// Groebner basis of the relation ideal decide equality of residue
// classes. Immutable after construction; the basis cache fills lazily
// under a mutex so concurrent readers are safe.
class PresentedRing : public std::enable_shared_from_this<PresentedRing> {
public:
    // Polynomial ring (no relations).
    static RingPtr polynomial(std::vector<std::string> vars,
                              MonomialOrder order = MonomialOrder::degrevlex());
    // Quotient of the polynomial ring on ctx by the given relations
    // (which must live over ctx). Relations may be redundant.
    static RingPtr make(CtxPtr ctx, std::vector<Poly> relations);
    // Convenience: parse relation texts over a fresh context.
    static RingPtr parse(std::vector<std::string> vars, std::vector<std::string> relations,
                         MonomialOrder order = MonomialOrder::degrevlex());

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<std::string>& vars() const { return ctx_->names(); }
    std::size_t nvars() const { return ctx_->nvars(); }
    const std::vector<Poly>& relations() const { return relations_; }
    bool is_polynomial_ring() const { return relations_.empty(); }

    Poly parse_elem(const std::string& text) const { return parse_poly(ctx_, text); }
    Poly var(const std::string& name) const;
    Poly zero() const { return Poly::zero(ctx_); }
    Poly one() const { return Poly::one(ctx_); }

    // Reduced Groebner basis of the relation ideal (computed once).
    const std::vector<Poly>& relation_basis() const;

    // Canonical representative of the residue class of p.
    Poly normal_form(const Poly& p) const;
    bool is_zero_elem(const Poly& p) const { return normal_form(p).is_zero(); }
    bool equal_elems(const Poly& p, const Poly& q) const { return is_zero_elem(p - q); }

    // Same presentation under a different monomial order.
    RingPtr with_order(MonomialOrder order) const;
    // Polynomial extension: same relations, extra variables appended.
    RingPtr extended(const std::vector<std::string>& new_vars) const;
    // Rabinowitsch localization: adjoin inv_name with inv_name * g = 1.
    RingPtr localized(const Poly& g, const std::string& inv_name) const;

    std::string describe() const;

private:
    PresentedRing(CtxPtr ctx, std::vector<Poly> relations);
    const ModuleGB* relation_gb() const; // nullptr for a polynomial ring
    CtxPtr ctx_;
    std::vector<Poly> relations_;
    mutable std::mutex gb_mutex_;
    mutable std::shared_ptr<const ModuleGB> relgb_;
    mutable std::vector<Poly> relbasis_;
};

// Pick a variable name not already used by the ring: `stem`, then
// `stem_2`, `stem_3`, ...
std::string fresh_var_name(const std::vector<std::string>& taken, const std::string& stem);

// Optional on-disk cache for relation bases, keyed by a content hash of
// (variables, order, relations). Empty string disables it.
void set_groebner_cache_dir(const std::string& dir);
std::string groebner_cache_dir();

// Transport an element of `from` to a ring whose variables contain the
// variables of `from` by name.
Poly transport_elem(const Poly& p, const RingPtr& target);

// Ring homomorphism determined by images of the source variables.
// Construction verifies every source relation maps to zero in the
// target; otherwise IllDefinedMap is thrown.
class RingMap {
public:
    RingMap(RingPtr source, RingPtr target, std::vector<Poly> images);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<Poly>& images() const { return images_; }

    Poly apply(const Poly& p) const; // normal form in the target
    std::vector<Poly> apply(const std::vector<Poly>& ps) const;

    static RingMap identity(const RingPtr& ring);
    RingMap compose(const RingMap& then) const; // first *this, then `then`

private:
    Poly apply_raw(const Poly& p) const; // substitution without final reduction
    RingPtr source_;
    RingPtr target_;
    std::vector<Poly> images_;
};

} // namespace rees
