#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rees/monomial.hpp"
#include "rees/rational.hpp"

namespace rees {

class VarCtx;
using CtxPtr = std::shared_ptr<const VarCtx>;

// Variable context: an ordered list of variable names plus the active
// monomial order. Polynomials carry a pointer to their context; two
// polynomials interoperate only if they share the same context object,
// which makes context checks a pointer comparison.
class VarCtx {
public:
    static CtxPtr make(std::vector<std::string> names,
                       MonomialOrder order = MonomialOrder::degrevlex());

    const std::vector<std::string>& names() const { return names_; }
    std::size_t nvars() const { return names_.size(); }
    const MonomialOrder& order() const { return order_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

private:
    VarCtx(std::vector<std::string> names, MonomialOrder order);
    std::vector<std::string> names_;
    MonomialOrder order_;
};

struct Term {
    Monomial mon;
    Rat coeff;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept sorted in strictly descending context order and never
// contain zero coefficients. Values are immutable after construction.
class Poly {
public:
    Poly() = default;

    static Poly zero(CtxPtr ctx);
    static Poly constant(CtxPtr ctx, Rat c);
    static Poly one(CtxPtr ctx) { return constant(std::move(ctx), Rat(1)); }
    static Poly variable(CtxPtr ctx, std::size_t var_index);
    static Poly monomial(CtxPtr ctx, Monomial m, Rat c = Rat(1));
    // Takes arbitrary (monomial, coeff) pairs; sorts and merges.
    static Poly from_terms(CtxPtr ctx, std::vector<Term> terms);

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mon.is_one(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const; // total degree; -1 for the zero polynomial

    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;
    Term leading_term() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rat& c) const;
    Poly times_monomial(const Monomial& m, const Rat& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Divide through by rational content so coefficients are coprime
    // integers with positive leading coefficient.
    Poly primitive_part() const;
    Poly monic() const;

    // Same variable names, possibly different order object: re-sort.
    Poly transported(const CtxPtr& target) const;
    // General transport: var_map[i] = index of source variable i in the
    // target context. Target may have more variables.
    Poly transported(const CtxPtr& target, const std::vector<std::size_t>& var_map) const;

    std::string str() const;

private:
    CtxPtr ctx_;
    std::vector<Term> terms_;
};

// Parse polynomial text over a context: rational coefficients, + - * ^,
// parentheses, variables by name. Throws ParseError.
Poly parse_poly(const CtxPtr& ctx, const std::string& text);

std::string poly_str(const Poly& p);

} // namespace rees
