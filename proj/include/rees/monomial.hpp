#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rees {

// Exponent vector of a power product, dense over the ambient variables.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }
    int degree() const;
    bool is_one() const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
    // Structural order (plain lex on the exponent vector), used for
    // canonical containers only; monomial orders live in MonomialOrder.
    bool operator<(const Monomial& o) const { return exps < o.exps; }
};

Monomial mon_mul(const Monomial& a, const Monomial& b);
bool mon_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mon_div(const Monomial& a, const Monomial& b); // a / b, assumes b | a
Monomial mon_lcm(const Monomial& a, const Monomial& b);
bool mon_coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { Degrevlex, Lex, Block };

// Total order on monomials, compatible with multiplication.
// Degrevlex is the working default. Block(k) eliminates the first k
// variables: it compares the leading block by degrevlex and breaks ties
// with degrevlex on the tail, so basis elements free of the leading
// block generate the elimination ideal.
struct MonomialOrder {
    OrderKind kind = OrderKind::Degrevlex;
    int block_split = 0;

    static MonomialOrder degrevlex() { return {OrderKind::Degrevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder block(int split) { return {OrderKind::Block, split}; }

    // negative / zero / positive for a < b, a == b, a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != OrderKind::Block || block_split == o.block_split);
    }
    std::string name() const;
};

} // namespace rees
