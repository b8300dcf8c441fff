#include "rees/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace rees {

int Monomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Monomial mon_mul(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
    return r;
}

bool mon_divides(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

Monomial mon_div(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        r.exps[i] = a.exps[i] - b.exps[i];
        assert(r.exps[i] >= 0);
    }
    return r;
}

Monomial mon_lcm(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

bool mon_coprime(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

namespace {

int cmp_degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a.exps[i]; db += b.exps[i]; }
    if (da != db) return da < db ? -1 : 1;
    // reverse lex: scan from the last variable; the one with the larger
    // exponent there is the SMALLER monomial.
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
    }
    return 0;
}

int cmp_lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    assert(a.nvars() == b.nvars());
    const std::size_t n = a.nvars();
    switch (kind) {
    case OrderKind::Degrevlex:
        return cmp_degrevlex_range(a, b, 0, n);
    case OrderKind::Lex:
        return cmp_lex_range(a, b, 0, n);
    case OrderKind::Block: {
        const std::size_t s = static_cast<std::size_t>(std::min<int>(block_split, static_cast<int>(n)));
        if (int c = cmp_degrevlex_range(a, b, 0, s)) return c;
        return cmp_degrevlex_range(a, b, s, n);
    }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind) {
    case OrderKind::Degrevlex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Block: return "block(" + std::to_string(block_split) + ")";
    }
    return "?";
}

} // namespace rees
