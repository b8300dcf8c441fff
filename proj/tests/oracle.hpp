#pragma once

// Test-only brute-force oracles, independent of the Groebner engine:
// syzygies found by exact dense linear algebra over enumerated
// monomials, with a local division loop for quotient-ring reduction.

#include <vector>

#include "rees/modgb.hpp"
#include "rees/ring.hpp"

namespace rees::oracle {

// Exact kernel basis of a rational matrix (rows x cols) by Gauss-Jordan.
inline std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> m,
                                                  std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && rat_is_zero(m[pr][c])) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || rat_is_zero(m[i][c])) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// All monomials of total degree <= d in n variables.
inline std::vector<Monomial> monomials_up_to(std::size_t n, int d) {
    std::vector<Monomial> out;
    Monomial cur(n);
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
        if (var == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur.exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur.exps[var] = 0;
    };
    rec(rec, 0, d);
    return out;
}

// Local reduction modulo a list of relations (which, in the tiny test
// rings used here, is already a Groebner basis). Shares nothing with the
// engine's reducer.
inline Poly reduce_by(const Poly& p, const std::vector<Poly>& rels) {
    Poly rest = p;
    Poly result = Poly::zero(p.ctx());
    while (!rest.is_zero()) {
        const Monomial& lm = rest.leading_monomial();
        const Rat& lc = rest.leading_coeff();
        bool hit = false;
        for (const auto& g : rels) {
            if (g.is_zero() || !mon_divides(g.leading_monomial(), lm)) continue;
            Monomial q = mon_div(lm, g.leading_monomial());
            rest = rest - g.times_monomial(q, lc / g.leading_coeff());
            hit = true;
            break;
        }
        if (!hit) {
            Poly lt = Poly::monomial(p.ctx(), lm, lc);
            result = result + lt;
            rest = rest - lt;
        }
    }
    return result;
}

// Degree-bounded syzygies of (f_1..f_m) over R = P/(relations): all
// coefficient vectors of degree <= d, found as the kernel of the linear
// map sending coefficients to the reduced combination.
inline std::vector<VecPoly> brute_syzygies(const RingPtr& R, const std::vector<Poly>& f,
                                           int degree_bound) {
    const CtxPtr& ctx = R->ctx();
    const std::size_t m = f.size();
    std::vector<Monomial> mons = monomials_up_to(ctx->nvars(), degree_bound);

    // result monomial indexing
    std::vector<Monomial> result_mons;
    auto index_of = [&](const Monomial& mon) -> std::size_t {
        for (std::size_t i = 0; i < result_mons.size(); ++i)
            if (result_mons[i] == mon) return i;
        result_mons.push_back(mon);
        return result_mons.size() - 1;
    };

    struct Column {
        std::vector<std::pair<std::size_t, Rat>> entries;
    };
    std::vector<Column> columns;
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& mon : mons) {
            Poly prod = reduce_by(f[i].times_monomial(mon, Rat(1)), R->relations());
            Column col;
            for (const auto& t : prod.terms()) col.entries.push_back({index_of(t.mon), t.coeff});
            columns.push_back(std::move(col));
        }
    }
    std::vector<std::vector<Rat>> mat(result_mons.size(),
                                      std::vector<Rat>(columns.size(), Rat(0)));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, val] : columns[c].entries) mat[r][c] = val;

    std::vector<VecPoly> out;
    for (const auto& v : kernel_basis(std::move(mat), columns.size())) {
        VecPoly s(ctx, m);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Term> terms;
            for (std::size_t j = 0; j < mons.size(); ++j) {
                const Rat& cf = v[i * mons.size() + j];
                if (!rat_is_zero(cf)) terms.push_back({mons[j], cf});
            }
            s.c[i] = Poly::from_terms(ctx, std::move(terms));
        }
        if (!s.is_zero()) out.push_back(std::move(s));
    }
    return out;
}

} // namespace rees::oracle
