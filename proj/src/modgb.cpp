#include "rees/modgb.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <set>

#include "rees/diagnostics.hpp"

namespace rees {

VecPoly::VecPoly(CtxPtr ctx, std::size_t rank) {
    c.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) c.push_back(Poly::zero(ctx));
}

bool VecPoly::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.is_zero(); });
}

VecPoly VecPoly::operator+(const VecPoly& o) const {
    assert(rank() == o.rank());
    VecPoly r;
    r.c.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) r.c.push_back(c[i] + o.c[i]);
    return r;
}

VecPoly VecPoly::operator-(const VecPoly& o) const {
    assert(rank() == o.rank());
    VecPoly r;
    r.c.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) r.c.push_back(c[i] - o.c[i]);
    return r;
}

VecPoly VecPoly::scaled(const Rat& q) const {
    VecPoly r;
    r.c.reserve(rank());
    for (const auto& p : c) r.c.push_back(p.scaled(q));
    return r;
}

VecPoly VecPoly::times_monomial(const Monomial& m, const Rat& q) const {
    VecPoly r;
    r.c.reserve(rank());
    for (const auto& p : c) r.c.push_back(p.times_monomial(m, q));
    return r;
}

VecPoly VecPoly::times(const Poly& p) const {
    VecPoly r;
    r.c.reserve(rank());
    for (const auto& q : c) r.c.push_back(q * p);
    return r;
}

VecPoly VecPoly::primitive_part() const {
    mpz_class num_gcd = 0, den_lcm = 1;
    const Rat* lead = nullptr;
    for (const auto& p : c) {
        for (const auto& t : p.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        }
        if (!lead && !p.is_zero()) lead = &p.leading_coeff();
    }
    if (!lead) return *this;
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(*lead) < 0) content = -content;
    return scaled(Rat(1) / content);
}

VecPoly vp_unit(CtxPtr ctx, std::size_t rank, std::size_t comp) {
    VecPoly v(ctx, rank);
    v.c[comp] = Poly::one(std::move(ctx));
    return v;
}

namespace {

std::optional<ModLead> mod_lead(const VecPoly& v) {
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (!v.c[i].is_zero()) return ModLead{i, v.c[i].leading_monomial(), v.c[i].leading_coeff()};
    }
    return std::nullopt;
}

// Full normal form of v against basis/leads. sugar, when given, is bumped
// by the sugar degrees of the reducers used; quots, when given, collects
// v = sum(quots_g * basis_g) + remainder.
VecPoly vp_reduce(const CtxPtr& ctx, std::size_t rank, VecPoly v,
                  const std::vector<VecPoly>& basis, const std::vector<ModLead>& leads,
                  const std::vector<int>* basis_sugar, int* sugar,
                  std::vector<Poly>* quots) {
    VecPoly rem(ctx, rank);
    while (true) {
        auto lv = mod_lead(v);
        if (!lv) break;
        bool reduced = false;
        for (std::size_t g = 0; g < basis.size(); ++g) {
            const auto& lg = leads[g];
            if (lg.comp != lv->comp || !mon_divides(lg.mon, lv->mon)) continue;
            Monomial q = mon_div(lv->mon, lg.mon);
            Rat factor = lv->coeff / lg.coeff;
            v = v - basis[g].times_monomial(q, factor);
            if (sugar && basis_sugar) *sugar = std::max(*sugar, q.degree() + (*basis_sugar)[g]);
            if (quots) (*quots)[g] = (*quots)[g] + Poly::monomial(ctx, q, factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly lt = Poly::monomial(ctx, lv->mon, lv->coeff);
            rem.c[lv->comp] = rem.c[lv->comp] + lt;
            v.c[lv->comp] = v.c[lv->comp] - lt;
        }
    }
    return rem;
}

struct SPair {
    int sugar;
    int lcm_deg;
    std::size_t i, j;
    Monomial lcm;
    bool operator>(const SPair& o) const {
        if (sugar != o.sugar) return sugar > o.sugar;
        if (lcm_deg != o.lcm_deg) return lcm_deg > o.lcm_deg;
        if (i != o.i) return i > o.i;
        return j > o.j;
    }
};

struct Engine {
    CtxPtr ctx;
    std::size_t rank;
    std::vector<VecPoly> gb;
    std::vector<ModLead> leads;
    std::vector<int> sugars;
    std::priority_queue<SPair, std::vector<SPair>, std::greater<SPair>> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    Engine(CtxPtr c, std::size_t r) : ctx(std::move(c)), rank(r) {}

    static int vec_degree(const VecPoly& v) {
        int d = -1;
        for (const auto& p : v.c) d = std::max(d, p.degree());
        return d;
    }

    void append(VecPoly v, int sugar) {
        gb.push_back(std::move(v));
        leads.push_back(*mod_lead(gb.back()));
        sugars.push_back(sugar);
        const std::size_t n = gb.size() - 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (leads[i].comp != leads[n].comp) continue;
            Monomial l = mon_lcm(leads[i].mon, leads[n].mon);
            int sug = std::max(sugars[i] + mon_div(l, leads[i].mon).degree(),
                               sugars[n] + mon_div(l, leads[n].mon).degree());
            pairs.push(SPair{sug, l.degree(), i, n, l});
            pending.insert({i, n});
        }
    }

    bool chain_criterion(const SPair& p) const {
        for (std::size_t k = 0; k < gb.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (leads[k].comp != leads[p.i].comp) continue;
            if (!mon_divides(leads[k].mon, p.lcm)) continue;
            auto ik = std::minmax(p.i, k);
            auto jk = std::minmax(p.j, k);
            if (!pending.count(ik) && !pending.count(jk)) return true;
        }
        return false;
    }

    void run(const std::vector<VecPoly>& gens) {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            VecPoly v = g.primitive_part();
            append(std::move(v), vec_degree(g));
        }
        while (!pairs.empty()) {
            SPair p = pairs.top();
            pairs.pop();
            pending.erase({p.i, p.j});
            // the product criterion is only sound in the ring case
            if (rank == 1 && mon_coprime(leads[p.i].mon, leads[p.j].mon)) continue;
            if (chain_criterion(p)) continue;
            Monomial qi = mon_div(p.lcm, leads[p.i].mon);
            Monomial qj = mon_div(p.lcm, leads[p.j].mon);
            VecPoly s = gb[p.i].times_monomial(qi, Rat(1) / leads[p.i].coeff) -
                        gb[p.j].times_monomial(qj, Rat(1) / leads[p.j].coeff);
            int sugar = std::max(sugars[p.i] + qi.degree(), sugars[p.j] + qj.degree());
            VecPoly r = vp_reduce(ctx, rank, std::move(s), gb, leads, &sugars, &sugar, nullptr);
            if (r.is_zero()) continue;
            append(r.primitive_part(), sugar);
        }
    }

    // unique reduced basis: minimal, fully tail-reduced, monic leads
    std::vector<VecPoly> reduced() {
        std::vector<bool> keep(gb.size(), true);
        for (std::size_t i = 0; i < gb.size(); ++i) {
            for (std::size_t j = 0; j < gb.size() && keep[i]; ++j) {
                if (i == j || !keep[j]) continue;
                if (leads[j].comp != leads[i].comp) continue;
                if (!mon_divides(leads[j].mon, leads[i].mon)) continue;
                if (leads[j].mon == leads[i].mon && j > i) continue; // equal leads: keep the earlier
                keep[i] = false;
            }
        }
        std::vector<VecPoly> kept;
        for (std::size_t i = 0; i < gb.size(); ++i)
            if (keep[i]) kept.push_back(gb[i]);

        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < kept.size(); ++i) {
                std::vector<VecPoly> others;
                std::vector<ModLead> other_leads;
                others.reserve(kept.size() - 1);
                for (std::size_t j = 0; j < kept.size(); ++j) {
                    if (j == i) continue;
                    others.push_back(kept[j]);
                    other_leads.push_back(*mod_lead(kept[j]));
                }
                VecPoly r = vp_reduce(ctx, rank, kept[i], others, other_leads, nullptr, nullptr, nullptr);
                if (r == kept[i]) continue;
                changed = true;
                if (r.is_zero()) {
                    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                } else {
                    kept[i] = r.primitive_part();
                }
            }
        }
        for (auto& g : kept) g = g.scaled(Rat(1) / mod_lead(g)->coeff);
        std::sort(kept.begin(), kept.end(), [&](const VecPoly& a, const VecPoly& b) {
            auto la = mod_lead(a), lb = mod_lead(b);
            if (la->comp != lb->comp) return la->comp < lb->comp;
            return ctx->order().compare(la->mon, lb->mon) > 0;
        });
        return kept;
    }
};

} // namespace

ModuleGB::ModuleGB(CtxPtr ctx, std::size_t rank, const std::vector<VecPoly>& gens)
    : ctx_(std::move(ctx)), rank_(rank) {
    for (const auto& g : gens) {
        if (g.rank() != rank_) throw AlgebraError("module generator rank mismatch");
        for (const auto& p : g.c)
            if (p.ctx() != ctx_) throw AlgebraError("module generator context mismatch");
    }
    Engine e(ctx_, rank_);
    e.run(gens);
    basis_ = e.reduced();
    leads_.clear();
    for (const auto& g : basis_) leads_.push_back(*mod_lead(g));
}

VecPoly ModuleGB::reduce(const VecPoly& v, std::vector<Poly>* quotients) const {
    if (v.rank() != rank_) throw AlgebraError("vector rank mismatch in reduction");
    if (quotients) quotients->assign(basis_.size(), Poly::zero(ctx_));
    return vp_reduce(ctx_, rank_, v, basis_, leads_, nullptr, nullptr, quotients);
}

std::vector<VecPoly> kernel_generators(const CtxPtr& ctx, std::size_t target_rank,
                                       const std::vector<VecPoly>& images) {
    const std::size_t m = images.size();
    std::vector<VecPoly> graph;
    graph.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (images[i].rank() != target_rank) throw AlgebraError("image rank mismatch");
        VecPoly v(ctx, target_rank + m);
        for (std::size_t t = 0; t < target_rank; ++t) v.c[t] = images[i].c[t];
        v.c[target_rank + i] = Poly::one(ctx);
        graph.push_back(std::move(v));
    }
    ModuleGB gb(ctx, target_rank + m, graph);
    std::vector<VecPoly> kernel;
    for (const auto& g : gb.basis()) {
        bool in_kernel = true;
        for (std::size_t t = 0; t < target_rank; ++t)
            if (!g.c[t].is_zero()) { in_kernel = false; break; }
        if (!in_kernel) continue;
        VecPoly k(ctx, m);
        for (std::size_t i = 0; i < m; ++i) k.c[i] = g.c[target_rank + i];
        kernel.push_back(std::move(k));
    }
    // every emitted kernel element must map to zero exactly
    for (const auto& k : kernel) {
        VecPoly img(ctx, target_rank);
        for (std::size_t i = 0; i < m; ++i) img = img + images[i].times(k.c[i]);
        if (!img.is_zero()) throw AlgebraError("internal: kernel generator fails to map to zero");
    }
    return kernel;
}

} // namespace rees
