#include "rees/derived.hpp"

#include <algorithm>
#include <map>

#include "rees/diagnostics.hpp"

namespace rees {

DerivedLocus DerivedLocus::make(RingPtr ambient, std::vector<Poly> seq) {
    std::vector<Poly> nf;
    nf.reserve(seq.size());
    for (const auto& f : seq) nf.push_back(ambient->normal_form(f));
    return DerivedLocus{std::move(ambient), std::move(nf)};
}

namespace {

std::vector<std::vector<std::size_t>> subsets_of(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) { out.push_back(cur); return; }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

FreeComplex koszul_complex(const DerivedLocus& Z) {
    const RingPtr& R = Z.ambient;
    const std::size_t n = Z.length();
    std::vector<std::size_t> ranks;
    std::vector<FpMat> diffs;
    std::vector<std::vector<std::vector<std::size_t>>> bases(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        bases[k] = subsets_of(n, k);
        ranks.push_back(bases[k].size());
    }
    for (std::size_t k = 1; k <= n; ++k) {
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (std::size_t t = 0; t < bases[k - 1].size(); ++t) index[bases[k - 1][t]] = t;
        std::vector<VecPoly> cols;
        cols.reserve(bases[k].size());
        for (const auto& S : bases[k]) {
            VecPoly col(R->ctx(), ranks[k - 1]);
            for (std::size_t j = 0; j < S.size(); ++j) {
                std::vector<std::size_t> face = S;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                Poly term = (j % 2 == 0) ? Z.seq[S[j]] : -Z.seq[S[j]];
                col.c[index[face]] = col.c[index[face]] + term;
            }
            cols.push_back(std::move(col));
        }
        diffs.push_back(FpMat::from_cols(ranks[k - 1], std::move(cols)));
    }
    return FreeComplex(R, std::move(ranks), std::move(diffs));
}

FpModule homotopy_module(const DerivedLocus& Z, std::size_t i) {
    if (i > Z.length()) return FpModule::zero(Z.ambient);
    return homology(koszul_complex(Z), i);
}

bool is_classical(const DerivedLocus& Z) {
    const RingPtr& R = Z.ambient;
    FreeComplex K = koszul_complex(Z);
    for (std::size_t i = 1; i <= K.length(); ++i) {
        std::vector<VecPoly> cycles = kernel_over(R, K.diff(i), {});
        if (cycles.empty()) continue;
        std::vector<VecPoly> boundaries =
            (i < K.length()) ? K.diff(i + 1).cols : std::vector<VecPoly>{};
        for (const auto& c : cycles)
            if (!submodule_contains(R, K.rank(i), boundaries, c)) return false;
    }
    return true;
}

bool is_regular_sequence(const DerivedLocus& Z) { return is_classical(Z); }

DerivedLocus base_change(const DerivedLocus& Z, const RingMap& phi) {
    if (phi.source() != Z.ambient)
        throw AlgebraError("base change map must start at the ambient ring");
    return DerivedLocus::make(phi.target(), phi.apply(Z.seq));
}

int codim_virtual(const DerivedLocus& Z) { return static_cast<int>(Z.length()); }

int codim_topological(const DerivedLocus& Z) {
    Ideal pi0 = Z.pi0_ideal();
    if (ideal_is_unit(pi0))
        throw AlgebraError("topological codimension of the empty locus is undefined");
    return krull_dim(Z.ambient) - krull_dim(pi0);
}

DerivedLocus derived_structure_from_generators(const RingPtr& R, std::vector<Poly> gens) {
    return DerivedLocus::make(R, std::move(gens));
}

bool is_polynomial_extension(const RingPtr& ring, const RingPtr& base) {
    // every base variable must exist in the ring
    for (const auto& v : base->vars())
        if (!ring->ctx()->index_of(v)) return false;
    // relations may involve base variables only
    for (const auto& r : ring->relations()) {
        for (const auto& t : r.terms())
            for (std::size_t i = 0; i < t.mon.nvars(); ++i)
                if (t.mon.exps[i] > 0 && !base->ctx()->index_of(ring->vars()[i]))
                    return false;
    }
    // and generate the same ideal as the base relations
    std::vector<Poly> back;
    back.reserve(ring->relations().size());
    for (const auto& r : ring->relations()) {
        std::vector<std::size_t> var_map(ring->nvars(), 0);
        // safe: previous loop guarantees only base variables occur
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
            auto idx = base->ctx()->index_of(ring->vars()[i]);
            var_map[i] = idx ? *idx : 0;
        }
        back.push_back(r.transported(base->ctx(), var_map));
    }
    Ideal lifted = Ideal::make(base, back);
    Ideal base_rels = Ideal::make(base, base->relations());
    return ideal_equal(lifted, base_rels);
}

DerivedLocus derived_product(const DerivedLocus& Z1, const DerivedLocus& Z2,
                             const RingPtr& base) {
    if (!is_polynomial_extension(Z1.ambient, base) || !is_polynomial_extension(Z2.ambient, base))
        throw AlgebraError("derived product requires polynomial extensions of the base ring");

    std::vector<std::string> names = base->vars();
    auto add_factor_vars = [&](const RingPtr& amb, std::vector<std::size_t>& var_map) {
        var_map.assign(amb->nvars(), 0);
        for (std::size_t i = 0; i < amb->nvars(); ++i) {
            const std::string& v = amb->vars()[i];
            if (auto idx = base->ctx()->index_of(v)) {
                var_map[i] = *idx;
                continue;
            }
            std::string name = fresh_var_name(names, v);
            var_map[i] = names.size();
            names.push_back(name);
        }
    };
    std::vector<std::size_t> map1, map2;
    add_factor_vars(Z1.ambient, map1);
    add_factor_vars(Z2.ambient, map2);

    CtxPtr ctx = VarCtx::make(names, base->ctx()->order());
    std::vector<std::size_t> base_map(base->nvars());
    for (std::size_t i = 0; i < base->nvars(); ++i) base_map[i] = i;
    std::vector<Poly> rels;
    rels.reserve(base->relations().size());
    for (const auto& r : base->relations()) rels.push_back(r.transported(ctx, base_map));
    RingPtr amalgam = PresentedRing::make(ctx, std::move(rels));

    std::vector<Poly> seq;
    seq.reserve(Z1.length() + Z2.length());
    for (const auto& f : Z1.seq) seq.push_back(f.transported(ctx, map1));
    for (const auto& f : Z2.seq) seq.push_back(f.transported(ctx, map2));
    return DerivedLocus::make(std::move(amalgam), std::move(seq));
}

GeneralizedDivisor GeneralizedDivisor::make(FpModule line_module, std::vector<Poly> section) {
    const RingPtr& R = line_module.ring();
    if (section.size() != line_module.rank())
        throw AlgebraError("section needs one entry per module generator");
    std::vector<Poly> nf;
    nf.reserve(section.size());
    for (const auto& s : section) nf.push_back(R->normal_form(s));
    for (const auto& col : line_module.relations()) {
        Poly acc = R->zero();
        for (std::size_t i = 0; i < nf.size(); ++i) acc = acc + nf[i] * col.c[i];
        if (!R->is_zero_elem(acc))
            throw AlgebraError("section does not vanish on the presentation relations");
    }
    return GeneralizedDivisor{std::move(line_module), std::move(nf)};
}

namespace {

Poly det_of(const RingPtr& R, const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return R->one();
    if (n == 1) return m[0][0];
    Poly acc = R->zero();
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        Poly cof = m[r][0] * det_of(R, minor);
        acc = (r % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) { out.push_back(cur); return; }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

std::vector<DivisorChart> divisor_from_generalized(const GeneralizedDivisor& D) {
    const FpModule& L = D.line_module;
    const RingPtr& R = L.ring();
    if (!is_locally_free_of_rank(L, 1))
        throw AlgebraError("rank certification failure: module is not locally free of rank 1");

    const std::size_t k = L.rank();
    const std::size_t m = L.relations().size();
    std::vector<DivisorChart> charts;

    for (const auto& rows : index_subsets(k, k - 1)) {
        for (const auto& cols : index_subsets(m, k - 1)) {
            std::vector<std::vector<Poly>> sub(k - 1);
            for (std::size_t a = 0; a < k - 1; ++a) {
                sub[a].reserve(k - 1);
                for (std::size_t b = 0; b < k - 1; ++b)
                    sub[a].push_back(L.relations()[cols[b]].c[rows[a]]);
            }
            Poly minor = R->normal_form(det_of(R, sub));
            if (minor.is_zero()) continue;

            std::size_t i0 = 0;
            while (std::find(rows.begin(), rows.end(), i0) != rows.end()) ++i0;

            bool minor_is_unit_constant = minor.is_constant();
            RingPtr chart = minor_is_unit_constant ? R : R->localized(minor, "w");
            Poly inv;
            if (minor_is_unit_constant) {
                inv = Poly::constant(R->ctx(), Rat(1) / minor.terms()[0].coeff);
            } else {
                inv = chart->var(chart->vars().back());
            }

            // solve for e_j = c_j * e_{i0} on the chart via Cramer's rule:
            // sum_j A[rows_j, cols_c] * x_j = -A[i0, cols_c]
            std::vector<Poly> coeffs(k, Poly::zero(R->ctx()));
            std::vector<std::vector<Poly>> system(k - 1, std::vector<Poly>());
            std::vector<Poly> rhs;
            for (std::size_t c = 0; c < k - 1; ++c) {
                system[c].reserve(k - 1);
                for (std::size_t j = 0; j < k - 1; ++j)
                    system[c].push_back(L.relations()[cols[c]].c[rows[j]]);
                rhs.push_back(-L.relations()[cols[c]].c[i0]);
            }
            for (std::size_t j = 0; j < k - 1; ++j) {
                std::vector<std::vector<Poly>> replaced = system;
                for (std::size_t c = 0; c < k - 1; ++c) replaced[c][j] = rhs[c];
                coeffs[rows[j]] = det_of(R, replaced);
            }
            std::vector<Poly> chart_coeffs(k);
            for (std::size_t j = 0; j < k; ++j) {
                Poly lifted = transport_elem(j == i0 ? R->one() : coeffs[j], chart);
                chart_coeffs[j] = chart->normal_form(
                    j == i0 ? lifted : lifted * inv.transported(chart->ctx()));
            }

            Poly cutting = chart->normal_form(transport_elem(D.section[i0], chart));

            // the trivialization must reproduce the restricted section
            for (std::size_t j = 0; j < k; ++j) {
                Poly lhs = transport_elem(D.section[j], chart);
                if (!chart->is_zero_elem(lhs - chart_coeffs[j] * cutting))
                    throw AlgebraError("internal: section does not trivialize on chart");
            }

            charts.push_back(DivisorChart{minor, chart, i0, std::move(chart_coeffs),
                                          DerivedLocus::make(chart, {cutting})});
        }
    }
    return charts;
}

} // namespace rees
