#include "rees/blowup.hpp"

#include <algorithm>

#include "rees/diagnostics.hpp"

namespace rees {

namespace {

// Chart ambient: base ring extended by one coordinate per centre
// position other than k. Returns the ring, the per-position variable
// indices and the transported centre.
struct ChartData {
    RingPtr ambient;
    std::vector<int> coord_var;
    std::vector<Poly> center;
    std::vector<Poly> added_relations; // (f_r - X_r * f_k), r != k
};

ChartData make_chart(const RingPtr& C, const std::vector<Poly>& center, std::size_t k) {
    const std::size_t n = center.size();
    std::vector<std::string> names = C->vars();
    std::vector<int> coord(n, -1);
    std::vector<std::string> added;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == k) continue;
        std::string name = fresh_var_name(names, "X" + std::to_string(r + 1));
        coord[r] = static_cast<int>(names.size());
        names.push_back(name);
        added.push_back(name);
    }
    ChartData out;
    out.ambient = added.empty() ? C : C->extended(added);
    out.coord_var = std::move(coord);
    out.center.reserve(n);
    for (const auto& f : center) out.center.push_back(transport_elem(f, out.ambient));
    for (std::size_t r = 0; r < n; ++r) {
        if (r == k) continue;
        Poly xr = Poly::variable(out.ambient->ctx(), static_cast<std::size_t>(out.coord_var[r]));
        out.added_relations.push_back(out.center[r] - xr * out.center[k]);
    }
    return out;
}

} // namespace

BlowupAtlas blowup_atlas(const DerivedLocus& X, const std::vector<Poly>& center) {
    const RingPtr& C = X.ambient;
    std::vector<Poly> f;
    f.reserve(center.size());
    for (const auto& p : center) f.push_back(C->normal_form(p));
    const std::size_t n = f.size();

    BlowupAtlas atlas{X, f, {}, {}};
    for (std::size_t k = 0; k < n; ++k) {
        ChartData data = make_chart(C, f, k);
        std::vector<Poly> seq;
        seq.reserve(X.seq.size() + data.added_relations.size());
        for (const auto& h : X.seq) seq.push_back(transport_elem(h, data.ambient));
        for (const auto& rel : data.added_relations) seq.push_back(rel);
        atlas.charts.push_back(BlowupChart{k, DerivedLocus::make(data.ambient, std::move(seq)),
                                           data.coord_var, data.center});
    }

    // pairwise gluing: invert the l-th coordinate on chart k and vice versa
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
            const BlowupChart& ck = atlas.charts[k];
            const BlowupChart& cl = atlas.charts[l];
            Poly xl_on_k = Poly::variable(ck.locus.ambient->ctx(),
                                          static_cast<std::size_t>(ck.coord_var[l]));
            Poly xk_on_l = Poly::variable(cl.locus.ambient->ctx(),
                                          static_cast<std::size_t>(cl.coord_var[k]));
            RingPtr loc_k = ck.locus.ambient->localized(xl_on_k, "w");
            RingPtr loc_l = cl.locus.ambient->localized(xk_on_l, "w");
            Poly wk = loc_k->var(loc_k->vars().back());
            Poly wl = loc_l->var(loc_l->vars().back());

            auto build_images = [&](const BlowupChart& from, const RingPtr& from_loc,
                                    const BlowupChart& to, const RingPtr& to_loc,
                                    const Poly& to_w) {
                // from-chart coordinate of position r maps to X_r * w on
                // the other chart; the coordinate of `to`'s own index maps
                // to w; the inverse variable maps to the other coordinate.
                std::vector<Poly> images;
                const auto& names = from_loc->vars();
                for (std::size_t v = 0; v < names.size(); ++v) {
                    const std::string& name = names[v];
                    if (v + 1 == names.size()) {
                        // inverse variable of from_loc: X_to on the to-chart
                        images.push_back(to_loc->var(
                            to_loc->vars()[static_cast<std::size_t>(to.coord_var[from.index])]));
                        continue;
                    }
                    bool is_coord = false;
                    for (std::size_t r = 0; r < to.coord_var.size(); ++r) {
                        if (from.coord_var[r] >= 0 &&
                            static_cast<std::size_t>(from.coord_var[r]) == v) {
                            is_coord = true;
                            if (r == to.index) {
                                images.push_back(to_w);
                            } else {
                                Poly xr = to_loc->var(
                                    to_loc->vars()[static_cast<std::size_t>(to.coord_var[r])]);
                                images.push_back(to_loc->normal_form(xr * to_w));
                            }
                            break;
                        }
                    }
                    if (!is_coord) images.push_back(to_loc->var(name)); // base variable
                }
                return images;
            };

            Poly wk_in = transport_elem(wk, loc_k);
            Poly wl_in = transport_elem(wl, loc_l);
            RingMap to_k(loc_l, loc_k, build_images(cl, loc_l, ck, loc_k, wk_in));
            RingMap to_l(loc_k, loc_l, build_images(ck, loc_k, cl, loc_l, wl_in));
            atlas.overlaps.push_back(ChartOverlap{k, l, loc_k, loc_l, to_k, to_l});
        }
    }
    return atlas;
}

std::vector<DerivedLocus> exceptional_divisor(const BlowupAtlas& B) {
    std::vector<DerivedLocus> out;
    out.reserve(B.charts.size());
    for (const auto& chart : B.charts) {
        std::vector<Poly> seq = chart.locus.seq;
        seq.push_back(chart.center_in_chart[chart.index]);
        out.push_back(DerivedLocus::make(chart.locus.ambient, std::move(seq)));
    }
    return out;
}

DivisorWitness tautological_witness(const BlowupAtlas& B, std::size_t k) {
    const BlowupChart& chart = B.charts.at(k);
    const RingPtr& A = chart.locus.ambient;
    std::vector<Poly> images;
    images.reserve(B.base.ambient->nvars());
    for (const auto& name : B.base.ambient->vars()) images.push_back(A->var(name));
    RingMap inclusion(B.base.ambient, A, std::move(images));
    std::vector<Poly> coeffs;
    coeffs.reserve(B.center.size());
    for (std::size_t r = 0; r < B.center.size(); ++r) {
        if (r == k) coeffs.push_back(A->one());
        else coeffs.push_back(Poly::variable(A->ctx(), static_cast<std::size_t>(chart.coord_var[r])));
    }
    return DivisorWitness{chart.locus, inclusion, chart.center_in_chart[k], std::move(coeffs)};
}

namespace {

void check_witness_shape(const DerivedLocus& X, const std::vector<Poly>& center,
                         const DivisorWitness& W) {
    if (W.structure_map.source() != X.ambient)
        throw AlgebraError("witness structure map must start at X's ambient ring");
    if (W.structure_map.target() != W.locus.ambient)
        throw AlgebraError("witness structure map must land in S's ambient ring");
    if (W.coeffs.size() != center.size())
        throw AlgebraError("witness needs one coefficient per centre element");
    // S must lie over X: the base sequence of X pulls back into S's ideal
    Ideal s_ideal = W.locus.pi0_ideal();
    for (const auto& h : X.seq)
        if (!ideal_member(W.structure_map.apply(h), s_ideal))
            throw AlgebraError("S does not lie over X (base sequence does not vanish)");
}

bool witness_identities_hold(const std::vector<Poly>& center, const DivisorWitness& W) {
    Ideal s_ideal = W.locus.pi0_ideal();
    for (std::size_t i = 0; i < center.size(); ++i) {
        Poly fi = W.structure_map.apply(center[i]);
        if (!ideal_member(fi - W.coeffs[i] * W.cutting, s_ideal)) return false;
    }
    return true;
}

} // namespace

DivisorVerdict verify_divisor(const DerivedLocus& X, const std::vector<Poly>& center,
                              const DivisorWitness& W) {
    check_witness_shape(X, center, W);
    const RingPtr& S = W.locus.ambient;
    DivisorVerdict v{};
    v.witness_ok = witness_identities_hold(center, W);
    v.a_ok = true; // a single cutting element is a codimension-one presentation

    std::vector<Poly> cut = W.locus.seq;
    cut.push_back(W.cutting);
    std::vector<Poly> pulled = W.locus.seq;
    for (const auto& f : center) pulled.push_back(W.structure_map.apply(f));
    v.b_ok = ideal_equal(Ideal::make(S, cut), Ideal::make(S, pulled));

    std::vector<Poly> conormal = W.coeffs;
    conormal.push_back(W.cutting);
    for (const auto& h : W.locus.seq) conormal.push_back(h);
    v.c_ok = ideal_is_unit(Ideal::make(S, conormal));
    return v;
}

HomotopyVerdict verify_divisor_homotopy(const DerivedLocus& X, const std::vector<Poly>& center,
                                        const DivisorWitness& W) {
    check_witness_shape(X, center, W);
    const RingPtr& S = W.locus.ambient;
    HomotopyVerdict v{};
    v.witness_ok = witness_identities_hold(center, W);

    std::vector<Poly> cut = W.locus.seq;
    cut.push_back(W.cutting);
    std::vector<Poly> pulled = W.locus.seq;
    for (const auto& f : center) pulled.push_back(W.structure_map.apply(f));
    v.pi0_iso = ideal_equal(Ideal::make(S, cut), Ideal::make(S, pulled));

    // work over pi_0(S): S's ambient with the base sequence adjoined
    std::vector<Poly> rels = S->relations();
    for (const auto& h : W.locus.seq) rels.push_back(h);
    RingPtr pi0S = PresentedRing::make(S->ctx(), std::move(rels));

    std::vector<Poly> f_bar;
    f_bar.reserve(center.size());
    for (const auto& f : center)
        f_bar.push_back(pi0S->normal_form(W.structure_map.apply(f)));
    Poly d_bar = pi0S->normal_form(W.cutting);

    // image of H_1 of the pulled-back Koszul inside Ann(d): the syzygy
    // classes pushed through the witness coefficients
    SyzygyModule syz = syzygies(f_bar, pi0S);
    std::vector<Poly> image;
    image.reserve(syz.gens.size());
    for (const auto& s : syz.gens) {
        Poly acc = pi0S->zero();
        for (std::size_t i = 0; i < center.size(); ++i) acc = acc + s.c[i] * W.coeffs[i];
        acc = pi0S->normal_form(acc);
        if (!acc.is_zero()) image.push_back(acc);
    }
    Ideal image_ideal = Ideal::make(pi0S, image);
    Ideal ann = annihilator(d_bar, pi0S);
    v.pi1_surj = true;
    for (const auto& g : ann.gens)
        if (!ideal_member(g, image_ideal)) { v.pi1_surj = false; break; }
    return v;
}

std::vector<bool> classical_truncation_compare(const DerivedLocus& X,
                                               const std::vector<Poly>& center) {
    if (!X.seq.empty())
        throw AlgebraError("truncation comparison requires a classical base (empty sequence)");
    BlowupAtlas atlas = blowup_atlas(X, center);
    const std::size_t n = atlas.center.size();
    std::vector<bool> verdicts;
    verdicts.reserve(n);
    for (const auto& chart : atlas.charts) {
        const RingPtr& A = chart.locus.ambient;
        // linear forms f_i X_j - f_j X_i from the Koszul presentation of
        // the ideal module, dehomogenized at X_k = 1
        std::vector<Poly> sym;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                auto coord = [&](std::size_t r) {
                    return r == chart.index
                               ? A->one()
                               : Poly::variable(A->ctx(), static_cast<std::size_t>(chart.coord_var[r]));
                };
                sym.push_back(chart.center_in_chart[i] * coord(j) -
                              chart.center_in_chart[j] * coord(i));
            }
        }
        verdicts.push_back(
            ideal_equal(Ideal::make(A, sym), Ideal::make(A, chart.locus.seq)));
    }
    return verdicts;
}

std::vector<SimultaneousChart> simultaneous_blowup(const DerivedLocus& X,
                                                   const std::vector<std::vector<Poly>>& centers) {
    if (!X.seq.empty())
        throw AlgebraError("simultaneous blow-up requires a classical base (empty sequence)");
    std::vector<BlowupAtlas> atlases;
    atlases.reserve(centers.size());
    for (const auto& c : centers) atlases.push_back(blowup_atlas(X, c));

    std::vector<SimultaneousChart> out;
    std::vector<std::size_t> tuple(centers.size(), 0);
    bool any_empty = std::any_of(atlases.begin(), atlases.end(),
                                 [](const BlowupAtlas& a) { return a.empty(); });
    if (any_empty || centers.empty()) return out;

    while (true) {
        DerivedLocus acc = DerivedLocus::make(X.ambient, {});
        for (std::size_t m = 0; m < centers.size(); ++m)
            acc = derived_product(acc, atlases[m].charts[tuple[m]].locus, X.ambient);
        out.push_back(SimultaneousChart{tuple, acc, is_classical(acc)});

        // advance the tuple
        std::size_t pos = 0;
        while (pos < tuple.size()) {
            if (++tuple[pos] < atlases[pos].charts.size()) break;
            tuple[pos] = 0;
            ++pos;
        }
        if (pos == tuple.size()) break;
    }
    return out;
}

std::vector<StrictTransformChart> strict_transform_immersion(const DerivedLocus& Y,
                                                             const DerivedLocus& X,
                                                             const std::vector<Poly>& center) {
    if (Y.ambient != X.ambient)
        throw AlgebraError("strict transform requires a shared ambient ring");
    if (!Y.seq.empty())
        throw AlgebraError("the enclosing locus must have an empty sequence");
    const std::size_t m = X.seq.size();
    const std::size_t n = center.size();

    std::vector<Poly> big_center = X.seq; // h first, then f
    for (const auto& f : center) big_center.push_back(X.ambient->normal_form(f));

    BlowupAtlas atlas_X = blowup_atlas(X, center);
    BlowupAtlas atlas_Y = blowup_atlas(Y, big_center);

    std::vector<StrictTransformChart> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const BlowupChart& big = atlas_Y.charts[m + k];
        const BlowupChart& small = atlas_X.charts[k];
        const RingPtr& BA = big.locus.ambient;
        const RingPtr& SA = small.locus.ambient;

        std::vector<Poly> cut;
        cut.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            cut.push_back(Poly::variable(BA->ctx(), static_cast<std::size_t>(big.coord_var[j])));

        // substitution W_j = 0, matching f-coordinates by position
        std::vector<Poly> images;
        images.reserve(BA->nvars());
        for (std::size_t v = 0; v < BA->nvars(); ++v) {
            bool mapped = false;
            for (std::size_t j = 0; j < m && !mapped; ++j)
                if (big.coord_var[j] == static_cast<int>(v)) {
                    images.push_back(SA->zero());
                    mapped = true;
                }
            for (std::size_t r = 0; r < n && !mapped; ++r)
                if (big.coord_var[m + r] == static_cast<int>(v)) {
                    images.push_back(
                        Poly::variable(SA->ctx(), static_cast<std::size_t>(small.coord_var[r])));
                    mapped = true;
                }
            if (!mapped) images.push_back(SA->var(BA->vars()[v])); // base variable
        }
        RingMap w_to_zero(BA, SA, std::move(images));

        std::vector<Poly> substituted;
        substituted.reserve(big.locus.seq.size());
        for (const auto& rel : big.locus.seq) substituted.push_back(w_to_zero.apply(rel));
        bool matches =
            ideal_equal(Ideal::make(SA, substituted), Ideal::make(SA, small.locus.seq));
        out.push_back(StrictTransformChart{k, big.locus, std::move(cut), matches});
    }
    return out;
}

DeformationAtlas deformation_atlas(const DerivedLocus& X, const std::vector<Poly>& center) {
    const RingPtr& C = X.ambient;
    std::vector<Poly> f;
    f.reserve(center.size());
    for (const auto& p : center) f.push_back(C->normal_form(p));
    const std::size_t n = f.size();

    std::string t_name = fresh_var_name(C->vars(), "t");
    DeformationAtlas out{X, f, {}, DerivedLocus{}, t_name};

    // t-chart: C[t, X_1..X_n] with relations f_r - X_r * t
    {
        std::vector<std::string> names{t_name};
        std::vector<std::string> xnames;
        std::vector<std::string> taken = C->vars();
        taken.push_back(t_name);
        for (std::size_t r = 0; r < n; ++r) {
            std::string x = fresh_var_name(taken, "X" + std::to_string(r + 1));
            taken.push_back(x);
            xnames.push_back(x);
            names.push_back(x);
        }
        RingPtr amb = C->extended(names);
        Poly t = amb->var(t_name);
        std::vector<Poly> seq;
        for (const auto& h : X.seq) seq.push_back(transport_elem(h, amb));
        for (std::size_t r = 0; r < n; ++r)
            seq.push_back(transport_elem(f[r], amb) - amb->var(xnames[r]) * t);
        out.t_chart = DerivedLocus::make(amb, std::move(seq));
    }

    // k-charts: C[t, X_{r != k}, T, U] with h, (f_r - X_r f_k), t - T f_k,
    // T U - 1; inverting T removes the strict transform of t = 0
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::string> taken = C->vars();
        taken.push_back(t_name);
        std::vector<std::string> names{t_name};
        std::vector<std::string> xnames(n);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k) continue;
            std::string x = fresh_var_name(taken, "X" + std::to_string(r + 1));
            taken.push_back(x);
            xnames[r] = x;
            names.push_back(x);
        }
        std::string T_name = fresh_var_name(taken, "T");
        taken.push_back(T_name);
        std::string U_name = fresh_var_name(taken, "U");
        names.push_back(T_name);
        names.push_back(U_name);

        RingPtr amb = C->extended(names);
        Poly t = amb->var(t_name);
        Poly T = amb->var(T_name);
        Poly U = amb->var(U_name);
        Poly fk = transport_elem(f[k], amb);
        std::vector<Poly> seq;
        for (const auto& h : X.seq) seq.push_back(transport_elem(h, amb));
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k) continue;
            seq.push_back(transport_elem(f[r], amb) - amb->var(xnames[r]) * fk);
        }
        seq.push_back(t - T * fk);
        seq.push_back(T * U - amb->one());
        out.charts.push_back(DerivedLocus::make(amb, std::move(seq)));
    }
    return out;
}

std::vector<DerivedLocus> restrict_t(const DeformationAtlas& D, const Rat& value) {
    std::vector<DerivedLocus> out;
    auto restrict_one = [&](const DerivedLocus& chart) {
        const RingPtr& amb = chart.ambient;
        std::vector<std::string> names;
        for (const auto& v : amb->vars())
            if (v != D.t_name) names.push_back(v);
        CtxPtr ctx = VarCtx::make(names, amb->ctx()->order());
        std::vector<Poly> rels;
        for (const auto& r : D.base.ambient->relations()) {
            std::vector<std::size_t> var_map(D.base.ambient->nvars());
            for (std::size_t i = 0; i < var_map.size(); ++i)
                var_map[i] = *ctx->index_of(D.base.ambient->vars()[i]);
            rels.push_back(r.transported(ctx, var_map));
        }
        RingPtr target = PresentedRing::make(ctx, std::move(rels));
        std::vector<Poly> images;
        for (const auto& v : amb->vars()) {
            if (v == D.t_name) images.push_back(Poly::constant(ctx, value));
            else images.push_back(target->var(v));
        }
        RingMap sub(amb, target, std::move(images));
        return DerivedLocus::make(target, sub.apply(chart.seq));
    };
    for (const auto& chart : D.charts) out.push_back(restrict_one(chart));
    out.push_back(restrict_one(D.t_chart));
    return out;
}

} // namespace rees
