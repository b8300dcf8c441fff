#include "rees/homalg.hpp"

#include <algorithm>

#include "rees/diagnostics.hpp"

namespace rees {

FpMat FpMat::from_cols(std::size_t rows, std::vector<VecPoly> cols) {
    for (const auto& c : cols)
        if (c.rank() != rows) throw AlgebraError("matrix column height mismatch");
    return FpMat{rows, std::move(cols)};
}

namespace {

VecPoly nf_vec(const RingPtr& R, const VecPoly& v) {
    VecPoly out;
    out.c.reserve(v.rank());
    for (const auto& p : v.c) out.c.push_back(R->normal_form(p));
    return out;
}

// Generators of relations*ring^rank as vectors: r * e_t.
std::vector<VecPoly> relation_columns(const RingPtr& R, std::size_t rank) {
    std::vector<VecPoly> out;
    out.reserve(R->relations().size() * rank);
    for (const auto& r : R->relations())
        for (std::size_t t = 0; t < rank; ++t) {
            VecPoly v(R->ctx(), rank);
            v.c[t] = r;
            out.push_back(std::move(v));
        }
    return out;
}

} // namespace

FpModule::FpModule(RingPtr ring, std::size_t rank, std::vector<VecPoly> relations)
    : ring_(std::move(ring)), rank_(rank) {
    rels_.reserve(relations.size());
    for (auto& v : relations) {
        if (v.rank() != rank_) throw AlgebraError("module relation rank mismatch");
        VecPoly n = nf_vec(ring_, v);
        if (!n.is_zero()) rels_.push_back(std::move(n));
    }
}

FreeComplex::FreeComplex(RingPtr ring, std::vector<std::size_t> ranks, std::vector<FpMat> diffs)
    : ring_(std::move(ring)), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (ranks_.empty()) throw AlgebraError("complex needs at least one free module");
    if (diffs_.size() + 1 != ranks_.size())
        throw AlgebraError("complex needs one differential per adjacent pair");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].rows != ranks_[i])
            throw AlgebraError("differential row count mismatch");
        if (diffs_[i].ncols() != ranks_[i + 1])
            throw AlgebraError("differential column count mismatch");
    }
    // d_i ( d_{i+1} (e_j) ) must vanish modulo the ring relations
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
        for (const auto& col : diffs_[i + 1].cols) {
            VecPoly composite(ring_->ctx(), ranks_[i]);
            for (std::size_t j = 0; j < col.rank(); ++j)
                composite = composite + diffs_[i].cols[j].times(col.c[j]);
            for (const auto& entry : composite.c)
                if (!ring_->is_zero_elem(entry))
                    throw AlgebraError("complex differentials do not compose to zero");
        }
    }
}

const FpMat& FreeComplex::diff(std::size_t i) const {
    if (i < 1 || i > diffs_.size()) throw AlgebraError("differential index out of range");
    return diffs_[i - 1];
}

std::vector<VecPoly> kernel_over(const RingPtr& R, const FpMat& M,
                                 const std::vector<VecPoly>& target_sub) {
    const CtxPtr& ctx = R->ctx();
    const std::size_t m = M.ncols();
    std::vector<VecPoly> images;
    images.reserve(m + target_sub.size() + R->relations().size() * M.rows);
    for (const auto& c : M.cols) images.push_back(c);
    for (const auto& s : target_sub) {
        if (s.rank() != M.rows) throw AlgebraError("target submodule rank mismatch");
        images.push_back(s);
    }
    for (const auto& r : relation_columns(R, M.rows)) images.push_back(r);
    std::vector<VecPoly> ker = kernel_generators(ctx, M.rows, images);
    std::vector<VecPoly> out;
    for (const auto& k : ker) {
        VecPoly v(ctx, m);
        for (std::size_t i = 0; i < m; ++i) v.c[i] = k.c[i];
        v = nf_vec(R, v);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

bool submodule_contains(const RingPtr& R, std::size_t rank,
                        const std::vector<VecPoly>& gens, const VecPoly& v) {
    if (v.rank() != rank) throw AlgebraError("membership rank mismatch");
    std::vector<VecPoly> all = gens;
    for (auto& r : relation_columns(R, rank)) all.push_back(std::move(r));
    ModuleGB gb(R->ctx(), rank, all);
    return gb.contains(v);
}

FpModule subquotient(const RingPtr& R, std::size_t ambient_rank,
                     const std::vector<VecPoly>& gens, const std::vector<VecPoly>& sub) {
    // relations among the generator classes: u with gens*u in span(sub)
    FpMat G = FpMat::from_cols(ambient_rank, gens);
    std::vector<VecPoly> rels = kernel_over(R, G, sub);
    return FpModule(R, gens.size(), std::move(rels));
}

FpModule homology(const FreeComplex& C, std::size_t i) {
    if (i > C.length()) throw AlgebraError("homology index out of range");
    const RingPtr& R = C.ring();
    if (i == 0) {
        std::vector<VecPoly> rels = C.length() ? C.diff(1).cols : std::vector<VecPoly>{};
        return FpModule(R, C.rank(0), std::move(rels));
    }
    std::vector<VecPoly> cycles = kernel_over(R, C.diff(i), {});
    std::vector<VecPoly> boundaries =
        (i < C.length()) ? C.diff(i + 1).cols : std::vector<VecPoly>{};
    return subquotient(R, C.rank(i), cycles, boundaries);
}

bool is_zero_module(const FpModule& M) {
    if (M.rank() == 0) return true;
    // cokernel vanishes iff every basis vector lies in the column span
    std::vector<VecPoly> all = M.relations();
    for (auto& r : relation_columns(M.ring(), M.rank())) all.push_back(std::move(r));
    ModuleGB gb(M.ring()->ctx(), M.rank(), all);
    for (std::size_t t = 0; t < M.rank(); ++t)
        if (!gb.contains(vp_unit(M.ring()->ctx(), M.rank(), t))) return false;
    return true;
}

namespace {

Poly det_laplace(const RingPtr& R, const std::vector<std::vector<Poly>>& m) {
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
            std::vector<Poly> row(m[i].begin() + 1, m[i].end());
            minor.push_back(std::move(row));
        }
        Poly cofactor = m[r][0] * det_laplace(R, minor);
        acc = (r % 2 == 0) ? acc + cofactor : acc - cofactor;
    }
    return acc;
}

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                     std::size_t start, std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, cur, i + 1, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets_of_size(n, k, cur, 0, out);
    return out;
}

} // namespace

Ideal fitting_ideal(const FpModule& M, std::size_t r) {
    const RingPtr& R = M.ring();
    if (r >= M.rank()) return Ideal::make(R, {R->one()});
    const std::size_t size = M.rank() - r;
    if (size > std::min(M.rank(), M.relations().size())) return Ideal::make(R, {});
    std::vector<Poly> minors;
    for (const auto& rows : subsets(M.rank(), size)) {
        for (const auto& cols : subsets(M.relations().size(), size)) {
            std::vector<std::vector<Poly>> sub(size, std::vector<Poly>());
            for (std::size_t a = 0; a < size; ++a) {
                sub[a].reserve(size);
                for (std::size_t b = 0; b < size; ++b)
                    sub[a].push_back(M.relations()[cols[b]].c[rows[a]]);
            }
            minors.push_back(det_laplace(R, sub));
        }
    }
    return Ideal::make(R, std::move(minors));
}

bool is_locally_free_of_rank(const FpModule& M, std::size_t r) {
    if (r == 0) return is_zero_module(M);
    return ideal_is_zero(fitting_ideal(M, r - 1)) && ideal_is_unit(fitting_ideal(M, r));
}

Resolution free_resolution(const FpModule& M, std::size_t length_bound) {
    const RingPtr& R = M.ring();
    std::vector<std::size_t> ranks{M.rank()};
    std::vector<FpMat> diffs;
    std::vector<VecPoly> current = M.relations();
    bool complete = false;
    for (std::size_t step = 0; step < length_bound; ++step) {
        diffs.push_back(FpMat::from_cols(ranks.back(), current));
        ranks.push_back(current.size());
        if (current.empty()) { complete = true; break; }
        std::vector<VecPoly> next = kernel_over(R, diffs.back(), {});
        current = std::move(next);
        if (current.empty()) { complete = true; }
    }
    if (complete && !current.empty()) complete = false;
    if (complete && ranks.size() >= 2 && ranks.back() != 0) {
        // terminate with an explicit zero kernel
        diffs.push_back(FpMat::from_cols(ranks.back(), {}));
        ranks.push_back(0);
    }
    return Resolution{FreeComplex(R, std::move(ranks), std::move(diffs)), complete};
}

namespace {

// column (a,b) of (d tensor id): the image of e_a tensor e_b
std::vector<VecPoly> tensor_diff_cols(const RingPtr& R, const FpMat& d, std::size_t s) {
    std::vector<VecPoly> cols;
    cols.reserve(d.ncols() * s);
    for (std::size_t a = 0; a < d.ncols(); ++a)
        for (std::size_t b = 0; b < s; ++b) {
            VecPoly v(R->ctx(), d.rows * s);
            for (std::size_t t = 0; t < d.rows; ++t) v.c[t * s + b] = d.at(t, a);
            cols.push_back(std::move(v));
        }
    return cols;
}

// columns of id_{r} tensor B for B the presentation of N
std::vector<VecPoly> tensor_relation_cols(const RingPtr& R, std::size_t r, const FpModule& N) {
    std::vector<VecPoly> cols;
    const std::size_t s = N.rank();
    cols.reserve(r * N.relations().size());
    for (std::size_t a = 0; a < r; ++a)
        for (const auto& rel : N.relations()) {
            VecPoly v(R->ctx(), r * s);
            for (std::size_t b = 0; b < s; ++b) v.c[a * s + b] = rel.c[b];
            cols.push_back(std::move(v));
        }
    return cols;
}

} // namespace

FpModule tor(const FpModule& M, const FpModule& N, std::size_t i) {
    if (M.ring() != N.ring()) throw AlgebraError("tor requires modules over one ring");
    const RingPtr& R = M.ring();
    const std::size_t s = N.rank();
    Resolution res = free_resolution(M, i + 2);
    const FreeComplex& P = res.complex;
    auto rank_at = [&](std::size_t k) { return k <= P.length() ? P.rank(k) : 0; };
    auto diff_cols_at = [&](std::size_t k) {
        return (k >= 1 && k <= P.length()) ? tensor_diff_cols(R, P.diff(k), s)
                                           : std::vector<VecPoly>{};
    };
    const std::size_t ri = rank_at(i);
    if (ri == 0) return FpModule::zero(R);
    if (i == 0) {
        std::vector<VecPoly> rels = diff_cols_at(1);
        for (auto& c : tensor_relation_cols(R, ri, N)) rels.push_back(std::move(c));
        return FpModule(R, ri * s, std::move(rels));
    }
    FpMat dbar = FpMat::from_cols(rank_at(i - 1) * s, diff_cols_at(i));
    std::vector<VecPoly> cycles = kernel_over(R, dbar, tensor_relation_cols(R, rank_at(i - 1), N));
    std::vector<VecPoly> sub = diff_cols_at(i + 1);
    for (auto& c : tensor_relation_cols(R, ri, N)) sub.push_back(std::move(c));
    return subquotient(R, ri * s, cycles, sub);
}

} // namespace rees
