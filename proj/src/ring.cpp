#include "rees/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rees/diagnostics.hpp"

namespace rees {

namespace {

std::mutex cache_mutex;
std::string cache_dir;

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_key(const CtxPtr& ctx, const std::vector<Poly>& relations) {
    std::ostringstream os;
    for (const auto& v : ctx->names()) os << v << ";";
    os << "|" << ctx->order().name() << "|";
    for (const auto& r : relations) os << r.str() << ";";
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(os.str())));
    return std::string(buf);
}

} // namespace

void set_groebner_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache_dir = dir;
}

std::string groebner_cache_dir() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache_dir;
}

PresentedRing::PresentedRing(CtxPtr ctx, std::vector<Poly> relations)
    : ctx_(std::move(ctx)), relations_(std::move(relations)) {}

RingPtr PresentedRing::polynomial(std::vector<std::string> vars, MonomialOrder order) {
    return RingPtr(new PresentedRing(VarCtx::make(std::move(vars), order), {}));
}

RingPtr PresentedRing::make(CtxPtr ctx, std::vector<Poly> relations) {
    std::vector<Poly> rels;
    for (auto& r : relations) {
        if (r.ctx() != ctx) throw AlgebraError("relation context mismatch");
        if (!r.is_zero()) rels.push_back(std::move(r));
    }
    return RingPtr(new PresentedRing(std::move(ctx), std::move(rels)));
}

RingPtr PresentedRing::parse(std::vector<std::string> vars, std::vector<std::string> relations,
                             MonomialOrder order) {
    CtxPtr ctx = VarCtx::make(std::move(vars), order);
    std::vector<Poly> rels;
    rels.reserve(relations.size());
    for (const auto& text : relations) rels.push_back(parse_poly(ctx, text));
    return make(std::move(ctx), std::move(rels));
}

Poly PresentedRing::var(const std::string& name) const {
    auto idx = ctx_->index_of(name);
    if (!idx) throw AlgebraError("unknown variable '" + name + "'");
    return Poly::variable(ctx_, *idx);
}

const ModuleGB* PresentedRing::relation_gb() const {
    if (relations_.empty()) return nullptr;
    std::lock_guard<std::mutex> lock(gb_mutex_);
    if (!relgb_) {
        const std::string dir = groebner_cache_dir();
        std::string path;
        if (!dir.empty())
            path = dir + "/" + cache_key(ctx_, relations_) + ".gb";

        std::vector<Poly> loaded;
        bool have_cached = false;
        if (!path.empty()) {
            std::ifstream in(path);
            if (in) {
                std::string line;
                have_cached = true;
                while (std::getline(in, line))
                    if (!line.empty()) loaded.push_back(parse_poly(ctx_, line));
            }
        }

        std::vector<VecPoly> gens;
        const std::vector<Poly>& source = have_cached ? loaded : relations_;
        gens.reserve(source.size());
        for (const auto& r : source) gens.push_back(VecPoly{{r}});
        relgb_ = std::make_shared<const ModuleGB>(ctx_, 1, gens);
        relbasis_.clear();
        for (const auto& v : relgb_->basis()) relbasis_.push_back(v.c[0]);

        if (!path.empty() && !have_cached) {
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            std::string tmp = path + ".tmp";
            std::ofstream out(tmp);
            if (out) {
                for (const auto& g : relbasis_) out << g.str() << "\n";
                out.close();
                std::filesystem::rename(tmp, path, ec);
            }
        }
    }
    return relgb_.get();
}

const std::vector<Poly>& PresentedRing::relation_basis() const {
    relation_gb();
    return relbasis_;
}

Poly PresentedRing::normal_form(const Poly& p) const {
    if (p.ctx() != ctx_) throw AlgebraError("element does not belong to this ring");
    const ModuleGB* gb = relation_gb();
    if (!gb) return p;
    return gb->reduce(VecPoly{{p}}).c[0];
}

RingPtr PresentedRing::with_order(MonomialOrder order) const {
    CtxPtr nctx = VarCtx::make(ctx_->names(), order);
    std::vector<Poly> rels;
    rels.reserve(relations_.size());
    for (const auto& r : relations_) rels.push_back(r.transported(nctx));
    return make(std::move(nctx), std::move(rels));
}

RingPtr PresentedRing::extended(const std::vector<std::string>& new_vars) const {
    std::vector<std::string> names = ctx_->names();
    for (const auto& v : new_vars) names.push_back(v);
    CtxPtr nctx = VarCtx::make(std::move(names), ctx_->order());
    std::vector<std::size_t> var_map(ctx_->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i;
    std::vector<Poly> rels;
    rels.reserve(relations_.size());
    for (const auto& r : relations_) rels.push_back(r.transported(nctx, var_map));
    return make(std::move(nctx), std::move(rels));
}

RingPtr PresentedRing::localized(const Poly& g, const std::string& inv_name) const {
    if (g.ctx() != ctx_) throw AlgebraError("localization element not in ring");
    std::string w = fresh_var_name(ctx_->names(), inv_name);
    RingPtr ext = extended({w});
    Poly gw = transport_elem(g, ext);
    Poly rel = gw * ext->var(w) - ext->one();
    std::vector<Poly> rels = ext->relations();
    rels.push_back(rel);
    return make(ext->ctx(), std::move(rels));
}

std::string PresentedRing::describe() const {
    std::ostringstream os;
    os << "Q[";
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (i) os << ",";
        os << vars()[i];
    }
    os << "]";
    if (!relations_.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < relations_.size(); ++i) {
            if (i) os << ", ";
            os << relations_[i].str();
        }
        os << ")";
    }
    return os.str();
}

std::string fresh_var_name(const std::vector<std::string>& taken, const std::string& stem) {
    auto used = [&](const std::string& n) {
        return std::find(taken.begin(), taken.end(), n) != taken.end();
    };
    if (!used(stem)) return stem;
    for (int k = 2;; ++k) {
        std::string cand = stem + "_" + std::to_string(k);
        if (!used(cand)) return cand;
    }
}

Poly transport_elem(const Poly& p, const RingPtr& target) {
    std::vector<std::size_t> var_map;
    var_map.reserve(p.ctx()->nvars());
    for (const auto& name : p.ctx()->names()) {
        auto idx = target->ctx()->index_of(name);
        if (!idx) throw AlgebraError("target ring lacks variable '" + name + "'");
        var_map.push_back(*idx);
    }
    return p.transported(target->ctx(), var_map);
}

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Poly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->nvars())
        throw AlgebraError("ring map requires one image per source variable");
    for (const auto& im : images_)
        if (im.ctx() != target_->ctx())
            throw AlgebraError("ring map image not in target ring");
    for (const auto& rel : source_->relations()) {
        Poly image = apply_raw(rel);
        if (!target_->is_zero_elem(image))
            throw IllDefinedMap("relation " + rel.str() + " maps to " +
                                target_->normal_form(image).str() + ", not zero");
    }
}

Poly RingMap::apply_raw(const Poly& p) const {
    Poly acc = Poly::zero(target_->ctx());
    for (const auto& t : p.terms()) {
        Poly term = Poly::constant(target_->ctx(), t.coeff);
        for (std::size_t i = 0; i < t.mon.nvars(); ++i) {
            int e = t.mon.exps[i];
            if (e > 0) term = term * images_[i].pow(static_cast<unsigned>(e));
        }
        acc = acc + term;
    }
    return acc;
}

Poly RingMap::apply(const Poly& p) const {
    if (p.ctx() != source_->ctx()) throw AlgebraError("ring map applied outside its source");
    return target_->normal_form(apply_raw(p));
}

std::vector<Poly> RingMap::apply(const std::vector<Poly>& ps) const {
    std::vector<Poly> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(apply(p));
    return out;
}

RingMap RingMap::identity(const RingPtr& ring) {
    std::vector<Poly> images;
    images.reserve(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        images.push_back(Poly::variable(ring->ctx(), i));
    return RingMap(ring, ring, std::move(images));
}

RingMap RingMap::compose(const RingMap& then) const {
    if (then.source_ != target_) throw AlgebraError("composition target/source mismatch");
    std::vector<Poly> images;
    images.reserve(images_.size());
    for (const auto& im : images_) images.push_back(then.apply(im));
    return RingMap(source_, then.target_, std::move(images));
}

} // namespace rees
