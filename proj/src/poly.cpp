#include "rees/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#include "rees/diagnostics.hpp"

namespace rees {

VarCtx::VarCtx(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {}

CtxPtr VarCtx::make(std::vector<std::string> names, MonomialOrder order) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw AlgebraError("empty variable name");
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw AlgebraError("duplicate variable name '" + names[i] + "'");
    }
    return CtxPtr(new VarCtx(std::move(names), order));
}

std::optional<std::size_t> VarCtx::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

namespace {

void require_same_ctx(const Poly& a, const Poly& b) {
    if (a.ctx() != b.ctx()) throw AlgebraError("polynomial context mismatch");
}

} // namespace

Poly Poly::zero(CtxPtr ctx) {
    Poly p;
    p.ctx_ = std::move(ctx);
    return p;
}

Poly Poly::constant(CtxPtr ctx, Rat c) {
    Poly p;
    p.ctx_ = std::move(ctx);
    if (!rat_is_zero(c)) p.terms_.push_back({Monomial(p.ctx_->nvars()), std::move(c)});
    return p;
}

Poly Poly::variable(CtxPtr ctx, std::size_t var_index) {
    if (var_index >= ctx->nvars()) throw AlgebraError("variable index out of range");
    Monomial m(ctx->nvars());
    m.exps[var_index] = 1;
    return monomial(std::move(ctx), std::move(m));
}

Poly Poly::monomial(CtxPtr ctx, Monomial m, Rat c) {
    if (m.nvars() != ctx->nvars()) throw AlgebraError("monomial width mismatch");
    Poly p;
    p.ctx_ = std::move(ctx);
    if (!rat_is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(CtxPtr ctx, std::vector<Term> terms) {
    const MonomialOrder& ord = ctx->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.mon, b.mon) > 0;
    });
    Poly p;
    p.ctx_ = std::move(ctx);
    for (auto& t : terms) {
        if (t.mon.nvars() != p.ctx_->nvars()) throw AlgebraError("monomial width mismatch");
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && rat_is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    }
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

const Monomial& Poly::leading_monomial() const {
    if (is_zero()) throw AlgebraError("leading term of zero polynomial");
    return terms_[0].mon;
}

const Rat& Poly::leading_coeff() const {
    if (is_zero()) throw AlgebraError("leading term of zero polynomial");
    return terms_[0].coeff;
}

Term Poly::leading_term() const { return {leading_monomial(), leading_coeff()}; }

Poly Poly::operator+(const Poly& o) const {
    require_same_ctx(*this, o);
    const MonomialOrder& ord = ctx_->order();
    Poly r;
    r.ctx_ = ctx_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size()) { r.terms_.push_back(terms_[i++]); continue; }
        if (i == terms_.size()) { r.terms_.push_back(o.terms_[j++]); continue; }
        int c = ord.compare(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) r.terms_.push_back(terms_[i++]);
        else if (c < 0) r.terms_.push_back(o.terms_[j++]);
        else {
            Rat s = terms_[i].coeff + o.terms_[j].coeff;
            if (!rat_is_zero(s)) r.terms_.push_back({terms_[i].mon, std::move(s)});
            ++i; ++j;
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    r.ctx_ = ctx_;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon, -t.coeff});
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_monomial(const Monomial& m, const Rat& c) const {
    Poly r;
    r.ctx_ = ctx_;
    if (rat_is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({mon_mul(t.mon, m), t.coeff * c});
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ctx(*this, o);
    Poly acc = Poly::zero(ctx_);
    // multiply by the shorter operand termwise
    const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Poly& big = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& t : small.terms_) acc = acc + big.times_monomial(t.mon, t.coeff);
    return acc;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r;
    r.ctx_ = ctx_;
    if (rat_is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon, t.coeff * c});
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::one(ctx_);
    Poly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (ctx_ != o.ctx_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    // gcd of numerators / lcm of denominators, sign from the lead
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(leading_coeff()) < 0) content = -content;
    Poly r;
    r.ctx_ = ctx_;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rat c = t.coeff / content;
        r.terms_.push_back({t.mon, std::move(c)});
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / leading_coeff());
}

Poly Poly::transported(const CtxPtr& target) const {
    if (target->names() != ctx_->names())
        throw AlgebraError("transport requires identical variable lists");
    std::vector<Term> ts = terms_;
    return Poly::from_terms(target, std::move(ts));
}

Poly Poly::transported(const CtxPtr& target, const std::vector<std::size_t>& var_map) const {
    if (var_map.size() != ctx_->nvars()) throw AlgebraError("transport map width mismatch");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            if (t.mon.exps[i] == 0) continue;
            if (var_map[i] >= target->nvars()) throw AlgebraError("transport map out of range");
            m.exps[var_map[i]] += t.mon.exps[i];
        }
        ts.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(target, std::move(ts));
}

std::string Poly::str() const { return poly_str(*this); }

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.coeff;
        if (first) {
            if (sgn(c) < 0) { os << "-"; c = -c; }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (t.mon.is_one() || c != 1) {
            os << rat_str(c);
            printed_coeff = true;
        }
        bool printed_var = false;
        for (std::size_t i = 0; i < t.mon.nvars(); ++i) {
            int e = t.mon.exps[i];
            if (e == 0) continue;
            if (printed_coeff || printed_var) os << "*";
            os << p.ctx()->names()[i];
            if (e > 1) os << "^" << e;
            printed_var = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// polynomial text parser (recursive descent)

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit PolyLexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void advance() {
        if (pos < s.size()) {
            if (s[pos] == '\n') { ++line; col = 1; }
            else ++col;
            ++pos;
        }
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }
};

class PolyParser {
public:
    PolyParser(const CtxPtr& ctx, const std::string& text) : ctx_(ctx), lex_(text) {}

    Poly parse() {
        Poly p = expr();
        if (lex_.peek() != '\0') lex_.fail("unexpected trailing input in polynomial");
        return p;
    }

private:
    CtxPtr ctx_;
    PolyLexer lex_;

    Poly expr() {
        bool neg = false;
        char c = lex_.peek();
        if (c == '+' || c == '-') { neg = (c == '-'); lex_.advance(); }
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            c = lex_.peek();
            if (c == '+' || c == '-') {
                lex_.advance();
                Poly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (lex_.peek() == '*') {
            lex_.advance();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (lex_.peek() == '^') {
            lex_.advance();
            unsigned e = read_uint();
            return base.pow(e);
        }
        return base;
    }

    Poly atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.advance();
            Poly p = expr();
            if (lex_.peek() != ')') lex_.fail("expected ')'");
            lex_.advance();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_atom();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = read_ident();
            auto idx = ctx_->index_of(name);
            if (!idx) lex_.fail("unknown variable '" + name + "'");
            return Poly::variable(ctx_, *idx);
        }
        lex_.fail("expected polynomial atom");
    }

    Poly rational_atom() {
        mpz_class num = read_integer();
        if (lex_.peek() == '/') {
            lex_.advance();
            mpz_class den = read_integer();
            if (den == 0) lex_.fail("zero denominator");
            Rat q(num, den);
            q.canonicalize();
            return Poly::constant(ctx_, q);
        }
        return Poly::constant(ctx_, Rat(num));
    }

    mpz_class read_integer() {
        lex_.skip_ws();
        std::string digits;
        while (lex_.pos < lex_.s.size() && std::isdigit(static_cast<unsigned char>(lex_.s[lex_.pos]))) {
            digits += lex_.s[lex_.pos];
            lex_.advance();
        }
        if (digits.empty()) lex_.fail("expected integer");
        return mpz_class(digits);
    }

    unsigned read_uint() {
        mpz_class z = read_integer();
        if (!z.fits_uint_p()) lex_.fail("exponent too large");
        return static_cast<unsigned>(z.get_ui());
    }

    std::string read_ident() {
        lex_.skip_ws();
        std::string name;
        while (lex_.pos < lex_.s.size()) {
            char c = lex_.s[lex_.pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                lex_.advance();
            } else break;
        }
        return name;
    }
};

} // namespace

Poly parse_poly(const CtxPtr& ctx, const std::string& text) {
    return PolyParser(ctx, text).parse();
}

} // namespace rees
