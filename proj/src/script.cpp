#include "rees/script.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rees/diagnostics.hpp"

namespace rees {

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// lexer / statement parser

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Cursor(const std::string& text) : s(text) {}

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    void advance() {
        if (pos < s.size()) {
            if (s[pos] == '\n') { ++line; col = 1; }
            else ++col;
            ++pos;
        }
    }
    void skip_ws() {
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '#') {
                while (pos < s.size() && s[pos] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }
    bool accept(char c) {
        if (peek() == c) { advance(); return true; }
        return false;
    }
    std::string ident() {
        skip_ws();
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected identifier");
        std::string out;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            out += s[pos];
            advance();
        }
        return out;
    }
    std::string integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        std::string out;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            out += s[pos];
            advance();
        }
        return out;
    }
    // raw polynomial text up to a stop character at parenthesis depth 0
    std::string poly_text(const std::string& stops) {
        skip_ws();
        std::string out;
        int depth = 0;
        while (pos < s.size()) {
            char c = s[pos];
            if (depth == 0 && stops.find(c) != std::string::npos) break;
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            out += c;
            advance();
        }
        if (out.empty()) fail("expected polynomial");
        return out;
    }
};

struct ParsedEnv {
    std::map<std::string, RingPtr> rings;
    std::map<std::string, std::pair<std::string, std::vector<Poly>>> seqs; // ring name, elems
    std::map<std::string, bool> maps;
    std::map<std::string, bool> witnesses;
    std::string last_ring;
};

std::string canon_poly(const CtxPtr& ctx, const std::string& text, Cursor& cur) {
    try {
        return poly_str(parse_poly(ctx, text));
    } catch (const ParseError& e) {
        throw ParseError(cur.line, cur.col, e.what());
    }
}

std::vector<std::string> parse_poly_list(Cursor& cur, const CtxPtr& ctx) {
    std::vector<std::string> out;
    cur.expect('(');
    if (cur.accept(')')) return out;
    while (true) {
        std::string text = cur.poly_text(",)");
        out.push_back(canon_poly(ctx, text, cur));
        if (cur.accept(')')) break;
        cur.expect(',');
    }
    return out;
}

const RingPtr& ring_of(const ParsedEnv& env, const std::string& name, Cursor& cur) {
    auto it = env.rings.find(name);
    if (it == env.rings.end()) cur.fail("undeclared ring '" + name + "'");
    return it->second;
}

// resolve a name that may be a ring or a sequence to its ambient ring
const RingPtr& ambient_of(const ParsedEnv& env, const std::string& name, Cursor& cur) {
    if (auto it = env.rings.find(name); it != env.rings.end()) return it->second;
    if (auto it = env.seqs.find(name); it != env.seqs.end())
        return env.rings.at(it->second.first);
    cur.fail("undeclared name '" + name + "'");
}

Script::Stmt parse_ring(Cursor& cur, ParsedEnv& env) {
    Script::Stmt st;
    st.kind = Script::StmtKind::Ring;
    st.ring.name = cur.ident();
    if (env.rings.count(st.ring.name)) cur.fail("ring '" + st.ring.name + "' redeclared");
    cur.expect('=');
    std::string q = cur.ident();
    if (q != "Q") cur.fail("expected coefficient field Q");
    cur.expect('[');
    while (true) {
        st.ring.vars.push_back(cur.ident());
        if (cur.accept(']')) break;
        cur.expect(',');
    }
    CtxPtr ctx = VarCtx::make(st.ring.vars);
    if (cur.accept('/')) {
        cur.expect('(');
        if (!cur.accept(')')) {
            while (true) {
                std::string text = cur.poly_text(",)");
                st.ring.relations.push_back(canon_poly(ctx, text, cur));
                if (cur.accept(')')) break;
                cur.expect(',');
            }
        }
    }
    cur.expect(';');
    env.rings[st.ring.name] = PresentedRing::parse(st.ring.vars, st.ring.relations);
    env.last_ring = st.ring.name;
    return st;
}

Script::Stmt parse_seq(Cursor& cur, ParsedEnv& env) {
    Script::Stmt st;
    st.kind = Script::StmtKind::Seq;
    st.seq.name = cur.ident();
    if (env.seqs.count(st.seq.name)) cur.fail("seq '" + st.seq.name + "' redeclared");
    cur.expect('=');
    if (env.last_ring.empty()) cur.fail("no ambient ring in scope for seq declaration");
    st.seq.ring = env.last_ring;
    const RingPtr& R = env.rings.at(st.seq.ring);
    st.seq.elems = parse_poly_list(cur, R->ctx());
    cur.expect(';');
    std::vector<Poly> elems;
    for (const auto& e : st.seq.elems) elems.push_back(parse_poly(R->ctx(), e));
    env.seqs[st.seq.name] = {st.seq.ring, std::move(elems)};
    return st;
}

Script::Stmt parse_map(Cursor& cur, ParsedEnv& env) {
    Script::Stmt st;
    st.kind = Script::StmtKind::Map;
    st.map.name = cur.ident();
    if (env.maps.count(st.map.name)) cur.fail("map '" + st.map.name + "' redeclared");
    cur.expect('=');
    st.map.source = cur.ident();
    cur.expect('-');
    cur.expect('>');
    st.map.target = cur.ident();
    const RingPtr& src = ring_of(env, st.map.source, cur);
    const RingPtr& tgt = ring_of(env, st.map.target, cur);
    std::map<std::string, std::string> images;
    cur.expect('(');
    if (!cur.accept(')')) {
        while (true) {
            std::string var = cur.ident();
            if (!src->ctx()->index_of(var)) cur.fail("'" + var + "' is not a source variable");
            if (images.count(var)) cur.fail("duplicate image for variable '" + var + "'");
            cur.expect('-');
            cur.expect('>');
            std::string text = cur.poly_text(",)");
            images[var] = canon_poly(tgt->ctx(), text, cur);
            if (cur.accept(')')) break;
            cur.expect(',');
        }
    }
    cur.expect(';');
    for (const auto& v : src->vars()) {
        auto it = images.find(v);
        if (it == images.end()) cur.fail("map is missing an image for variable '" + v + "'");
        st.map.vars.push_back(v);
        st.map.images.push_back(it->second);
    }
    env.maps[st.map.name] = true;
    return st;
}

Script::Stmt parse_witness(Cursor& cur, ParsedEnv& env) {
    Script::Stmt st;
    st.kind = Script::StmtKind::Witness;
    st.witness.name = cur.ident();
    if (env.witnesses.count(st.witness.name))
        cur.fail("witness '" + st.witness.name + "' redeclared");
    env.witnesses[st.witness.name] = true;
    cur.expect('=');
    cur.expect('{');
    if (env.last_ring.empty()) cur.fail("no ambient ring in scope for witness declaration");
    st.witness.ring = env.last_ring;
    const RingPtr& R = env.rings.at(st.witness.ring);
    std::string key = cur.ident();
    if (key != "d") cur.fail("expected 'd' field");
    cur.expect('=');
    st.witness.cutting = canon_poly(R->ctx(), cur.poly_text(","), cur);
    cur.expect(',');
    key = cur.ident();
    if (key != "a") cur.fail("expected 'a' field");
    cur.expect('=');
    st.witness.coeffs = parse_poly_list(cur, R->ctx());
    cur.expect('}');
    cur.expect(';');
    return st;
}

const std::vector<std::string> kVerbs = {
    "check regular",  "check classical", "homotopy",
    "codim",          "blowup",          "exceptional",
    "truncation-compare", "simultaneous", "tor",
    "verify-divisor", "verify-divisor-homotopy", "deform",
};

Script::Stmt parse_command(Cursor& cur, ParsedEnv& env, const std::string& first) {
    Script::Stmt st;
    st.kind = Script::StmtKind::Command;
    std::string verb = first;
    if (first == "check") {
        std::string what = cur.ident();
        if (what != "regular" && what != "classical")
            cur.fail("expected 'regular' or 'classical' after check");
        verb += " " + what;
    } else {
        while (cur.peek() == '-') {
            cur.advance();
            verb += "-" + cur.ident();
        }
    }
    bool known = false;
    for (const auto& v : kVerbs) known = known || v == verb;
    if (!known) cur.fail("unknown command '" + verb + "'");
    st.command.verb = verb;

    // arguments: identifiers, integers, `at <rational>`, or inline lists
    // parsed over the ambient of the first named argument
    const RingPtr* ctx_ring = nullptr;
    while (cur.peek() != ';') {
        char c = cur.peek();
        if (c == '(') {
            if (!ctx_ring) cur.fail("inline list needs a preceding ring or seq argument");
            std::vector<std::string> polys = parse_poly_list(cur, (*ctx_ring)->ctx());
            std::string joined = "(";
            for (std::size_t i = 0; i < polys.size(); ++i) {
                if (i) joined += ", ";
                joined += polys[i];
            }
            joined += ")";
            st.command.args.push_back(joined);
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            std::string num;
            if (cur.accept('-')) num = "-";
            num += cur.integer();
            if (cur.peek() == '/') {
                cur.advance();
                num += "/" + cur.integer();
            }
            st.command.args.push_back(num);
        } else {
            std::string id = cur.ident();
            if (!ctx_ring && (env.rings.count(id) || env.seqs.count(id)))
                ctx_ring = &ambient_of(env, id, cur);
            st.command.args.push_back(id);
        }
    }
    cur.expect(';');
    return st;
}

} // namespace

Script parse_script(const std::string& text) {
    Script script;
    ParsedEnv env;
    Cursor cur(text);
    std::map<std::string, bool> declared; // any kind, for use-before-declare checks
    while (!cur.eof()) {
        std::string head = cur.ident();
        Script::Stmt st;
        if (head == "ring") st = parse_ring(cur, env);
        else if (head == "seq") st = parse_seq(cur, env);
        else if (head == "map") st = parse_map(cur, env);
        else if (head == "witness") st = parse_witness(cur, env);
        else st = parse_command(cur, env, head);
        script.statements.push_back(std::move(st));
    }
    return script;
}

// ---------------------------------------------------------------------------
// printing (canonical form)

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

} // namespace

std::string print_script(const Script& script) {
    std::ostringstream os;
    for (const auto& st : script.statements) {
        switch (st.kind) {
        case Script::StmtKind::Ring:
            os << "ring " << st.ring.name << " = Q[" << join(st.ring.vars, ",") << "]";
            if (!st.ring.relations.empty())
                os << " / (" << join(st.ring.relations, ", ") << ")";
            break;
        case Script::StmtKind::Seq:
            os << "seq " << st.seq.name << " = (" << join(st.seq.elems, ", ") << ")";
            break;
        case Script::StmtKind::Map: {
            os << "map " << st.map.name << " = " << st.map.source << " -> " << st.map.target
               << " (";
            for (std::size_t i = 0; i < st.map.vars.size(); ++i) {
                if (i) os << ", ";
                os << st.map.vars[i] << " -> " << st.map.images[i];
            }
            os << ")";
            break;
        }
        case Script::StmtKind::Witness:
            os << "witness " << st.witness.name << " = { d = " << st.witness.cutting
               << ", a = (" << join(st.witness.coeffs, ", ") << ") }";
            break;
        case Script::StmtKind::Command:
            os << st.command.verb;
            for (const auto& a : st.command.args) os << " " << a;
            break;
        }
        os << ";\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// execution

namespace {

struct ExecEnv {
    std::map<std::string, RingPtr> rings;
    std::map<std::string, DerivedLocus> seqs;
    std::map<std::string, RingMap> maps;
    struct WitnessData {
        std::string ring;
        Poly cutting;
        std::vector<Poly> coeffs;
    };
    std::map<std::string, WitnessData> witnesses;
};

struct Section {
    std::string echo;
    std::vector<std::pair<std::string, std::string>> lines; // ordered key/value
    bool verdict = true;
};

std::string locus_str(const DerivedLocus& Z) {
    std::vector<std::string> elems;
    for (const auto& f : Z.seq) elems.push_back(f.str());
    return Z.ambient->describe() + "; sequence (" + join(elems, ", ") + ")";
}

std::string module_str(const FpModule& M) {
    std::ostringstream os;
    os << "rank " << M.rank() << "; relations " << M.relations().size();
    for (std::size_t r = 0; r < M.rank(); ++r) {
        os << "; row " << (r + 1) << ": (";
        for (std::size_t c = 0; c < M.relations().size(); ++c) {
            if (c) os << ", ";
            os << M.relations()[c].c[r].str();
        }
        os << ")";
    }
    return os.str();
}

DerivedLocus locus_arg(const ExecEnv& env, const std::string& name) {
    if (auto it = env.seqs.find(name); it != env.seqs.end()) return it->second;
    if (auto it = env.rings.find(name); it != env.rings.end())
        return DerivedLocus::make(it->second, {});
    throw AlgebraError("undeclared locus '" + name + "'");
}

std::vector<Poly> center_arg(const ExecEnv& env, const std::string& arg, const RingPtr& ambient) {
    if (!arg.empty() && arg.front() == '(') {
        std::vector<Poly> out;
        std::string inner = arg.substr(1, arg.size() - 2);
        std::size_t start = 0;
        int depth = 0;
        for (std::size_t i = 0; i <= inner.size(); ++i) {
            if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
                std::string piece = inner.substr(start, i - start);
                bool blank = piece.find_first_not_of(" \t\n") == std::string::npos;
                if (!blank) out.push_back(parse_poly(ambient->ctx(), piece));
                start = i + 1;
            } else if (inner[i] == '(') ++depth;
            else if (inner[i] == ')') --depth;
        }
        return out;
    }
    auto it = env.seqs.find(arg);
    if (it == env.seqs.end()) throw AlgebraError("undeclared seq '" + arg + "'");
    if (it->second.ambient != ambient)
        throw AlgebraError("seq '" + arg + "' lives over a different ring");
    return it->second.seq;
}

void require_args(const Script::Command& cmd, std::size_t n) {
    if (cmd.args.size() != n)
        throw AlgebraError("command '" + cmd.verb + "' expects " + std::to_string(n) +
                           " arguments, got " + std::to_string(cmd.args.size()));
}

Section exec_command(const ExecEnv& env, const Script::Command& cmd) {
    Section sec;
    sec.echo = cmd.verb;
    for (const auto& a : cmd.args) sec.echo += " " + a;

    // a locus is named either by one argument (seq or ring) or by a ring
    // followed by a centre (seq name or inline list)
    auto locus_args = [&](std::size_t from, std::size_t count) {
        if (count == 1) return locus_arg(env, cmd.args[from]);
        DerivedLocus base = locus_arg(env, cmd.args[from]);
        return DerivedLocus::make(base.ambient, center_arg(env, cmd.args[from + 1], base.ambient));
    };

    if (cmd.verb == "check regular" || cmd.verb == "check classical") {
        if (cmd.args.size() != 1 && cmd.args.size() != 2) require_args(cmd, 1);
        DerivedLocus Z = locus_args(0, cmd.args.size());
        sec.lines.push_back({"locus", locus_str(Z)});
        bool verdict = cmd.verb == "check regular" ? is_regular_sequence(Z) : is_classical(Z);
        sec.lines.push_back({cmd.verb == "check regular" ? "regular" : "classical",
                             verdict ? "true" : "false"});
        sec.verdict = verdict;
    } else if (cmd.verb == "homotopy") {
        if (cmd.args.size() != 2 && cmd.args.size() != 3) require_args(cmd, 2);
        DerivedLocus Z = locus_args(0, cmd.args.size() - 1);
        const std::string& deg = cmd.args.back();
        std::size_t i = static_cast<std::size_t>(std::stoul(deg));
        FpModule pi = homotopy_module(Z, i);
        sec.lines.push_back({"locus", locus_str(Z)});
        sec.lines.push_back({"pi_" + deg, module_str(pi)});
        sec.lines.push_back({"zero", is_zero_module(pi) ? "true" : "false"});
    } else if (cmd.verb == "codim") {
        if (cmd.args.size() != 1 && cmd.args.size() != 2) require_args(cmd, 1);
        DerivedLocus Z = locus_args(0, cmd.args.size());
        sec.lines.push_back({"locus", locus_str(Z)});
        sec.lines.push_back({"virtual", std::to_string(codim_virtual(Z))});
        sec.lines.push_back({"topological", std::to_string(codim_topological(Z))});
    } else if (cmd.verb == "blowup" || cmd.verb == "exceptional") {
        require_args(cmd, 2);
        DerivedLocus X = locus_arg(env, cmd.args[0]);
        std::vector<Poly> center = center_arg(env, cmd.args[1], X.ambient);
        BlowupAtlas atlas = blowup_atlas(X, center);
        sec.lines.push_back({"base", locus_str(X)});
        sec.lines.push_back({"charts", std::to_string(atlas.charts.size())});
        if (cmd.verb == "blowup") {
            for (const auto& chart : atlas.charts) {
                std::string label = "chart " + std::to_string(chart.index + 1);
                sec.lines.push_back(
                    {label, locus_str(chart.locus) + "; classical " +
                                (is_classical(chart.locus) ? "true" : "false")});
            }
        } else {
            std::vector<DerivedLocus> exc = exceptional_divisor(atlas);
            for (std::size_t k = 0; k < exc.size(); ++k)
                sec.lines.push_back({"chart " + std::to_string(k + 1),
                                     locus_str(exc[k]) + "; classical " +
                                         (is_classical(exc[k]) ? "true" : "false")});
        }
    } else if (cmd.verb == "truncation-compare") {
        require_args(cmd, 2);
        DerivedLocus X = locus_arg(env, cmd.args[0]);
        std::vector<Poly> center = center_arg(env, cmd.args[1], X.ambient);
        std::vector<bool> verdicts = classical_truncation_compare(X, center);
        bool all = true;
        for (std::size_t k = 0; k < verdicts.size(); ++k) {
            sec.lines.push_back({"chart " + std::to_string(k + 1),
                                 verdicts[k] ? "equal" : "different"});
            all = all && verdicts[k];
        }
        sec.lines.push_back({"all-equal", all ? "true" : "false"});
        sec.verdict = all;
    } else if (cmd.verb == "simultaneous") {
        if (cmd.args.size() < 2)
            throw AlgebraError("simultaneous expects a base and at least one centre");
        DerivedLocus X = locus_arg(env, cmd.args[0]);
        std::vector<std::vector<Poly>> centers;
        for (std::size_t i = 1; i < cmd.args.size(); ++i)
            centers.push_back(center_arg(env, cmd.args[i], X.ambient));
        auto charts = simultaneous_blowup(X, centers);
        std::size_t classical_count = 0;
        for (const auto& chart : charts) {
            std::string label = "chart (";
            for (std::size_t m = 0; m < chart.indices.size(); ++m) {
                if (m) label += ",";
                label += std::to_string(chart.indices[m] + 1);
            }
            label += ")";
            sec.lines.push_back({label, locus_str(chart.locus) + "; classical " +
                                            (chart.classical ? "true" : "false")});
            if (chart.classical) ++classical_count;
        }
        sec.lines.push_back({"classical-charts", std::to_string(classical_count) + " of " +
                                                     std::to_string(charts.size())});
    } else if (cmd.verb == "tor") {
        require_args(cmd, 3);
        auto it = env.rings.find(cmd.args[0]);
        if (it == env.rings.end()) throw AlgebraError("undeclared ring '" + cmd.args[0] + "'");
        const RingPtr& R = it->second;
        std::vector<Poly> f = center_arg(env, cmd.args[1], R);
        std::vector<Poly> g = center_arg(env, cmd.args[2], R);
        auto quotient_module = [&](const std::vector<Poly>& seq) {
            std::vector<VecPoly> cols;
            for (const auto& p : seq) cols.push_back(VecPoly{{p}});
            return FpModule(R, 1, cols);
        };
        FpModule M = quotient_module(f), N = quotient_module(g);
        for (std::size_t i = 1; i <= 2; ++i) {
            FpModule T = tor(M, N, i);
            sec.lines.push_back({"tor_" + std::to_string(i),
                                 module_str(T) + "; zero " +
                                     (is_zero_module(T) ? "true" : "false")});
        }
        DerivedLocus prod = derived_product(DerivedLocus::make(R, f),
                                            DerivedLocus::make(R, g), R);
        bool independent = is_classical(prod);
        sec.lines.push_back({"derived-intersection-classical", independent ? "true" : "false"});
        sec.lines.push_back({"tor-independent", independent ? "true" : "false"});
        sec.verdict = independent;
    } else if (cmd.verb == "verify-divisor" || cmd.verb == "verify-divisor-homotopy") {
        require_args(cmd, 5);
        DerivedLocus X = locus_arg(env, cmd.args[0]);
        std::vector<Poly> center = center_arg(env, cmd.args[1], X.ambient);
        DerivedLocus S = locus_arg(env, cmd.args[2]);
        auto mit = env.maps.find(cmd.args[3]);
        if (mit == env.maps.end()) throw AlgebraError("undeclared map '" + cmd.args[3] + "'");
        auto wit = env.witnesses.find(cmd.args[4]);
        if (wit == env.witnesses.end())
            throw AlgebraError("undeclared witness '" + cmd.args[4] + "'");
        if (env.rings.at(wit->second.ring) != S.ambient)
            throw AlgebraError("witness '" + cmd.args[4] + "' lives over a different ring than S");
        DivisorWitness W{S, mit->second, wit->second.cutting, wit->second.coeffs};
        if (cmd.verb == "verify-divisor") {
            DivisorVerdict v = verify_divisor(X, center, W);
            sec.lines.push_back({"witness", v.witness_ok ? "ok" : "violated"});
            sec.lines.push_back({"a", v.a_ok ? "true" : "false"});
            sec.lines.push_back({"b", v.b_ok ? "true" : "false"});
            sec.lines.push_back({"c", v.c_ok ? "true" : "false"});
            sec.verdict = v.all();
        } else {
            HomotopyVerdict v = verify_divisor_homotopy(X, center, W);
            sec.lines.push_back({"witness", v.witness_ok ? "ok" : "violated"});
            sec.lines.push_back({"pi0-iso", v.pi0_iso ? "true" : "false"});
            sec.lines.push_back({"pi1-surjective", v.pi1_surj ? "true" : "false"});
            sec.verdict = v.witness_ok && v.pi0_iso && v.pi1_surj;
        }
    } else if (cmd.verb == "deform") {
        if (cmd.args.size() != 2 && cmd.args.size() != 4)
            throw AlgebraError("deform expects base and centre, optionally 'at value'");
        DerivedLocus X = locus_arg(env, cmd.args[0]);
        std::vector<Poly> center = center_arg(env, cmd.args[1], X.ambient);
        DeformationAtlas atlas = deformation_atlas(X, center);
        sec.lines.push_back({"base", locus_str(X)});
        if (cmd.args.size() == 2) {
            for (std::size_t k = 0; k < atlas.charts.size(); ++k)
                sec.lines.push_back(
                    {"chart " + std::to_string(k + 1), locus_str(atlas.charts[k])});
            sec.lines.push_back({"t-chart", locus_str(atlas.t_chart)});
        } else {
            if (cmd.args[2] != "at") throw AlgebraError("expected 'at <value>' in deform");
            Rat value(cmd.args[3]);
            value.canonicalize();
            std::vector<DerivedLocus> fibers = restrict_t(atlas, value);
            for (std::size_t k = 0; k + 1 < fibers.size(); ++k)
                sec.lines.push_back(
                    {"chart " + std::to_string(k + 1), locus_str(fibers[k])});
            sec.lines.push_back({"t-chart", locus_str(fibers.back())});
        }
    } else {
        throw AlgebraError("unknown command '" + cmd.verb + "'");
    }
    return sec;
}

} // namespace

Report run_script(const Script& script, const RunOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (!opts.cache_dir.empty()) set_groebner_cache_dir(opts.cache_dir);

    std::size_t command_count = 0;
    for (const auto& st : script.statements)
        if (st.kind == Script::StmtKind::Command) ++command_count;

    Report report;
    std::vector<Section> sections;
    try {
        if (command_count > 1 && !opts.batch)
            throw AlgebraError("script has multiple commands; pass --batch to run them all");

        ExecEnv env;
        for (const auto& st : script.statements) {
            switch (st.kind) {
            case Script::StmtKind::Ring:
                env.rings[st.ring.name] = PresentedRing::parse(st.ring.vars, st.ring.relations);
                break;
            case Script::StmtKind::Seq: {
                const RingPtr& R = env.rings.at(st.seq.ring);
                std::vector<Poly> elems;
                for (const auto& e : st.seq.elems) elems.push_back(parse_poly(R->ctx(), e));
                env.seqs.emplace(st.seq.name, DerivedLocus::make(R, std::move(elems)));
                break;
            }
            case Script::StmtKind::Map: {
                const RingPtr& src = env.rings.at(st.map.source);
                const RingPtr& tgt = env.rings.at(st.map.target);
                std::vector<Poly> images;
                for (const auto& im : st.map.images) images.push_back(parse_poly(tgt->ctx(), im));
                env.maps.emplace(st.map.name, RingMap(src, tgt, std::move(images)));
                break;
            }
            case Script::StmtKind::Witness: {
                const RingPtr& R = env.rings.at(st.witness.ring);
                ExecEnv::WitnessData data;
                data.ring = st.witness.ring;
                data.cutting = parse_poly(R->ctx(), st.witness.cutting);
                for (const auto& a : st.witness.coeffs)
                    data.coeffs.push_back(parse_poly(R->ctx(), a));
                env.witnesses.emplace(st.witness.name, std::move(data));
                break;
            }
            case Script::StmtKind::Command:
                sections.push_back(exec_command(env, st.command));
                break;
            }
        }
    } catch (const std::exception& e) {
        report.exit_code = 2;
        if (opts.format == "json") {
            ordered_json j;
            j["error"] = e.what();
            report.body = j.dump(2) + "\n";
        } else {
            report.body = std::string("error: ") + e.what() + "\n";
        }
        return report;
    }

    bool all_true = true;
    for (const auto& sec : sections) all_true = all_true && sec.verdict;

    auto t1 = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    if (opts.format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& sec : sections) {
            ordered_json j;
            j["command"] = sec.echo;
            for (const auto& [k, v] : sec.lines) j[k] = v;
            j["verdict"] = sec.verdict;
            out.push_back(j);
        }
        ordered_json root;
        root["reports"] = out;
        if (opts.timing) root["elapsed-ms"] = ms;
        report.body = root.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& sec : sections) {
            os << "command: " << sec.echo << "\n";
            for (const auto& [k, v] : sec.lines) os << k << ": " << v << "\n";
            os << "verdict: " << (sec.verdict ? "true" : "false") << "\n";
        }
        if (opts.timing) os << "elapsed-ms: " << ms << "\n";
        report.body = os.str();
    }
    report.exit_code = (opts.assert_mode && !all_true) ? 1 : 0;
    return report;
}

} // namespace rees
