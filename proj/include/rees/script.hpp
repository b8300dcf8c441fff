#pragma once

#include <string>
#include <vector>

#include "rees/blowup.hpp"

namespace rees {

// A parsed script: ring / seq / map / witness declarations and commands,
// in source order. Each statement keeps a canonical printed form, so
// print followed by parse is the identity on canonical scripts.
struct Script {
    enum class StmtKind { Ring, Seq, Map, Witness, Command };

    struct RingDecl {
        std::string name;
        std::vector<std::string> vars;
        std::vector<std::string> relations; // canonical polynomial texts
    };
    struct SeqDecl {
        std::string name;
        std::string ring; // enclosing ring declaration
        std::vector<std::string> elems;
    };
    struct MapDecl {
        std::string name;
        std::string source, target;
        std::vector<std::string> vars;   // source variables in declaration order
        std::vector<std::string> images; // canonical image text per variable
    };
    struct WitnessDecl {
        std::string name;
        std::string ring; // enclosing ring declaration
        std::string cutting;
        std::vector<std::string> coeffs;
    };
    struct Command {
        std::string verb;              // e.g. "check regular", "blowup"
        std::vector<std::string> args; // identifiers, inline lists "(..)", numbers
    };

    struct Stmt {
        StmtKind kind;
        RingDecl ring;
        SeqDecl seq;
        MapDecl map;
        WitnessDecl witness;
        Command command;
    };

    std::vector<Stmt> statements;
};

Script parse_script(const std::string& text);
std::string print_script(const Script& script);

struct RunOptions {
    bool assert_mode = false;
    bool batch = false;
    bool timing = false;
    std::string format = "text"; // "text" or "json"
    std::string cache_dir;       // empty disables the basis cache
};

// exit_code: 0 success, 1 false verdict under --assert, 2 error.
struct Report {
    int exit_code = 0;
    std::string body;
};

Report run_script(const Script& script, const RunOptions& opts);

} // namespace rees
