#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rees/diagnostics.hpp"
#include "rees/script.hpp"

int main(int argc, char** argv) {
    CLI::App app{"rees: exact computations with derived blow-ups over Q"};

    std::string input = "-";
    rees::RunOptions opts;
    app.add_option("script", input, "script file, or '-' for stdin");
    app.add_flag("--assert", opts.assert_mode,
                 "exit 1 when any command reports a false verdict");
    app.add_flag("--batch", opts.batch, "allow more than one command per script");
    app.add_flag("--timing", opts.timing, "append elapsed wall time to the report");
    app.add_option("--format", opts.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", opts.cache_dir,
                   "directory for cached Groebner bases (content addressed)");

    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "error: cannot open '" << input << "'\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    try {
        rees::Script script = rees::parse_script(text);
        rees::Report report = rees::run_script(script, opts);
        std::cout << report.body;
        return report.exit_code;
    } catch (const rees::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
