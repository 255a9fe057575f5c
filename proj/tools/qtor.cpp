// Command-line driver: runs relation-check scripts against the exact Fock
// realization and emits text or JSON reports.
//
// exit codes: 0 all checks pass, 1 at least one mismatch, 2 usage/parse error

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qtor/runner.hpp"

namespace {

int parse_convention(const std::string& text, qtor::PiConfig& cfg) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) return 1;
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        if (key == "uv") {
            if (val == "asWritten") cfg.uv = qtor::UvSign::AsWritten;
            else if (val == "negated") cfg.uv = qtor::UvSign::Negated;
            else return 1;
        } else if (key == "flip") {
            if (val == "on") cfg.flip_zero_node = true;
            else if (val == "off") cfg.flip_zero_node = false;
            else return 1;
        } else {
            return 1;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qtor: exact verifier for the twisted quantum toroidal algebra of type "
                 "A1 and its Fock-space vertex realization"};

    std::string script_file, relation, convention, format = "text";
    int window = -1, maxdeg = -1, modes = -1, jobs = 1;
    long long seed = 1;
    bool list = false, no_timing = false;

    app.add_option("--script", script_file, "relation-check script file");
    app.add_option("--relation", relation, "run a single check by name");
    app.add_option("--window", window, "default window half-width");
    app.add_option("--max-degree", maxdeg, "default basis-state degree bound");
    app.add_option("--modes", modes, "default mode range bound");
    app.add_option("--convention", convention,
                   "uv=asWritten|negated,flip=on|off (default uv=asWritten,flip=on)");
    app.add_option("--format", format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", jobs, "run independent checks on this many threads");
    app.add_option("--seed", seed, "seed for random state sampling");
    app.add_flag("--list", list, "list known relation ids and suites");
    app.add_flag("--no-timing", no_timing, "omit timing fields (byte-stable reports)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (list) {
        for (const auto& [name, desc] : qtor::check_catalogue())
            std::cout << name << "\t" << desc << "\n";
        return 0;
    }

    qtor::RunOptions opts;
    opts.jobs = jobs;
    opts.format = format;
    opts.timing = !no_timing;
    opts.seed = static_cast<unsigned long long>(seed);
    if (window >= 0) opts.window = window;
    if (maxdeg >= 0) opts.maxdeg = maxdeg;
    if (modes >= 0) opts.modes = modes;
    if (!convention.empty()) {
        qtor::PiConfig cfg;
        if (parse_convention(convention, cfg) != 0) {
            std::cerr << "error: bad --convention value '" << convention << "'\n";
            return 2;
        }
        opts.convention = cfg;
    }

    std::string text;
    if (!script_file.empty()) {
        std::ifstream in(script_file);
        if (!in) {
            std::cerr << "error: cannot open script '" << script_file << "'\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else if (!relation.empty()) {
        text = "check " + relation + " {}\n";
    } else {
        std::cerr << "error: provide --script FILE or --relation ID (see --list)\n";
        return 2;
    }

    try {
        qtor::Script script = qtor::parse_script(text);
        qtor::RunReport rep = qtor::run_script(script, opts);
        if (format == "json") std::cout << qtor::report_to_json(rep, opts.timing);
        else std::cout << qtor::report_to_text(rep, opts.timing);
        return rep.pass ? 0 : 1;
    } catch (const qtor::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qtor::SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
