// irred run --config <path> [--out <path>] [--format json|text] [--jobs N]
//           [--emit-pairs] [--strict] [--bound-only]

#include "irred/errors.hpp"
#include "irred/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

enum Exit { ok = 0, internal = 1, config = 2, verification = 3, size_cap = 4, partial = 5 };

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Explicit irreducibility bounds for mod p Galois representations of elliptic curves over totally "
                 "real fields"};
    app.require_subcommand(1);
    auto* run = app.add_subcommand("run", "run the pipeline on a JSON config");

    std::string config_path, out_path, format = "json";
    unsigned jobs = 1;
    bool emit_pairs = false, strict = false, bound_only = false;
    run->add_option("--config", config_path, "config file")->required();
    run->add_option("--out", out_path, "write the report here instead of stdout");
    run->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    run->add_option("--jobs", jobs, "worker threads for family sweeps")->check(CLI::Range(1u, 1024u));
    run->add_flag("--emit-pairs", emit_pairs, "include per-pair sweep values");
    run->add_flag("--strict", strict, "exit with status 5 when a sweep skipped pairs for bad reduction");
    run->add_flag("--bound-only", bound_only, "stop after B and the Merel bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : config;
    }

    try {
        irred::RunConfig cfg = irred::load_config(config_path);
        irred::Report rep = irred::run_pipeline(cfg, {jobs, emit_pairs, bound_only});
        const std::string text =
            irred::emit_report(rep, format == "text" ? irred::ReportFormat::text : irred::ReportFormat::json);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!(out << text)) {
                std::cerr << "irred: cannot write " << out_path << "\n";
                return internal;
            }
        }
        if (strict && rep.partial()) {
            std::cerr << "irred: sweep is partial (pairs skipped for bad model reduction)\n";
            return partial;
        }
        return ok;
    } catch (const irred::ConfigError& e) {
        std::cerr << "irred: config error: " << e.what() << "\n";
        return config;
    } catch (const irred::VerificationError& e) {
        std::cerr << "irred: verification failed: " << e.what() << "\n";
        return verification;
    } catch (const irred::DegeneracyError& e) {
        std::cerr << "irred: verification failed: " << e.what() << "\n";
        return verification;
    } catch (const irred::SizeCapExceeded& e) {
        std::cerr << "irred: size cap exceeded: " << e.what() << "\n";
        return size_cap;
    } catch (const std::exception& e) {
        std::cerr << "irred: " << e.what() << "\n";
        return internal;
    }
}
