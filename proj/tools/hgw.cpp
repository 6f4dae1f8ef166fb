// hgw: batch runner for the verification suites.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hg/cli/run.hpp"

namespace {

int fail(int code, const std::string& msg) {
    std::cerr << "hgw: " << msg << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Runs exact verification suites and writes certificate bundles."};
    std::string spec_path, suite, out;
    int degree = 0;
    std::uint64_t seed = 0;
    bool list = false;
    app.add_option("--spec", spec_path, "JSON spec file");
    app.add_option("--degree", degree, "truncation degree (overrides the spec)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "random seed for corpus sampling (overrides the spec)");
    app.add_option("--out", out, "directory for bundle.json and summary.txt");
    app.add_option("--suite", suite, "suite name (overrides the spec)");
    app.add_flag("--list-suites", list, "print the registered suites and exit");
    app.footer(
        "Exit codes: 0 all certificates pass, 1 a certificate failed, 2 usage, 3 I/O,\n"
        "10 + error kind otherwise (10 ParseError, 12 SingularMatrix, 13 DegreeTooLarge,\n"
        "25 PreconditionViolated; see README).");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : hg::exit_code::kUsage;
    }

    if (list) {
        for (auto& s : hg::suite_names()) std::cout << s << "  " << hg::suite_description(s) << "\n";
        return 0;
    }

    try {
        nlohmann::json doc = nlohmann::json::object();
        if (!spec_path.empty()) {
            std::ifstream in(spec_path);
            if (!in) return fail(hg::exit_code::kIo, "cannot read " + spec_path);
            try {
                doc = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                return fail(hg::exit_code_for(hg::ErrorKind::Parse), std::string("ParseError: ") + e.what());
            }
        }
        hg::RunSpec spec = hg::parse_run_spec(doc);
        if (!suite.empty()) spec.suite = suite;
        if (degree > 0) spec.degree = degree;
        if (app.count("--seed")) spec.seed = seed;
        spec.out = out;

        auto t0 = std::chrono::steady_clock::now();
        hg::RunReport report = hg::run_suite(spec);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        std::string summary = report.summary();
        std::cout << summary;
        std::cerr << "elapsed " << secs << " s\n";
        if (!out.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(out, ec);
            std::ofstream b(std::filesystem::path(out) / "bundle.json");
            std::ofstream s(std::filesystem::path(out) / "summary.txt");
            if (!b || !s) return fail(hg::exit_code::kIo, "cannot write to " + out);
            b << report.bundle().dump(2) << "\n";
            s << summary;
        }
        return report.exit_status();
    } catch (const hg::Error& e) {
        return fail(hg::exit_code_for(e.kind()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(hg::exit_code_for(hg::ErrorKind::Parse), std::string("ParseError: ") + e.what());
    }
}
