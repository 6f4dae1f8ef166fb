#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hg/classify/classify.hpp"
#include "hg/core/error.hpp"
#include "hg/presentation/certificate.hpp"
#include "json.hpp"

namespace hg {

// Exit statuses of the batch runner.
namespace exit_code {
constexpr int kPass = 0;
constexpr int kFail = 1;       // some certificate failed
constexpr int kUsage = 2;      // bad command line
constexpr int kIo = 3;         // spec unreadable or output not writable
constexpr int kErrorBase = 10;  // + ordinal of ErrorKind
}  // namespace exit_code

// Parse -> 10, DenominatorVanishes -> 11, SingularMatrix -> 12, DegreeTooLarge -> 13, ...
int exit_code_for(ErrorKind k);

struct RunSpec {
    std::string suite;
    nlohmann::json input = nlohmann::json::object();  // family and suite parameters
    int degree = 2;
    std::uint64_t seed = 1;
    std::string out;  // output directory, empty for none
};

const std::vector<std::string>& suite_names();
std::string suite_description(const std::string& suite);

// Reads suite/degree/seed from the spec document (command line overrides are
// applied by the caller). Precondition error on an unknown suite or degree < 1.
RunSpec parse_run_spec(const nlohmann::json& doc);

struct RunReport {
    RunSpec spec;
    std::vector<Certificate> certificates;
    bool pass() const;
    int exit_status() const { return pass() ? exit_code::kPass : exit_code::kFail; }
    nlohmann::json bundle() const;  // canonical, no timings
    std::string summary() const;
};

// Executes the suite. Errors from the input (Parse, SingularMatrix, ...)
// propagate as hg::Error.
RunReport run_suite(const RunSpec& spec);

// Fusion ring laws on all words up to max_len (associativity of the bilinear
// extension, unit, e-multiplicity one in x (x) bar x, bar involution) and the
// dimension rule for d_a = d_b = n. The rule under test defaults to fusion_decompose.
using FusionRule = std::function<FusionSum(const FusionWord&, const FusionWord&)>;
Certificate fusion_certificate(std::size_t max_len, long n, const FusionRule& rule = fusion_decompose);

}  // namespace hg
