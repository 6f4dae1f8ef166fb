#include "doctest.h"
#include "hg/cli/run.hpp"

using namespace hg;
using nlohmann::json;

namespace {

RunSpec spec_from(const char* text) { return parse_run_spec(json::parse(text)); }

const char* kKlein = R"({
  "suite": "weakhopf", "degree": 2,
  "family": {"type": "GroupCocycle", "orders": [2, 2],
             "objects": [{"name": "1", "trivial": true}, {"name": "s", "bilinear": [["1","1"],["-1","1"]]}]}
})";

int error_code_of(const RunSpec& s) {
    try {
        run_suite(s);
    } catch (const Error& e) {
        return exit_code_for(e.kind());
    }
    return 0;
}

}  // namespace

TEST_CASE("exit codes are distinct per error kind") {
    CHECK(exit_code_for(ErrorKind::Parse) == 10);
    CHECK(exit_code_for(ErrorKind::SingularMatrix) == 12);
    CHECK(exit_code_for(ErrorKind::DegreeTooLarge) == 13);
    CHECK(exit_code_for(ErrorKind::Precondition) == 25);
}

TEST_CASE("suite registry") {
    CHECK(suite_names() == std::vector<std::string>{"cogroupoid", "galois", "classify", "transport", "homology",
                                                    "weakhopf", "fusion", "invariants"});
    RunSpec s = spec_from(R"({"suite": "nope"})");
    CHECK(error_code_of(s) == exit_code_for(ErrorKind::Precondition));
    s = spec_from(R"({"suite": "fusion", "degree": 0})");
    CHECK(error_code_of(s) == exit_code_for(ErrorKind::Precondition));
}

TEST_CASE("input errors") {
    CHECK(error_code_of(spec_from(R"({"suite": "cogroupoid", "family": {"type": "B",
        "objects": [{"name": "E", "matrix": [["0", "1"], ["-1/", "0"]]}]}})")) == 10);
    CHECK(error_code_of(spec_from(R"({"suite": "cogroupoid", "family": {"type": "B",
        "objects": [{"name": "E", "matrix": [["1", "2"], ["2", "4"]]}]}})")) == 12);
    CHECK(error_code_of(spec_from(R"({"suite": "cogroupoid", "family": {"type": "Q", "objects": [{}]}})")) == 10);
    CHECK(error_code_of(spec_from(R"({"suite": "homology"})")) == 10);
}

TEST_CASE("bundles are deterministic") {
    RunSpec s = spec_from(kKlein);
    RunReport a = run_suite(s), b = run_suite(s);
    CHECK(a.pass());
    CHECK(a.exit_status() == 0);
    CHECK(a.bundle().dump() == b.bundle().dump());
    CHECK(a.bundle()["certificates"][0]["data"]["dimension"] == 16);

    RunSpec c = spec_from(R"({"suite": "classify", "seed": 5, "random_witnesses": 3,
        "corpus": [{"name": "E2", "matrix": [["0", "1"], ["-1/2", "0"]]}]})");
    std::string first = run_suite(c).bundle().dump();
    CHECK(run_suite(c).bundle().dump() == first);
    c.seed = 6;
    CHECK(run_suite(c).bundle().dump() != first);
}

TEST_CASE("fusion certificate") {
    Certificate c = fusion_certificate(3, 3);
    CHECK(c.pass());
    CHECK(c.data["words"] == 15);
    CHECK(c.data["dimensions"]["ab"] == 8);  // d_a d_b = d_e + d_ab
}

TEST_CASE("failing certificates give exit status 1") {
    // The identity is not a congruence witness between E2 and its transpose.
    RunSpec s = spec_from(R"({"suite": "classify", "corpus": [
        {"name": "E2", "matrix": [["0", "1"], ["-1/2", "0"]]},
        {"name": "E2t", "matrix": [["0", "-1/2"], ["1", "0"]]}],
      "witnesses": [{"E": "E2", "F": "E2", "G": "E2t", "P": [["1", "0"], ["0", "1"]]}]})");
    CHECK(error_code_of(s) == exit_code_for(ErrorKind::CongruenceWitnessInvalid));

    RunReport r;
    r.certificates.push_back(fusion_certificate(2, 2));
    r.certificates.back().add({"forced", "", -1, false, ""});
    CHECK(r.exit_status() == 1);
}
