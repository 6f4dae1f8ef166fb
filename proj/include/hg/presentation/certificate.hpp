#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hg {

// One verified identity.
struct CheckRecord {
    std::string id;       // axiom or relation identifier
    std::string objects;  // object tuple, empty if not applicable
    int level = 0;        // filtration level used (-1 when exact/untruncated)
    bool pass = false;
    std::string detail;   // residue witness on failure, or a note
};

struct Certificate {
    std::string kind;
    std::string subject;
    int degree = 0;
    bool exact = false;  // no truncation involved
    std::vector<std::string> tags;
    std::vector<CheckRecord> checks;
    nlohmann::json data = nlohmann::json::object();

    bool pass() const;
    std::size_t failures() const;
    void add(CheckRecord r) { checks.push_back(std::move(r)); }
    void merge(const Certificate& other);  // appends other's checks, prefixing ids
    const CheckRecord* first_failure() const;

    nlohmann::json to_json() const;
    std::string summary() const;
};

}  // namespace hg
