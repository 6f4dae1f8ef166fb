#include "hg/presentation/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace hg {

bool Certificate::pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

std::size_t Certificate::failures() const {
    std::size_t n = 0;
    for (auto& c : checks) n += !c.pass;
    return n;
}

void Certificate::merge(const Certificate& other) {
    for (auto c : other.checks) {
        c.id = other.kind + "/" + c.id;
        checks.push_back(std::move(c));
    }
    for (auto& t : other.tags)
        if (std::find(tags.begin(), tags.end(), t) == tags.end()) tags.push_back(t);
}

const CheckRecord* Certificate::first_failure() const {
    for (auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    j["subject"] = subject;
    j["degree"] = degree;
    j["exact"] = exact;
    j["pass"] = pass();
    j["tags"] = tags;
    auto& arr = j["checks"] = nlohmann::json::array();
    for (auto& c : checks) {
        nlohmann::json r;
        r["id"] = c.id;
        if (!c.objects.empty()) r["objects"] = c.objects;
        r["level"] = c.level;
        r["pass"] = c.pass;
        if (!c.detail.empty()) r["detail"] = c.detail;
        arr.push_back(std::move(r));
    }
    if (!data.empty()) j["data"] = data;
    return j;
}

std::string Certificate::summary() const {
    std::ostringstream os;
    os << (pass() ? "PASS " : "FAIL ") << kind << " [" << subject << "] " << checks.size() << " checks";
    if (exact)
        os << ", exact";
    else
        os << ", degree " << degree;
    if (auto f = first_failure()) os << "; first failure: " << f->id << (f->objects.empty() ? "" : " @" + f->objects);
    return os.str();
}

}  // namespace hg
