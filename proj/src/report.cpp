#include "ulrich/report.hpp"

#include <algorithm>

namespace ulrich {

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::passed_count() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

void Report::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

void Report::absorb(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
    if (!witness && other.witness) witness = other.witness;
}

Json to_json(const Report& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["parameters"] = r.parameters;
    j["status"] = r.passed() ? "pass" : "fail";
    j["passed"] = r.passed_count();
    j["total"] = r.checks.size();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    r.lemma = j.at("lemma").get<std::string>();
    r.parameters = j.at("parameters");
    for (const auto& cj : j.at("checks"))
        r.checks.push_back({cj.at("name").get<std::string>(), cj.at("passed").get<bool>(),
                            cj.value("detail", std::string{})});
    if (j.contains("witness")) r.witness = j.at("witness").get<std::string>();
    return r;
}

} // namespace ulrich
