#ifndef ULRICH_REPORT_HPP
#define ULRICH_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ulrich {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
    friend bool operator==(const Check&, const Check&) = default;
};

/// Outcome of one verification run: {lemma, parameters, status, checks, witness?}.
struct Report {
    std::string lemma;
    Json parameters = Json::object();
    std::vector<Check> checks;
    std::optional<std::string> witness;

    bool passed() const;
    std::size_t passed_count() const;
    void add(std::string name, bool ok, std::string detail = {});
    /// Appends the checks of another report, prefixing their names.
    void absorb(const Report& other, const std::string& prefix);

    friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

} // namespace ulrich

#endif
