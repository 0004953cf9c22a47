#include <cstdio>

#include "stepenum/instrument.hpp"

namespace stepenum {

bool RunRecord::pass() const {
    if (violation) return false;
    for (const auto& b : bounds)
        if (!b.pass) return false;
    return true;
}

nlohmann::json RunRecord::to_json() const {
    nlohmann::json fits_json = nlohmann::json::array();
    for (const auto& f : fits) fits_json.push_back(f.to_json());
    nlohmann::json bounds_json = nlohmann::json::array();
    for (const auto& b : bounds) bounds_json.push_back(b.to_json());
    nlohmann::json j{{"problem", problem},
                     {"instance_digest", instance_digest},
                     {"n", n},
                     {"k", k},
                     {"trace_csv_path", trace_csv_path},
                     {"solutions_count", solutions_count},
                     {"fits", fits_json},
                     {"bounds", bounds_json},
                     {"pass", pass()}};
    j["memory"] = memory ? memory->to_json() : nlohmann::json(nullptr);
    j["violation"] = violation ? nlohmann::json(*violation) : nlohmann::json(nullptr);
    if (!late_emissions.empty()) j["late_emissions"] = late_emissions;
    return j;
}

nlohmann::json report(std::span<const RunRecord> runs) {
    nlohmann::json doc{{"schema_version", kReportSchemaVersion}};
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const auto& r : runs) {
        arr.push_back(r.to_json());
        all = all && r.pass();
    }
    doc["runs"] = std::move(arr);
    doc["overall_pass"] = all;
    return doc;
}

nlohmann::json merge_reports(std::span<const nlohmann::json> documents) {
    nlohmann::json doc{{"schema_version", kReportSchemaVersion}};
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const auto& d : documents) {
        for (const auto& run : d.at("runs")) {
            all = all && run.value("pass", false);
            arr.push_back(run);
        }
    }
    doc["runs"] = std::move(arr);
    doc["overall_pass"] = all;
    return doc;
}

std::string instance_digest(std::string_view raw) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const char c : raw) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace stepenum
