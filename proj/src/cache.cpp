#include "gammaq/cache.hpp"

#include <fstream>
#include <vector>

#include <json.hpp>

#include "gammaq/rational.hpp"
#include "gammaq/sequences.hpp"

namespace gammaq {

CacheLoad load_sequence_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {false, "cache file absent"};
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        return {false, std::string("cache is not valid JSON: ") + e.what()};
    }
    if (!doc.is_object() || !doc.contains("schema_version") ||
        !doc["schema_version"].is_number_integer() ||
        doc["schema_version"].get<int>() != kCacheSchemaVersion)
        return {false, "cache schema_version mismatch"};
    if (!doc.contains("bernoulli") || !doc["bernoulli"].is_array() || !doc.contains("euler") ||
        !doc["euler"].is_array())
        return {false, "cache is missing the bernoulli/euler tables"};

    std::vector<Rational> bern;
    for (const auto& v : doc["bernoulli"]) {
        if (!v.is_string()) return {false, "bernoulli entries must be fraction strings"};
        auto r = Rational::parse(v.get<std::string>());
        if (!r) return {false, "unparseable bernoulli entry: " + v.get<std::string>()};
        bern.push_back(*r);
    }
    std::vector<Integer> euler;
    for (const auto& v : doc["euler"]) {
        if (!v.is_string()) return {false, "euler entries must be integer strings"};
        auto r = Rational::parse(v.get<std::string>());
        if (!r || !r->is_integer()) return {false, "unparseable euler entry: " + v.get<std::string>()};
        euler.push_back(r->num());
    }
    // Values are never trusted as-is: both tables must satisfy their
    // defining recurrences or the whole cache is discarded.
    if (!bern.empty() && !seed_bernoulli_table(bern))
        return {false, "bernoulli table fails its defining recurrence"};
    if (!euler.empty() && !seed_euler_table(euler))
        return {false, "euler table fails its defining recurrence"};
    return {true, ""};
}

bool store_sequence_cache(const std::string& path) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kCacheSchemaVersion;
    nlohmann::ordered_json bern = nlohmann::ordered_json::array();
    for (const auto& b : bernoulli_table_snapshot()) bern.push_back(b.to_string());
    nlohmann::ordered_json euler = nlohmann::ordered_json::array();
    for (const auto& e : euler_table_snapshot()) euler.push_back(e.get_str());
    doc["bernoulli"] = std::move(bern);
    doc["euler"] = std::move(euler);
    std::ofstream out(path);
    if (!out) return false;
    out << doc.dump(1) << "\n";
    return static_cast<bool>(out);
}

} // namespace gammaq
