#pragma once

/**
 * @file report.hpp
 * @brief Ordered key/value reports with a flat text and a JSON rendering of the same content.
 */

#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pointed/error.hpp"

namespace pointed {

class Report {
public:
    void add(const std::string& key, const std::string& value) {
        detail::require(keys_.insert(key).second, ErrorKind::Internal, "duplicate report key " + key);
        entries_.emplace_back(key, value);
    }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
    template <class Int, class = std::enable_if_t<std::is_integral_v<Int> && !std::is_same_v<Int, bool>>>
    void add(const std::string& key, Int value) {
        add(key, std::to_string(value));
    }

    const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

    bool has(const std::string& key) const { return keys_.count(key) != 0; }

    const std::string& get(const std::string& key) const {
        for (const auto& [k, v] : entries_)
            if (k == key) return v;
        detail::fail(ErrorKind::Internal, "report has no key " + key);
    }

    /// One "key = value" line per entry.
    std::string to_kv() const {
        std::string s;
        for (const auto& [k, v] : entries_) s += k + " = " + v + "\n";
        return s;
    }

    /// A JSON object with the same keys in the same order; values are strings.
    std::string to_json() const {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [k, v] : entries_) j[k] = v;
        return j.dump(2) + "\n";
    }

    std::string render(const std::string& format) const { return format == "json" ? to_json() : to_kv(); }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
    std::set<std::string> keys_;
};

}  // namespace pointed
