#pragma once

#include <compare>
#include <functional>
#include <string>

#include <json.hpp>

namespace cass {

// Qualified entity name: (module, local name). Ordered lexicographically so
// that every listing and serialization of analysis results is deterministic.
struct QName {
    std::string module;
    std::string name;

    auto operator<=>(const QName&) const = default;

    // "Module.name" rendering used in plain output and cache keys.
    std::string render() const { return module + "." + name; }
};

inline void to_json(nlohmann::json& j, const QName& q) {
    j = nlohmann::json::array({q.module, q.name});
}

inline void from_json(const nlohmann::json& j, QName& q) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw nlohmann::json::type_error::create(302, "qualified name must be [module, name]", &j);
    q.module = j[0].get<std::string>();
    q.name = j[1].get<std::string>();
}

} // namespace cass

template <>
struct std::hash<cass::QName> {
    size_t operator()(const cass::QName& q) const noexcept {
        size_t h = std::hash<std::string>{}(q.module);
        return h ^ (std::hash<std::string>{}(q.name) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
