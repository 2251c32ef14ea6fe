#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dkc {

// Flat "path = value" text format. Nesting is spelled in the key, e.g.
//
//   expansion_time = 1.5
//   kicks[0].strength = 29.0948275862
//   kicks[0].width = 15
//
// '#' starts a comment; blank lines are ignored. Later assignments to the
// same key win, which is also how --set overrides work.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse(const std::string& text, const std::string& origin = "<string>");

    void set(const std::string& key, const std::string& value);

    bool has(const std::string& key) const;
    std::optional<std::string> get(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::string require_string(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    double require_double(const std::string& key) const;
    bool get_bool(const std::string& key, bool fallback) const;
    int get_int(const std::string& key, int fallback) const;

    // Number of consecutive entries prefix[0], prefix[1], ... present (any
    // subfield counts).
    std::size_t array_size(const std::string& prefix) const;

    // Keys in first-assignment order.
    std::vector<std::string> keys() const;

    std::string serialize() const;

private:
    std::vector<std::pair<std::string, std::string>> items_;
};

std::string format_double(double v);        // shortest round-trip
std::string format_double_12(double v);     // fixed 12 significant digits

} // namespace dkc
