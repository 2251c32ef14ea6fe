#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace dkc {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail_config("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

Config Config::parse(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail_config(origin + ":" + std::to_string(lineno) +
                        ": expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            fail_config(origin + ":" + std::to_string(lineno) + ": empty key");
        cfg.set(key, value);
    }
    return cfg;
}

void Config::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : items_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    items_.emplace_back(key, value);
}

bool Config::has(const std::string& key) const {
    return get(key).has_value();
}

std::optional<std::string> Config::get(const std::string& key) const {
    for (const auto& [k, v] : items_)
        if (k == key)
            return v;
    return std::nullopt;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    auto v = get(key);
    return v ? *v : fallback;
}

std::string Config::require_string(const std::string& key) const {
    auto v = get(key);
    if (!v)
        fail_config("missing required config field '" + key + "'");
    return *v;
}

double Config::require_double(const std::string& key) const {
    std::string raw = require_string(key);
    try {
        std::size_t used = 0;
        double d = std::stod(raw, &used);
        if (used != raw.size())
            throw std::invalid_argument(raw);
        return d;
    } catch (const std::exception&) {
        fail_config("field '" + key + "': expected a number, got '" + raw + "'");
    }
}

double Config::get_double(const std::string& key, double fallback) const {
    return has(key) ? require_double(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    auto v = get(key);
    if (!v)
        return fallback;
    if (*v == "true" || *v == "1")
        return true;
    if (*v == "false" || *v == "0")
        return false;
    fail_config("field '" + key + "': expected true/false, got '" + *v + "'");
}

int Config::get_int(const std::string& key, int fallback) const {
    if (!has(key))
        return fallback;
    double d = require_double(key);
    int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        fail_config("field '" + key + "': expected an integer");
    return i;
}

std::size_t Config::array_size(const std::string& prefix) const {
    std::size_t n = 0;
    while (true) {
        std::string head = prefix + "[" + std::to_string(n) + "]";
        bool found = std::any_of(items_.begin(), items_.end(), [&](const auto& kv) {
            return kv.first.rfind(head, 0) == 0;
        });
        if (!found)
            break;
        ++n;
    }
    return n;
}

std::vector<std::string> Config::keys() const {
    std::vector<std::string> out;
    out.reserve(items_.size());
    for (const auto& [k, v] : items_)
        out.push_back(k);
    return out;
}

std::string Config::serialize() const {
    std::string out;
    for (const auto& [k, v] : items_) {
        out += k;
        out += " = ";
        out += v;
        out += "\n";
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_double_12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace dkc
