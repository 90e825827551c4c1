#include "nlgrad/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nlgrad/errors.hpp"

namespace nlgrad {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

double parse_number(const std::string& token) {
    const std::string t = trim(token);
    if (t.empty()) throw ConfigError("empty numeric value");

    auto to_double = [](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse number '" + s + "'");
        }
        if (used != s.size()) throw ConfigError("trailing garbage in number '" + s + "'");
        return v;
    };

    if (const auto slash = t.find('/'); slash != std::string::npos) {
        const double den = to_double(trim(t.substr(slash + 1)));
        if (den == 0.0) throw ConfigError("division by zero in '" + t + "'");
        return to_double(trim(t.substr(0, slash))) / den;
    }
    if (const auto caret = t.find('^'); caret != std::string::npos) {
        return std::pow(to_double(trim(t.substr(0, caret))), to_double(trim(t.substr(caret + 1))));
    }
    return to_double(t);
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str(), path);
}

Config Config::from_string(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        cfg.set(key, value);
    }
    return cfg;
}

void Config::set(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

void Config::override_key(const std::string& key, const std::string& value) {
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [&](const auto& kv) { return kv.first == key; }),
                   entries_.end());
    entries_.emplace_back(key, value);
}

const std::string* Config::last(const std::string& key) const {
    const std::string* found = nullptr;
    for (const auto& [k, v] : entries_)
        if (k == key) found = &v;
    return found;
}

bool Config::has(const std::string& key) const { return last(key) != nullptr; }

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    const std::string* v = last(key);
    return v ? *v : fallback;
}

std::string Config::require_string(const std::string& key) const {
    const std::string* v = last(key);
    if (!v) throw ConfigError("missing required key '" + key + "'");
    return *v;
}

double Config::get_double(const std::string& key, double fallback) const {
    const std::string* v = last(key);
    return v ? parse_number(*v) : fallback;
}

double Config::require_double(const std::string& key) const {
    return parse_number(require_string(key));
}

long long Config::get_int(const std::string& key, long long fallback) const {
    const std::string* v = last(key);
    if (!v) return fallback;
    const double d = parse_number(*v);
    const auto i = static_cast<long long>(std::llround(d));
    if (std::abs(d - static_cast<double>(i)) > 1e-9)
        throw ConfigError("key '" + key + "' wants an integer, got '" + *v + "'");
    return i;
}

long long Config::require_int(const std::string& key) const {
    if (!has(key)) throw ConfigError("missing required key '" + key + "'");
    return get_int(key, 0);
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    const std::string* v = last(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
    if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
    throw ConfigError("key '" + key + "' wants a boolean, got '" + *v + "'");
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& [k, v] : entries_) {
        if (k != key) continue;
        std::istringstream ss(v);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(parse_number(tok));
    }
    return out;
}

std::vector<double> Config::get_vector(const std::string& key) const {
    const std::string* v = last(key);
    if (!v) return {};
    std::vector<double> out;
    std::istringstream ss(*v);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_number(tok));
    return out;
}

std::vector<std::string> Config::resolved_lines() const {
    std::vector<std::string> lines;
    lines.reserve(entries_.size());
    for (const auto& [k, v] : entries_) lines.push_back(k + " = " + v);
    std::sort(lines.begin(), lines.end());
    return lines;
}

}  // namespace nlgrad
