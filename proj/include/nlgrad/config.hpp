#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nlgrad {

/// Flat key-value experiment configuration. Keys may repeat (sweeps); the
/// scalar accessors read the last occurrence so that overrides win.
class Config {
public:
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text, const std::string& origin = "<string>");

    /// Appends; used both by the parser and by command-line overrides.
    void set(const std::string& key, const std::string& value);
    /// Drops previous occurrences first; a flag override replaces a sweep.
    void override_key(const std::string& key, const std::string& value);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::string require_string(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    double require_double(const std::string& key) const;
    long long get_int(const std::string& key, long long fallback) const;
    long long require_int(const std::string& key) const;
    bool get_bool(const std::string& key, bool fallback) const;

    /// All occurrences of key, each possibly comma-separated, parsed as
    /// doubles. Values like "1/512" and "2^-8" are accepted.
    std::vector<double> get_double_list(const std::string& key) const;
    /// Comma-separated doubles from the last occurrence.
    std::vector<double> get_vector(const std::string& key) const;

    /// Deterministic "key = value" lines of the resolved configuration,
    /// sorted by key, for the CSV header block.
    std::vector<std::string> resolved_lines() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;  // in insertion order
    const std::string* last(const std::string& key) const;
};

/// Parses a single numeric token, accepting plain literals plus the "a/b"
/// and "2^-k" shorthands used in sweep configs.
double parse_number(const std::string& token);

}  // namespace nlgrad
