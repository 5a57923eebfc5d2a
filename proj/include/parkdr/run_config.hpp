#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace parkdr {

// Plain-text `key = value` configuration ('#' starts a comment). Keys are
// free-form dotted names; commands read the ones they understand and fall
// back to built-in defaults for the rest.
class RunConfig {
public:
    static RunConfig load(const std::string& path);
    static RunConfig from_text(const std::string& text);

    bool has(const std::string& key) const;
    std::string get(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    std::size_t get_size(const std::string& key, std::size_t fallback) const;

    // Comma-separated list value; empty when the key is absent.
    std::vector<std::string> get_list(const std::string& key) const;

    void set(const std::string& key, const std::string& value);

private:
    std::map<std::string, std::string> values_;
};

// Expand "0-5,22-23" style hour ranges into sorted unique indices.
std::vector<std::size_t> parse_index_ranges(const std::string& text,
                                            std::size_t bound);

}  // namespace parkdr
