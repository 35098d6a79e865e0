#pragma once

// Reads the frozen output of the standalone brute-force oracle.

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace oracle {

inline std::map<std::string, std::uint64_t> frozen_values(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open oracle file " + path);
    std::map<std::string, std::uint64_t> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        std::uint64_t v = 0;
        if (ss >> key >> v) out[key] = v;
    }
    return out;
}

inline std::uint64_t value(const std::string& path, const std::string& key)
{
    const auto m = frozen_values(path);
    const auto it = m.find(key);
    if (it == m.end()) throw std::runtime_error("oracle file lacks " + key);
    return it->second;
}

} // namespace oracle
