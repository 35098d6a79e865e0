#pragma once

// Text and JSON formats. Rationals are always written as "p/q" strings in
// lowest terms so that output is exact and byte-stable.

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "affgeom.hpp"
#include "errors.hpp"
#include "frobmodel.hpp"
#include "minuscule.hpp"
#include "rational.hpp"
#include "rootsystem.hpp"

namespace microweight::io {

using nlohmann::json;

inline json to_json(const Vec& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(to_fraction_string(x));
    return a;
}

inline json to_json(const RootSystem& s)
{
    json roots = json::array();
    for (const auto& a : s.simple_roots()) roots.push_back(to_json(a.coords));
    return {{"type", to_string(s.type())}, {"rank", s.rank()}, {"simple_roots", roots}};
}

inline json catalog_json(const std::vector<MinusculeEntry>& entries)
{
    json out = json::array();
    // One record per (type, rank), in input order.
    for (const auto& e : entries) {
        if (out.empty() || out.back()["type"] != to_string(e.type) || out.back()["rank"] != e.rank)
            out.push_back({{"type", to_string(e.type)}, {"rank", e.rank}, {"weights", json::array()}, {"dims", json::array()},
                           {"self_dual", json::array()}});
        out.back()["weights"].push_back("w" + std::to_string(e.weight_index));
        out.back()["dims"].push_back(e.dimension.convert_to<std::uint64_t>());
        out.back()["self_dual"].push_back(to_string(e.self_dual_form));
    }
    return out;
}

inline json to_json(const SeparationReport& r)
{
    json levels = json::array();
    // Descending functional value: top, middle, middle, bottom.
    for (auto it = r.level_counts.rbegin(); it != r.level_counts.rend(); ++it)
        levels.push_back({{"value", to_fraction_string(it->first)}, {"count", it->second}});
    return {{"w", to_json(r.w.coords)},
            {"functional", {{"coefficients", to_json(r.coefficients)}, {"constant", to_fraction_string(r.constant)}}},
            {"level_counts", levels}};
}

inline json to_json(const IntVec& v) { return json(v); }
inline json to_json(const ExponentPoint& p) { return json(p.coords); }

inline json to_json(const EigenSet& e)
{
    return {{"structure", {{"d1", e.structure.d1}, {"d2", e.structure.d2}, {"delta1_scale", e.structure.delta1_scale}}},
            {"delta1", e.delta1},
            {"delta2", e.delta2}};
}

namespace detail {

inline std::vector<IntVec> int_rows(const json& j, const char* key, std::size_t dim)
{
    if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("missing array '") + key + "'", 0);
    std::vector<IntVec> out;
    for (const auto& row : j[key]) {
        if (!row.is_array()) throw ParseError(std::string("'") + key + "' rows must be arrays", 0);
        IntVec v;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw ParseError(std::string("'") + key + "' entries must be integers", 0);
            v.push_back(x.get<std::int64_t>());
        }
        if (v.size() != dim)
            throw ParseError(std::string("'") + key + "' row has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim), 0);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

/// Parses {"structure": {"d1", "d2", "delta1_scale"}, "delta1": [[..]], "delta2": [[..]]}.
/// A zero-dimensional block is written as [[]].
inline EigenSet eigenset_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("structure") || !j["structure"].is_object()) throw ParseError("missing 'structure' object", 0);
    const auto& s = j["structure"];
    auto get_dim = [&](const char* key) -> std::size_t {
        if (!s.contains(key) || !s[key].is_number_unsigned()) throw ParseError(std::string("structure.") + key + " must be a nonnegative integer", 0);
        return s[key].get<std::size_t>();
    };
    const std::size_t d1 = get_dim("d1");
    const std::size_t d2 = get_dim("d2");
    std::int64_t scale = 1;
    if (s.contains("delta1_scale")) {
        if (!s["delta1_scale"].is_number_integer() || s["delta1_scale"].get<std::int64_t>() < 1)
            throw ParseError("structure.delta1_scale must be a positive integer", 0);
        scale = s["delta1_scale"].get<std::int64_t>();
    }
    const auto a = detail::int_rows(j, "delta1", d1);
    const auto b = detail::int_rows(j, "delta2", d2);
    try {
        return build_delta(a, b, scale);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), 0);
    }
}

inline EigenSet read_eigenset(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
    return eigenset_from_json(j);
}

// ---------------------------------------------------------------------------
// Text formats

namespace detail {

inline std::string strip(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline Vec parse_row(const std::string& line, std::size_t line_no)
{
    std::istringstream ss(line);
    Vec v;
    std::string tok;
    while (ss >> tok) {
        try {
            v.push_back(parse_rational(tok));
        } catch (const ParseError&) {
            throw ParseError("bad number '" + tok + "'", line_no);
        }
    }
    return v;
}

} // namespace detail

/// Weight fixture: one rank-length tuple per line in simple-root
/// coordinates, '#' comments and blank lines ignored.
inline std::vector<Vec> parse_fixture(std::istream& in, std::size_t rank)
{
    std::vector<Vec> rows;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto t = detail::strip(line);
        if (t.empty() || t[0] == '#') continue;
        auto v = detail::parse_row(t, n);
        if (v.size() != rank)
            throw ParseError("expected " + std::to_string(rank) + " entries, found " + std::to_string(v.size()), n);
        rows.push_back(std::move(v));
    }
    return rows;
}

inline std::vector<Vec> read_fixture(const std::string& path, std::size_t rank)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return parse_fixture(in, rank);
}

/// "dim d" header, then one point per line.
inline Configuration parse_configuration(std::istream& in)
{
    std::string line;
    std::size_t n = 0;
    std::optional<std::size_t> dim;
    std::vector<Vec> pts;
    while (std::getline(in, line)) {
        ++n;
        const auto t = detail::strip(line);
        if (t.empty() || t[0] == '#') continue;
        if (!dim) {
            std::istringstream ss(t);
            std::string kw;
            long long d = -1;
            if (!(ss >> kw >> d) || kw != "dim" || d < 0) throw ParseError("expected header 'dim d'", n);
            dim = static_cast<std::size_t>(d);
            continue;
        }
        auto v = detail::parse_row(t, n);
        if (v.size() != *dim) throw ParseError("expected " + std::to_string(*dim) + " coordinates", n);
        pts.push_back(std::move(v));
    }
    if (!dim) throw ParseError("missing 'dim' header", n);
    try {
        return Configuration(std::move(pts));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), n);
    }
}

/// "key value" lines with unsigned values, '#' comments (oracle output).
inline std::map<std::string, std::uint64_t> read_key_values(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::map<std::string, std::uint64_t> out;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto t = detail::strip(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ss(t);
        std::string key;
        std::uint64_t v = 0;
        if (!(ss >> key >> v)) throw ParseError("expected 'key value'", n);
        out[key] = v;
    }
    return out;
}

inline void write_configuration(std::ostream& out, const Configuration& s)
{
    out << "dim " << s.dim() << "\n";
    for (const auto& p : s.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << to_fraction_string(p[i]);
        out << "\n";
    }
}

} // namespace microweight::io
