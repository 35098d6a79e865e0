#pragma once

// Exact rationals over arbitrary-precision integers, plus the handful of
// vector helpers every module needs. There is no floating point anywhere in
// the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace microweight {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rational>;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Canonical "p/q" form, lowest terms, q > 0. Integers are written "p/1".
inline std::string to_fraction_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Short form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    if (is_integer(r)) return numerator(r).str();
    return to_fraction_string(r);
}

/// Parses "p", "-p", "p/q". Throws ParseError on anything else or q == 0.
inline Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (s[0] == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rational(to_int(text));
    }
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q)) throw ParseError("not a rational: '" + std::string(text) + "'");
    const Integer den = to_int(q);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(to_int(p), den);
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v = zero_vec(n);
    v.at(i) = 1;
    return v;
}

inline Rational dot(const Vec& a, const Vec& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec operator+(Vec a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec operator-(Vec a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec operator-(Vec a)
{
    for (auto& x : a) x = -x;
    return a;
}

inline Vec operator*(const Rational& s, Vec a)
{
    for (auto& x : a) x *= s;
    return a;
}

inline bool is_zero(const Vec& a)
{
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline std::string to_string(const Vec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

inline Vec to_rational_vec(const std::vector<std::int64_t>& v)
{
    Vec out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

} // namespace microweight
