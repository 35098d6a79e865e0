#pragma once

// Slow, obviously-correct reference computations used only by the tests.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <microweight/linalg.hpp>
#include <microweight/rational.hpp>
#include <microweight/rootsystem.hpp>

namespace brute {

using microweight::Matrix;
using microweight::Rational;
using microweight::Vec;
using microweight::operator+;
using microweight::operator-;
using microweight::operator*;

/// Closes the simple reflections under composition (small ranks only).
inline std::set<std::vector<Rational>> weyl_group_elements(const microweight::RootSystem& s)
{
    const std::size_t n = s.ambient_dim();
    auto as_key = [n](const Matrix<Rational>& m) {
        std::vector<Rational> k;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) k.push_back(m(i, j));
        return k;
    };
    std::vector<Matrix<Rational>> gens;
    for (const auto& a : s.simple_roots()) {
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < n; ++j) cols.push_back(reflect(s, a, microweight::Weight{microweight::unit_vec(n, j)}).coords);
        gens.push_back(Matrix<Rational>::from_columns(cols));
    }
    std::set<std::vector<Rational>> seen{as_key(Matrix<Rational>::identity(n))};
    std::vector<Matrix<Rational>> frontier{Matrix<Rational>::identity(n)};
    while (!frontier.empty()) {
        std::vector<Matrix<Rational>> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                auto x = h * g;
                if (seen.insert(as_key(x)).second) next.push_back(x);
            }
        frontier = std::move(next);
    }
    return seen;
}

/// Applies every group element to w.
inline std::set<Vec> orbit_by_group(const microweight::RootSystem& s, const Vec& w)
{
    const std::size_t n = s.ambient_dim();
    std::set<Vec> out;
    for (const auto& k : weyl_group_elements(s)) {
        Vec y = microweight::zero_vec(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) y[i] += k[i * n + j] * w[j];
        out.insert(y);
    }
    return out;
}

/// Rank of [q - p, r - p] below 2, for every unordered triple.
inline std::uint64_t collinear_count(const std::vector<Vec>& pts)
{
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                const Vec u = pts[j] - pts[i], v = pts[k] - pts[i];
                bool dependent = true;
                for (std::size_t a = 0; a < u.size() && dependent; ++a)
                    for (std::size_t b = a + 1; b < u.size(); ++b)
                        if (u[a] * v[b] != u[b] * v[a]) {
                            dependent = false;
                            break;
                        }
                n += dependent;
            }
    return n;
}

/// Random invertible rational matrix: a product of elementary operations
/// and nonzero rational scalings.
inline Matrix<Rational> random_invertible(std::size_t n, std::mt19937_64& rng, bool unimodular)
{
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> c(-3, 3);
    auto m = Matrix<Rational>::identity(n);
    for (std::size_t step = 0; step < 4 * n; ++step) {
        auto e = Matrix<Rational>::identity(n);
        const auto i = idx(rng), j = idx(rng);
        if (i != j)
            e(i, j) = c(rng);
        else if (!unimodular)
            e(i, i) = Rational(c(rng) == 0 ? 2 : c(rng) + 4, 3); // positive, nonzero
        else
            e(i, i) = -1;
        m = e * m;
    }
    return m;
}

inline Vec random_vec(std::size_t n, std::mt19937_64& rng, int lo = -5, int hi = 5)
{
    std::uniform_int_distribution<int> c(lo, hi), d(1, 4);
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(c(rng), d(rng)));
    return v;
}

} // namespace brute
