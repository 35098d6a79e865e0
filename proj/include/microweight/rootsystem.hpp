#pragma once

// Root systems of types A_m, B_m, C_m, D_m, E6, E7 realized in Bourbaki's
// epsilon coordinates:
//
//   A_m : dimension m+1, alpha_i = e_i - e_{i+1}
//   B_m : dimension m,   alpha_i = e_i - e_{i+1} (i < m), alpha_m = e_m
//   C_m : dimension m,   alpha_i = e_i - e_{i+1} (i < m), alpha_m = 2 e_m
//   D_m : dimension m,   alpha_i = e_i - e_{i+1} (i < m), alpha_m = e_{m-1} + e_m
//   E6, E7 : inside the 8-dimensional E8 space,
//            alpha_1 = 1/2 (e1 + e8) - 1/2 (e2 + ... + e7), alpha_2 = e1 + e2,
//            alpha_k = e_{k-1} - e_{k-2} for k >= 3.
//
// The full root list is generated once as the closure of the simple roots
// under the simple reflections and stored explicitly.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace microweight {

enum class RootType { A, B, C, D, E6, E7 };

inline std::string to_string(RootType t)
{
    switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E6: return "E6";
    case RootType::E7: return "E7";
    }
    return "?";
}

inline RootType parse_root_type(const std::string& s)
{
    if (s == "A") return RootType::A;
    if (s == "B") return RootType::B;
    if (s == "C") return RootType::C;
    if (s == "D") return RootType::D;
    if (s == "E6") return RootType::E6;
    if (s == "E7") return RootType::E7;
    throw RangeError("unknown root system type '" + s + "'");
}

/// A weight in ambient epsilon coordinates. The owning system is passed
/// explicitly to every operation; a Weight is a plain value.
struct Weight {
    Vec coords;

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }

    friend Weight operator+(const Weight& a, const Weight& b) { return {a.coords + b.coords}; }
    friend Weight operator-(const Weight& a, const Weight& b) { return {a.coords - b.coords}; }
    friend Weight operator-(const Weight& a) { return {-a.coords}; }
    friend Weight operator*(const Rational& s, const Weight& a) { return {s * a.coords}; }
};

inline std::string to_string(const Weight& w) { return to_string(w.coords); }

/// Coefficients (x_1, ..., x_m) with respect to the simple roots.
struct SimpleRootCoords {
    Vec coeffs;

    friend bool operator==(const SimpleRootCoords& a, const SimpleRootCoords& b) { return a.coeffs == b.coeffs; }
    friend bool operator<(const SimpleRootCoords& a, const SimpleRootCoords& b) { return a.coeffs < b.coeffs; }
};

class RootSystem;
RootSystem build_root_system(RootType type, std::size_t rank);

class RootSystem {
public:
    RootType type() const { return type_; }
    std::size_t rank() const { return simple_.size(); }
    std::size_t ambient_dim() const { return ambient_; }

    /// "A3", "D5", "E7".
    std::string label() const
    {
        if (type_ == RootType::E6 || type_ == RootType::E7) return to_string(type_);
        return to_string(type_) + std::to_string(rank());
    }

    /// 1-based like the Bourbaki numbering: simple_root(1) is alpha_1.
    const Weight& simple_root(std::size_t i) const
    {
        if (i < 1 || i > rank()) throw RangeError("simple root index out of range");
        return simple_[i - 1];
    }
    const std::vector<Weight>& simple_roots() const { return simple_; }
    const std::vector<Weight>& roots() const { return roots_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }

    bool is_root(const Weight& w) const { return norms_.count(w) != 0; }

    /// (alpha, alpha) for a root alpha.
    const Rational& root_norm(const Weight& alpha) const
    {
        const auto it = norms_.find(alpha);
        if (it == norms_.end()) throw NotARootError(to_string(alpha) + " is not a root of " + label());
        return it->second;
    }

    const std::map<Weight, Rational>& root_norms() const { return norms_; }

    /// Cartan integers <alpha_i, alpha_j^vee>, 0-based indices.
    const Matrix<Rational>& cartan_matrix() const { return cartan_; }

    /// omega_i, 1-based.
    const Weight& fundamental_weight(std::size_t i) const
    {
        if (i < 1 || i > rank()) throw RangeError("fundamental weight index " + std::to_string(i) + " out of range for " + label());
        return fundamentals_[i - 1];
    }

    SimpleRootCoords to_simple_root_coords(const Weight& x) const
    {
        check_dim(x);
        SimpleRootCoords c{projector_ * x.coords};
        if (from_simple_root_coords(c) != x) throw SpanError(to_string(x) + " is not in the span of the simple roots of " + label());
        return c;
    }

    Weight from_simple_root_coords(const SimpleRootCoords& c) const
    {
        if (c.coeffs.size() != rank()) throw std::invalid_argument("simple-root coordinate length mismatch");
        return Weight{basis_ * c.coeffs};
    }

    void check_dim(const Weight& x) const
    {
        if (x.coords.size() != ambient_)
            throw std::invalid_argument("weight has dimension " + std::to_string(x.coords.size()) + ", system " + label() +
                                        " has ambient dimension " + std::to_string(ambient_));
    }

private:
    friend RootSystem build_root_system(RootType, std::size_t);

    RootSystem(RootType type, std::size_t ambient, std::vector<Weight> simple);

    RootType type_;
    std::size_t ambient_;
    std::vector<Weight> simple_;
    std::vector<Weight> roots_;
    std::vector<Weight> positive_;
    std::map<Weight, Rational> norms_;
    Matrix<Rational> basis_;     // ambient x rank, columns = simple roots
    Matrix<Rational> projector_; // rank x ambient left inverse of basis_
    Matrix<Rational> cartan_;
    std::vector<Weight> fundamentals_;
};

namespace detail {

inline Weight reflect_raw(const Weight& alpha, const Rational& norm, const Weight& x)
{
    const Rational c = 2 * dot(x.coords, alpha.coords) / norm;
    if (c == 0) return x;
    return Weight{x.coords - c * alpha.coords};
}

} // namespace detail

inline RootSystem::RootSystem(RootType type, std::size_t ambient, std::vector<Weight> simple)
    : type_(type), ambient_(ambient), simple_(std::move(simple))
{
    const std::size_t m = simple_.size();
    std::vector<Vec> cols;
    for (const auto& a : simple_) cols.push_back(a.coords);
    basis_ = Matrix<Rational>::from_columns(cols);
    if (microweight::rank(basis_) != m) throw std::logic_error("simple roots are linearly dependent");
    const Matrix<Rational> bt = basis_.transposed();
    projector_ = inverse(bt * basis_) * bt;

    std::vector<Rational> simple_norms;
    for (const auto& a : simple_) simple_norms.push_back(dot(a.coords, a.coords));

    // Root closure under simple reflections.
    std::set<Weight> seen(simple_.begin(), simple_.end());
    std::vector<Weight> frontier(simple_.begin(), simple_.end());
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& x : frontier)
            for (std::size_t i = 0; i < m; ++i) {
                Weight y = detail::reflect_raw(simple_[i], simple_norms[i], x);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    roots_.assign(seen.begin(), seen.end());
    for (const auto& r : roots_) {
        norms_.emplace(r, dot(r.coords, r.coords));
        const Vec c = projector_ * r.coords;
        if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; })) positive_.push_back(r);
    }

    cartan_ = Matrix<Rational>(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            cartan_(i, j) = 2 * dot(simple_[i].coords, simple_[j].coords) / simple_norms[j];

    // omega_i = sum_k (C^{-1})_{ik} alpha_k, since <omega_i, alpha_j^vee> = delta_ij.
    const Matrix<Rational> cinv = inverse(cartan_);
    for (std::size_t i = 0; i < m; ++i) {
        Vec w = zero_vec(ambient_);
        for (std::size_t k = 0; k < m; ++k)
            if (cinv(i, k) != 0) w = w + cinv(i, k) * simple_[k].coords;
        fundamentals_.push_back(Weight{std::move(w)});
    }
}

/// Throws RangeError when the rank is invalid for the type
/// (A: >= 1, B: >= 2, C: >= 2, D: >= 3, E6: 6, E7: 7).
inline RootSystem build_root_system(RootType type, std::size_t rank)
{
    auto e = [](std::size_t dim, std::size_t i) { return unit_vec(dim, i - 1); };
    auto w = [](Vec v) { return Weight{std::move(v)}; };
    const Rational half(1, 2);
    std::vector<Weight> simple;
    std::size_t ambient = 0;

    switch (type) {
    case RootType::A:
        if (rank < 1) throw RangeError("type A requires rank >= 1");
        ambient = rank + 1;
        for (std::size_t i = 1; i <= rank; ++i) simple.push_back(w(e(ambient, i) - e(ambient, i + 1)));
        break;
    case RootType::B:
    case RootType::C:
    case RootType::D: {
        const std::size_t min_rank = type == RootType::D ? 3 : 2;
        if (rank < min_rank) throw RangeError("type " + to_string(type) + " requires rank >= " + std::to_string(min_rank));
        ambient = rank;
        for (std::size_t i = 1; i < rank; ++i) simple.push_back(w(e(ambient, i) - e(ambient, i + 1)));
        if (type == RootType::B) simple.push_back(w(e(ambient, rank)));
        if (type == RootType::C) simple.push_back(w(Rational(2) * e(ambient, rank)));
        if (type == RootType::D) simple.push_back(w(e(ambient, rank - 1) + e(ambient, rank)));
        break;
    }
    case RootType::E6:
    case RootType::E7: {
        const std::size_t want = type == RootType::E6 ? 6 : 7;
        if (rank != want) throw RangeError("type " + to_string(type) + " requires rank " + std::to_string(want));
        ambient = 8;
        Vec a1 = zero_vec(8);
        a1[0] = half;
        a1[7] = half;
        for (std::size_t i = 1; i <= 6; ++i) a1[i] = -half;
        simple.push_back(w(a1));
        simple.push_back(w(e(8, 1) + e(8, 2)));
        for (std::size_t k = 3; k <= rank; ++k) simple.push_back(w(e(8, k - 1) - e(8, k - 2)));
        break;
    }
    }
    return RootSystem(type, ambient, std::move(simple));
}

/// (x, alpha^vee) = 2 (x, alpha) / (alpha, alpha). Throws NotARootError.
inline Rational pairing(const RootSystem& system, const Weight& x, const Weight& alpha)
{
    system.check_dim(x);
    const Rational& norm = system.root_norm(alpha);
    return 2 * dot(x.coords, alpha.coords) / norm;
}

/// S_alpha(x) = x - (x, alpha^vee) alpha. Throws NotARootError.
inline Weight reflect(const RootSystem& system, const Weight& alpha, const Weight& x)
{
    system.check_dim(x);
    return detail::reflect_raw(alpha, system.root_norm(alpha), x);
}

inline SimpleRootCoords to_simple_root_coords(const RootSystem& system, const Weight& x)
{
    return system.to_simple_root_coords(x);
}

inline Weight from_simple_root_coords(const RootSystem& system, const SimpleRootCoords& c)
{
    return system.from_simple_root_coords(c);
}

/// Entry [i][j] (0-based) is S_{alpha_{i+1}}(alpha_{j+1}).
inline std::vector<std::vector<Weight>> reflection_matrix_table(const RootSystem& system)
{
    const std::size_t m = system.rank();
    std::vector<std::vector<Weight>> table(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            table[i].push_back(reflect(system, system.simple_roots()[i], system.simple_roots()[j]));
    return table;
}

/// Closed-form order of W(R).
inline Integer weyl_group_order(const RootSystem& system)
{
    const std::size_t m = system.rank();
    auto factorial = [](std::size_t n) {
        Integer f = 1;
        for (std::size_t k = 2; k <= n; ++k) f *= k;
        return f;
    };
    switch (system.type()) {
    case RootType::A: return factorial(m + 1);
    case RootType::B:
    case RootType::C: return (Integer(1) << m) * factorial(m);
    case RootType::D: return (Integer(1) << (m - 1)) * factorial(m);
    case RootType::E6: return Integer(51840);
    case RootType::E7: return Integer(2903040);
    }
    return 0;
}

/// Simple-root coordinates built from 1-based integer coefficients.
inline Weight weight_from_coeffs(const RootSystem& system, const std::vector<long long>& coeffs)
{
    Vec c;
    for (auto x : coeffs) c.emplace_back(x);
    return system.from_simple_root_coords(SimpleRootCoords{c});
}

} // namespace microweight
