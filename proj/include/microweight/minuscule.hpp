#pragma once

// Minuscule weights: the catalog, the minuscule test, weight systems, the
// explicit classical weight formulas and their hypercube normal forms, and
// the saturation/collinearity checks used to tell minuscule weight systems
// apart from non-minuscule ones.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rootsystem.hpp"
#include "weylorbit.hpp"

namespace microweight {

enum class SelfDualForm { Symplectic, Orthogonal, Neither, DependsOnRank };

inline std::string to_string(SelfDualForm f)
{
    switch (f) {
    case SelfDualForm::Symplectic: return "symplectic";
    case SelfDualForm::Orthogonal: return "orthogonal";
    case SelfDualForm::Neither: return "neither";
    case SelfDualForm::DependsOnRank: return "depends-on-rank";
    }
    return "?";
}

struct MinusculeEntry {
    RootType type;
    std::size_t rank;
    std::size_t weight_index; // 1-based fundamental weight index
    Integer dimension;
    SelfDualForm self_dual_form;
};

struct CatalogOptions {
    /// D3 is A3 in disguise and is not part of the public list; allow it
    /// only on request.
    bool allow_d3 = false;
};

namespace detail {

inline Integer binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    Integer r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline void check_catalog_rank(RootType type, std::size_t rank, const CatalogOptions& opts)
{
    switch (type) {
    case RootType::A:
        if (rank < 1) throw RangeError("type A requires rank >= 1");
        break;
    case RootType::B:
    case RootType::C:
        if (rank < 2) throw RangeError("type " + to_string(type) + " requires rank >= 2");
        break;
    case RootType::D:
        if (rank < 3 || (rank == 3 && !opts.allow_d3))
            throw RangeError(rank == 3 ? "D3 is listed only with allow_d3 (it coincides with A3)" : "type D requires rank >= 4");
        break;
    case RootType::E6:
        if (rank != 6) throw RangeError("type E6 requires rank 6");
        break;
    case RootType::E7:
        if (rank != 7) throw RangeError("type E7 requires rank 7");
        break;
    }
}

inline SelfDualForm self_dual_form(RootType type, std::size_t m, std::size_t r)
{
    switch (type) {
    case RootType::A:
        if (2 * r != m + 1) return SelfDualForm::Neither;
        return r % 2 == 1 ? SelfDualForm::Symplectic : SelfDualForm::Orthogonal;
    case RootType::B:
        return (m % 4 == 1 || m % 4 == 2) ? SelfDualForm::Symplectic : SelfDualForm::Orthogonal;
    case RootType::C: return SelfDualForm::Symplectic;
    case RootType::D:
        if (r == 1) return SelfDualForm::Orthogonal;
        if (m % 2 == 1) return SelfDualForm::Neither;
        return m % 4 == 0 ? SelfDualForm::Orthogonal : SelfDualForm::Symplectic;
    case RootType::E6: return SelfDualForm::Neither;
    case RootType::E7: return SelfDualForm::Symplectic;
    }
    return SelfDualForm::Neither;
}

inline Integer minuscule_dimension(RootType type, std::size_t m, std::size_t r)
{
    switch (type) {
    case RootType::A: return binomial(m + 1, r);
    case RootType::B: return Integer(1) << m;
    case RootType::C: return Integer(2 * m);
    case RootType::D: return r == 1 ? Integer(2 * m) : Integer(1) << (m - 1);
    case RootType::E6: return Integer(27);
    case RootType::E7: return Integer(56);
    }
    return 0;
}

} // namespace detail

/// The minuscule fundamental weights of a simple type:
/// A_m: all; B_m: w_m; C_m: w_1; D_m: w_1, w_{m-1}, w_m; E6: w_1, w_6; E7: w_7.
inline std::vector<MinusculeEntry> minuscule_catalog(RootType type, std::size_t rank, const CatalogOptions& opts = {})
{
    detail::check_catalog_rank(type, rank, opts);
    std::vector<std::size_t> idx;
    switch (type) {
    case RootType::A:
        for (std::size_t i = 1; i <= rank; ++i) idx.push_back(i);
        break;
    case RootType::B: idx = {rank}; break;
    case RootType::C: idx = {1}; break;
    case RootType::D: idx = {1, rank - 1, rank}; break;
    case RootType::E6: idx = {1, 6}; break;
    case RootType::E7: idx = {7}; break;
    }
    std::vector<MinusculeEntry> out;
    for (auto r : idx)
        out.push_back({type, rank, r, detail::minuscule_dimension(type, rank, r), detail::self_dual_form(type, rank, r)});
    return out;
}

/// True iff (w, alpha^vee) is in {-1, 0, 1} for every root alpha.
/// Throws PreconditionError for the zero weight.
inline bool is_minuscule(const RootSystem& system, const Weight& w)
{
    system.check_dim(w);
    if (is_zero(w.coords)) throw PreconditionError("the zero weight is not a candidate minuscule weight");
    for (const auto& alpha : system.positive_roots()) {
        const Rational p = pairing(system, w, alpha);
        if (p != 0 && p != 1 && p != -1) return false;
    }
    return true;
}

/// All weights of the irreducible module with minuscule highest weight w;
/// this is the single orbit W . w.
inline WeightSet weight_system(const RootSystem& system, const Weight& w)
{
    if (!is_minuscule(system, w)) throw PreconditionError(to_string(w) + " is not minuscule in " + system.label());
    return orbit(system, w);
}

/// Explicit weight formulas for the classical minuscule modules, written
/// straight from the characters in epsilon coordinates (no Weyl group):
///   A_m w_r : e_S - r/(m+1) (e_1 + ... + e_{m+1}) for |S| = r
///   B_m w_m : 1/2 sum a_i e_i, a in {+-1}^m
///   C_m w_1, D_m w_1 : +-e_i
///   D_m w_{m-1}, w_m : 1/2 sum a_i e_i with #{a_i = -1} odd resp. even
inline WeightSet classical_weight_formula(RootType type, std::size_t m, std::size_t r)
{
    WeightSet out;
    const Rational half(1, 2);
    auto signs = [&](auto&& accept) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
            const auto minus = static_cast<std::size_t>(__builtin_popcountll(mask));
            if (!accept(minus)) continue;
            Vec v = zero_vec(m);
            for (std::size_t i = 0; i < m; ++i) v[i] = ((mask >> i) & 1) ? -half : half;
            out.insert(Weight{v});
        }
    };
    switch (type) {
    case RootType::A: {
        if (r < 1 || r > m) throw RangeError("A-type weight index out of range");
        const Rational shift(static_cast<long long>(r), static_cast<long long>(m + 1));
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (m + 1)); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
            Vec v(m + 1, -shift);
            for (std::size_t i = 0; i <= m; ++i)
                if ((mask >> i) & 1) v[i] += 1;
            out.insert(Weight{v});
        }
        return out;
    }
    case RootType::B:
        if (r != m) break;
        signs([](std::size_t) { return true; });
        return out;
    case RootType::C:
    case RootType::D:
        if (r == 1) {
            for (std::size_t i = 0; i < m; ++i) {
                out.insert(Weight{unit_vec(m, i)});
                out.insert(Weight{-unit_vec(m, i)});
            }
            return out;
        }
        if (type == RootType::D && (r == m - 1 || r == m)) {
            const std::size_t parity = r == m ? 0 : 1;
            signs([&](std::size_t minus) { return minus % 2 == parity; });
            return out;
        }
        break;
    default: break;
    }
    throw PreconditionError("no classical weight formula for " + to_string(type) + std::to_string(m) + " w" + std::to_string(r));
}

enum class CubeConstraint { None, SumIsPlusMinusOne, OddMinusCount, EvenMinusCount, CrossPolytope };

inline std::string to_string(CubeConstraint c)
{
    switch (c) {
    case CubeConstraint::None: return "all sign vectors";
    case CubeConstraint::SumIsPlusMinusOne: return "a_1 + ... + a_m in {-1, 1}";
    case CubeConstraint::OddMinusCount: return "#{a_j = -1} odd";
    case CubeConstraint::EvenMinusCount: return "#{a_j = -1} even";
    case CubeConstraint::CrossPolytope: return "{+-g_j}";
    }
    return "?";
}

/// A minuscule weight system rewritten over independent generators
/// g_1..g_m: each point is sum a_j g_j, listed as its coefficient vector.
struct CubeNormalForm {
    RootType type;
    std::size_t rank;
    std::size_t weight_index;
    std::size_t generators;
    CubeConstraint constraint;
    std::vector<std::vector<std::int64_t>> points; // sorted
};

/// Additive normal form of the self-dual classical minuscule modules:
///   A_m (m odd), w_{(m+1)/2} : a in {+-1}^m with sum a in {+-1}
///     (the traceless form with a_{m+1} = -(a_1+...+a_m), over g_j = (e_j - e_{m+1})/2)
///   B_m w_m : all of {+-1}^m
///   C_m w_1, D_m w_1 : {+-g_j}
///   D_m w_{m-1} / w_m : sign vectors with an odd / even number of -1
inline CubeNormalForm cube_normal_form(RootType type, std::size_t m, std::size_t r)
{
    CubeNormalForm nf{type, m, r, m, CubeConstraint::None, {}};
    auto sign_vectors = [&](auto&& accept) {
        if (m > 24) throw RangeError("cube normal form rank too large to enumerate");
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
            std::vector<std::int64_t> a(m);
            for (std::size_t j = 0; j < m; ++j) a[j] = ((mask >> j) & 1) ? -1 : 1;
            if (accept(a)) nf.points.push_back(std::move(a));
        }
    };
    auto minus_count = [](const std::vector<std::int64_t>& a) {
        std::size_t n = 0;
        for (auto x : a) n += x < 0;
        return n;
    };
    switch (type) {
    case RootType::A:
        if (m < 1) throw RangeError("type A requires rank >= 1");
        if (m % 2 == 0)
            throw PreconditionError("A" + std::to_string(m) + ": no self-dual minuscule module (needs r = (m+1)/2 integral)");
        if (r != (m + 1) / 2)
            throw PreconditionError("A" + std::to_string(m) + " w" + std::to_string(r) + " is not self-dual; only w_(m+1)/2 is");
        nf.constraint = CubeConstraint::SumIsPlusMinusOne;
        sign_vectors([](const std::vector<std::int64_t>& a) {
            std::int64_t s = 0;
            for (auto x : a) s += x;
            return s == 1 || s == -1;
        });
        break;
    case RootType::B:
        if (m < 2) throw RangeError("type B requires rank >= 2");
        if (r != m) throw PreconditionError("B" + std::to_string(m) + ": only w_m is minuscule");
        sign_vectors([](const std::vector<std::int64_t>&) { return true; });
        break;
    case RootType::C:
    case RootType::D: {
        const std::size_t min_rank = type == RootType::C ? 2 : 3;
        if (m < min_rank) throw RangeError("type " + to_string(type) + " requires rank >= " + std::to_string(min_rank));
        if (r == 1) {
            nf.constraint = CubeConstraint::CrossPolytope;
            for (std::size_t j = 0; j < m; ++j)
                for (std::int64_t s : {1, -1}) {
                    std::vector<std::int64_t> v(m, 0);
                    v[j] = s;
                    nf.points.push_back(std::move(v));
                }
        } else if (type == RootType::D && (r == m - 1 || r == m)) {
            const std::size_t parity = r == m ? 0 : 1;
            nf.constraint = parity ? CubeConstraint::OddMinusCount : CubeConstraint::EvenMinusCount;
            sign_vectors([&](const std::vector<std::int64_t>& a) { return minus_count(a) % 2 == parity; });
        } else {
            throw PreconditionError(to_string(type) + std::to_string(m) + " w" + std::to_string(r) + " is not minuscule");
        }
        break;
    }
    case RootType::E6:
    case RootType::E7:
        throw PreconditionError("cube normal forms exist only for the classical types");
    }
    std::sort(nf.points.begin(), nf.points.end());
    return nf;
}

/// Every self-dual classical minuscule (type, rank, index) with rank <= the
/// per-family caps, in a fixed order. Used by the collinearity sweeps.
struct CubeFormCaps {
    std::size_t spin_max_rank = 7;       // B w_m, D w_{m-1}, D w_m
    std::size_t a_middle_max_rank = 7;   // odd ranks only
    std::size_t cross_max_rank = 10;     // C w_1, D w_1
};

inline std::vector<CubeNormalForm> classical_cube_forms(const CubeFormCaps& caps)
{
    std::vector<CubeNormalForm> out;
    for (std::size_t m = 1; m <= caps.a_middle_max_rank; m += 2) out.push_back(cube_normal_form(RootType::A, m, (m + 1) / 2));
    for (std::size_t m = 2; m <= caps.spin_max_rank; ++m) out.push_back(cube_normal_form(RootType::B, m, m));
    for (std::size_t m = 2; m <= caps.cross_max_rank; ++m) out.push_back(cube_normal_form(RootType::C, m, 1));
    for (std::size_t m = 3; m <= caps.cross_max_rank; ++m) out.push_back(cube_normal_form(RootType::D, m, 1));
    for (std::size_t m = 3; m <= caps.spin_max_rank; ++m) {
        out.push_back(cube_normal_form(RootType::D, m, m - 1));
        out.push_back(cube_normal_form(RootType::D, m, m));
    }
    return out;
}

/// lambda, lambda - alpha, ..., lambda - m alpha with m = (lambda, alpha^vee) > 0.
struct Progression {
    Weight start;
    Weight root;
    long long length;
    bool present;
};

/// One entry per (distinct lambda, root pair +-alpha) with nonzero pairing,
/// oriented so the pairing is positive. `present` tells whether the whole
/// string lies in omega.
inline std::vector<Progression> saturation_progressions(const WeightSet& omega, const RootSystem& system)
{
    std::vector<Progression> out;
    for (const auto& lambda : omega.elements()) {
        for (const auto& alpha : system.positive_roots()) {
            Rational p = pairing(system, lambda, alpha);
            if (p == 0) continue;
            if (!is_integer(p)) throw PreconditionError(to_string(lambda) + " is not in the weight lattice");
            Weight root = p > 0 ? alpha : -alpha;
            if (p < 0) p = -p;
            const long long m = numerator(p).convert_to<long long>();
            bool present = true;
            Weight cur = lambda;
            for (long long k = 1; k <= m && present; ++k) {
                cur = cur - root;
                present = omega.contains(cur);
            }
            out.push_back({lambda, std::move(root), m, present});
        }
    }
    return out;
}

/// Lexicographically first (d', d, d'') of distinct elements with
/// 2 d = d' + d''. Multiplicities are ignored.
inline std::optional<std::array<Weight, 3>> collinear_triple(const WeightSet& omega)
{
    const auto pts = omega.elements();
    for (const auto& first : pts)
        for (const auto& mid : pts) {
            if (mid == first) continue;
            Weight last = Rational(2) * mid - first;
            if (last != first && omega.contains(last)) return std::array<Weight, 3>{first, mid, std::move(last)};
        }
    return std::nullopt;
}

} // namespace microweight
