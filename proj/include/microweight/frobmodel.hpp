#pragma once

// Frobenius eigenvalue sets modeled in a free abelian exponent lattice.
//
// The multiplicative group generated by the eigenvalues is torsion-free, so
// it is written additively as Z^(1 + d1 + d2) = <lambda> x Gamma_1 x Gamma_2.
// An eigenvalue lambda * d1 * d2 becomes the integer vector (1, d1, d2);
// products become sums, inverses become negation. Half-integral weight data
// (spin modules, E7(w7)) enter the Gamma_1 block scaled by `delta1_scale`.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "affgeom.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace microweight {

using IntVec = std::vector<std::int64_t>;

inline std::string to_string(const IntVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

struct BlockStructure {
    std::size_t d1 = 0;
    std::size_t d2 = 0;
    std::int64_t delta1_scale = 1;

    std::size_t total_dim() const { return 1 + d1 + d2; }

    friend bool operator==(const BlockStructure& a, const BlockStructure& b)
    {
        return a.d1 == b.d1 && a.d2 == b.d2 && a.delta1_scale == b.delta1_scale;
    }
};

/// Point of the exponent lattice; coordinate 0 is the lambda block,
/// [1, 1+d1) the Gamma_1 block, [1+d1, 1+d1+d2) the Gamma_2 block.
struct ExponentPoint {
    IntVec coords;

    friend bool operator==(const ExponentPoint& a, const ExponentPoint& b) { return a.coords == b.coords; }
    friend bool operator!=(const ExponentPoint& a, const ExponentPoint& b) { return !(a == b); }
    friend bool operator<(const ExponentPoint& a, const ExponentPoint& b) { return a.coords < b.coords; }

    friend ExponentPoint operator+(ExponentPoint a, const ExponentPoint& b)
    {
        for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
        return a;
    }
    friend ExponentPoint operator-(ExponentPoint a, const ExponentPoint& b)
    {
        for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
        return a;
    }
    friend ExponentPoint operator-(ExponentPoint a)
    {
        for (auto& x : a.coords) x = -x;
        return a;
    }
};

inline std::string to_string(const ExponentPoint& p) { return to_string(p.coords); }

struct ExponentPointHash {
    std::size_t operator()(const ExponentPoint& p) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto x : p.coords) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
        return h;
    }
};

inline std::int64_t lambda_part(const BlockStructure&, const ExponentPoint& p) { return p.coords.at(0); }

inline IntVec block1(const BlockStructure& s, const ExponentPoint& p)
{
    return IntVec(p.coords.begin() + 1, p.coords.begin() + 1 + static_cast<std::ptrdiff_t>(s.d1));
}

inline IntVec block2(const BlockStructure& s, const ExponentPoint& p)
{
    return IntVec(p.coords.begin() + 1 + static_cast<std::ptrdiff_t>(s.d1), p.coords.end());
}

inline ExponentPoint compose(std::int64_t lambda, const IntVec& d1, const IntVec& d2)
{
    ExponentPoint p;
    p.coords.reserve(1 + d1.size() + d2.size());
    p.coords.push_back(lambda);
    p.coords.insert(p.coords.end(), d1.begin(), d1.end());
    p.coords.insert(p.coords.end(), d2.begin(), d2.end());
    return p;
}

/// The additive lambda: (1, 0, ..., 0).
inline ExponentPoint lambda_unit(const BlockStructure& s)
{
    ExponentPoint p{IntVec(s.total_dim(), 0)};
    p.coords[0] = 1;
    return p;
}

/// Delta = lambda . Delta_1 . Delta_2 as a multiset, with its factors.
struct EigenSet {
    BlockStructure structure;
    std::map<ExponentPoint, std::size_t> elements;
    std::vector<IntVec> delta1;
    std::vector<IntVec> delta2;

    std::size_t total_count() const
    {
        std::size_t n = 0;
        for (const auto& [p, m] : elements) n += m;
        return n;
    }

    std::size_t distinct_count() const { return elements.size(); }

    std::vector<ExponentPoint> support() const
    {
        std::vector<ExponentPoint> out;
        for (const auto& [p, m] : elements) out.push_back(p);
        return out;
    }

    bool contains(const ExponentPoint& p) const { return elements.count(p) != 0; }

    std::size_t multiplicity(const ExponentPoint& p) const
    {
        const auto it = elements.find(p);
        return it == elements.end() ? 0 : it->second;
    }
};

namespace detail {

inline std::size_t common_dim(const std::vector<IntVec>& pts, const char* what)
{
    if (pts.empty()) throw PreconditionError(std::string(what) + " is empty");
    const std::size_t d = pts.front().size();
    for (const auto& p : pts)
        if (p.size() != d) throw std::invalid_argument(std::string(what) + " points have different dimensions");
    return d;
}

} // namespace detail

/// Every lambda-unit + d1 + d2 for d1 in Delta_1, d2 in Delta_2; the factors
/// are taken as given (repeated points give multiplicities).
inline EigenSet build_delta(const std::vector<IntVec>& d1_points, const std::vector<IntVec>& d2_points, std::int64_t delta1_scale = 1)
{
    EigenSet e;
    e.structure.d1 = detail::common_dim(d1_points, "Delta_1");
    e.structure.d2 = detail::common_dim(d2_points, "Delta_2");
    e.structure.delta1_scale = delta1_scale;
    e.delta1 = d1_points;
    e.delta2 = d2_points;
    for (const auto& a : d1_points)
        for (const auto& b : d2_points) ++e.elements[compose(1, a, b)];
    return e;
}

/// S = -S (as sets).
inline bool inverse_closed(const std::vector<IntVec>& points)
{
    const std::set<IntVec> s(points.begin(), points.end());
    for (const auto& p : s) {
        IntVec q = p;
        for (auto& x : q) x = -x;
        if (!s.count(q)) return false;
    }
    return true;
}

inline bool inverse_closed(const std::set<ExponentPoint>& points)
{
    for (const auto& p : points)
        if (!points.count(-p)) return false;
    return true;
}

/// Card(T_eta(Delta) n Delta) with T_eta(d) = eta - d: the number of d in
/// Delta, counted with multiplicity, whose complement eta - d lies in Delta.
inline std::size_t t_eta_count(const EigenSet& delta, const ExponentPoint& eta)
{
    if (eta.coords.size() != delta.structure.total_dim()) throw std::invalid_argument("eta has the wrong dimension");
    std::size_t n = 0;
    for (const auto& [d, m] : delta.elements)
        if (delta.contains(eta - d)) n += m;
    return n;
}

/// t_eta_count for every eta in Delta + Delta, in one pass over pairs.
inline std::map<ExponentPoint, std::size_t> sum_counts(const EigenSet& delta)
{
    std::unordered_map<ExponentPoint, std::size_t, ExponentPointHash> counts;
    counts.reserve(delta.elements.size() * delta.elements.size());
    for (const auto& [p, mp] : delta.elements)
        for (const auto& [q, mq] : delta.elements) counts[p + q] += mp;
    return {counts.begin(), counts.end()};
}

/// Level sets { eta in Delta + Delta : t_eta_count = c }, keyed by c.
inline std::map<std::size_t, std::set<ExponentPoint>> invariant_level_sets(const EigenSet& delta)
{
    std::map<std::size_t, std::set<ExponentPoint>> levels;
    for (const auto& [eta, c] : sum_counts(delta)) levels[c].insert(eta);
    return levels;
}

/// All eta in Delta + Delta reaching the maximal count Card(Delta).
inline std::vector<ExponentPoint> full_count_sums(const EigenSet& delta)
{
    std::vector<ExponentPoint> out;
    const std::size_t n = delta.total_count();
    for (const auto& [eta, c] : sum_counts(delta))
        if (c == n) out.push_back(eta);
    return out;
}

/// lambda^2 recovered from Delta alone: the unique eta with
/// t_eta_count = Card(Delta). Throws StructuralError when there is no such
/// eta, several, or the unique one is not twice the lambda unit (the data
/// then does not decompose as lambda . Delta_1 . Delta_2 with self-inverse
/// factors).
inline ExponentPoint recover_lambda_sq(const EigenSet& delta)
{
    const auto full = full_count_sums(delta);
    if (full.empty()) throw StructuralError("no eta in Delta.Delta reaches Card(Delta)");
    if (full.size() > 1) throw StructuralError(std::to_string(full.size()) + " values of eta reach Card(Delta)");
    const ExponentPoint two_lambda = lambda_unit(delta.structure) + lambda_unit(delta.structure);
    if (full.front() != two_lambda)
        throw StructuralError("the full-count sum " + to_string(full.front()) + " is not 2*lambda; factors are not self-inverse");
    return full.front();
}

/// rho(lambda d1 d2) = lambda d1^{-1} d2^{-1}: identity on the lambda block,
/// negation on both Gamma blocks.
inline ExponentPoint weil_involution(const EigenSet& delta, const ExponentPoint& x)
{
    if (x.coords.size() != delta.structure.total_dim()) throw std::invalid_argument("point has the wrong dimension");
    ExponentPoint y = x;
    for (std::size_t i = 1; i < y.coords.size(); ++i) y.coords[i] = -y.coords[i];
    return y;
}

/// (d', d, d'') with distinct entries and 2 d = d' + d''.
using LineTriple = std::array<ExponentPoint, 3>;

/// Delta^line over the underlying set, both orientations of each triple,
/// sorted.
inline std::vector<LineTriple> line_set(const EigenSet& delta)
{
    std::vector<LineTriple> out;
    const auto pts = delta.support();
    for (const auto& a : pts)
        for (const auto& c : pts) {
            if (a == c) continue;
            ExponentPoint s = a + c;
            bool even = true;
            for (auto& x : s.coords) {
                if (x % 2 != 0) {
                    even = false;
                    break;
                }
                x /= 2;
            }
            if (even && delta.contains(s)) out.push_back({a, s, c});
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// B = { d' - d, d'' - d : (d', d, d'') in Delta^line }.
inline std::set<ExponentPoint> b_set(const std::vector<LineTriple>& lines)
{
    std::set<ExponentPoint> b;
    for (const auto& t : lines) {
        b.insert(t[0] - t[1]);
        b.insert(t[2] - t[1]);
    }
    return b;
}

inline std::set<ExponentPoint> b_set(const EigenSet& delta) { return b_set(line_set(delta)); }

/// Properties of B relevant to the "no nontrivial invariant subset of
/// Delta_1 . Delta_1" statement.
struct InvariantSubsetReport {
    std::set<ExponentPoint> b;
    bool nontrivial = false;         // B non-empty and B != {0}
    bool negation_closed = false;
    bool in_delta1_block = false;    // lambda and Gamma_2 blocks vanish
    bool in_delta1_products = false; // Gamma_1 block lies in Delta_1 + Delta_1
};

inline InvariantSubsetReport block1_invariant_subset(const EigenSet& delta)
{
    InvariantSubsetReport r;
    r.b = b_set(delta);
    r.nontrivial = !r.b.empty() && !(r.b.size() == 1 && std::all_of(r.b.begin()->coords.begin(), r.b.begin()->coords.end(),
                                                                      [](std::int64_t x) { return x == 0; }));
    r.negation_closed = inverse_closed(r.b);
    std::set<IntVec> sums;
    for (const auto& a : delta.delta1)
        for (const auto& c : delta.delta1) {
            IntVec s = a;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += c[i];
            sums.insert(std::move(s));
        }
    r.in_delta1_block = true;
    r.in_delta1_products = true;
    for (const auto& x : r.b) {
        const auto b2 = block2(delta.structure, x);
        if (lambda_part(delta.structure, x) != 0 || std::any_of(b2.begin(), b2.end(), [](std::int64_t v) { return v != 0; }))
            r.in_delta1_block = false;
        if (!sums.count(block1(delta.structure, x))) r.in_delta1_products = false;
    }
    return r;
}

/// Thrown when the Gamma_2 factor itself contains three collinear points.
struct CollinearFactorError : PreconditionError {
    CollinearFactorError(const std::string& what, std::array<IntVec, 3> w) : PreconditionError(what), witness(std::move(w)) {}
    std::array<IntVec, 3> witness;
};

namespace detail {

inline std::vector<Vec> rational_points(const std::vector<IntVec>& pts)
{
    std::vector<Vec> out;
    for (const auto& p : pts) out.push_back(to_rational_vec(p));
    return out;
}

inline IntVec to_int_vec(const Vec& v)
{
    IntVec out;
    for (const auto& x : v) out.push_back(numerator(x).convert_to<std::int64_t>());
    return out;
}

inline void require_delta2_collinear_free(const EigenSet& delta)
{
    const std::set<IntVec> distinct(delta.delta2.begin(), delta.delta2.end());
    const auto conf = Configuration(rational_points({distinct.begin(), distinct.end()}));
    const auto verdict = no_three_collinear(conf);
    if (!verdict.holds) {
        const auto& w = *verdict.witness;
        std::array<IntVec, 3> iw{to_int_vec(w[0]), to_int_vec(w[1]), to_int_vec(w[2])};
        throw CollinearFactorError("Delta_2 contains three collinear points " + to_string(iw[0]) + ", " + to_string(iw[1]) + ", " +
                                       to_string(iw[2]),
                                   iw);
    }
}

} // namespace detail

struct FiberVerdict {
    bool pass = true;
    std::size_t triples_checked = 0;
    std::vector<LineTriple> violations;
    std::map<IntVec, std::size_t> triples_per_fiber; // keyed by the common Gamma_2 block
};

/// Every collinear triple of Delta lies in a single Gamma_2 fiber.
/// Throws CollinearFactorError when Delta_2 has collinear points.
inline FiberVerdict fiber_constancy_check(const EigenSet& delta)
{
    detail::require_delta2_collinear_free(delta);
    FiberVerdict v;
    for (const auto& t : line_set(delta)) {
        ++v.triples_checked;
        const auto a = block2(delta.structure, t[0]);
        if (a == block2(delta.structure, t[1]) && a == block2(delta.structure, t[2]))
            ++v.triples_per_fiber[a];
        else {
            v.pass = false;
            v.violations.push_back(t);
        }
    }
    return v;
}

struct DetectedConfiguration {
    std::vector<ExponentPoint> points;
    std::set<IntVec> delta2_projection;
    bool single_point = false;
    std::set<ExponentPoint> b;      // all differences within the configuration, including 0
    bool b_in_delta1_block = false;
    bool b_negation_closed = false;
    bool b_contains_zero = false;
    std::string origin;             // "fiber" or "section"
};

struct E7FiberVerdict {
    bool pass = true;
    std::size_t sections_examined = 0;
    std::size_t candidate_sets = 0; // distinct 56-point sections handed to detection
    std::vector<DetectedConfiguration> configurations;
};

namespace detail {

/// Integer equations of an affine span of integer points.
struct IntegerSpan {
    IntVec origin;
    std::vector<IntVec> normals;

    bool contains(const IntVec& x) const
    {
        for (const auto& n : normals) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < x.size(); ++i) s += n[i] * (x[i] - origin[i]);
            if (s != 0) return false;
        }
        return true;
    }
};

inline IntegerSpan integer_span(const std::vector<IntVec>& pts)
{
    const auto span = affine_span(rational_points(pts));
    IntegerSpan out{pts.front(), {}};
    for (const auto& n : span.normals) {
        Integer l = 1;
        for (const auto& x : n) l = boost::multiprecision::lcm(l, denominator(x));
        IntVec v;
        for (const auto& x : n) v.push_back((numerator(x) * (l / denominator(x))).convert_to<std::int64_t>());
        out.normals.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

/// For Delta = lambda . Delta_1 . Delta_2 with Delta_1 an (integer-scaled)
/// E7(w7) configuration and Delta_2 collinear-free: searches the canonical
/// Gamma_2 fibers and the 7-dimensional sections spanned by seven points of
/// a fiber's affine basis plus one point outside that fiber; every section
/// D = L n Delta of 56 points goes through detect_e7_config. For each
/// detected configuration the Gamma_2 projection must be a single point and
/// the difference set B must lie in the Gamma_1 block with 0 in B = -B.
///
/// Throws PreconditionError if Delta_1 is not of type E7(w7) or Delta_2 has
/// collinear points, StructuralError if no configuration is detected.
inline E7FiberVerdict e7_fiber_projection_check(const EigenSet& delta)
{
    {
        const std::set<IntVec> d1(delta.delta1.begin(), delta.delta1.end());
        const auto r = detect_e7_config(Configuration(detail::rational_points({d1.begin(), d1.end()})));
        if (!r.found()) throw PreconditionError("Delta_1 is not an E7(w7) configuration: " + r.reason);
    }
    detail::require_delta2_collinear_free(delta);

    const auto pts = delta.support();
    std::vector<IntVec> raw;
    for (const auto& p : pts) raw.push_back(p.coords);

    E7FiberVerdict verdict;
    std::set<std::vector<std::size_t>> seen;

    auto examine = [&](const std::vector<IntVec>& spanning, const std::string& origin) {
        ++verdict.sections_examined;
        const auto span = detail::integer_span(spanning);
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (span.contains(raw[i])) members.push_back(i);
        if (members.size() != 56 || !seen.insert(members).second) return;
        ++verdict.candidate_sets;
        std::vector<Vec> dpts;
        for (auto i : members) dpts.push_back(to_rational_vec(raw[i]));
        const Configuration d(std::move(dpts));
        if (d.affine_dimension() != 7) return;
        if (!detect_e7_config(d).found()) return;

        DetectedConfiguration dc;
        dc.origin = origin;
        for (auto i : members) {
            dc.points.push_back(pts[i]);
            dc.delta2_projection.insert(block2(delta.structure, pts[i]));
        }
        dc.single_point = dc.delta2_projection.size() == 1;
        for (const auto& p : dc.points)
            for (const auto& q : dc.points) dc.b.insert(p - q);
        dc.b_contains_zero = dc.b.count(ExponentPoint{IntVec(delta.structure.total_dim(), 0)}) != 0;
        dc.b_negation_closed = inverse_closed(dc.b);
        dc.b_in_delta1_block = std::all_of(dc.b.begin(), dc.b.end(), [&](const ExponentPoint& x) {
            const auto b2 = block2(delta.structure, x);
            return lambda_part(delta.structure, x) == 0 && std::all_of(b2.begin(), b2.end(), [](std::int64_t v) { return v == 0; });
        });
        if (!(dc.single_point && dc.b_in_delta1_block && dc.b_negation_closed && dc.b_contains_zero)) verdict.pass = false;
        verdict.configurations.push_back(std::move(dc));
    };

    const std::set<IntVec> fibers_keys = [&] {
        std::set<IntVec> k;
        for (const auto& p : pts) k.insert(block2(delta.structure, p));
        return k;
    }();

    for (const auto& key : fibers_keys) {
        std::vector<IntVec> fiber;
        for (const auto& p : pts)
            if (block2(delta.structure, p) == key) fiber.push_back(p.coords);
        examine(fiber, "fiber");

        // Affine basis of the fiber: first point plus independent differences.
        std::vector<Vec> diffs;
        for (std::size_t i = 1; i < fiber.size(); ++i) diffs.push_back(to_rational_vec(fiber[i]) - to_rational_vec(fiber[0]));
        std::vector<IntVec> affine_basis{fiber[0]};
        for (auto i : independent_subset(diffs)) affine_basis.push_back(fiber[i + 1]);

        for (std::size_t drop = 0; drop < affine_basis.size(); ++drop) {
            std::vector<IntVec> base;
            for (std::size_t i = 0; i < affine_basis.size(); ++i)
                if (i != drop) base.push_back(affine_basis[i]);
            for (const auto& p : pts) {
                if (block2(delta.structure, p) == key) continue;
                auto spanning = base;
                spanning.push_back(p.coords);
                examine(spanning, "section");
            }
        }
    }

    if (verdict.configurations.empty()) throw StructuralError("no E7(w7) configuration found in Delta");
    return verdict;
}

} // namespace microweight
