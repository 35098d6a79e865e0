#pragma once

// Exact affine geometry on finite rational point configurations:
// affine dimension, collinearity scans, cube-coordinate checks, the
// separating-hyperplane partition of the E7(w7) weights, and recognition of
// configurations affinely isomorphic to the E7(w7) weight system.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "minuscule.hpp"
#include "rational.hpp"
#include "rootsystem.hpp"
#include "weylorbit.hpp"

namespace microweight {

/// A finite set of distinct rational points of a common dimension, sorted
/// lexicographically. Affine dimension, barycenter and central symmetry are
/// computed on construction.
class Configuration {
public:
    Configuration() = default;

    explicit Configuration(std::vector<Vec> points) : points_(std::move(points))
    {
        if (!points_.empty()) dim_ = points_.front().size();
        for (const auto& p : points_)
            if (p.size() != dim_) throw std::invalid_argument("configuration points have different dimensions");
        std::sort(points_.begin(), points_.end());
        for (std::size_t i = 1; i < points_.size(); ++i)
            if (points_[i] == points_[i - 1]) throw PreconditionError("duplicate point " + to_string(points_[i]) + " in configuration");
        compute_cache();
    }

    static Configuration from_weights(const WeightSet& ws)
    {
        std::vector<Vec> pts;
        for (const auto& w : ws.elements()) pts.push_back(w.coords);
        return Configuration(std::move(pts));
    }

    static Configuration from_integer_points(const std::vector<std::vector<std::int64_t>>& pts)
    {
        std::vector<Vec> v;
        for (const auto& p : pts) v.push_back(to_rational_vec(p));
        return Configuration(std::move(v));
    }

    const std::vector<Vec>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    std::size_t dim() const { return dim_; }

    /// Index of p in the canonical order, if present.
    std::optional<std::size_t> index_of(const Vec& p) const
    {
        const auto it = std::lower_bound(points_.begin(), points_.end(), p);
        if (it == points_.end() || *it != p) return std::nullopt;
        return static_cast<std::size_t>(it - points_.begin());
    }
    bool contains(const Vec& p) const { return index_of(p).has_value(); }

    std::size_t affine_dimension() const
    {
        if (points_.empty()) throw PreconditionError("affine dimension of an empty configuration");
        return affine_dim_;
    }
    const Vec& barycenter() const { return barycenter_; }
    bool antipodal() const { return antipodal_; }

private:
    void compute_cache()
    {
        if (points_.empty()) return;
        std::vector<Vec> diffs;
        for (std::size_t i = 1; i < points_.size(); ++i) diffs.push_back(points_[i] - points_[0]);
        affine_dim_ = rank_of(diffs);
        barycenter_ = zero_vec(dim_);
        for (const auto& p : points_) barycenter_ = barycenter_ + p;
        barycenter_ = Rational(1, static_cast<long long>(points_.size())) * barycenter_;
        antipodal_ = true;
        for (const auto& p : points_)
            if (!contains(Rational(2) * barycenter_ - p)) {
                antipodal_ = false;
                break;
            }
    }

    std::vector<Vec> points_;
    std::size_t dim_ = 0;
    std::size_t affine_dim_ = 0;
    Vec barycenter_;
    bool antipodal_ = false;
};

inline std::size_t affine_dimension(const Configuration& s) { return s.affine_dimension(); }

/// Affine subspace origin + span(directions), with an equation system
/// normals . (x - origin) = 0 for membership tests.
struct AffineSubspace {
    Vec origin;
    std::vector<Vec> directions;
    std::vector<Vec> normals;

    std::size_t dimension() const { return directions.size(); }

    bool contains(const Vec& x) const
    {
        const Vec d = x - origin;
        for (const auto& n : normals)
            if (dot(n, d) != 0) return false;
        return true;
    }
};

inline AffineSubspace affine_span(const std::vector<Vec>& pts)
{
    if (pts.empty()) throw PreconditionError("affine span of no points");
    AffineSubspace l;
    l.origin = pts.front();
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    for (auto i : independent_subset(diffs)) l.directions.push_back(diffs[i]);
    const std::size_t n = l.origin.size();
    if (l.directions.empty())
        for (std::size_t i = 0; i < n; ++i) l.normals.push_back(unit_vec(n, i));
    else
        l.normals = null_space(Matrix<Rational>::from_rows(l.directions));
    return l;
}

namespace detail {

inline long long int_gcd(long long a, long long b) { return std::gcd(a, b); }
inline Integer int_gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

template <class Int>
Int int_abs(const Int& x)
{
    return x < 0 ? Int(-x) : x;
}

/// Common-denominator integer image of the points (an affine map, so all
/// collinearity questions are unchanged).
inline std::vector<std::vector<Integer>> integer_image(const std::vector<Vec>& pts)
{
    Integer l = 1;
    for (const auto& p : pts)
        for (const auto& x : p) l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<std::vector<Integer>> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        std::vector<Integer> q;
        q.reserve(p.size());
        for (const auto& x : p) q.push_back(numerator(x) * (l / denominator(x)));
        out.push_back(std::move(q));
    }
    return out;
}

struct CollinearScan {
    std::uint64_t count = 0;
    std::optional<std::array<std::size_t, 3>> first; // i < j < k
    std::vector<std::uint64_t> through;              // triples through each point
};

/// Collinear triples are grouped by their smallest index i: the other two
/// points share the primitive direction from p_i.
template <class Int>
CollinearScan scan_collinear(const std::vector<std::vector<Int>>& pts)
{
    CollinearScan scan;
    const std::size_t n = pts.size();
    scan.through.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::map<std::vector<Int>, std::vector<std::size_t>> groups;
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Int> d(pts[i].size());
            Int g = 0;
            for (std::size_t c = 0; c < d.size(); ++c) {
                d[c] = pts[j][c] - pts[i][c];
                g = int_gcd(g, int_abs(d[c]));
            }
            std::size_t lead = 0;
            while (lead < d.size() && d[lead] == 0) ++lead;
            const bool flip = d[lead] < 0;
            for (auto& x : d) {
                x /= g;
                if (flip) x = -x;
            }
            groups[std::move(d)].push_back(j);
        }
        for (const auto& [dir, members] : groups) {
            const std::uint64_t g = members.size();
            if (g < 2) continue;
            scan.count += g * (g - 1) / 2;
            scan.through[i] += g * (g - 1) / 2;
            for (auto j : members) scan.through[j] += g - 1;
            std::array<std::size_t, 3> cand{i, members[0], members[1]};
            if (!scan.first || cand < *scan.first) scan.first = cand;
        }
    }
    return scan;
}

inline CollinearScan scan_collinear(const Configuration& s)
{
    const auto big = integer_image(s.points());
    const Integer limit = Integer(1) << 30;
    bool small = true;
    for (const auto& p : big)
        for (const auto& x : p)
            if (x >= limit || x <= -limit) small = false;
    if (!small) return scan_collinear(big);
    std::vector<std::vector<long long>> pts;
    for (const auto& p : big) {
        std::vector<long long> q;
        for (const auto& x : p) q.push_back(x.convert_to<long long>());
        pts.push_back(std::move(q));
    }
    return scan_collinear(pts);
}

} // namespace detail

inline std::uint64_t collinear_triple_count(const Configuration& s) { return detail::scan_collinear(s).count; }

struct CollinearityVerdict {
    bool holds; // true iff no three distinct points are collinear
    std::optional<std::array<Vec, 3>> witness;
};

/// The witness is the lexicographically first collinear triple in
/// canonical point order.
inline CollinearityVerdict no_three_collinear(const Configuration& s)
{
    const auto scan = detail::scan_collinear(s);
    if (!scan.first) return {true, std::nullopt};
    const auto& [i, j, k] = *scan.first;
    return {false, std::array<Vec, 3>{s.points()[i], s.points()[j], s.points()[k]}};
}

/// True iff every point is origin + sum a_i basis_i with all a_i = +-1.
/// Throws PreconditionError when the basis is dependent.
inline bool is_pm1_in_basis(const Configuration& s, const std::vector<Vec>& basis, const Vec& origin)
{
    if (basis.empty()) throw PreconditionError("empty basis");
    if (rank_of(basis) != basis.size()) throw PreconditionError("basis vectors are linearly dependent");
    const auto b = Matrix<Rational>::from_columns(basis);
    for (const auto& p : s.points()) {
        const auto a = solve(b, p - origin);
        if (!a) return false;
        for (const auto& x : *a)
            if (x != 1 && x != -1) return false;
    }
    return true;
}

/// Basis in which the cross-polytope {+-e_j} has all coordinates +-1: the
/// columns of H^{-1} for the sign matrix H_ij = +1 (i >= j), -1 (i < j),
/// since e_j = sum_i H_ij b_i.
inline std::vector<Vec> cross_polytope_cube_basis(std::size_t m)
{
    Matrix<Rational> h(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) h(i, j) = i >= j ? 1 : -1;
    const auto b = inverse(h);
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < m; ++c) basis.push_back(b.column(c));
    return basis;
}

// ---------------------------------------------------------------------------
// E7(w7) reference data

struct E7Reference {
    RootSystem system;
    Weight omega7;
    WeightSet weights;            // ambient epsilon coordinates
    Configuration simple_coords;  // the same 56 weights in simple-root coordinates
};

inline const E7Reference& e7_reference()
{
    static const E7Reference ref = [] {
        RootSystem sys = build_root_system(RootType::E7, 7);
        Weight w7 = sys.fundamental_weight(7);
        WeightSet ws = orbit(sys, w7);
        std::vector<Vec> pts;
        for (const auto& w : ws.elements()) pts.push_back(sys.to_simple_root_coords(w).coeffs);
        return E7Reference{std::move(sys), std::move(w7), std::move(ws), Configuration(std::move(pts))};
    }();
    return ref;
}

// ---------------------------------------------------------------------------
// Separation partition

/// functional(x) = coefficients . x + constant, with x in simple-root
/// coordinates; level_counts are taken over 2 * weights.
struct SeparationReport {
    Vec coefficients;
    Rational constant = 0;
    std::map<Rational, std::size_t> level_counts;
    Weight w;
};

/// Transports the alpha_7-coefficient functional x -> x_7 along a Weyl
/// element g with g(w7) = w, i.e. returns x -> (g^{-1} x)_7, and tallies
/// its values on the doubled weight system.
inline SeparationReport separation_partition(const RootSystem& system, const WeightSet& weights, const Weight& w)
{
    if (system.type() != RootType::E7) throw PreconditionError("separation_partition needs the E7 root system");
    const auto& ref = e7_reference();
    if (weights != ref.weights) throw PreconditionError("weights are not the E7(w7) weight system");
    if (!weights.contains(w)) throw PreconditionError(to_string(w) + " is not in the E7(w7) weight system");

    std::vector<std::size_t> word;
    for (const auto& p : orbit_with_paths(system, ref.omega7))
        if (p.element == w) {
            word = p.word;
            break;
        }
    auto pull_back = [&](Weight x) {
        // g = s_{word.back()} ... s_{word.front()}, g^{-1} applies word.back() first.
        for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect(system, system.simple_roots()[*it], x);
        return x;
    };

    SeparationReport rep;
    rep.w = w;
    for (const auto& alpha : system.simple_roots()) rep.coefficients.push_back(system.to_simple_root_coords(pull_back(alpha)).coeffs[6]);
    for (const auto& x : weights.elements()) {
        const Vec doubled = Rational(2) * system.to_simple_root_coords(x).coeffs;
        ++rep.level_counts[dot(rep.coefficients, doubled) + rep.constant];
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Recognition of E7(w7) configurations

/// f(x) = linear * x + translation, defined on the affine span of the source
/// configuration (the linear part is composed with an exact left inverse of
/// the span, so it is only meaningful on that span).
struct AffineMap {
    Matrix<Rational> linear;
    Vec translation;

    Vec operator()(const Vec& x) const { return linear * x + translation; }
};

enum class DetectionStatus { Found, NotFound, Inconclusive };

inline std::string to_string(DetectionStatus s)
{
    switch (s) {
    case DetectionStatus::Found: return "found";
    case DetectionStatus::NotFound: return "not-found";
    case DetectionStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct DetectionResult {
    DetectionStatus status = DetectionStatus::NotFound;
    std::optional<AffineMap> map;    // onto the weights in simple-root coordinates
    std::vector<std::size_t> image;  // image[i] = index in e7_reference().simple_coords of f(points[i])
    std::string reason;
    std::uint64_t nodes = 0;

    bool found() const { return status == DetectionStatus::Found; }
};

inline constexpr std::uint64_t kDefaultDetectionNodeCap = 10'000'000;

namespace detail {

/// Centered points written in a basis of the direction space, together with
/// the normalized Gram matrix
///   G[p][q] = u_p^T Q^{-1} u_q,  Q = sum_p u_p u_p^T,
/// which is unchanged by any affine isomorphism of the span.
struct AffineFrame {
    Vec center;
    std::vector<std::size_t> basis_points; // indices whose centered vectors form the basis
    Matrix<Rational> directions;           // ambient x k, columns = centered basis vectors
    Matrix<Rational> left_inverse;         // k x ambient
    std::vector<Vec> coords;               // per point, k coordinates
    std::vector<std::vector<Rational>> gram;
};

inline AffineFrame affine_frame(const Configuration& s)
{
    AffineFrame f;
    f.center = s.barycenter();
    std::vector<Vec> centered;
    for (const auto& p : s.points()) centered.push_back(p - f.center);
    f.basis_points = independent_subset(centered);
    std::vector<Vec> cols;
    for (auto i : f.basis_points) cols.push_back(centered[i]);
    f.directions = Matrix<Rational>::from_columns(cols);
    const auto dt = f.directions.transposed();
    f.left_inverse = inverse(dt * f.directions) * dt;
    const std::size_t k = cols.size();
    Matrix<Rational> q(k, k);
    for (const auto& u : centered) {
        Vec c = f.left_inverse * u;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) q(a, b) += c[a] * c[b];
        f.coords.push_back(std::move(c));
    }
    const auto qinv = inverse(q);
    std::vector<Vec> reduced;
    for (const auto& c : f.coords) reduced.push_back(qinv * c);
    const std::size_t n = s.size();
    f.gram.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) f.gram[i][j] = f.gram[j][i] = dot(f.coords[i], reduced[j]);
    return f;
}

/// Per-point incidence signature: collinear triples through the point and
/// midpoint relations p = (q + r) / 2.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> incidence_signatures(const Configuration& s)
{
    const auto scan = scan_collinear(s);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sig(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        sig[i].first = scan.through[i];
        for (std::size_t q = 0; q < s.size(); ++q) {
            if (q == i) continue;
            const auto r = s.index_of(Rational(2) * s.points()[i] - s.points()[q]);
            if (r && *r > q) ++sig[i].second;
        }
    }
    return sig;
}

struct E7Invariants {
    AffineFrame frame;
    std::uint64_t collinear = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> incidence;
};

inline const E7Invariants& e7_invariants()
{
    static const E7Invariants inv = [] {
        const auto& conf = e7_reference().simple_coords;
        return E7Invariants{affine_frame(conf), collinear_triple_count(conf), incidence_signatures(conf)};
    }();
    return inv;
}

} // namespace detail

/// Looks for an affine isomorphism from the affine span of S onto
/// Q alpha_1 + ... + Q alpha_7 carrying S onto the E7(w7) weights.
///
/// Necessary invariants are checked first (56 points, affine dimension 7,
/// central symmetry, collinear-triple count, incidence signatures). The
/// search then assigns images to an affine basis of S, pruned by the
/// normalized Gram form and the incidence signatures; once the basis is
/// placed the map is forced and every remaining point is checked. Returns
/// the first map in canonical order. The stabilizer of the weights is not
/// enumerated: any two answers differ by an element of it.
inline DetectionResult detect_e7_config(const Configuration& s, std::uint64_t node_cap = kDefaultDetectionNodeCap)
{
    DetectionResult res;
    const auto& target = e7_reference().simple_coords;
    const auto& inv = detail::e7_invariants();

    if (s.size() != target.size()) {
        res.reason = "size " + std::to_string(s.size()) + " != 56";
        return res;
    }
    if (s.affine_dimension() != 7) {
        res.reason = "affine dimension " + std::to_string(s.affine_dimension()) + " != 7";
        return res;
    }
    if (!s.antipodal()) {
        res.reason = "not centrally symmetric about its barycenter";
        return res;
    }
    auto incidence = detail::incidence_signatures(s);
    {
        std::uint64_t total = 0;
        for (const auto& [c, m] : incidence) total += c;
        if (total / 3 != inv.collinear) {
            res.reason = "collinear triple count " + std::to_string(total / 3) + " != " + std::to_string(inv.collinear);
            return res;
        }
        auto a = incidence, b = inv.incidence;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            res.reason = "incidence signatures differ";
            return res;
        }
    }

    const auto frame = detail::affine_frame(s);
    const auto& tframe = inv.frame;
    const std::size_t n = s.size();

    // Gram values -> small ids shared by both configurations.
    std::map<Rational, int> ids;
    for (const auto& row : tframe.gram)
        for (const auto& v : row) ids.emplace(v, static_cast<int>(ids.size()));
    std::vector<std::vector<int>> gs(n, std::vector<int>(n)), gt(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            gt[i][j] = ids.at(tframe.gram[i][j]);
            const auto it = ids.find(frame.gram[i][j]);
            if (it == ids.end()) {
                res.reason = "normalized Gram value " + to_string(frame.gram[i][j]) + " does not occur in E7(w7)";
                return res;
            }
            gs[i][j] = it->second;
        }
    auto signature = [&](const std::vector<std::vector<int>>& g, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& inc,
                         std::size_t i) {
        std::vector<std::uint64_t> sig(g[i].begin(), g[i].end());
        std::sort(sig.begin(), sig.end());
        sig.push_back(inc[i].first);
        sig.push_back(inc[i].second);
        return sig;
    };
    std::vector<std::vector<std::uint64_t>> sig_s, sig_t;
    for (std::size_t i = 0; i < n; ++i) {
        sig_s.push_back(signature(gs, incidence, i));
        sig_t.push_back(signature(gt, inv.incidence, i));
    }
    {
        auto a = sig_s, b = sig_t;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            res.reason = "normalized Gram signatures differ";
            return res;
        }
    }

    const auto& basis = frame.basis_points;
    const std::size_t k = basis.size();
    std::vector<std::size_t> chosen(k);
    std::vector<bool> used(n, false);
    bool inconclusive = false;

    // Forced completion once the basis images are fixed.
    auto complete = [&]() -> bool {
        std::vector<Vec> image_dirs;
        for (std::size_t a = 0; a < k; ++a) image_dirs.push_back(target.points()[chosen[a]] - tframe.center);
        const auto lin = Matrix<Rational>::from_columns(image_dirs);
        std::vector<std::size_t> image(n);
        std::vector<bool> hit(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            const Vec y = lin * frame.coords[i] + tframe.center;
            const auto idx = target.index_of(y);
            if (!idx || hit[*idx]) return false;
            hit[*idx] = true;
            image[i] = *idx;
        }
        AffineMap f;
        f.linear = lin * frame.left_inverse;
        f.translation = tframe.center - f.linear * frame.center;
        res.map = std::move(f);
        res.image = std::move(image);
        return true;
    };

    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == k) return complete();
        const std::size_t p = basis[depth];
        for (std::size_t t = 0; t < n; ++t) {
            if (used[t] || sig_t[t] != sig_s[p]) continue;
            bool ok = true;
            for (std::size_t a = 0; a < depth && ok; ++a) ok = gt[t][chosen[a]] == gs[p][basis[a]];
            if (!ok) continue;
            if (++res.nodes > node_cap) {
                inconclusive = true;
                return false;
            }
            used[t] = true;
            chosen[depth] = t;
            if (self(self, depth + 1)) return true;
            used[t] = false;
            if (inconclusive) return false;
        }
        return false;
    };

    if (dfs(dfs, 0)) {
        res.status = DetectionStatus::Found;
        res.reason = "affine isomorphism found";
    } else if (inconclusive) {
        res.status = DetectionStatus::Inconclusive;
        res.reason = "node cap " + std::to_string(node_cap) + " reached";
    } else {
        res.reason = "no assignment of an affine basis extends to the whole configuration";
    }
    return res;
}

} // namespace microweight
