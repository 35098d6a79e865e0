// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtime limits are checked alongside correctness.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include <microweight/suites.hpp>

#include "../support/brute.hpp"

using namespace microweight;

namespace {

const std::string kFixtureDir = MW_FIXTURE_DIR;

struct Verdict {
    bool ok = true;
    std::string detail;
    double shared_s = 0; // time spent in a shared report run, charged here
};

Verdict from_report(const suites::SuiteReport& r)
{
    for (const auto& c : r.checks)
        if (c.status != suites::CheckStatus::Pass) return {false, c.id + ": " + c.witness.value_or(suites::to_string(c.status))};
    return {true, std::to_string(r.checks.size()) + " checks"};
}

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Verdict()>& fn)
{
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = fn();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() + v.shared_s;
    if (limit_s > 0 && s >= limit_s) {
        v.ok = false;
        v.detail += "; runtime " + std::to_string(s) + " s exceeds " + std::to_string(limit_s) + " s";
    }
    if (!v.ok) ++failures;
    std::printf("%s %2d %-34s %8.3f s  %s\n", v.ok ? "PASS" : "FAIL", id, name.c_str(), s, v.detail.c_str());
    std::fflush(stdout);
}

const suites::Check* find_check(const suites::SuiteReport& r, const std::string& id)
{
    for (const auto& c : r.checks)
        if (c.id == id) return &c;
    return nullptr;
}

Verdict single_check(const suites::SuiteReport& r, const std::string& id)
{
    const auto* c = find_check(r, id);
    if (!c) return {false, id + " did not run"};
    return {c->status == suites::CheckStatus::Pass, c->witness.value_or(""), c->elapsed_ms / 1000};
}

Integer choose(std::size_t n, std::size_t k)
{
    Integer r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Expected minuscule weights and their dimensions, written out per type.
std::map<std::size_t, Integer> expected_minuscule(RootType t, std::size_t m)
{
    std::map<std::size_t, Integer> out;
    switch (t) {
    case RootType::A:
        for (std::size_t r = 1; r <= m; ++r) out[r] = choose(m + 1, r);
        break;
    case RootType::B: out[m] = Integer(1) << m; break;
    case RootType::C: out[1] = Integer(2 * m); break;
    case RootType::D:
        out[1] = Integer(2 * m);
        out[m - 1] = Integer(1) << (m - 1);
        out[m] = Integer(1) << (m - 1);
        break;
    case RootType::E6:
        out[1] = 27;
        out[6] = 27;
        break;
    case RootType::E7: out[7] = 56; break;
    }
    return out;
}

std::vector<std::pair<RootType, std::size_t>> catalog_systems()
{
    std::vector<std::pair<RootType, std::size_t>> out;
    for (std::size_t m = 1; m <= 7; ++m) out.push_back({RootType::A, m});
    for (std::size_t m = 2; m <= 7; ++m) out.push_back({RootType::B, m});
    for (std::size_t m = 2; m <= 7; ++m) out.push_back({RootType::C, m});
    for (std::size_t m = 4; m <= 7; ++m) out.push_back({RootType::D, m});
    out.push_back({RootType::E6, 6});
    out.push_back({RootType::E7, 7});
    return out;
}

Matrix<Rational> random_unimodular(std::mt19937_64& rng)
{
    return brute::random_invertible(7, rng, true);
}

Configuration apply(const Configuration& s, const Matrix<Rational>& a, const Vec& t)
{
    std::vector<Vec> pts;
    for (const auto& p : s.points()) pts.push_back(a * p + t);
    return Configuration(std::move(pts));
}

Vec random_integer_vec(std::size_t n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> c(-6, 6);
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(c(rng));
    return v;
}

} // namespace

int main()
{
    const auto& ref = e7_reference();
    const auto oracle = io::read_key_values(kFixtureDir + "/oracle/e7_omega7_oracle.txt");

    criterion(1, "E7 orbit size", 5, [&] {
        const auto sys = build_root_system(RootType::E7, 7);
        const auto n = orbit(sys, sys.fundamental_weight(7)).size();
        return Verdict{n == 56, std::to_string(n) + " weights"};
    });

    criterion(2, "fixture equivalence", 5, [&] {
        const auto rows = io::read_fixture(kFixtureDir + "/e7_omega7_doubled.txt", 7);
        return single_check(suites::verify_e7_suite(rows), "e7.fixture_match");
    });

    const auto e7_report = suites::verify_e7_suite(io::read_fixture(kFixtureDir + "/e7_omega7_doubled.txt", 7));

    criterion(3, "reflection spot checks", 0, [&] {
        const auto a = single_check(e7_report, "e7.reflection_table");
        const auto b = single_check(e7_report, "e7.e3e6_images");
        const double t = a.shared_s + b.shared_s;
        if (!a.ok) return Verdict{false, "table: " + a.detail, t};
        if (!b.ok) return Verdict{false, "S_{e3+e6}: " + b.detail, t};
        return Verdict{true, "49 table entries, 7 images", t};
    });

    criterion(4, "separation partition", 30, [&] {
        const auto a = single_check(e7_report, "e7.partition_w7");
        const auto b = single_check(e7_report, "e7.partition_all");
        const double t = a.shared_s + b.shared_s;
        if (!a.ok) return Verdict{false, a.detail, t};
        if (!b.ok) return Verdict{false, "transported: " + b.detail, t};
        return Verdict{true, a.detail + " and 56 transported choices", t};
    });

    criterion(5, "catalog and dimensions", 60, [&] {
        std::size_t entries = 0;
        for (const auto& [t, m] : catalog_systems()) {
            const auto sys = build_root_system(t, m);
            std::map<std::size_t, Integer> got;
            for (const auto& e : minuscule_catalog(t, m)) got[e.weight_index] = e.dimension;
            if (got != expected_minuscule(t, m)) return Verdict{false, sys.label() + " catalog differs"};
            for (const auto& [r, dim] : got) {
                const auto& w = sys.fundamental_weight(r);
                if (!is_minuscule(sys, w)) return Verdict{false, sys.label() + " w" + std::to_string(r) + " is not minuscule"};
                if (Integer(orbit(sys, w).size()) != dim) return Verdict{false, sys.label() + " w" + std::to_string(r) + " orbit size"};
                ++entries;
            }
        }
        return Verdict{true, std::to_string(entries) + " catalog entries"};
    });

    criterion(6, "cube forms: no three collinear", 60, [&] {
        const CubeFormCaps caps{7, 7, 10};
        const auto r = suites::collinearity_suite(caps, 128);
        const auto expected = classical_cube_forms(caps).size();
        if (r.checks.size() != expected)
            return Verdict{false, std::to_string(expected - r.checks.size()) + " forms exceed 128 points and were not checked"};
        return from_report(r);
    });

    criterion(7, "fiber constancy family", 0, [&] {
        const auto family = suites::progression_family(3);
        if (family.size() < 10) return Verdict{false, "family has " + std::to_string(family.size()) + " instances"};
        auto v = from_report(suites::fiber_suite(family));
        if (v.ok) v.detail = std::to_string(family.size()) + " instances";
        return v;
    });

    criterion(8, "lambda^2, involution, top level", 0, [&] {
        auto family = suites::progression_family(3);
        for (auto& inst : suites::cube_cross_family(3)) family.push_back(std::move(inst));
        for (const auto& inst : family) {
            const auto& e = inst.delta;
            const auto two_lambda = lambda_unit(e.structure) + lambda_unit(e.structure);
            if (recover_lambda_sq(e) != two_lambda) return Verdict{false, inst.name + ": lambda^2"};
            for (const auto& [x, m] : e.elements)
                if (x + weil_involution(e, x) != two_lambda) return Verdict{false, inst.name + ": involution at " + to_string(x)};
            const auto levels = invariant_level_sets(e);
            const auto top = levels.rbegin();
            if (top->first != e.total_count() || top->second != std::set<ExponentPoint>{two_lambda})
                return Verdict{false, inst.name + ": top level set"};
        }
        return Verdict{true, std::to_string(family.size()) + " instances"};
    });

    criterion(9, "E7 configuration detection", 120, [&] {
        const auto base = detect_e7_config(ref.simple_coords);
        if (!base.found()) return Verdict{false, "Omega itself: " + base.reason};
        std::mt19937_64 rng(20260101);
        for (int t = 0; t < 20; ++t) {
            const auto a = random_unimodular(rng);
            const auto moved = apply(ref.simple_coords, a, random_integer_vec(7, rng));
            const auto r = detect_e7_config(moved);
            if (!r.found()) return Verdict{false, "image " + std::to_string(t) + ": " + r.reason};
            std::set<Vec> image;
            for (const auto& p : moved.points()) {
                const auto q = (*r.map)(p);
                if (!ref.simple_coords.contains(q)) return Verdict{false, "image " + std::to_string(t) + ": map leaves Omega"};
                image.insert(q);
            }
            if (image.size() != 56) return Verdict{false, "image " + std::to_string(t) + ": map is not a bijection"};
        }
        std::uniform_int_distribution<std::size_t> which(0, 55), coord(0, 6);
        for (int t = 0; t < 20; ++t) {
            auto pts = ref.simple_coords.points();
            pts[which(rng)][coord(rng)] += Rational(1, 2 + t);
            const auto r = detect_e7_config(Configuration(pts));
            if (r.status != DetectionStatus::NotFound)
                return Verdict{false, "perturbation " + std::to_string(t) + ": " + to_string(r.status)};
        }
        return Verdict{true, "Omega, 20 unimodular images, 20 perturbations"};
    });

    criterion(10, "E7 x square: fiber projections", 0, [&] {
        const auto r = suites::e7_fiber_suite(suites::e7_product_instance(), oracle.at("distinct_differences_with_zero"));
        auto v = from_report(r);
        std::size_t configs = 0;
        for (const auto& c : r.checks) configs += c.id.size() > 11 && c.id.substr(c.id.size() - 11) == ".projection";
        if (v.ok && configs != 4) return Verdict{false, std::to_string(configs) + " configurations, expected one per fiber"};
        if (v.ok) v.detail = "4 configurations, single-point projections";
        return v;
    });

    criterion(11, "oracle-backed values", 0, [&] {
        const auto n = collinear_triple_count(ref.simple_coords);
        std::set<Vec> diffs;
        for (const auto& p : ref.simple_coords.points())
            for (const auto& q : ref.simple_coords.points()) diffs.insert(p - q);
        const bool ok = n == oracle.at("collinear_triples") && diffs.size() == oracle.at("distinct_differences_with_zero");
        return Verdict{ok, "collinear " + std::to_string(n) + ", differences " + std::to_string(diffs.size())};
    });

    criterion(12, "property suites", 120, [&] {
        std::mt19937_64 rng(12);
        std::uniform_int_distribution<int> c(-4, 4);
        std::size_t reflections = 0;
        for (const auto& [t, m] : catalog_systems()) {
            const auto sys = build_root_system(t, m);
            for (int k = 0; k < 1000; ++k) {
                Weight w{zero_vec(sys.ambient_dim())};
                for (std::size_t i = 1; i <= m; ++i) w.coords = w.coords + Rational(c(rng)) * sys.fundamental_weight(i).coords;
                for (const auto& a : sys.simple_roots()) {
                    if (reflect(sys, a, reflect(sys, a, w)) != w) return Verdict{false, sys.label() + ": S_a S_a != 1 at " + to_string(w)};
                    ++reflections;
                }
            }
            // Fundamental weights pair integrally with every coroot and
            // dually with the simple coroots.
            for (std::size_t i = 1; i <= m; ++i) {
                for (const auto& a : sys.roots())
                    if (!is_integer(pairing(sys, sys.fundamental_weight(i), a)))
                        return Verdict{false, sys.label() + ": w" + std::to_string(i) + " pairing"};
                for (std::size_t j = 1; j <= m; ++j)
                    if (pairing(sys, sys.fundamental_weight(i), sys.simple_root(j)) != Rational(i == j ? 1 : 0))
                        return Verdict{false, sys.label() + ": <w" + std::to_string(i) + ", a" + std::to_string(j) + "^v>"};
            }
            // Every minuscule orbit is closed under the simple reflections.
            for (const auto& e : minuscule_catalog(t, m)) {
                const auto o = orbit(sys, sys.fundamental_weight(e.weight_index));
                for (const auto& x : o.elements())
                    for (const auto& a : sys.simple_roots())
                        if (!o.contains(reflect(sys, a, x))) return Verdict{false, sys.label() + ": orbit not closed"};
            }
        }
        // Collinear counts under random rational affine maps.
        const std::vector<Configuration> shapes{
            Configuration::from_integer_points(suites::progression_factors()[4].second),
            Configuration::from_integer_points({{-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}, {-2, -1}, {0, -1}, {2, -1}}),
            Configuration::from_integer_points(cube_normal_form(RootType::A, 3, 2).points),
            ref.simple_coords,
        };
        std::size_t maps = 0;
        for (const auto& s : shapes) {
            const auto n = collinear_triple_count(s);
            for (int k = 0; k < 100; ++k, ++maps) {
                const auto a = brute::random_invertible(s.dim(), rng, false);
                const auto moved = apply(s, a, brute::random_vec(s.dim(), rng));
                if (collinear_triple_count(moved) != n) return Verdict{false, "collinear count changed under an affine map"};
            }
        }
        return Verdict{true, std::to_string(reflections) + " reflections, " + std::to_string(maps) + " affine maps"};
    });

    std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
