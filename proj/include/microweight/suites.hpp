#pragma once

// Named verification suites shared by the command-line tool and the
// acceptance runner. Each check is timed and reports exact witnesses.

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "affgeom.hpp"
#include "e7_tables.hpp"
#include "frobmodel.hpp"
#include "io.hpp"
#include "minuscule.hpp"

namespace microweight::suites {

using microweight::to_string;

enum class CheckStatus { Pass, Fail, Inconclusive };

inline std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct Outcome {
    CheckStatus status = CheckStatus::Pass;
    std::optional<std::string> witness;

    static Outcome pass(std::optional<std::string> note = std::nullopt) { return {CheckStatus::Pass, std::move(note)}; }
    static Outcome fail(std::string witness) { return {CheckStatus::Fail, std::move(witness)}; }
    static Outcome expect(bool ok, const std::string& witness) { return ok ? pass() : fail(witness); }
};

struct Check {
    std::string id;
    std::string description;
    CheckStatus status = CheckStatus::Pass;
    std::optional<std::string> witness;
    double elapsed_ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    std::size_t count(CheckStatus s) const
    {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.status == s;
        return n;
    }
    bool ok() const { return count(CheckStatus::Fail) == 0; }

    /// Runs fn, timing it; an exception is a failure with its message as witness.
    void run(std::string id, std::string description, const std::function<Outcome()>& fn)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = Outcome::fail(std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        checks.push_back({std::move(id), std::move(description), o.status, std::move(o.witness), ms});
    }
};

/// Stable schema; elapsed times only on request so that repeated runs are
/// byte-identical.
inline nlohmann::json to_json(const SuiteReport& r, bool timings = false)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json j{{"id", c.id}, {"description", c.description}, {"status", to_string(c.status)}};
        j["witness"] = c.witness ? nlohmann::json(*c.witness) : nlohmann::json(nullptr);
        if (timings) j["elapsed_ms"] = c.elapsed_ms;
        checks.push_back(std::move(j));
    }
    return {{"suite", r.suite},
            {"checks", checks},
            {"summary",
             {{"pass", r.count(CheckStatus::Pass)}, {"fail", r.count(CheckStatus::Fail)}, {"inconclusive", r.count(CheckStatus::Inconclusive)}}}};
}

// ---------------------------------------------------------------------------
// Generated instances

struct Instance {
    std::string name;
    EigenSet delta;
};

/// Delta_1 factors that contain arithmetic progressions.
inline std::vector<std::pair<std::string, std::vector<IntVec>>> progression_factors()
{
    return {
        {"A1-adjoint", {{-1}, {0}, {1}}},
        {"segment-5", {{-2}, {-1}, {0}, {1}, {2}}},
        {"B2-vector", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0, 0}}},
        {"A2-adjoint", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {0, 0}}},
        {"B2-adjoint", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 0}}},
    };
}

inline std::string form_name(const CubeNormalForm& nf)
{
    return to_string(nf.type) + std::to_string(nf.rank) + "-w" + std::to_string(nf.weight_index);
}

/// Cube normal forms that are closed under negation. The odd-rank D spin
/// forms are dual to each other rather than self-dual, so a Delta built on
/// them has no Weil involution and is left out.
inline std::vector<CubeNormalForm> self_dual_cube_forms(std::size_t max_rank)
{
    std::vector<CubeNormalForm> out;
    for (auto& nf : classical_cube_forms({max_rank, max_rank, max_rank}))
        if (inverse_closed(nf.points)) out.push_back(std::move(nf));
    return out;
}

/// Progression-bearing Delta_1 crossed with every self-dual cube normal form
/// of rank at most max_cube_rank. The first instance is A1-adjoint x {+-1}.
inline std::vector<Instance> progression_family(std::size_t max_cube_rank = 3)
{
    std::vector<Instance> out;
    const auto forms = self_dual_cube_forms(max_cube_rank);
    for (const auto& [name, d1] : progression_factors())
        for (const auto& nf : forms) out.push_back({name + " x " + form_name(nf), build_delta(d1, nf.points)});
    return out;
}

/// Every pair of self-dual cube normal forms of rank at most max_rank.
inline std::vector<Instance> cube_cross_family(std::size_t max_rank = 5)
{
    std::vector<Instance> out;
    const auto forms = self_dual_cube_forms(max_rank);
    for (const auto& a : forms)
        for (const auto& b : forms) out.push_back({form_name(a) + " x " + form_name(b), build_delta(a.points, b.points)});
    return out;
}

/// Delta_1 = the doubled E7(w7) weights in simple-root coordinates,
/// Delta_2 = {+-1}^2.
inline EigenSet e7_product_instance()
{
    std::vector<IntVec> d1;
    for (const auto& p : e7_reference().simple_coords.points()) {
        IntVec v;
        for (const auto& x : p) v.push_back(numerator(Rational(2) * x).convert_to<std::int64_t>());
        d1.push_back(std::move(v));
    }
    return build_delta(d1, cube_normal_form(RootType::B, 2, 2).points, 2);
}

// ---------------------------------------------------------------------------
// Suites

inline SuiteReport catalog_suite(RootType type, std::size_t rank, const CatalogOptions& opts = {})
{
    SuiteReport rep{"catalog", {}};
    const auto entries = minuscule_catalog(type, rank, opts);
    const auto sys = build_root_system(type, rank);
    for (const auto& e : entries) {
        const std::string tag = sys.label() + ".w" + std::to_string(e.weight_index);
        rep.run("catalog." + tag + ".minuscule", "w" + std::to_string(e.weight_index) + " passes the minuscule test", [&] {
            return Outcome::expect(is_minuscule(sys, sys.fundamental_weight(e.weight_index)), to_string(sys.fundamental_weight(e.weight_index)));
        });
        if (e.dimension <= 4096)
            rep.run("catalog." + tag + ".dimension", "orbit size equals dim " + e.dimension.str(), [&] {
                const auto n = orbit(sys, sys.fundamental_weight(e.weight_index)).size();
                return Outcome::expect(Integer(n) == e.dimension, "orbit has " + std::to_string(n) + " elements");
            });
    }
    return rep;
}

namespace detail {

inline std::string coeff_string(const e7_tables::Coeffs& c)
{
    return to_string(to_rational_vec(std::vector<std::int64_t>(c.begin(), c.end())));
}

inline Weight e7_weight(const RootSystem& s, const e7_tables::Coeffs& c)
{
    return weight_from_coeffs(s, std::vector<long long>(c.begin(), c.end()));
}

} // namespace detail

/// orbit size, fixture equivalence, printed chains, reflection table,
/// S_{e3+e6} images, separation profile, oracle-backed counts.
inline SuiteReport verify_e7_suite(const std::vector<Vec>& fixture_rows, const std::optional<std::string>& oracle_path = std::nullopt)
{
    SuiteReport rep{"verify-e7", {}};
    const auto& ref = e7_reference();
    const auto& e7 = ref.system;

    rep.run("e7.orbit_size", "W(E7).w7 has 56 elements", [&] {
        const auto n = orbit(e7, e7.fundamental_weight(7)).size();
        return Outcome::expect(n == 56, std::to_string(n) + " elements");
    });

    rep.run("e7.fixture_match", "half the listed weights and their negatives are exactly the orbit", [&] {
        if (fixture_rows.size() != 28) return Outcome::fail("fixture has " + std::to_string(fixture_rows.size()) + " rows, expected 28");
        WeightSet listed;
        for (std::size_t i = 0; i < fixture_rows.size(); ++i) {
            const auto w = Rational(1, 2) * e7.from_simple_root_coords({fixture_rows[i]});
            if (!ref.weights.contains(w))
                return Outcome::fail("row " + std::to_string(i + 1) + " " + to_string(fixture_rows[i]) + ": half of it is not a weight of E(w7)");
            listed.insert(w);
            listed.insert(-w);
        }
        for (const auto& w : ref.weights.elements())
            if (!listed.contains(w))
                return Outcome::fail("weight with doubled coordinates " + to_string(Rational(2) * e7.to_simple_root_coords(w).coeffs) + " is missing");
        if (listed.total_count() != 56) return Outcome::fail("the list meets its own negative");
        return Outcome::pass("56 = 28 * 2");
    });

    rep.run("e7.chains", "every printed reflection chain", [&] {
        const Weight e36 = detail::e7_weight(e7, e7_tables::kE3PlusE6);
        for (const auto& c : e7_tables::chains()) {
            Weight x = detail::e7_weight(e7, c.start);
            for (std::size_t i = 0; i < c.steps.size(); ++i) {
                const Weight& alpha = c.steps[i] == 0 ? e36 : e7.simple_root(static_cast<std::size_t>(c.steps[i]));
                x = reflect(e7, alpha, x);
                if (x != detail::e7_weight(e7, c.values[i]))
                    return Outcome::fail("chain from " + detail::coeff_string(c.start) + " step " + std::to_string(i + 1) + ": got " +
                                         to_string(e7.to_simple_root_coords(x).coeffs) + ", listed " + detail::coeff_string(c.values[i]));
            }
        }
        return Outcome::pass();
    });

    rep.run("e7.reflection_table", "S_{a_i}(a_j) on all 49 entries", [&] {
        const auto table = reflection_matrix_table(e7);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                if (table[i][j] != detail::e7_weight(e7, e7_tables::kReflectionTable[i][j]))
                    return Outcome::fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                                         to_string(e7.to_simple_root_coords(table[i][j]).coeffs));
        return Outcome::pass();
    });

    rep.run("e7.e3e6_images", "S_{e3+e6}(a_i) for i = 1..7", [&] {
        const Weight e36 = detail::e7_weight(e7, e7_tables::kE3PlusE6);
        for (std::size_t i = 0; i < 7; ++i) {
            const auto img = reflect(e7, e36, e7.simple_root(i + 1));
            if (img != detail::e7_weight(e7, e7_tables::kE3PlusE6Images[i]))
                return Outcome::fail("a" + std::to_string(i + 1) + " -> " + to_string(e7.to_simple_root_coords(img).coeffs));
        }
        return Outcome::pass();
    });

    rep.run("e7.partition_w7", "x_7 on the doubled weights has levels {3:1, 1:27, -1:27, -3:1}", [&] {
        const auto r = separation_partition(e7, ref.weights, ref.omega7);
        const std::map<Rational, std::size_t> expected{{-3, 1}, {-1, 27}, {1, 27}, {3, 1}};
        std::string got;
        for (auto it = r.level_counts.rbegin(); it != r.level_counts.rend(); ++it)
            got += (got.empty() ? "" : ", ") + to_fraction_string(it->first) + ":" + std::to_string(it->second);
        return r.level_counts == expected ? Outcome::pass("{" + got + "}") : Outcome::fail("{" + got + "}");
    });

    rep.run("e7.partition_all", "transported functional gives 1/27/27/1 for all 56 weights", [&] {
        for (const auto& w : ref.weights.elements()) {
            const auto r = separation_partition(e7, ref.weights, w);
            std::vector<std::size_t> counts;
            for (const auto& [v, n] : r.level_counts) counts.push_back(n);
            const auto two_w = Rational(2) * e7.to_simple_root_coords(w).coeffs;
            if (counts != std::vector<std::size_t>{1, 27, 27, 1} || dot(r.coefficients, two_w) != r.level_counts.rbegin()->first)
                return Outcome::fail("w = " + to_string(e7.to_simple_root_coords(w).coeffs));
        }
        return Outcome::pass();
    });

    if (oracle_path) {
        const auto frozen = io::read_key_values(*oracle_path);
        rep.run("e7.collinear_oracle", "collinear triple count equals the frozen brute-force value", [&] {
            const auto n = collinear_triple_count(ref.simple_coords);
            return Outcome::expect(frozen.count("collinear_triples") && n == frozen.at("collinear_triples"), std::to_string(n));
        });
        rep.run("e7.differences_oracle", "distinct differences (with 0) equal the frozen brute-force value", [&] {
            std::set<Vec> diffs;
            for (const auto& p : ref.simple_coords.points())
                for (const auto& q : ref.simple_coords.points()) diffs.insert(p - q);
            return Outcome::expect(frozen.count("distinct_differences_with_zero") && diffs.size() == frozen.at("distinct_differences_with_zero"),
                                   std::to_string(diffs.size()));
        });
    }
    return rep;
}

/// No three collinear points in any cube normal form within the caps and
/// the point limit.
inline SuiteReport collinearity_suite(const CubeFormCaps& caps, std::size_t max_points = 128)
{
    SuiteReport rep{"collinearity", {}};
    for (const auto& nf : classical_cube_forms(caps)) {
        if (nf.points.size() > max_points) continue;
        rep.run("collinear." + form_name(nf), std::to_string(nf.points.size()) + " points, no three collinear", [&] {
            const auto v = no_three_collinear(Configuration::from_integer_points(nf.points));
            if (v.holds) return Outcome::pass();
            const auto& w = *v.witness;
            return Outcome::fail(to_string(w[0]) + ", " + to_string(w[1]) + ", " + to_string(w[2]));
        });
    }
    return rep;
}

/// Fiber constancy plus the B-set properties on each instance.
inline SuiteReport fiber_suite(const std::vector<Instance>& family)
{
    SuiteReport rep{"fiber-constancy", {}};
    for (const auto& inst : family) {
        rep.run("fiber." + inst.name, "collinear triples stay inside one Delta_2 fiber", [&] {
            const auto v = fiber_constancy_check(inst.delta);
            if (!v.pass) {
                const auto& t = v.violations.front();
                return Outcome::fail(to_string(t[0]) + ", " + to_string(t[1]) + ", " + to_string(t[2]));
            }
            if (v.triples_checked == 0) return Outcome::fail("no collinear triples; the instance has no progression");
            const auto b = block1_invariant_subset(inst.delta);
            if (!(b.nontrivial && b.negation_closed && b.in_delta1_block && b.in_delta1_products))
                return Outcome::fail("B-set is not a nontrivial negation-closed subset of Delta_1 . Delta_1");
            return Outcome::pass(std::to_string(v.triples_checked) + " ordered triples in " + std::to_string(v.triples_per_fiber.size()) + " fibers");
        });
    }
    return rep;
}

inline SuiteReport e7_fiber_suite(const EigenSet& delta, std::optional<std::uint64_t> expected_b_size = std::nullopt)
{
    SuiteReport rep{"e7-fibers", {}};
    std::optional<E7FiberVerdict> verdict;
    rep.run("e7fibers.search", "E7(w7) configurations inside Delta", [&] {
        verdict = e7_fiber_projection_check(delta);
        return Outcome::pass(std::to_string(verdict->configurations.size()) + " configurations in " + std::to_string(verdict->sections_examined) +
                             " sections");
    });
    if (!verdict) return rep;
    for (std::size_t i = 0; i < verdict->configurations.size(); ++i) {
        const auto& c = verdict->configurations[i];
        const std::string id = "e7fibers.config" + std::to_string(i + 1);
        rep.run(id + ".projection", "Delta_2 projection is a single point", [&] {
            std::string pts;
            for (const auto& p : c.delta2_projection) pts += (pts.empty() ? "" : " ") + to_string(p);
            return c.single_point ? Outcome::pass(pts) : Outcome::fail(pts);
        });
        rep.run(id + ".b_set", "B lies in the Delta_1 block with 0 in B = -B", [&] {
            if (!(c.b_in_delta1_block && c.b_negation_closed && c.b_contains_zero))
                return Outcome::fail("block " + std::to_string(c.b_in_delta1_block) + " closed " + std::to_string(c.b_negation_closed) + " zero " +
                                     std::to_string(c.b_contains_zero));
            if (expected_b_size && c.b.size() != *expected_b_size)
                return Outcome::fail("|B| = " + std::to_string(c.b.size()) + ", expected " + std::to_string(*expected_b_size));
            return Outcome::pass("|B| = " + std::to_string(c.b.size()));
        });
    }
    return rep;
}

} // namespace microweight::suites
