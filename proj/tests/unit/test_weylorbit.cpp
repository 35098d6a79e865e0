#include <algorithm>
#include <gtest/gtest.h>

#include <set>

#include <microweight/e7_tables.hpp>
#include <microweight/io.hpp>
#include <microweight/weylorbit.hpp>

#include "../support/brute.hpp"

using namespace microweight;

namespace {

Weight from_coeffs(const RootSystem& s, const e7_tables::Coeffs& c)
{
    return weight_from_coeffs(s, std::vector<long long>(c.begin(), c.end()));
}

Weight half_weight(const RootSystem& s, const e7_tables::Coeffs& c) { return Rational(1, 2) * from_coeffs(s, c); }

} // namespace

TEST(Orbit, E7Omega7Has56Elements)
{
    const auto e7 = build_root_system(RootType::E7, 7);
    const auto o = orbit(e7, e7.fundamental_weight(7));
    EXPECT_EQ(o.size(), 56u);
    EXPECT_EQ(o.total_count(), 56u);
}

TEST(Orbit, ZeroIsFixed)
{
    const auto d4 = build_root_system(RootType::D, 4);
    const auto o = orbit(d4, Weight{zero_vec(4)});
    EXPECT_EQ(o.size(), 1u);
    EXPECT_TRUE(o.contains(Weight{zero_vec(4)}));
}

TEST(Orbit, A2Omega1MatchesBruteForce)
{
    const auto a2 = build_root_system(RootType::A, 2);
    const auto w = a2.fundamental_weight(1);
    const auto o = orbit(a2, w);
    EXPECT_EQ(o.size(), 3u);
    const auto by_group = brute::orbit_by_group(a2, w.coords);
    ASSERT_EQ(by_group.size(), 3u);
    for (const auto& x : by_group) EXPECT_TRUE(o.contains(Weight{x}));
}

TEST(Orbit, CapIsEnforced)
{
    const auto e7 = build_root_system(RootType::E7, 7);
    EXPECT_THROW(orbit(e7, e7.fundamental_weight(7), 10), RangeError);
}

TEST(Orbit, PathsCarryTheSeedOntoEachElement)
{
    const auto e7 = build_root_system(RootType::E7, 7);
    const auto seed = e7.fundamental_weight(7);
    for (const auto& p : orbit_with_paths(e7, seed)) {
        Weight x = seed;
        for (auto i : p.word) x = reflect(e7, e7.simple_roots()[i], x);
        EXPECT_EQ(x, p.element);
    }
}

TEST(ApplyChain, HandChains)
{
    const auto e7 = build_root_system(RootType::E7, 7);
    const Weight e36{[] {
        Vec v = zero_vec(8);
        v[2] = v[5] = 1;
        return v;
    }()};
    const auto two_w7 = from_coeffs(e7, e7_tables::kTwoOmega7);
    const auto steps = apply_chain(e7, {{e36, e7.simple_root(1)}}, two_w7);
    ASSERT_EQ(steps.size(), 3u);
    EXPECT_EQ(steps[0], two_w7);
    EXPECT_EQ(steps[1], from_coeffs(e7, {2, 1, 2, 2, 3, 2, 1}));
    EXPECT_EQ(steps[2], from_coeffs(e7, {0, 1, 2, 2, 3, 2, 1}));

    EXPECT_EQ(apply_chain(e7, {}, two_w7), std::vector<Weight>{two_w7});

    const auto last = apply_chain(e7, {{e7.simple_root(7)}}, from_coeffs(e7, {0, 1, 0, 0, 1, 0, 1}));
    EXPECT_EQ(last.back(), from_coeffs(e7, {0, 1, 0, 0, 1, 0, -1}));

    EXPECT_THROW(apply_chain(e7, {{two_w7}}, two_w7), NotARootError);
}

TEST(ApplyChain, EveryPrintedChain)
{
    const auto e7 = build_root_system(RootType::E7, 7);
    const Weight e36 = from_coeffs(e7, e7_tables::kE3PlusE6);
    for (const auto& c : e7_tables::chains()) {
        ReflectionChain chain;
        for (int k : c.steps) chain.steps.push_back(k == 0 ? e36 : e7.simple_root(static_cast<std::size_t>(k)));
        const auto got = apply_chain(e7, chain, from_coeffs(e7, c.start));
        ASSERT_EQ(got.size(), c.values.size() + 1);
        for (std::size_t i = 0; i < c.values.size(); ++i) EXPECT_EQ(got[i + 1], from_coeffs(e7, c.values[i]));
    }
}

TEST(Fixture, ChainsCoverTheTranscribedListUpToSign)
{
    const auto rows = io::read_fixture(std::string(MW_FIXTURE_DIR) + "/e7_omega7_doubled.txt", 7);
    ASSERT_EQ(rows.size(), 28u);
    // The list only matters up to sign; two chain ends (-a2+a5+2a6+a7 and
    // -a2+a5+a7) are listed as their negatives.
    auto canon = [](const Vec& v) { return std::max(v, -v); };
    std::set<Vec> listed, from_chains, exact;
    for (const auto& r : rows) listed.insert(canon(r));
    std::size_t flipped = 0;
    for (const auto& c : e7_tables::chains()) {
        std::vector<e7_tables::Coeffs> all{c.start};
        all.insert(all.end(), c.values.begin(), c.values.end());
        for (const auto& v : all) {
            const auto x = to_rational_vec(std::vector<std::int64_t>(v.begin(), v.end()));
            from_chains.insert(canon(x));
            if (exact.insert(x).second && std::find(rows.begin(), rows.end(), x) == rows.end()) ++flipped;
        }
    }
    EXPECT_EQ(listed.size(), 28u);
    EXPECT_EQ(from_chains, listed);
    EXPECT_EQ(flipped, 2u);
}

TEST(Fixture, HalfListAndItsNegationEqualTheOrbit)
{
    const auto e7 = build_root_system(RootType::E7, 7);
    const auto rows = io::read_fixture(std::string(MW_FIXTURE_DIR) + "/e7_omega7_doubled.txt", 7);
    WeightSet from_list;
    for (const auto& r : rows) {
        const auto w = Rational(1, 2) * e7.from_simple_root_coords({r});
        from_list.insert(w);
        from_list.insert(-w);
    }
    EXPECT_EQ(from_list.total_count(), 56u); // no overlap between the list and its negation
    EXPECT_EQ(from_list, orbit(e7, e7.fundamental_weight(7)));
}

TEST(FundamentalWeight, Examples)
{
    const auto e7 = build_root_system(RootType::E7, 7);
    Vec w7 = zero_vec(8);
    w7[5] = 1;
    w7[7] = Rational(1, 2);
    w7[6] = Rational(-1, 2);
    EXPECT_EQ(fundamental_weight(e7, 7).coords, w7);
    EXPECT_EQ(half_weight(e7, e7_tables::kTwoOmega7), fundamental_weight(e7, 7));

    for (std::size_t m = 2; m <= 6; ++m) {
        const auto c = build_root_system(RootType::C, m);
        EXPECT_EQ(fundamental_weight(c, 1).coords, unit_vec(m, 0));
        const auto b = build_root_system(RootType::B, m);
        EXPECT_EQ(fundamental_weight(b, m).coords, Vec(m, Rational(1, 2)));
    }
    EXPECT_THROW(fundamental_weight(e7, 8), RangeError);
}

TEST(Properties, OrbitClosureSizeAndNorm)
{
    const std::vector<std::pair<RootType, std::size_t>> systems{
        {RootType::A, 3}, {RootType::A, 5}, {RootType::B, 4}, {RootType::C, 4}, {RootType::D, 5}, {RootType::E6, 6}, {RootType::E7, 7}};
    for (const auto& [t, m] : systems) {
        const auto s = build_root_system(t, m);
        const auto order = weyl_group_order(s);
        for (std::size_t i = 1; i <= m; ++i) {
            const auto w = s.fundamental_weight(i);
            const auto o = orbit(s, w);
            if (o.size() > 2000) continue;
            EXPECT_EQ(order % o.size(), 0) << s.label() << " w" << i;
            const auto norm = dot(w.coords, w.coords);
            for (const auto& x : o.elements()) {
                EXPECT_EQ(dot(x.coords, x.coords), norm);
                for (const auto& a : s.simple_roots()) ASSERT_TRUE(o.contains(reflect(s, a, x))) << s.label();
            }
        }
    }
}

TEST(Properties, E7OrbitIsAntipodal)
{
    const auto e7 = build_root_system(RootType::E7, 7);
    const auto o = orbit(e7, e7.fundamental_weight(7));
    for (const auto& x : o.elements()) EXPECT_TRUE(o.contains(-x));
}

TEST(WeightSet, MultiplicitiesAndDimensionCheck)
{
    WeightSet s;
    s.insert(Weight{to_rational_vec({1, 0})});
    s.insert(Weight{to_rational_vec({1, 0})}, 2);
    s.insert(Weight{to_rational_vec({0, 1})});
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.total_count(), 4u);
    EXPECT_EQ(s.multiplicity(Weight{to_rational_vec({1, 0})}), 3u);
    EXPECT_THROW(s.insert(Weight{to_rational_vec({1, 0, 0})}), std::invalid_argument);
    EXPECT_EQ(s.elements().front().coords, to_rational_vec({0, 1})); // lexicographic
}
