// Standalone brute-force oracle for the E7(w7) weight configuration.
//
// Deliberately shares no code with the library: the roots are written down
// directly from the Bourbaki description in doubled epsilon coordinates
// (so everything is an integer), the orbit is closed under all 126 root
// reflections, and the geometric counts are plain triple/pair scans.
//
// Output is the frozen fixture data/oracle/e7_omega7_oracle.txt.

#include <array>
#include <cstdio>
#include <set>
#include <vector>

namespace {

using Vec8 = std::array<long long, 8>;

long long dot(const Vec8& a, const Vec8& b)
{
    long long s = 0;
    for (int i = 0; i < 8; ++i) s += a[i] * b[i];
    return s;
}

// Doubled roots: 2*(+-e_i +- e_j) for i<j<=6, 2*(+-(e7-e8)), and
// +-(e7 - e8 + sum_{i<=6} (-1)^nu(i) e_i) with an odd number of minus signs.
std::vector<Vec8> doubled_roots()
{
    std::vector<Vec8> roots;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    Vec8 r{};
                    r[i] = 2 * si;
                    r[j] = 2 * sj;
                    roots.push_back(r);
                }
    for (int s : {1, -1}) {
        Vec8 r{};
        r[6] = 2 * s;
        r[7] = -2 * s;
        roots.push_back(r);
    }
    for (int mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) % 2 != 1) continue;
        for (int s : {1, -1}) {
            Vec8 r{};
            for (int i = 0; i < 6; ++i) r[i] = s * ((mask >> i) & 1 ? -1 : 1);
            r[6] = s;
            r[7] = -s;
            roots.push_back(r);
        }
    }
    return roots;
}

bool collinear(const Vec8& a, const Vec8& b, const Vec8& c)
{
    Vec8 u{}, v{};
    for (int i = 0; i < 8; ++i) {
        u[i] = b[i] - a[i];
        v[i] = c[i] - a[i];
    }
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (u[i] * v[j] - u[j] * v[i] != 0) return false;
    return true;
}

} // namespace

int main()
{
    const auto roots = doubled_roots();

    // 2*w7 = 2*e6 + (e8 - e7)
    Vec8 start{0, 0, 0, 0, 0, 2, -1, 1};
    std::set<Vec8> orbit{start};
    std::vector<Vec8> frontier{start};
    while (!frontier.empty()) {
        std::vector<Vec8> next;
        for (const auto& x : frontier)
            for (const auto& r : roots) {
                // S_a(x) = x - (x,a) a with (a,a) = 2; in doubled coordinates
                // X - ((X.R)/4) R.
                const long long k = dot(x, r) / 4;
                Vec8 y{};
                for (int i = 0; i < 8; ++i) y[i] = x[i] - k * r[i];
                if (orbit.insert(y).second) next.push_back(y);
            }
        frontier.swap(next);
    }

    const std::vector<Vec8> pts(orbit.begin(), orbit.end());
    const std::size_t n = pts.size();

    long long collinear_triples = 0;
    long long midpoint_triples = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!collinear(pts[i], pts[j], pts[k])) continue;
                ++collinear_triples;
                const Vec8* t[3] = {&pts[i], &pts[j], &pts[k]};
                for (int m = 0; m < 3; ++m) {
                    const Vec8& mid = *t[m];
                    const Vec8& a = *t[(m + 1) % 3];
                    const Vec8& b = *t[(m + 2) % 3];
                    bool is_mid = true;
                    for (int c = 0; c < 8; ++c)
                        if (2 * mid[c] != a[c] + b[c]) is_mid = false;
                    if (is_mid) ++midpoint_triples;
                }
            }

    std::set<Vec8> diffs;
    for (const auto& p : pts)
        for (const auto& q : pts) {
            Vec8 d{};
            for (int c = 0; c < 8; ++c) d[c] = p[c] - q[c];
            diffs.insert(d);
        }

    std::printf("# E7(w7) brute-force oracle values\n");
    std::printf("orbit_size %zu\n", n);
    std::printf("root_count %zu\n", roots.size());
    std::printf("collinear_triples %lld\n", collinear_triples);
    std::printf("midpoint_triples %lld\n", midpoint_triples);
    std::printf("distinct_differences_with_zero %zu\n", diffs.size());
    return 0;
}
