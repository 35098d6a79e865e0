// Exponent model for Delta = Delta_1 x Delta_2: recover lambda^2 from the
// T_eta counts, then look at the collinear triples and their fibers.

#include <iostream>

#include <microweight/frobmodel.hpp>
#include <microweight/minuscule.hpp>

using namespace microweight;

int main()
{
    // A1 adjoint weights (a progression) against the B2 spin square.
    const auto delta = build_delta({{-1}, {0}, {1}}, cube_normal_form(RootType::B, 2, 2).points);
    std::cout << "|Delta| = " << delta.total_count() << "\n";
    std::cout << "lambda^2 = " << to_string(recover_lambda_sq(delta)) << "\n";

    for (const auto& [count, points] : invariant_level_sets(delta)) std::cout << "  level " << count << ": " << points.size() << " sums\n";

    const auto lines = line_set(delta);
    std::cout << lines.size() << " ordered collinear triples, B = {";
    for (const auto& b : b_set(lines)) std::cout << " " << to_string(b);
    std::cout << " }\n";

    const auto v = fiber_constancy_check(delta);
    std::cout << "fiber constancy: " << (v.pass ? "holds" : "fails") << " over " << v.triples_per_fiber.size() << " fibers\n";
}
