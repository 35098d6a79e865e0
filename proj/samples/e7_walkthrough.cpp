// The 56 weights of E7(w7): orbit, one printed reflection chain, and the
// 1/27/27/1 split by the alpha_7 coefficient.

#include <iostream>

#include <microweight/affgeom.hpp>
#include <microweight/e7_tables.hpp>

using namespace microweight;

int main()
{
    const auto& ref = e7_reference();
    const auto& e7 = ref.system;
    std::cout << "W(E7) has order " << weyl_group_order(e7) << ", orbit of w7 has " << ref.weights.size() << " weights\n";

    const auto chain = e7_tables::chains().front();
    Weight x = weight_from_coeffs(e7, {chain.start.begin(), chain.start.end()});
    // The chains run on doubled weights, starting at 2*w7.
    std::cout << "start " << to_string(e7.to_simple_root_coords(x).coeffs) << "\n";
    const Weight e36 = weight_from_coeffs(e7, {e7_tables::kE3PlusE6.begin(), e7_tables::kE3PlusE6.end()});
    for (const int step : chain.steps) {
        x = reflect(e7, step == 0 ? e36 : e7.simple_root(static_cast<std::size_t>(step)), x);
        std::cout << "  S" << (step == 0 ? std::string("_{e3+e6}") : "_a" + std::to_string(step)) << " -> "
                  << to_string(e7.to_simple_root_coords(x).coeffs) << "\n";
    }

    const auto r = separation_partition(e7, ref.weights, ref.omega7);
    std::cout << "levels of x7 on 2*Omega:";
    for (auto it = r.level_counts.rbegin(); it != r.level_counts.rend(); ++it) std::cout << " " << to_string(it->first) << ":" << it->second;
    std::cout << "\ncollinear triples: " << collinear_triple_count(ref.simple_coords) << "\n";

    const auto d = detect_e7_config(ref.simple_coords);
    std::cout << "detect_e7_config on Omega: " << to_string(d.status) << " after " << d.nodes << " nodes\n";
}
