// Finds an explicit common stabilization of the positive trefoil and the
// figure-eight knot and compares it with the H- budget bound.

#include <iostream>

#include "hopfweave/hopfweave.hpp"

int main() {
    using namespace hopfweave;

    const PlumbingTree trefoil = elaborate("T+");
    const PlumbingTree figure_eight = elaborate("E");

    std::cout << "T+: " << invariants(trefoil).alexander << '\n';
    std::cout << "E:  " << invariants(figure_eight).alexander << '\n';

    const EquivalenceVerdict verdict = stable_equivalence(sphere_book(trefoil), sphere_book(figure_eight));
    std::cout << "H- budget: " << *verdict.hminus_budget << '\n';

    SearchConfig cfg;
    cfg.max_moves_per_side = 1;
    const auto cert = common_stabilization(trefoil, figure_eight, cfg);
    if (!cert) {
        std::cout << "no certificate within depth 1\n";
        return 1;
    }
    std::cout << json_io::certificate_to_json(*cert).dump(2) << '\n';
    std::cout << "verified: " << std::boolalpha << verify_certificate(trefoil, figure_eight, *cert) << '\n';
    return 0;
}
