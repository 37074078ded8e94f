// Commutator fibers over every split semisimple class of GL_2(F_5), once
// through characters and once by brute force.

#include <glnq/glnq.hpp>

#include <iostream>

int main()
{
    using namespace glnq;
    const Field& F = *shared_field(5);
    auto cen = census(F, 2);
    std::cout << "GL_2(F_5): " << cen.order << " elements, " << cen.classes.size() << " classes\n";
    for (const auto& c : split_semisimple_classes(F, 2)) {
        auto fr = frobenius_sum(F, c);
        auto brute = fiber_count(cen, c.label(F));
        std::cout << c.label(F).to_string(F) << "  S = " << to_string(fr.total) << "  fiber = " << fr.fiber.get_str()
                  << "  oracle = " << brute << "\n";
    }

    // S(-1) for n = 2 across a few q
    for (long q : {5, 7, 11, 13}) {
        const Field& G = *shared_field(q);
        auto ct = central_total_and_leading(G, 2, G.from_int(-1));
        std::cout << "q = " << q << "  S(-1) = " << to_string(ct.total) << "\n";
    }
}
