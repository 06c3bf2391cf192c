// Builds D_16, prints its structure and the mu lower bound.

#include <iostream>

#include "powergraph/io.hpp"
#include "powergraph/similarity.hpp"

using namespace powergraph;

int main() {
    PowerGraph d16 = build_dn(16);
    std::cout << "D_16: " << d16.order() << " vertices, " << d16.edge_count() << " edges\n";
    for (const auto& [exp, members] : d16.power_classes()) {
        if (members.size() < 2) continue;
        std::cout << "power clique 2^" << exp << ": {";
        for (std::size_t i = 0; i < members.size(); ++i)
            std::cout << (i ? " " : "") << members[i];
        std::cout << "}\n";
    }

    MuResult mu = mu_exact(d16);
    std::cout << "mu(D_16) = " << mu.value << " (a clique-width lower bound), witness U = {";
    for (std::size_t i = 0; i < mu.witness.size(); ++i)
        std::cout << (i ? " " : "") << mu.witness[i];
    std::cout << "}\n\n";

    std::cout << write_dot(d16.induced({1, 2, 3, 4, 5, 6, 7, 8}));
    return 0;
}
