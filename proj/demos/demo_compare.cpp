// Decides G <=_c H for two small graphs and prints the embedding,
// then shows the long-factor shift construction.

#include <iostream>

#include "powergraph/order.hpp"

using namespace powergraph;

static void show(const EmbeddingMap& map) {
    for (const auto& [from, to] : map.pairs) std::cout << "  " << from << " -> " << to << "\n";
}

int main() {
    PowerGraph g = PowerGraph::from_labels({1, 2, 3, 9});
    PowerGraph h = PowerGraph::from_labels({17, 18, 19, 25, 33, 34, 35});
    const label_t c = 3;

    if (auto witness = leq_c(g, h, c)) {
        std::cout << "G <=_" << c << " H; constructed embedding:\n";
        show(build_embedding_phi(g, h, c, *witness));
    } else {
        std::cout << "incomparable-under-leq_c\n";
    }

    PowerGraph small = build_dn(3);
    PowerGraph host = build_dn(16);
    if (auto map = long_factor_embedding(small, host)) {
        std::cout << "D_3 shifts into a long factor of D_16:\n";
        show(*map);
    }
    return 0;
}
