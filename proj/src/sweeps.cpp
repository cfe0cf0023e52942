#include "macq/sweeps.hpp"

#include <functional>
#include <random>

namespace macq {

std::vector<CumulantProblem> problems_up_to(int max_r, int max_n) {
    std::vector<CumulantProblem> out;
    std::vector<Partition> current;
    std::function<void(int)> extend = [&](int budget) {
        if (!current.empty()) out.emplace_back(current);
        if (static_cast<int>(current.size()) == max_r) return;
        for (int k = 1; k <= budget; ++k)
            for (const Partition& p : partitions_of(k)) {
                current.push_back(p);
                extend(budget - k);
                current.pop_back();
            }
    };
    extend(max_n);
    return out;
}

std::vector<Multigraph> multigraphs_up_to(int max_vertices, int max_edges) {
    std::vector<Multigraph> out;
    for (int r = 1; r <= max_vertices; ++r) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 1; i <= r; ++i)
            for (int j = i; j <= r; ++j) slots.emplace_back(i, j);
        std::vector<std::pair<int, int>> edges;
        // multisets of slots, nondecreasing slot index
        std::function<void(std::size_t)> grow = [&](std::size_t from) {
            out.emplace_back(r, edges);
            if (static_cast<int>(edges.size()) == max_edges) return;
            for (std::size_t s = from; s < slots.size(); ++s) {
                edges.push_back(slots[s]);
                grow(s);
                edges.pop_back();
            }
        };
        grow(0);
    }
    return out;
}

std::vector<Multigraph> random_multigraphs(std::size_t count, int max_vertices, int max_edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Multigraph> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        int r = std::uniform_int_distribution<int>(1, max_vertices)(rng);
        int m = std::uniform_int_distribution<int>(0, max_edges)(rng);
        std::uniform_int_distribution<int> vertex(1, r);
        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < m; ++e) edges.emplace_back(vertex(rng), vertex(rng));
        out.emplace_back(r, edges);
    }
    return out;
}

} // namespace macq
