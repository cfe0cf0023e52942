#pragma once

// Input families for the invariant sweeps shared by the CLI and the tests.

#include "macq/graphs.hpp"
#include "macq/macdonald.hpp"

#include <cstdint>
#include <vector>

namespace macq {

/// Ordered tuples of nonempty partitions with 1 <= r <= max_r and total size
/// between 1 and max_n.
std::vector<CumulantProblem> problems_up_to(int max_r, int max_n);

/// Every multigraph (loops allowed) on 1..max_vertices vertices with at most
/// max_edges edges, rooted at 1. Isomorphic copies are all included.
std::vector<Multigraph> multigraphs_up_to(int max_vertices, int max_edges);

/// count random multigraphs with 1..max_vertices vertices and 0..max_edges edges.
std::vector<Multigraph> random_multigraphs(std::size_t count, int max_vertices, int max_edges, std::uint64_t seed);

} // namespace macq
