#pragma once

// Loop-allowed multigraphs on [r], the G-inversion polynomial and its
// equivalent forms (Tutte specialization, recursive tree form, cumulant form),
// G-parking functions, the abelian sandpile model, set partitions and
// increasing-tree polynomials.

#include "macq/algebra.hpp"
#include "macq/shapes.hpp"

#include <utility>
#include <vector>

namespace macq {

class Multigraph {
public:
    Multigraph() = default;
    /// Edges are unordered pairs of labels in [r]; repeated pairs add
    /// multiplicity and {i,i} is a loop. Root defaults to vertex 1.
    Multigraph(int vertices, const std::vector<std::pair<int, int>>& edges, int root = 1);

    int vertex_count() const { return r_; }
    int root() const { return root_; }
    /// e_{i,j}(G), symmetric.
    int multiplicity(int i, int j) const { return mult_[idx(i, j)]; }
    int loops_at(int i) const { return multiplicity(i, i); }
    int loop_count() const;
    int edge_count() const;
    /// Degree with each loop counted twice.
    int degree(int i) const;
    /// Edges sorted, i <= j, one entry per edge.
    std::vector<std::pair<int, int>> edges() const;
    bool connected() const;

    void add_edge(int i, int j, int count = 1);
    Multigraph with_root(int root) const;
    /// Loops removed and multiplicities collapsed to 1.
    Multigraph simplify() const;
    /// G restricted to the vertices in mask (bit v-1 for vertex v), relabeled
    /// increasingly; root = smallest vertex.
    Multigraph induced(ColorMask vertices) const;
    /// Vertex v becomes perm[v-1]; the root follows its vertex.
    Multigraph relabel(const std::vector<int>& perm) const;

    /// Upper-triangular multiplicity vector; equal keys mean equal graphs.
    const std::vector<int>& key() const { return mult_; }
    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.r_ == b.r_ && a.root_ == b.root_ && a.mult_ == b.mult_;
    }

private:
    std::size_t idx(int i, int j) const;
    int r_ = 0;
    int root_ = 1;
    std::vector<int> mult_;
};

/// Rooted spanning tree: parent[v-1] is the parent label of v, 0 at the root.
struct SpanningTree {
    int root = 1;
    std::vector<int> parent;

    int vertex_count() const { return static_cast<int>(parent.size()); }
    bool is_ancestor(int a, int v) const;  ///< a strictly above v
    std::vector<std::pair<int, int>> edges() const;
};

/// Spanning trees of a simple graph (multiplicities and loops ignored), rooted
/// at g.root(); empty when g is disconnected. Deterministic order.
std::vector<SpanningTree> spanning_trees(const Multigraph& simple);

int kappa_statistic(const SpanningTree& t, const Multigraph& g);

/// q^{#loops} sum_T q^{kappa(T)} prod_{ij in T} [e_ij]_q over spanning trees of
/// the simplified graph; 0 for disconnected g.
MPoly inversion_poly(const Multigraph& g);
/// Trees with kappa(T) = 0 weighted by prod [delta_T(w)]_q.
MPoly inversion_poly_recursive(const Multigraph& g);
/// Alternating set-partition sum of q^{#E|_B}, divided by (q-1)^{#V-1}.
MPoly tutte_cumulant_form(const Multigraph& g);
/// Vertex-deletion recursion started at vertex w (smallest vertex below).
MPoly inversion_poly_by_recursion(const Multigraph& g, int w);

/// T_G(x,y) stored with x in the t slot and y in the q slot.
struct TuttePolynomial {
    MPoly xy;
    MPoly at(const MPoly& x, const MPoly& y) const;
    std::string to_string() const;
};
/// Subgraph expansion; zero polynomial when g is disconnected.
TuttePolynomial tutte(const Multigraph& g);
MPoly tutte_at_1q(const Multigraph& g);
/// Sum of q^{#H} over edge subsets H connecting all vertices.
MPoly connected_subgraph_gen(const Multigraph& g);

/// Values on the non-root vertices, in increasing vertex order.
struct ParkingFunction {
    std::vector<int> values;
    friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;
};
struct SandpileConfig {
    std::vector<int> chips;
    friend auto operator<=>(const SandpileConfig&, const SandpileConfig&) = default;
};

std::vector<int> non_root_vertices(const Multigraph& g);
/// Subset definition of a G-parking function.
bool is_parking_function(const Multigraph& g, const ParkingFunction& f);
/// Throws Disconnected.
std::vector<ParkingFunction> gparking_enumerate(const Multigraph& g);
int parking_weight(const Multigraph& g, const ParkingFunction& f);
MPoly parking_gen(const Multigraph& g);

bool is_stable(const Multigraph& g, const SandpileConfig& u);
/// Burning algorithm from the root.
bool dhar_check(const Multigraph& g, const SandpileConfig& u);
/// Subset form of Dhar's criterion (stability included).
bool is_recurrent_by_subsets(const Multigraph& g, const SandpileConfig& u);
int level(const Multigraph& g, const SandpileConfig& u);
/// Throws Disconnected.
std::vector<SandpileConfig> sandpile_recurrent(const Multigraph& g);
MPoly sandpile_level_gen(const Multigraph& g);
ParkingFunction to_parking(const Multigraph& g, const SandpileConfig& u);

struct SetPartition {
    std::vector<ColorMask> blocks;
    int block_count() const { return static_cast<int>(blocks.size()); }
};
/// Set partitions of the elements of ground (bitmask), restricted growth order.
std::vector<SetPartition> set_partitions(ColorMask ground);
/// Set partitions of [n]; Bell(n) many.
std::vector<SetPartition> set_partitions(int n);

/// (-1)^{k-1} (k-1)! for a partition into k blocks.
long long cumulant_weight(int blocks);

/// kappa_J(u) = sum_pi (-1)^{#pi-1}(#pi-1)! prod_{B in pi} u(B).
template <class T, class F>
T joint_cumulant(ColorMask ground, F&& family) {
    T total(0L);
    for (const SetPartition& pi : set_partitions(ground)) {
        T term(cumulant_weight(pi.block_count()));
        for (ColorMask b : pi.blocks) term = term * family(b);
        total = total + term;
    }
    return total;
}

/// u_J = sum_pi prod_{B in pi} kappa(B).
template <class T, class F>
T moments_from_cumulants(ColorMask ground, F&& cumulant) {
    T total(0L);
    for (const SetPartition& pi : set_partitions(ground)) {
        T term(1L);
        for (ColorMask b : pi.blocks) term = term * cumulant(b);
        total = total + term;
    }
    return total;
}

/// Sum over increasing trees on [n] rooted at 1 of prod_{1<i<=n} [delta_T(i)]_q,
/// delta_T(i) = sum of a_j over the subtree of i. a holds a_2..a_n.
MPoly increasing_tree_poly(const std::vector<int>& a);

} // namespace macq
