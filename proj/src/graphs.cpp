#include "macq/graphs.hpp"

#include "macq/error.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace macq {

namespace {

ColorMask bit(int v) { return ColorMask{1} << (v - 1); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

Multigraph::Multigraph(int vertices, const std::vector<std::pair<int, int>>& edges, int root)
    : r_(vertices), root_(root), mult_(static_cast<std::size_t>(vertices * vertices), 0) {
    if (vertices < 1) throw Error(ErrorKind::InvalidInput, "a multigraph needs at least one vertex");
    if (root < 1 || root > vertices) throw Error(ErrorKind::InvalidInput, "root is not a vertex");
    for (auto [i, j] : edges) add_edge(i, j);
}

std::size_t Multigraph::idx(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * r_ + (j - 1));
}

void Multigraph::add_edge(int i, int j, int count) {
    if (i < 1 || j < 1 || i > r_ || j > r_)
        throw Error(ErrorKind::InvalidInput,
                    "edge {" + std::to_string(i) + "," + std::to_string(j) + "} leaves the vertex set");
    mult_[idx(i, j)] += count;
    if (i != j) mult_[idx(j, i)] += count;
}

int Multigraph::loop_count() const {
    int n = 0;
    for (int i = 1; i <= r_; ++i) n += loops_at(i);
    return n;
}

int Multigraph::edge_count() const {
    int n = 0;
    for (int i = 1; i <= r_; ++i)
        for (int j = i; j <= r_; ++j) n += multiplicity(i, j);
    return n;
}

int Multigraph::degree(int i) const {
    int d = 0;
    for (int j = 1; j <= r_; ++j) d += multiplicity(i, j);
    return d + loops_at(i);
}

std::vector<std::pair<int, int>> Multigraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= r_; ++i)
        for (int j = i; j <= r_; ++j)
            for (int k = 0; k < multiplicity(i, j); ++k) out.emplace_back(i, j);
    return out;
}

bool Multigraph::connected() const {
    UnionFind uf(r_);
    int components = r_;
    for (int i = 1; i <= r_; ++i)
        for (int j = i + 1; j <= r_; ++j)
            if (multiplicity(i, j) > 0 && uf.unite(i - 1, j - 1)) --components;
    return components == 1;
}

Multigraph Multigraph::with_root(int root) const {
    if (root < 1 || root > r_) throw Error(ErrorKind::InvalidInput, "root is not a vertex");
    Multigraph g = *this;
    g.root_ = root;
    return g;
}

Multigraph Multigraph::simplify() const {
    Multigraph g(r_, {}, root_);
    for (int i = 1; i <= r_; ++i)
        for (int j = i + 1; j <= r_; ++j)
            if (multiplicity(i, j) > 0) g.add_edge(i, j);
    return g;
}

Multigraph Multigraph::induced(ColorMask vertices) const {
    std::vector<int> keep;
    for (int v = 1; v <= r_; ++v)
        if (vertices & bit(v)) keep.push_back(v);
    if (keep.empty()) throw Error(ErrorKind::InvalidInput, "induced subgraph on no vertices");
    Multigraph g(static_cast<int>(keep.size()), {}, 1);
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a; b < keep.size(); ++b) {
            int m = multiplicity(keep[a], keep[b]);
            if (m > 0) g.add_edge(int(a) + 1, int(b) + 1, m);
        }
    return g;
}

Multigraph Multigraph::relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != r_) throw Error(ErrorKind::InvalidInput, "relabeling has the wrong size");
    Multigraph g(r_, {}, perm[static_cast<std::size_t>(root_ - 1)]);
    for (int i = 1; i <= r_; ++i)
        for (int j = i; j <= r_; ++j) {
            int m = multiplicity(i, j);
            if (m > 0) g.add_edge(perm[std::size_t(i - 1)], perm[std::size_t(j - 1)], m);
        }
    return g;
}

// ---------------------------------------------------------------------------

bool SpanningTree::is_ancestor(int a, int v) const {
    for (int p = parent[std::size_t(v - 1)]; p != 0; p = parent[std::size_t(p - 1)])
        if (p == a) return true;
    return false;
}

std::vector<std::pair<int, int>> SpanningTree::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v <= vertex_count(); ++v) {
        int p = parent[std::size_t(v - 1)];
        if (p != 0) out.emplace_back(std::min(p, v), std::max(p, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SpanningTree> spanning_trees(const Multigraph& simple) {
    const int r = simple.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            if (simple.multiplicity(i, j) > 0) edges.emplace_back(i, j);

    std::vector<SpanningTree> out;
    const std::size_t need = static_cast<std::size_t>(r - 1);
    if (edges.size() < need) return out;

    // (r-1)-subsets of the edge list in lexicographic order
    std::vector<std::size_t> pick(need);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        UnionFind uf(r);
        bool forest = true;
        for (std::size_t k : pick)
            if (!uf.unite(edges[k].first - 1, edges[k].second - 1)) {
                forest = false;
                break;
            }
        if (forest) {
            std::vector<std::vector<int>> adj(static_cast<std::size_t>(r + 1));
            for (std::size_t k : pick) {
                adj[std::size_t(edges[k].first)].push_back(edges[k].second);
                adj[std::size_t(edges[k].second)].push_back(edges[k].first);
            }
            SpanningTree t;
            t.root = simple.root();
            t.parent.assign(static_cast<std::size_t>(r), -1);
            t.parent[std::size_t(t.root - 1)] = 0;
            std::vector<int> stack{t.root};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj[std::size_t(v)])
                    if (t.parent[std::size_t(w - 1)] == -1) {
                        t.parent[std::size_t(w - 1)] = v;
                        stack.push_back(w);
                    }
            }
            out.push_back(std::move(t));
        }
        // advance combination
        std::size_t k = need;
        while (k > 0 && pick[k - 1] == edges.size() - need + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t m = k; m < need; ++m) pick[m] = pick[m - 1] + 1;
    }
    return out;
}

int kappa_statistic(const SpanningTree& t, const Multigraph& g) {
    int kappa = 0;
    const int r = t.vertex_count();
    for (int i = 1; i <= r; ++i) {
        if (i == t.root) continue;
        int p = t.parent[std::size_t(i - 1)];
        for (int j = 1; j < i; ++j) {
            if (j == t.root || !t.is_ancestor(i, j)) continue;
            kappa += g.multiplicity(p, j);
        }
    }
    return kappa;
}

MPoly inversion_poly(const Multigraph& g) {
    if (!g.connected()) return {};
    MPoly total;
    for (const SpanningTree& t : spanning_trees(g.simplify())) {
        MPoly term = MPoly::q(kappa_statistic(t, g));
        for (auto [i, j] : t.edges()) term *= qint(g.multiplicity(i, j));
        total += term;
    }
    return total * MPoly::q(g.loop_count());
}

MPoly inversion_poly_recursive(const Multigraph& g) {
    if (!g.connected()) return {};
    MPoly total;
    const int r = g.vertex_count();
    for (const SpanningTree& t : spanning_trees(g.simplify())) {
        if (kappa_statistic(t, g) != 0) continue;
        MPoly term(1);
        for (int w = 1; w <= r; ++w) {
            if (w == t.root) continue;
            int p = t.parent[std::size_t(w - 1)];
            int delta = g.multiplicity(w, p);
            for (int i = 1; i <= r; ++i)
                if (t.is_ancestor(w, i)) delta += g.multiplicity(i, p);
            term *= qint(delta);
        }
        total += term;
    }
    return total * MPoly::q(g.loop_count());
}

namespace {

int edges_within(const Multigraph& g, ColorMask block) {
    int n = 0;
    for (int i = 1; i <= g.vertex_count(); ++i) {
        if (!(block & bit(i))) continue;
        for (int j = i; j <= g.vertex_count(); ++j)
            if (block & bit(j)) n += g.multiplicity(i, j);
    }
    return n;
}

ColorMask full_mask(int r) { return r >= 32 ? ~ColorMask{0} : (ColorMask{1} << r) - 1; }

} // namespace

MPoly tutte_cumulant_form(const Multigraph& g) {
    const int r = g.vertex_count();
    MPoly numerator = joint_cumulant<MPoly>(full_mask(r), [&](ColorMask b) { return MPoly::q(edges_within(g, b)); });
    return exact_divide(numerator, (MPoly::q() - MPoly(1)).pow(static_cast<unsigned>(r - 1)));
}

MPoly inversion_poly_by_recursion(const Multigraph& g, int w) {
    if (w < 1 || w > g.vertex_count()) throw Error(ErrorKind::InvalidInput, "recursion vertex is not a vertex");
    std::map<ColorMask, MPoly> memo;
    std::function<MPoly(ColorMask, int)> rec = [&](ColorMask set, int pivot) -> MPoly {
        auto it = memo.find(set);
        if (pivot == 0 && it != memo.end()) return it->second;
        int v = pivot != 0 ? pivot : std::countr_zero(set) + 1;
        ColorMask rest = set & ~bit(v);
        MPoly sum;
        if (rest == 0) {
            sum = MPoly(1);
        } else {
            for (const SetPartition& pi : set_partitions(rest)) {
                MPoly term(1);
                for (ColorMask b : pi.blocks) {
                    int d = 0;
                    for (int j = 1; j <= g.vertex_count(); ++j)
                        if (b & bit(j)) d += g.multiplicity(v, j);
                    if (d == 0) {
                        term = MPoly();
                        break;
                    }
                    term *= qint(d) * rec(b, 0);
                    if (term.is_zero()) break;
                }
                sum += term;
            }
        }
        MPoly result = sum * MPoly::q(g.loops_at(v));
        if (pivot == 0) memo.emplace(set, result);
        return result;
    };
    return rec(full_mask(g.vertex_count()), w);
}

MPoly TuttePolynomial::at(const MPoly& x, const MPoly& y) const {
    return evaluate(xy, Assignment{.q = y, .t = x, .u = std::nullopt});
}

std::string TuttePolynomial::to_string() const {
    std::string s = xy.to_string();
    for (char& c : s) {
        if (c == 't') c = 'x';
        else if (c == 'q') c = 'y';
    }
    return s;
}

TuttePolynomial tutte(const Multigraph& g) {
    if (!g.connected()) return {};
    const int r = g.vertex_count();
    auto edges = g.edges();
    const std::size_t m = edges.size();
    // count[c][h]: subsets with c components and h edges
    std::map<std::pair<int, int>, long long> count;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        UnionFind uf(r);
        int components = r;
        int h = 0;
        for (std::size_t k = 0; k < m; ++k)
            if (s & (std::uint64_t{1} << k)) {
                ++h;
                if (uf.unite(edges[k].first - 1, edges[k].second - 1)) --components;
            }
        ++count[{components, h}];
    }
    MPoly x_minus_1 = MPoly::t() - MPoly(1);
    MPoly y_minus_1 = MPoly::q() - MPoly(1);
    TuttePolynomial result;
    for (const auto& [key, n] : count) {
        auto [c, h] = key;
        result.xy += x_minus_1.pow(unsigned(c - 1)) * y_minus_1.pow(unsigned(h - r + c)) * mpz_class(static_cast<long>(n));
    }
    return result;
}

MPoly tutte_at_1q(const Multigraph& g) { return tutte(g).at(MPoly(1), MPoly::q()); }

MPoly connected_subgraph_gen(const Multigraph& g) {
    const int r = g.vertex_count();
    auto edges = g.edges();
    const std::size_t m = edges.size();
    MPoly result;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        UnionFind uf(r);
        int components = r;
        int h = 0;
        for (std::size_t k = 0; k < m; ++k)
            if (s & (std::uint64_t{1} << k)) {
                ++h;
                if (uf.unite(edges[k].first - 1, edges[k].second - 1)) --components;
            }
        if (components == 1) result.add_term(1, Exponent{h, 0, 0});
    }
    return result;
}

// ---------------------------------------------------------------------------

std::vector<int> non_root_vertices(const Multigraph& g) {
    std::vector<int> out;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (v != g.root()) out.push_back(v);
    return out;
}

namespace {

void require_connected(const Multigraph& g) {
    if (!g.connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

/// Edges from i to vertices of the set (loops at i count twice when i is in it).
int edges_into(const Multigraph& g, int i, ColorMask set) {
    int n = 0;
    for (int j = 1; j <= g.vertex_count(); ++j)
        if (set & bit(j)) n += g.multiplicity(i, j) * (i == j ? 2 : 1);
    return n;
}

/// Enumerates value vectors on the non-root vertices with 0 <= v[k] < bound[k].
template <class Fn>
void for_each_bounded(const std::vector<int>& bound, Fn&& fn) {
    for (int b : bound)
        if (b <= 0) return;
    std::vector<int> v(bound.size(), 0);
    while (true) {
        fn(v);
        std::size_t k = v.size();
        while (k > 0) {
            if (++v[k - 1] < bound[k - 1]) break;
            v[k - 1] = 0;
            --k;
        }
        if (k == 0) return;
    }
}

} // namespace

bool is_parking_function(const Multigraph& g, const ParkingFunction& f) {
    auto others = non_root_vertices(g);
    if (f.values.size() != others.size()) throw Error(ErrorKind::InvalidInput, "parking function has the wrong size");
    for (int v : f.values)
        if (v < 0) return false;
    const std::size_t n = others.size();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        ColorMask u = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (s & (std::uint64_t{1} << k)) u |= bit(others[k]);
        bool ok = false;
        for (std::size_t k = 0; k < n && !ok; ++k) {
            if (!(s & (std::uint64_t{1} << k))) continue;
            int i = others[k];
            int outdeg = 0;
            for (int j = 1; j <= g.vertex_count(); ++j)
                if (!(u & bit(j))) outdeg += g.multiplicity(i, j);
            ok = f.values[k] < outdeg;
        }
        if (!ok) return false;
    }
    return true;
}

std::vector<ParkingFunction> gparking_enumerate(const Multigraph& g) {
    require_connected(g);
    auto others = non_root_vertices(g);
    std::vector<int> bound;
    for (int i : others) bound.push_back(g.degree(i) - 2 * g.loops_at(i));
    std::vector<ParkingFunction> out;
    if (others.empty()) return {ParkingFunction{}};
    for_each_bounded(bound, [&](const std::vector<int>& v) {
        ParkingFunction f{v};
        if (is_parking_function(g, f)) out.push_back(std::move(f));
    });
    return out;
}

int parking_weight(const Multigraph& g, const ParkingFunction& f) {
    return g.edge_count() - g.vertex_count() + 1 - std::accumulate(f.values.begin(), f.values.end(), 0);
}

MPoly parking_gen(const Multigraph& g) {
    MPoly p;
    for (const auto& f : gparking_enumerate(g)) p += MPoly::q(parking_weight(g, f));
    return p;
}

bool is_stable(const Multigraph& g, const SandpileConfig& u) {
    auto others = non_root_vertices(g);
    if (u.chips.size() != others.size()) throw Error(ErrorKind::InvalidInput, "configuration has the wrong size");
    for (std::size_t k = 0; k < others.size(); ++k)
        if (u.chips[k] < 0 || u.chips[k] >= g.degree(others[k])) return false;
    return true;
}

bool dhar_check(const Multigraph& g, const SandpileConfig& u) {
    if (!is_stable(g, u)) return false;
    auto others = non_root_vertices(g);
    ColorMask unburnt = 0;
    for (int v : others) unburnt |= bit(v);
    bool progress = true;
    while (unburnt != 0 && progress) {
        progress = false;
        for (std::size_t k = 0; k < others.size(); ++k) {
            int i = others[k];
            if (!(unburnt & bit(i))) continue;
            if (u.chips[k] >= edges_into(g, i, unburnt)) {
                unburnt &= ~bit(i);
                progress = true;
            }
        }
    }
    return unburnt == 0;
}

bool is_recurrent_by_subsets(const Multigraph& g, const SandpileConfig& u) {
    if (!is_stable(g, u)) return false;
    auto others = non_root_vertices(g);
    const std::size_t n = others.size();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        ColorMask set = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (s & (std::uint64_t{1} << k)) set |= bit(others[k]);
        bool ok = false;
        for (std::size_t k = 0; k < n && !ok; ++k)
            if (s & (std::uint64_t{1} << k)) ok = u.chips[k] >= edges_into(g, others[k], set);
        if (!ok) return false;
    }
    return true;
}

int level(const Multigraph& g, const SandpileConfig& u) {
    return std::accumulate(u.chips.begin(), u.chips.end(), 0) + g.degree(g.root()) - g.edge_count();
}

std::vector<SandpileConfig> sandpile_recurrent(const Multigraph& g) {
    require_connected(g);
    auto others = non_root_vertices(g);
    if (others.empty()) return {SandpileConfig{}};
    std::vector<int> bound;
    for (int i : others) bound.push_back(g.degree(i));
    std::vector<SandpileConfig> out;
    for_each_bounded(bound, [&](const std::vector<int>& v) {
        SandpileConfig u{v};
        if (dhar_check(g, u)) out.push_back(std::move(u));
    });
    return out;
}

MPoly sandpile_level_gen(const Multigraph& g) {
    MPoly p;
    for (const auto& u : sandpile_recurrent(g)) p += MPoly::q(level(g, u));
    return p;
}

ParkingFunction to_parking(const Multigraph& g, const SandpileConfig& u) {
    auto others = non_root_vertices(g);
    ParkingFunction f;
    for (std::size_t k = 0; k < others.size(); ++k) f.values.push_back(g.degree(others[k]) - u.chips[k] - 1);
    return f;
}

// ---------------------------------------------------------------------------

std::vector<SetPartition> set_partitions(ColorMask ground) {
    std::vector<int> elems;
    for (int v = 1; v <= 32; ++v)
        if (ground & bit(v)) elems.push_back(v);
    std::vector<SetPartition> out;
    if (elems.empty()) {
        out.push_back({});
        return out;
    }
    // restricted growth strings
    std::vector<int> a(elems.size(), 0);
    std::vector<int> maxima(elems.size(), 0);
    while (true) {
        int blocks = *std::max_element(a.begin(), a.end()) + 1;
        SetPartition pi;
        pi.blocks.assign(static_cast<std::size_t>(blocks), 0);
        for (std::size_t k = 0; k < elems.size(); ++k) pi.blocks[std::size_t(a[k])] |= bit(elems[k]);
        out.push_back(std::move(pi));
        std::size_t k = elems.size() - 1;
        while (k > 0 && a[k] == maxima[k - 1] + 1) --k;
        if (k == 0) break;
        ++a[k];
        for (std::size_t m = k; m < elems.size(); ++m) {
            if (m > k) a[m] = 0;
            maxima[m] = std::max(maxima[m - 1], a[m]);
        }
    }
    return out;
}

std::vector<SetPartition> set_partitions(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "set_partitions needs n >= 1");
    return set_partitions(full_mask(n));
}

long long cumulant_weight(int blocks) {
    long long w = 1;
    for (int k = 2; k < blocks; ++k) w *= k;
    return (blocks % 2 == 1) ? w : -w;
}

MPoly increasing_tree_poly(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size()) + 1;
    auto weight = [&](int v) { return a[std::size_t(v - 2)]; };
    std::vector<int> parent(static_cast<std::size_t>(n + 1), 0);
    MPoly total;
    // parent(i) ranges over 1..i-1 for i = 2..n
    std::function<void(int)> build = [&](int i) {
        if (i > n) {
            std::vector<int> delta(static_cast<std::size_t>(n + 1), 0);
            for (int v = n; v >= 2; --v) {
                delta[std::size_t(v)] += weight(v);
                delta[std::size_t(parent[std::size_t(v)])] += delta[std::size_t(v)];
            }
            MPoly term(1);
            for (int v = 2; v <= n; ++v) term *= qint(delta[std::size_t(v)]);
            total += term;
            return;
        }
        for (int p = 1; p < i; ++p) {
            parent[std::size_t(i)] = p;
            build(i + 1);
        }
    };
    build(2);
    return total;
}

} // namespace macq
