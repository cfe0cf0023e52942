#include "macq/error.hpp"
#include "macq/graphs.hpp"
#include "macq/sweeps.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

using namespace macq;

namespace {

Multigraph k3() { return Multigraph(3, {{1, 2}, {1, 3}, {2, 3}}); }
Multigraph k4() { return Multigraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }
Multigraph parallel(int m) { return Multigraph(2, std::vector<std::pair<int, int>>(std::size_t(m), {1, 2})); }

MPoly P(const char* s) { return MPoly::parse(s); }

} // namespace

TEST_CASE("multigraph basics") {
    Multigraph g(3, {{1, 2}, {1, 2}, {3, 3}, {2, 3}});
    CHECK(g.multiplicity(1, 2) == 2);
    CHECK(g.multiplicity(2, 1) == 2);
    CHECK(g.loops_at(3) == 1);
    CHECK(g.loop_count() == 1);
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(3) == 3);
    CHECK(g.connected());
    CHECK_FALSE(Multigraph(2, {}).connected());
    CHECK(Multigraph(1, {}).connected());
    CHECK_THROWS_AS(Multigraph(2, {{1, 3}}), Error);
}

TEST_CASE("simplify") {
    CHECK(parallel(3).simplify() == Multigraph(2, {{1, 2}}));
    CHECK(Multigraph(2, {{1, 1}, {2, 2}}).simplify() == Multigraph(2, {}));
    CHECK(k3().simplify() == k3());
}

TEST_CASE("spanning trees and kappa") {
    CHECK(spanning_trees(Multigraph(2, {{1, 2}})).size() == 1);
    CHECK(spanning_trees(k3()).size() == 3);
    CHECK(spanning_trees(k4()).size() == 16);
    CHECK(spanning_trees(Multigraph(2, {})).empty());

    SpanningTree star{1, {0, 1, 1}};
    CHECK(kappa_statistic(star, k3()) == 0);
    SpanningTree path{1, {0, 3, 1}};  // 1 - 3 - 2
    CHECK(path.is_ancestor(3, 2));
    CHECK_FALSE(path.is_ancestor(2, 3));
    CHECK(kappa_statistic(path, k3()) == 1);
    CHECK(kappa_statistic(path, Multigraph(3, {{1, 3}, {2, 3}})) == 0);
}

TEST_CASE("inversion polynomial and its equivalent forms") {
    CHECK(inversion_poly(parallel(3)) == P("1 + q + q^2"));
    CHECK(inversion_poly(k3()) == P("2 + q"));
    CHECK(inversion_poly(Multigraph(2, {})).is_zero());
    CHECK(inversion_poly(Multigraph(1, {{1, 1}, {1, 1}})) == P("q^2"));

    CHECK(inversion_poly_recursive(k3()) == P("2 + q"));
    for (int m = 1; m <= 4; ++m) CHECK(inversion_poly_recursive(parallel(m)) == qint(m));

    CHECK(tutte_cumulant_form(Multigraph(2, {{1, 2}})) == MPoly(1));
    CHECK(tutte_cumulant_form(k3()) == P("2 + q"));
    CHECK(tutte_cumulant_form(Multigraph(3, {{1, 2}})).is_zero());

    for (int w = 1; w <= 3; ++w) CHECK(inversion_poly_by_recursion(k3(), w) == P("2 + q"));
}

TEST_CASE("Tutte polynomial") {
    TuttePolynomial t = tutte(k3());
    // x lives in the t slot, y in the q slot
    CHECK(t.xy == P("t^2 + t + q"));
    CHECK(tutte_at_1q(k3()) == P("2 + q"));
    CHECK(tutte(Multigraph(2, {{1, 2}})).xy == MPoly::t());
    CHECK(tutte(k4()).at(MPoly(1), MPoly(1)) == MPoly(16));
    CHECK(tutte(Multigraph(3, {{1, 2}})).xy.is_zero());
}

TEST_CASE("connected subgraph generating function") {
    CHECK(connected_subgraph_gen(Multigraph(2, {{1, 2}})) == MPoly::q());
    CHECK(connected_subgraph_gen(parallel(2)) == P("2*q + q^2"));
    MPoly c = connected_subgraph_gen(k3());
    CHECK(c == P("3*q^2 + q^3"));
    MPoly shifted = evaluate(tutte_at_1q(k3()), {.q = MPoly::q() + MPoly(1), .t = std::nullopt, .u = std::nullopt});
    CHECK(c == MPoly::q(2) * shifted);
}

TEST_CASE("G-parking functions") {
    auto k2 = gparking_enumerate(Multigraph(2, {{1, 2}}));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].values == std::vector<int>{0});
    CHECK(parking_gen(Multigraph(2, {{1, 2}})) == MPoly(1));

    auto fs = gparking_enumerate(k3());
    std::set<std::vector<int>> got;
    for (const auto& f : fs) got.insert(f.values);
    CHECK(got == std::set<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(parking_gen(k3()) == P("2 + q"));
    CHECK(parking_gen(parallel(2)) == P("1 + q"));
    CHECK(gparking_enumerate(parallel(2)).size() == 2);

    try {
        gparking_enumerate(Multigraph(2, {}));
        FAIL("expected Disconnected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Disconnected);
    }
}

TEST_CASE("sandpile recurrent configurations") {
    auto us = sandpile_recurrent(k3());
    std::set<std::vector<int>> got;
    std::multiset<int> levels;
    for (const auto& u : us) {
        got.insert(u.chips);
        levels.insert(level(k3(), u));
        CHECK(dhar_check(k3(), u));
        CHECK(is_recurrent_by_subsets(k3(), u));
    }
    CHECK(got == std::set<std::vector<int>>{{1, 1}, {1, 0}, {0, 1}});
    CHECK(levels == std::multiset<int>{0, 0, 1});
    CHECK(sandpile_level_gen(k3()) == P("2 + q"));
    CHECK_FALSE(dhar_check(k3(), SandpileConfig{{0, 0}}));
    CHECK_FALSE(is_stable(k3(), SandpileConfig{{2, 0}}));

    auto k2 = sandpile_recurrent(Multigraph(2, {{1, 2}}));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].chips == std::vector<int>{0});
    CHECK(sandpile_level_gen(Multigraph(2, {{1, 2}})) == MPoly(1));
    CHECK_THROWS_AS(sandpile_recurrent(Multigraph(3, {{1, 2}})), Error);
}

TEST_CASE("recurrent configurations map onto parking functions") {
    for (const Multigraph& g : multigraphs_up_to(4, 5)) {
        if (!g.connected()) continue;
        std::set<std::vector<int>> parking, image;
        for (const auto& f : gparking_enumerate(g)) parking.insert(f.values);
        for (const auto& u : sandpile_recurrent(g)) {
            CHECK(dhar_check(g, u) == is_recurrent_by_subsets(g, u));
            image.insert(to_parking(g, u).values);
        }
        CHECK(image == parking);
    }
}

TEST_CASE("set partitions") {
    CHECK(set_partitions(1).size() == 1);
    CHECK(set_partitions(3).size() == 5);
    CHECK(set_partitions(4).size() == 15);
    CHECK(set_partitions(6).size() == 203);
    CHECK(set_partitions(ColorMask{0b1010}).size() == 2);
    for (const auto& pi : set_partitions(4)) {
        ColorMask seen = 0;
        for (ColorMask b : pi.blocks) {
            CHECK((seen & b) == 0);
            seen |= b;
        }
        CHECK(seen == 0b1111);
    }
    CHECK(cumulant_weight(1) == 1);
    CHECK(cumulant_weight(3) == 2);
    CHECK(cumulant_weight(4) == -6);
}

TEST_CASE("joint cumulants invert moments") {
    auto u = [](ColorMask b) { return MPoly::q(std::popcount(b)) + MPoly(static_cast<long>(b)); };
    auto kappa = [&](ColorMask b) { return joint_cumulant<MPoly>(b, u); };
    for (ColorMask j : {ColorMask{1}, ColorMask{3}, ColorMask{7}, ColorMask{15}})
        CHECK(moments_from_cumulants<MPoly>(j, kappa) == u(j));
}

TEST_CASE("increasing tree polynomial") {
    CHECK(increasing_tree_poly({}) == MPoly(1));
    CHECK(increasing_tree_poly({1}) == MPoly(1));
    CHECK(increasing_tree_poly({2}) == P("1 + q"));
    CHECK(increasing_tree_poly({1, 1}) == P("2 + q"));
    CHECK(increasing_tree_poly({1, 1}) == inversion_poly(k3()));
    CHECK(increasing_tree_poly({1, 1, 1}) == inversion_poly(k4()));
}

TEST_CASE("relabeling and rerooting leave the invariants unchanged") {
    Multigraph g(4, {{1, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 3}});
    MPoly base = inversion_poly(g);
    std::vector<int> perm{1, 2, 3, 4};
    do {
        Multigraph h = g.relabel(perm);
        CHECK(inversion_poly(h) == base);
        CHECK(parking_gen(h) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int root = 1; root <= 4; ++root) {
        CHECK(inversion_poly(g.with_root(root)) == base);
        CHECK(sandpile_level_gen(g.with_root(root)) == base);
    }
}

TEST_CASE("induced subgraphs") {
    Multigraph g(4, {{1, 2}, {2, 3}, {3, 4}, {4, 4}});
    Multigraph h = g.induced(0b1100);
    CHECK(h.vertex_count() == 2);
    CHECK(h.multiplicity(1, 2) == 1);
    CHECK(h.loops_at(2) == 1);
    CHECK(h.root() == 1);
}
