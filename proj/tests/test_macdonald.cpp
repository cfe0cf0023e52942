#include "macq/error.hpp"
#include "macq/macdonald.hpp"

#include <doctest.h>

using namespace macq;

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }
SymFunc m(const Partition& p, MPoly c = MPoly(1)) { return SymFunc::basis_element(Basis::m, p, c); }
SymFunc s(const Partition& p, MPoly c = MPoly(1)) { return SymFunc::basis_element(Basis::s, p, c); }

CumulantProblem problem(std::vector<Partition> ps) { return CumulantProblem(std::move(ps)); }

MPoly at_t0(const MPoly& p) { return evaluate(p, {.q = std::nullopt, .t = MPoly(0), .u = std::nullopt}); }

} // namespace

TEST_CASE("problem parsing") {
    CumulantProblem p = CumulantProblem::parse("2,1;1");
    CHECK(p.r() == 2);
    CHECK(p.n() == 4);
    CHECK(p.to_string() == "[2,1];[1]");
    CHECK(p.colored().shape() == Partition{3, 1});
    CHECK(p.all_colors() == 3);
    CHECK_THROWS_AS(CumulantProblem::parse(""), Error);
    CHECK_THROWS_AS(CumulantProblem::parse("1,2"), Error);
    CHECK_THROWS_AS(CumulantProblem::parse("1;;1"), Error);
    CHECK_THROWS_AS(CumulantProblem::parse("a"), Error);
}

TEST_CASE("Haglund formula") {
    CHECK(haglund(Partition{1}) == m({1}));
    CHECK(haglund(Partition{2}) == m({2}) + m({1, 1}, P("1 + q")));
    CHECK(haglund(Partition{1, 1}) == m({2}) + m({1, 1}, P("1 + t")));
    CHECK(to_schur(haglund(Partition{2})) == s({2}) + s({1, 1}, MPoly::q()));
    CHECK(to_schur(haglund(Partition{1, 1})) == s({2}) + s({1, 1}, MPoly::t()));
    CHECK(to_schur(haglund(Partition{2, 1})) ==
          s({3}) + s({2, 1}, P("q + t")) + s({1, 1, 1}, P("t*q")));
}

TEST_CASE("graphs of fillings") {
    CumulantProblem single = problem({Partition{3}});
    Filling f(Partition{3}, {{3, 1, 2}});
    Multigraph g = build_graph(single, f);
    CHECK(g.vertex_count() == 1);
    CHECK(g.loops_at(1) == inv(f));

    CumulantProblem two = problem({Partition{1}, Partition{1}});
    Multigraph e = build_graph(two, Filling(Partition{2}, {{2, 1}}));
    CHECK(e == Multigraph(2, {{1, 2}}));
    CHECK(build_graph(two, Filling(Partition{2}, {{1, 2}})).edge_count() == 0);
}

TEST_CASE("graph of the worked example") {
    CumulantProblem p = problem({Partition{4, 4, 3, 3, 2}, Partition{3, 3, 2, 2, 1}, Partition{4, 3, 3, 2, 1}});
    std::map<ColorMask, Filling> parts{
        {1, Filling({4, 4, 3, 3, 2}, {{1, 2, 2, 11}, {2, 4, 8, 9}, {6, 7, 9}, {1, 1, 5}, {9, 9}})},
        {2, Filling({3, 3, 2, 2, 1}, {{10, 4, 14}, {3, 10, 9}, {4, 9}, {1, 8}, {4}})},
        {4, Filling({4, 3, 3, 2, 1}, {{11, 6, 12, 13}, {1, 7, 8}, {10, 13, 13}, {11, 9}, {9}})},
    };
    Filling sigma = merge_fillings(p.colored(), parts);
    Multigraph g = build_graph(p, sigma);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == inv(sigma));
    CHECK(g.connected());
    int loops = g.loops_at(1) + g.loops_at(2) + g.loops_at(3);
    CHECK(loops + g.multiplicity(1, 2) + g.multiplicity(1, 3) + g.multiplicity(2, 3) == inv(sigma));
}

TEST_CASE("cumulants of small problems") {
    SymFunc two = m({1, 1});
    SymFunc three = m({2, 1}) + m({1, 1, 1}, P("4 + q"));
    auto p2 = problem({Partition{1}, Partition{1}});
    auto p3 = problem({Partition{1}, Partition{1}, Partition{1}});
    CHECK(cumulant_by_definition(p2) == two);
    CHECK(cumulant_combinatorial(p2) == two);
    CHECK(cumulant_by_products(p2) == two);
    CHECK(cumulant_by_definition(p3) == three);
    CHECK(cumulant_combinatorial(p3) == three);
    CHECK(cumulant_by_products(p3) == three);
    CHECK(to_schur(three) == s({2, 1}) + s({1, 1, 1}, P("2 + q")));

    CHECK(cumulant_by_definition(problem({Partition{2}})) == haglund(Partition{2}));
    CHECK(cumulant_combinatorial(problem({Partition{1, 1}})) == m({2}) + m({1, 1}, P("1 + t")));
}

TEST_CASE("the numerator vanishes at q = 1 to order r - 1") {
    auto p = problem({Partition{1}, Partition{2}, Partition{1}});
    SymFunc num = cumulant_numerator(p);
    for (const auto& [mu, c] : num.coeffs) {
        MPoly shifted = evaluate(c, {.q = MPoly(1) + MPoly::u(), .t = std::nullopt, .u = std::nullopt});
        CHECK(shifted.min_degree(Var::u) >= 2);
    }
}

TEST_CASE("quasisymmetric expansion") {
    QSymExpansion one = cumulant_qsym(problem({Partition{1}}));
    CHECK(one.coeffs == std::map<std::uint32_t, MPoly>{{0u, MPoly(1)}});
    QSymExpansion two = cumulant_qsym(problem({Partition{1}, Partition{1}}));
    CHECK(two.coeffs == std::map<std::uint32_t, MPoly>{{1u, MPoly(1)}});
    for (auto ps : {std::vector<Partition>{{2}, {1}}, std::vector<Partition>{{1, 1}, {1}, {1}}}) {
        auto p = problem(ps);
        CHECK(qsym_expand(cumulant_qsym(p)) == cumulant_combinatorial(p));
    }
}

TEST_CASE("hook graphs") {
    auto p2 = problem({Partition{1}, Partition{1}});
    auto p3 = problem({Partition{1}, Partition{1}, Partition{1}});
    CHECK(hook_graph(p2, {}).edge_count() == 0);
    CHECK(hook_graph(p2, {Box{2, 1}}) == Multigraph(2, {{1, 2}}));
    CHECK(hook_graph(p3, {Box{2, 1}, Box{3, 1}}) == Multigraph(3, {{1, 2}, {1, 3}, {2, 3}}));
    try {
        hook_graph(p2, {Box{1, 2}});
        FAIL("expected BoxOutside");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoxOutside);
    }
}

TEST_CASE("hook Kostka coefficients") {
    auto p2 = problem({Partition{1}, Partition{1}});
    auto p3 = problem({Partition{1}, Partition{1}, Partition{1}});
    CHECK(hook_kostka(p2, 1) == MPoly(1));
    CHECK(hook_kostka(p3, 0).is_zero());
    CHECK(hook_kostka(p3, 1) == MPoly(1));
    CHECK(hook_kostka(p3, 2) == P("2 + q"));
    CHECK(hook_kostka(problem({Partition{2}}), 1) == MPoly::q());

    // the all-boxes sum is the sum of two neighbouring hook coefficients
    for (auto ps : {std::vector<Partition>{{2, 1}, {1}}, std::vector<Partition>{{1}, {1}, {1}}}) {
        auto p = problem(ps);
        for (int k = 0; k < p.n(); ++k) {
            MPoly expected = hook_kostka(p, k) + (k > 0 ? hook_kostka(p, k - 1) : MPoly());
            CHECK(hook_kostka_all_boxes(p, k) == expected);
            CHECK(hook_superfilling_sum(p, k) == expected);
        }
    }
}

TEST_CASE("fully colored polynomials") {
    CHECK(fully_colored(Partition{1, 1}) == m({2}) + m({1, 1}, P("1 + t")));
    CHECK(fully_colored(Partition{2}) == m({1, 1}));
    CHECK(fully_colored_problem(Partition{3, 1}).to_string() == "[1,1];[1];[1]");
    SymFunc f = to_schur(fully_colored(Partition{2, 2}));
    CHECK(f.coefficient(Partition{1, 1, 1, 1}) == P("t^2 + t^2*q"));
    for (const Partition& mu : partitions_of(4)) {
        Partition c = conjugate(mu);
        std::vector<int> a(c.parts().begin() + 1, c.parts().end());
        MPoly expected = MPoly::t(n_statistic(mu)) * increasing_tree_poly(a);
        CHECK(to_schur(fully_colored(mu)).coefficient(Partition(std::vector<int>(4, 1))) == expected);
    }
}

TEST_CASE("plethysm by compatible superfillings") {
    CHECK(cumulant_pleth_super(problem({Partition{1}})) == m({1}, P("t - 1")));
    for (auto ps : {std::vector<Partition>{{1}, {1}}, std::vector<Partition>{{2}, {1}},
                    std::vector<Partition>{{1, 1}, {1}}}) {
        auto p = problem(ps);
        CHECK(cumulant_pleth_super(p) == plethysm(cumulant_combinatorial(p), Alphabet::XTimesTMinus1));
    }
}

TEST_CASE("leading term of the fully colored plethysm") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n)) {
            SymFunc pl = to_schur(plethysm(fully_colored(mu), Alphabet::XTimesTMinus1));
            Partition c = conjugate(mu);
            std::vector<int> a(c.parts().begin() + 1, c.parts().end());
            MPoly expected = increasing_tree_poly(a) * MPoly(n % 2 == 0 ? 1L : -1L);
            CHECK(at_t0(pl.coefficient(mu)) == expected);
        }
}

TEST_CASE("axioms") {
    for (const Partition& lambda : {Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{3, 1}}) {
        AxiomReport r = verify_axioms(lambda);
        CHECK(r.ok());
    }
}

TEST_CASE("determinants") {
    CHECK(determinant({}) == MPoly(1));
    CHECK(determinant({{MPoly::q()}}) == MPoly::q());
    CHECK(determinant({{MPoly(0), MPoly(1)}, {MPoly(1), MPoly(0)}}) == MPoly(-1));
    CHECK(determinant({{MPoly(1), MPoly::q()}, {MPoly::t(), MPoly(1)}}) == P("1 - t*q"));
    CHECK(determinant({{MPoly(1), MPoly(2)}, {MPoly(2), MPoly(4)}}).is_zero());
    for (int n = 1; n <= 4; ++n) CHECK_FALSE(determinant(fully_colored_matrix(n)).is_zero());
}
