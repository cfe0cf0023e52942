#pragma once

// Transformed Macdonald polynomials from Haglund's filling formula and their
// joint cumulants: by definition, by the graph-weighted filling formula, in
// fundamental quasisymmetric form, through hook Kostka coefficients, and the
// fully colored special case.

#include "macq/algebra.hpp"
#include "macq/graphs.hpp"
#include "macq/shapes.hpp"
#include "macq/symfunc.hpp"

#include <string>
#include <vector>

namespace macq {

class CumulantProblem {
public:
    explicit CumulantProblem(std::vector<Partition> partitions);
    /// "2,1;1,1": parts separated by commas, partitions by semicolons.
    static CumulantProblem parse(const std::string& text);

    const std::vector<Partition>& partitions() const { return partitions_; }
    const ColoredDiagram& colored() const { return colored_; }
    int r() const { return static_cast<int>(partitions_.size()); }
    int n() const { return colored_.shape().size(); }
    ColorMask all_colors() const { return (ColorMask{1} << r()) - 1; }
    std::string to_string() const;

private:
    std::vector<Partition> partitions_;
    ColoredDiagram colored_;
};

/// sum over fillings of q^inv t^maj x^sigma, monomial basis.
SymFunc haglund(const Partition& lambda);

/// G^sigma: vertices are colors, one edge per inversion pair joining the colors
/// of its two boxes.
Multigraph build_graph(const CumulantProblem& problem, const Filling& sigma);
Multigraph build_graph(const CumulantProblem& problem, const SuperFilling& sigma, SuperOrder order);

/// I_G memoized by multiplicity matrix; safe to call from several threads.
MPoly cached_inversion_poly(const Multigraph& g);

/// Alternating set-partition sum of the products of H~ over blocks, before
/// the division by (q-1)^(r-1). Products are formed filling by filling through
/// the split of lambda^[r] into the diagrams lambda^B.
SymFunc cumulant_numerator(const CumulantProblem& problem);
/// Throws NonDivisible if the numerator is not divisible by (q-1)^(r-1).
SymFunc cumulant_by_definition(const CumulantProblem& problem);
/// Same sum built from haglund() and multiply().
SymFunc cumulant_by_products(const CumulantProblem& problem);
SymFunc cumulant_combinatorial(const CumulantProblem& problem);
QSymExpansion cumulant_qsym(const CumulantProblem& problem);

/// Throws BoxOutside.
Multigraph hook_graph(const CumulantProblem& problem, const std::vector<Box>& boxes);
/// Coefficient of s_(n-s,1^s): sum over s-subsets avoiding the corner box.
MPoly hook_kostka(const CumulantProblem& problem, int s);
/// Coefficient of (-u)^s in kappa[1-u]: the same sum over all s-subsets.
MPoly hook_kostka_all_boxes(const CumulantProblem& problem, int s);
/// Superfillings by 1 and 1~ with s bars, order 1~ < 1, weighted I_G t^maj.
MPoly hook_superfilling_sum(const CumulantProblem& problem, int s);

/// Columns of mu as the problem (1^{mu^t_1}, ..., 1^{mu^t_{mu_1}}).
CumulantProblem fully_colored_problem(const Partition& mu);
SymFunc fully_colored(const Partition& mu);
/// Compatible superfillings weighted by I_G (-1)^m t^(p+maj): kappa[X(t-1)].
SymFunc cumulant_pleth_super(const CumulantProblem& problem);

struct AxiomReport {
    bool c1 = false;  ///< H[X(q-1)] supported on mu <= lambda^t
    bool c2 = false;  ///< H[X(t-1)] supported on mu <= lambda
    bool c3 = false;  ///< <H, s_(n)> = 1
    std::string detail;
    bool ok() const { return c1 && c2 && c3; }
};
AxiomReport verify_axioms(const Partition& lambda);

/// Fraction-free (Bareiss) determinant.
MPoly determinant(std::vector<std::vector<MPoly>> m);
/// Rows fully_colored(mu), columns m_nu, over partitions of n.
std::vector<std::vector<MPoly>> fully_colored_matrix(int n);

} // namespace macq
