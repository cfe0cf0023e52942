#pragma once

// Homogeneous symmetric functions with polynomial coefficients, stored in the
// monomial, Schur or power-sum basis, plus the plethystic specializations and
// fundamental quasisymmetric expansions used by the Macdonald code.

#include "macq/algebra.hpp"
#include "macq/shapes.hpp"

#include <map>
#include <string>
#include <utility>

namespace macq {

enum class Basis { m, s, p };

std::string to_string(Basis b);
Basis parse_basis(const std::string& s);

struct SymFunc {
    int degree = 0;
    Basis basis = Basis::m;
    /// Zero coefficients are never stored.
    std::map<Partition, MPoly> coeffs;

    SymFunc() = default;
    SymFunc(int n, Basis b) : degree(n), basis(b) {}

    static SymFunc basis_element(Basis b, const Partition& p, MPoly c = MPoly(1));
    static SymFunc monomial(const Partition& p) { return basis_element(Basis::m, p); }
    static SymFunc schur(const Partition& p) { return basis_element(Basis::s, p); }
    static SymFunc powersum(const Partition& p) { return basis_element(Basis::p, p); }
    /// The unit of degree zero.
    static SymFunc one() { return basis_element(Basis::m, Partition{}); }

    MPoly coefficient(const Partition& p) const;
    /// Adds c to the coefficient of p; throws SizeMismatch when |p| != degree.
    void add(const Partition& p, const MPoly& c);
    bool is_zero() const { return coeffs.empty(); }

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const MPoly& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const MPoly& c) { return a *= c; }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.degree == b.degree && a.basis == b.basis && a.coeffs == b.coeffs;
    }

    /// One line per nonzero coefficient, "m[2,1]: 4 + q"; "0" when empty.
    std::string to_string() const;
    std::string to_latex() const;
};

/// Power-sum expansion with rational coefficients.
struct PowerSumExpansion {
    int degree = 0;
    std::map<Partition, RatMPoly> coeffs;
    friend bool operator==(const PowerSumExpansion&, const PowerSumExpansion&) = default;
};

/// Expansion sum_D c_D F_{n,D}; D is a bitmask over [n-1] (bit j-1 for j).
struct QSymExpansion {
    int degree = 0;
    std::map<std::uint32_t, MPoly> coeffs;
    void add(std::uint32_t descent_set, const MPoly& c);
};

// -- transition matrices ----------------------------------------------------

/// K_{lambda mu} for partitions of n in partitions_of(n) order.
const std::vector<std::vector<long long>>& kostka_matrix(int n);
/// Coefficient of m_mu in p_lambda.
const std::vector<std::vector<long long>>& powersum_matrix(int n);
/// Index of p in partitions_of(|p|).
std::size_t partition_index(const Partition& p);

// -- conversions ------------------------------------------------------------

SymFunc to_monomial(const SymFunc& f);
/// Throws NonIntegral if an integral Schur expansion does not exist.
SymFunc to_schur(const SymFunc& f);
SymFunc from_schur(const SymFunc& f);
PowerSumExpansion to_powersum(const SymFunc& f);
/// Monomial expansion; throws NonIntegral when a coefficient is not integral.
SymFunc from_powersum(const PowerSumExpansion& f);
SymFunc in_basis(const SymFunc& f, Basis b);

/// Product in the monomial basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
/// omega, returned in the basis of f (p-basis inputs stay in p).
SymFunc omega(const SymFunc& f);
/// Hall scalar product; throws DegreeMismatch.
MPoly hall_inner(const SymFunc& f, const SymFunc& g);

// -- plethysm ---------------------------------------------------------------

enum class Alphabet {
    XTimesTMinus1,  ///< X(t-1)
    XTimesQMinus1,  ///< X(q-1)
    MinusX,         ///< -X
};
/// f[A] in the monomial basis.
SymFunc plethysm(const SymFunc& f, Alphabet a);
/// f[1-u] as a polynomial in u (and q, t).
MPoly plethysm_one_minus_u(const SymFunc& f);

/// Coefficient map (alpha, beta) -> [m_alpha(x) m_beta(y)] of a function of
/// two alphabets that is symmetric in each separately.
using BiSymmetric = std::map<std::pair<Partition, Partition>, MPoly>;
/// f[X - Y] through p_i -> p_i(x) - p_i(y).
BiSymmetric plethysm_difference(const SymFunc& f);
/// sum_D c_D F~_{n,D}(x, -y) read off at x^alpha y^beta for the given order.
BiSymmetric super_collapse(const QSymExpansion& f, SuperOrder order);

// -- quasisymmetric ---------------------------------------------------------

/// [x^mu] F_{n,D}(x_1..x_nvars) for a partition mu of n.
bool fundamental_coefficient(int n, std::uint32_t descent_set, const Partition& mu);
/// Monomial expansion of sum c_D F_{n,D} in nvars variables.
SymFunc qsym_expand(const QSymExpansion& f, int nvars);
SymFunc qsym_expand(const QSymExpansion& f);
/// sum over standard tableaux T of F_{n, iDes(w_T)}.
QSymExpansion gessel_schur(const Partition& lambda);

} // namespace macq
