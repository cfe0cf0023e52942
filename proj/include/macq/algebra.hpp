#pragma once

// Exact scalars: sparse polynomials in q, t, u over the integers (MPoly) and
// over the rationals (RatMPoly).

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace macq {

enum class Var { q, t, u };

/// Exponent vector of a monomial q^q t^t u^u.
struct Exponent {
    int q = 0;
    int t = 0;
    int u = 0;

    int& operator[](Var v) { return v == Var::q ? q : (v == Var::t ? t : u); }
    int operator[](Var v) const { return v == Var::q ? q : (v == Var::t ? t : u); }

    friend Exponent operator+(Exponent a, Exponent b) { return {a.q + b.q, a.t + b.t, a.u + b.u}; }
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Canonical term order: ascending by (t, q, u).
struct ExponentLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        if (a.t != b.t) return a.t < b.t;
        if (a.q != b.q) return a.q < b.q;
        return a.u < b.u;
    }
};

class MPoly {
public:
    using TermMap = std::map<Exponent, mpz_class, ExponentLess>;

    MPoly() = default;
    MPoly(long c);  // NOLINT: integers embed as constants
    explicit MPoly(const mpz_class& c);

    static MPoly monomial(const mpz_class& c, Exponent e);
    static MPoly var(Var v, int power = 1);
    static MPoly q(int power = 1) { return var(Var::q, power); }
    static MPoly t(int power = 1) { return var(Var::t, power); }
    static MPoly u(int power = 1) { return var(Var::u, power); }

    /// Parses the canonical string form ("2 + q", "t^2 - 3*t*q^2*u").
    static MPoly parse(std::string_view text);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    mpz_class coefficient(Exponent e) const;
    int degree(Var v) const;
    /// Smallest exponent of v over all terms; 0 for the zero polynomial.
    int min_degree(Var v) const;
    bool is_constant() const;
    /// True when every coefficient is a positive integer (vacuous for 0).
    bool has_nonnegative_coefficients() const;

    void add_term(const mpz_class& c, Exponent e);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const mpz_class& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const mpz_class& c) { return a *= c; }
    MPoly operator-() const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly pow(unsigned k) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    TermMap terms_;
};

/// [n]_q = 1 + q + ... + q^(n-1); zero for n = 0.
MPoly qint(int n);

/// Returns c with a = b*c, or nullopt when b does not divide a in Z[q,t,u].
std::optional<MPoly> try_exact_divide(const MPoly& a, const MPoly& b);
/// Throws Error(NonDivisible) when no polynomial quotient exists.
MPoly exact_divide(const MPoly& a, const MPoly& b);

/// Partial substitution of the indeterminates; unset slots stay symbolic.
struct Assignment {
    std::optional<MPoly> q;
    std::optional<MPoly> t;
    std::optional<MPoly> u;
};
MPoly evaluate(const MPoly& p, const Assignment& at);

/// Polynomial with rational coefficients; intermediate only.
class RatMPoly {
public:
    using TermMap = std::map<Exponent, mpq_class, ExponentLess>;

    RatMPoly() = default;
    explicit RatMPoly(const MPoly& p);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const mpq_class& c, Exponent e);
    RatMPoly& operator+=(const RatMPoly& o);
    RatMPoly& operator*=(const mpq_class& c);
    friend RatMPoly operator*(const RatMPoly& a, const MPoly& b);
    friend bool operator==(const RatMPoly& a, const RatMPoly& b) { return a.terms_ == b.terms_; }

    /// The integer polynomial, or nullopt when some coefficient is not integral.
    std::optional<MPoly> to_integral() const;
    std::string to_string() const;

private:
    TermMap terms_;
};

} // namespace macq
