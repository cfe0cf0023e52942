#include "macq/symfunc.hpp"

#include "macq/error.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ranges>

namespace macq {

std::string to_string(Basis b) {
    switch (b) {
    case Basis::m: return "m";
    case Basis::s: return "s";
    case Basis::p: return "p";
    }
    return "?";
}

Basis parse_basis(const std::string& s) {
    if (s == "m") return Basis::m;
    if (s == "s") return Basis::s;
    if (s == "p") return Basis::p;
    throw Error(ErrorKind::InvalidInput, "unknown basis '" + s + "'");
}

SymFunc SymFunc::basis_element(Basis b, const Partition& p, MPoly c) {
    SymFunc f(p.size(), b);
    f.add(p, c);
    return f;
}

MPoly SymFunc::coefficient(const Partition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? MPoly() : it->second;
}

void SymFunc::add(const Partition& p, const MPoly& c) {
    if (p.size() != degree)
        throw Error(ErrorKind::SizeMismatch,
                    "partition " + p.to_string() + " in a function of degree " + std::to_string(degree));
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

namespace {

void require_compatible(const SymFunc& a, const SymFunc& b) {
    if (a.degree != b.degree)
        throw Error(ErrorKind::DegreeMismatch,
                    "degrees " + std::to_string(a.degree) + " and " + std::to_string(b.degree));
}

} // namespace

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    require_compatible(*this, o);
    const SymFunc& rhs = o.basis == basis ? o : in_basis(o, basis);
    for (const auto& [p, c] : rhs.coeffs) add(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    require_compatible(*this, o);
    const SymFunc& rhs = o.basis == basis ? o : in_basis(o, basis);
    for (const auto& [p, c] : rhs.coeffs) add(p, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const MPoly& c) {
    if (c.is_zero()) {
        coeffs.clear();
        return *this;
    }
    for (auto& [p, v] : coeffs) v *= c;
    return *this;
}

namespace {

std::string parts_list(const Partition& p) {
    std::string s;
    for (int x : p.parts()) {
        if (!s.empty()) s += ',';
        s += std::to_string(x);
    }
    return s;
}

} // namespace

// Printed in reverse lexicographic order, largest partition first.
std::string SymFunc::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : std::views::reverse(coeffs)) {
        if (!out.empty()) out += '\n';
        out += macq::to_string(basis) + p.to_string() + ": " + c.to_string();
    }
    return out;
}

std::string SymFunc::to_latex() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : std::views::reverse(coeffs)) {
        if (!out.empty()) out += " + ";
        std::string element = macq::to_string(basis) + "_{" + parts_list(p) + "}";
        if (c == MPoly(1)) out += element;
        else out += "(" + c.to_latex() + ")\\," + element;
    }
    return out;
}

void QSymExpansion::add(std::uint32_t descent_set, const MPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace(descent_set, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<long long>>;

/// Ways to distribute the parts of lambda into bins with sums mu.
long long powersum_count(const std::vector<int>& parts, std::size_t k, std::vector<int>& room) {
    if (k == parts.size()) return 1;
    long long total = 0;
    for (int& r : room) {
        if (r < parts[k]) continue;
        r -= parts[k];
        total += powersum_count(parts, k + 1, room);
        r += parts[k];
    }
    return total;
}

struct MatrixCache {
    std::mutex mutex;
    std::map<int, Matrix> kostka;
    std::map<int, Matrix> powersum;
};

MatrixCache& matrix_cache() {
    static MatrixCache cache;
    return cache;
}

} // namespace

const Matrix& kostka_matrix(int n) {
    auto& cache = matrix_cache();
    std::lock_guard lock(cache.mutex);
    auto it = cache.kostka.find(n);
    if (it != cache.kostka.end()) return it->second;
    const auto& parts = partitions_of(n);
    Matrix k(parts.size(), std::vector<long long>(parts.size(), 0));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i; j < parts.size(); ++j)
            if (dominance_leq(parts[j], parts[i])) k[i][j] = kostka_number(parts[i], parts[j].parts());
    return cache.kostka.emplace(n, std::move(k)).first->second;
}

const Matrix& powersum_matrix(int n) {
    auto& cache = matrix_cache();
    std::lock_guard lock(cache.mutex);
    auto it = cache.powersum.find(n);
    if (it != cache.powersum.end()) return it->second;
    const auto& parts = partitions_of(n);
    Matrix r(parts.size(), std::vector<long long>(parts.size(), 0));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            std::vector<int> room = parts[j].parts();
            r[i][j] = powersum_count(parts[i].parts(), 0, room);
        }
    return cache.powersum.emplace(n, std::move(r)).first->second;
}

std::size_t partition_index(const Partition& p) {
    const auto& parts = partitions_of(p.size());
    // reverse lexicographic order
    auto it = std::lower_bound(parts.begin(), parts.end(), p, [](const Partition& a, const Partition& b) { return a > b; });
    if (it == parts.end() || *it != p) throw Error(ErrorKind::InvalidInput, "unknown partition " + p.to_string());
    return static_cast<std::size_t>(it - parts.begin());
}

// ---------------------------------------------------------------------------

namespace {

std::vector<MPoly> dense(const SymFunc& f) {
    std::vector<MPoly> v(partitions_of(f.degree).size());
    for (const auto& [p, c] : f.coeffs) v[partition_index(p)] = c;
    return v;
}

SymFunc sparse(int n, Basis b, const std::vector<MPoly>& v) {
    SymFunc f(n, b);
    const auto& parts = partitions_of(n);
    for (std::size_t i = 0; i < v.size(); ++i) f.add(parts[i], v[i]);
    return f;
}

std::vector<RatMPoly> to_powersum_dense(const SymFunc& m) {
    const auto& r = powersum_matrix(m.degree);
    std::vector<MPoly> c = dense(m);
    const std::size_t size = c.size();
    std::vector<RatMPoly> b(size);
    // c_mu = sum_{lambda finer than mu} b_lambda R[lambda][mu]; finer means later index
    for (std::size_t mu = size; mu-- > 0;) {
        RatMPoly acc(c[mu]);
        for (std::size_t lambda = mu + 1; lambda < size; ++lambda) {
            if (r[lambda][mu] == 0 || b[lambda].is_zero()) continue;
            RatMPoly term = b[lambda];
            term *= mpq_class(static_cast<long>(-r[lambda][mu]));
            acc += term;
        }
        acc *= mpq_class(1L, static_cast<unsigned long>(r[mu][mu]));
        b[mu] = std::move(acc);
    }
    return b;
}

} // namespace

SymFunc to_monomial(const SymFunc& f) {
    switch (f.basis) {
    case Basis::m: return f;
    case Basis::s: return from_schur(f);
    case Basis::p: {
        PowerSumExpansion e{f.degree, {}};
        for (const auto& [p, c] : f.coeffs) e.coeffs.emplace(p, RatMPoly(c));
        return from_powersum(e);
    }
    }
    return f;
}

SymFunc to_schur(const SymFunc& f) {
    if (f.basis == Basis::s) return f;
    SymFunc m = to_monomial(f);
    const auto& k = kostka_matrix(m.degree);
    std::vector<MPoly> c = dense(m);
    std::vector<MPoly> a(c.size());
    for (std::size_t mu = 0; mu < c.size(); ++mu) {
        MPoly acc = c[mu];
        for (std::size_t lambda = 0; lambda < mu; ++lambda)
            if (k[lambda][mu] != 0 && !a[lambda].is_zero()) acc -= a[lambda] * mpz_class(static_cast<long>(k[lambda][mu]));
        if (k[mu][mu] != 1) throw Error(ErrorKind::NonIntegral, "Kostka matrix is not unitriangular");
        a[mu] = std::move(acc);
    }
    return sparse(m.degree, Basis::s, a);
}

SymFunc from_schur(const SymFunc& f) {
    if (f.basis != Basis::s) return to_monomial(f);
    const auto& k = kostka_matrix(f.degree);
    std::vector<MPoly> a = dense(f);
    std::vector<MPoly> c(a.size());
    for (std::size_t lambda = 0; lambda < a.size(); ++lambda) {
        if (a[lambda].is_zero()) continue;
        for (std::size_t mu = lambda; mu < a.size(); ++mu)
            if (k[lambda][mu] != 0) c[mu] += a[lambda] * mpz_class(static_cast<long>(k[lambda][mu]));
    }
    return sparse(f.degree, Basis::m, c);
}

PowerSumExpansion to_powersum(const SymFunc& f) {
    PowerSumExpansion e{f.degree, {}};
    if (f.basis == Basis::p) {
        for (const auto& [p, c] : f.coeffs) e.coeffs.emplace(p, RatMPoly(c));
        return e;
    }
    std::vector<RatMPoly> b = to_powersum_dense(to_monomial(f));
    const auto& parts = partitions_of(f.degree);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) e.coeffs.emplace(parts[i], std::move(b[i]));
    return e;
}

SymFunc from_powersum(const PowerSumExpansion& f) {
    const auto& r = powersum_matrix(f.degree);
    const auto& parts = partitions_of(f.degree);
    std::vector<RatMPoly> c(parts.size());
    for (const auto& [lambda, b] : f.coeffs) {
        std::size_t i = partition_index(lambda);
        for (std::size_t mu = 0; mu <= i; ++mu) {
            if (r[i][mu] == 0) continue;
            RatMPoly term = b;
            term *= mpq_class(static_cast<long>(r[i][mu]));
            c[mu] += term;
        }
    }
    SymFunc out(f.degree, Basis::m);
    for (std::size_t mu = 0; mu < c.size(); ++mu) {
        auto integral = c[mu].to_integral();
        if (!integral)
            throw Error(ErrorKind::NonIntegral,
                        "coefficient of m" + parts[mu].to_string() + " is " + c[mu].to_string());
        out.add(parts[mu], *integral);
    }
    return out;
}

SymFunc in_basis(const SymFunc& f, Basis b) {
    if (f.basis == b) return f;
    switch (b) {
    case Basis::m: return to_monomial(f);
    case Basis::s: return to_schur(f);
    case Basis::p: {
        PowerSumExpansion e = to_powersum(f);
        SymFunc out(f.degree, Basis::p);
        for (const auto& [p, c] : e.coeffs) {
            auto integral = c.to_integral();
            if (!integral) throw Error(ErrorKind::NonIntegral, "power-sum coefficient " + c.to_string());
            out.add(p, *integral);
        }
        return out;
    }
    }
    return f;
}

// ---------------------------------------------------------------------------

namespace {

/// Calls fn(alpha) for every weak composition alpha <= nu entrywise with |alpha| = k.
template <class Fn>
void for_each_split(const std::vector<int>& nu, int k, std::vector<int>& alpha, std::size_t i, int rest, Fn&& fn) {
    if (i == nu.size()) {
        if (rest == 0) fn(alpha);
        return;
    }
    int room = 0;
    for (std::size_t j = i + 1; j < nu.size(); ++j) room += nu[j];
    for (int a = std::max(0, rest - room); a <= std::min(nu[i], rest); ++a) {
        alpha[i] = a;
        for_each_split(nu, k, alpha, i + 1, rest - a, fn);
    }
}

} // namespace

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc a = to_monomial(f);
    SymFunc b = to_monomial(g);
    const int n = a.degree + b.degree;
    SymFunc out(n, Basis::m);
    if (a.is_zero() || b.is_zero()) return out;
    // [x^nu](fg) = sum over nu = alpha + beta of [x^alpha]f [x^beta]g
    for (const Partition& nu : partitions_of(n)) {
        MPoly total;
        std::vector<int> alpha(nu.parts().size(), 0);
        for_each_split(nu.parts(), a.degree, alpha, 0, a.degree, [&](const std::vector<int>& al) {
            auto ia = a.coeffs.find(sort_to_partition(al));
            if (ia == a.coeffs.end()) return;
            std::vector<int> be(al.size());
            for (std::size_t i = 0; i < al.size(); ++i) be[i] = nu.parts()[i] - al[i];
            auto ib = b.coeffs.find(sort_to_partition(be));
            if (ib == b.coeffs.end()) return;
            total += ia->second * ib->second;
        });
        out.add(nu, total);
    }
    return out;
}

SymFunc omega(const SymFunc& f) {
    PowerSumExpansion e = to_powersum(f);
    for (auto& [p, c] : e.coeffs)
        if ((p.size() + p.length()) % 2 != 0) c *= mpq_class(-1);
    if (f.basis == Basis::p) return in_basis(from_powersum(e), Basis::p);
    return in_basis(from_powersum(e), f.basis);
}

MPoly hall_inner(const SymFunc& f, const SymFunc& g) {
    if (f.degree != g.degree)
        throw Error(ErrorKind::DegreeMismatch,
                    "Hall product of degrees " + std::to_string(f.degree) + " and " + std::to_string(g.degree));
    SymFunc a = to_schur(f);
    SymFunc b = to_schur(g);
    MPoly total;
    for (const auto& [p, c] : a.coeffs) {
        auto it = b.coeffs.find(p);
        if (it != b.coeffs.end()) total += c * it->second;
    }
    return total;
}

// ---------------------------------------------------------------------------

SymFunc plethysm(const SymFunc& f, Alphabet alphabet) {
    PowerSumExpansion e = to_powersum(f);
    for (auto& [p, c] : e.coeffs) {
        MPoly factor(1);
        for (int part : p.parts()) {
            switch (alphabet) {
            case Alphabet::XTimesTMinus1: factor *= MPoly::t(part) - MPoly(1); break;
            case Alphabet::XTimesQMinus1: factor *= MPoly::q(part) - MPoly(1); break;
            case Alphabet::MinusX: factor *= MPoly(-1); break;
            }
        }
        c = c * factor;
    }
    return from_powersum(e);
}

MPoly plethysm_one_minus_u(const SymFunc& f) {
    PowerSumExpansion e = to_powersum(f);
    RatMPoly total;
    for (const auto& [p, c] : e.coeffs) {
        MPoly factor(1);
        for (int part : p.parts()) factor *= MPoly(1) - MPoly::u(part);
        total += c * factor;
    }
    auto integral = total.to_integral();
    if (!integral) throw Error(ErrorKind::NonIntegral, "f[1-u] = " + total.to_string());
    return *integral;
}

BiSymmetric plethysm_difference(const SymFunc& f) {
    PowerSumExpansion e = to_powersum(f);
    std::map<std::pair<Partition, Partition>, RatMPoly> acc;
    for (const auto& [lambda, c] : e.coeffs) {
        const auto& parts = lambda.parts();
        const std::size_t l = parts.size();
        for (std::uint32_t s = 0; s < (std::uint32_t{1} << l); ++s) {
            std::vector<int> xs, ys;
            for (std::size_t k = 0; k < l; ++k) ((s >> k) & 1U ? ys : xs).push_back(parts[k]);
            Partition px(xs), py(ys);
            const auto& rx = powersum_matrix(px.size());
            const auto& ry = powersum_matrix(py.size());
            std::size_t ix = partition_index(px);
            std::size_t iy = partition_index(py);
            const auto& alphas = partitions_of(px.size());
            const auto& betas = partitions_of(py.size());
            const long sign = std::popcount(s) % 2 == 0 ? 1 : -1;
            for (std::size_t a = 0; a <= ix; ++a) {
                if (rx[ix][a] == 0) continue;
                for (std::size_t b = 0; b <= iy; ++b) {
                    if (ry[iy][b] == 0) continue;
                    RatMPoly term = c;
                    term *= mpq_class(static_cast<long>(sign * rx[ix][a] * ry[iy][b]));
                    acc[{alphas[a], betas[b]}] += term;
                }
            }
        }
    }
    BiSymmetric out;
    for (auto& [key, c] : acc) {
        auto integral = c.to_integral();
        if (!integral) throw Error(ErrorKind::NonIntegral, "f[X-Y] coefficient " + c.to_string());
        if (!integral->is_zero()) out.emplace(key, *integral);
    }
    return out;
}

namespace {

/// Position of a letter in the chosen total order of the super alphabet.
long super_rank(SuperLetter l, SuperOrder order) {
    constexpr long big = 1 << 20;
    if (order == SuperOrder::PositivesFirst) return l.negative ? 2 * big - l.magnitude : l.magnitude;
    return l.negative ? l.magnitude : big + l.magnitude;
}

} // namespace

BiSymmetric super_collapse(const QSymExpansion& f, SuperOrder order) {
    const int n = f.degree;
    BiSymmetric out;
    for (int a = 0; a <= n; ++a) {
        for (const Partition& alpha : partitions_of(a)) {
            for (const Partition& beta : partitions_of(n - a)) {
                std::vector<SuperLetter> word;
                for (int i = 1; i <= alpha.length(); ++i)
                    word.insert(word.end(), static_cast<std::size_t>(alpha.part(i)), SuperLetter{i, false});
                for (int i = 1; i <= beta.length(); ++i)
                    word.insert(word.end(), static_cast<std::size_t>(beta.part(i)), SuperLetter{i, true});
                std::sort(word.begin(), word.end(), [&](SuperLetter x, SuperLetter y) {
                    return super_rank(x, order) < super_rank(y, order);
                });
                MPoly total;
                for (const auto& [d, c] : f.coeffs) {
                    bool ok = true;
                    for (int j = 1; j < n && ok; ++j) {
                        if (!(word[std::size_t(j - 1)] == word[std::size_t(j)])) continue;
                        bool in_d = (d >> (j - 1)) & 1U;
                        ok = word[std::size_t(j)].negative ? in_d : !in_d;
                    }
                    if (ok) total += c;
                }
                if (beta.size() % 2 == 1) total = -total;
                if (!total.is_zero()) out.emplace(std::make_pair(alpha, beta), total);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

bool fundamental_coefficient(int n, std::uint32_t descent_set, const Partition& mu) {
    if (mu.size() != n) throw Error(ErrorKind::SizeMismatch, "monomial of the wrong degree");
    std::vector<int> seq;
    for (int i = 1; i <= mu.length(); ++i) seq.insert(seq.end(), static_cast<std::size_t>(mu.part(i)), i);
    for (int j = 1; j < n; ++j)
        if (((descent_set >> (j - 1)) & 1U) && seq[std::size_t(j - 1)] == seq[std::size_t(j)]) return false;
    return true;
}

SymFunc qsym_expand(const QSymExpansion& f, int nvars) {
    SymFunc out(f.degree, Basis::m);
    for (const Partition& mu : partitions_of(f.degree)) {
        if (mu.length() > nvars) continue;
        MPoly total;
        for (const auto& [d, c] : f.coeffs)
            if (fundamental_coefficient(f.degree, d, mu)) total += c;
        out.add(mu, total);
    }
    return out;
}

SymFunc qsym_expand(const QSymExpansion& f) { return qsym_expand(f, f.degree); }

QSymExpansion gessel_schur(const Partition& lambda) {
    QSymExpansion out{lambda.size(), {}};
    for (const Filling& tableau : standard_tableaux(lambda)) {
        std::uint32_t d = 0;
        for (int j : ides(tableau)) d |= std::uint32_t{1} << (j - 1);
        out.add(d, MPoly(1));
    }
    return out;
}

} // namespace macq
