#include "macq/macdonald.hpp"

#include "macq/error.hpp"
#include "macq/parallel.hpp"

#include <algorithm>
#include <bit>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace macq {

CumulantProblem::CumulantProblem(std::vector<Partition> partitions) : partitions_(std::move(partitions)) {
    if (partitions_.empty()) throw Error(ErrorKind::InvalidInput, "a cumulant needs at least one partition");
    if (partitions_.size() > 16) throw Error(ErrorKind::InvalidInput, "too many partitions");
    for (const auto& p : partitions_)
        if (p.empty()) throw Error(ErrorKind::InvalidInput, "empty partition in a cumulant");
    colored_ = ColoredDiagram::color_sum(partitions_);
}

CumulantProblem CumulantProblem::parse(const std::string& text) {
    std::vector<Partition> parts;
    std::stringstream outer(text);
    std::string chunk;
    while (std::getline(outer, chunk, ';')) {
        std::vector<int> values;
        std::stringstream inner(chunk);
        std::string item;
        while (std::getline(inner, item, ',')) {
            item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
            if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
                throw Error(ErrorKind::InvalidInput, "bad part '" + item + "' in '" + text + "'");
            values.push_back(std::stoi(item));
        }
        if (values.empty()) throw Error(ErrorKind::InvalidInput, "empty partition in '" + text + "'");
        parts.emplace_back(std::move(values));
    }
    if (parts.empty()) throw Error(ErrorKind::InvalidInput, "no partitions given");
    return CumulantProblem(std::move(parts));
}

std::string CumulantProblem::to_string() const {
    std::string out;
    for (const auto& p : partitions_) {
        if (!out.empty()) out += ';';
        out += p.to_string();
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using Rows = std::vector<std::vector<int>>;

/// Coded rows of a shape plus its reading order and column colors.
struct Layout {
    Partition shape;
    std::vector<std::pair<std::size_t, std::size_t>> reading;  // (row, col), 0-based
    std::vector<int> color;                                     // per column, 1-based labels

    explicit Layout(const Partition& s) : shape(s) {
        for (int j = s.length(); j >= 1; --j)
            for (int i = 1; i <= s.part(j); ++i) reading.emplace_back(std::size_t(j - 1), std::size_t(i - 1));
        color.assign(static_cast<std::size_t>(s.part(1)), 1);
    }
    explicit Layout(const ColoredDiagram& d) : Layout(d.shape()) {
        for (int c = 1; c <= d.column_count(); ++c) color[std::size_t(c - 1)] = d.column_color(c);
    }

    Rows blank() const {
        Rows rows(static_cast<std::size_t>(shape.length()));
        for (int j = 1; j <= shape.length(); ++j) rows[std::size_t(j - 1)].assign(std::size_t(shape.part(j)), 0);
        return rows;
    }
};

/// Calls fn(rows) for every filling with content mu (letters coded as 2v),
/// lexicographic in reading order.
template <class Fn>
void sweep_content(const Layout& layout, const Partition& mu, Fn&& fn) {
    std::vector<int> letters;
    for (int i = 1; i <= mu.length(); ++i) letters.insert(letters.end(), std::size_t(mu.part(i)), i);
    Rows rows = layout.blank();
    do {
        for (std::size_t k = 0; k < letters.size(); ++k) {
            auto [j, i] = layout.reading[k];
            rows[j][i] = 2 * letters[k];
        }
        fn(rows);
    } while (std::next_permutation(letters.begin(), letters.end()));
}

/// Upper-triangular edge counts between colors, flattened r*r.
std::vector<int> graph_key(const Rows& rows, const Layout& layout, int r) {
    std::vector<int> key(static_cast<std::size_t>(r * r), 0);
    detail::for_each_inversion_pair(rows, [&](int, int a, int b) {
        int ca = layout.color[std::size_t(a - 1)];
        int cb = layout.color[std::size_t(b - 1)];
        if (ca > cb) std::swap(ca, cb);
        ++key[std::size_t((ca - 1) * r + (cb - 1))];
    });
    return key;
}

Multigraph graph_from_key(const std::vector<int>& key, int r) {
    Multigraph g(r, {});
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) {
            int m = key[std::size_t((i - 1) * r + (j - 1))];
            if (m > 0) g.add_edge(i, j, m);
        }
    return g;
}

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
        return h;
    }
};

/// Accumulator of (graph, t-exponent) -> signed count.
using GraphCounts = std::map<std::pair<std::vector<int>, int>, long long>;

MPoly resolve(const GraphCounts& counts, int r) {
    MPoly total;
    for (const auto& [key, count] : counts) {
        if (count == 0) continue;
        MPoly ig = cached_inversion_poly(graph_from_key(key.first, r));
        total += ig * MPoly::t(key.second) * mpz_class(static_cast<long>(count));
    }
    return total;
}

SymFunc assemble(int n, const std::vector<MPoly>& coeffs) {
    SymFunc f(n, Basis::m);
    const auto& parts = partitions_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i) f.add(parts[i], coeffs[i]);
    return f;
}

MPoly divide_by_q_minus_1(const MPoly& numerator, int power) {
    return exact_divide(numerator, (MPoly::q() - MPoly(1)).pow(static_cast<unsigned>(power)));
}

} // namespace

// ---------------------------------------------------------------------------

MPoly cached_inversion_poly(const Multigraph& g) {
    static std::shared_mutex mutex;
    static std::unordered_map<std::vector<int>, MPoly, VectorHash> cache;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(g.key());
        if (it != cache.end()) return it->second;
    }
    MPoly value = inversion_poly(g);
    std::unique_lock lock(mutex);
    return cache.emplace(g.key(), std::move(value)).first->second;
}

SymFunc haglund(const Partition& lambda) {
    const int n = lambda.size();
    Layout layout(lambda);
    const auto& parts = partitions_of(n);
    auto coeffs = parallel_map<MPoly>(parts.size(), [&](std::size_t idx) {
        std::map<std::pair<int, int>, long long> counts;
        sweep_content(layout, parts[idx], [&](const Rows& rows) {
            ++counts[{detail::coded_inv(rows), detail::coded_maj(rows)}];
        });
        MPoly c;
        for (const auto& [e, k] : counts) c.add_term(mpz_class(static_cast<long>(k)), Exponent{e.first, e.second, 0});
        return c;
    });
    return assemble(n, coeffs);
}

Multigraph build_graph(const CumulantProblem& problem, const Filling& sigma) {
    if (sigma.shape != problem.colored().shape())
        throw Error(ErrorKind::SizeMismatch, "filling shape differs from the colored diagram");
    Layout layout(problem.colored());
    return graph_from_key(graph_key(detail::code_rows(sigma), layout, problem.r()), problem.r());
}

Multigraph build_graph(const CumulantProblem& problem, const SuperFilling& sigma, SuperOrder order) {
    if (sigma.shape != problem.colored().shape())
        throw Error(ErrorKind::SizeMismatch, "filling shape differs from the colored diagram");
    Layout layout(problem.colored());
    return graph_from_key(graph_key(detail::code_rows(sigma, order), layout, problem.r()), problem.r());
}

// ---------------------------------------------------------------------------

SymFunc cumulant_numerator(const CumulantProblem& problem) {
    const int r = problem.r();
    const int n = problem.n();
    Layout layout(problem.colored());
    const std::size_t subsets = std::size_t{1} << r;

    // columns of lambda^[r] that make up lambda^B, in order
    std::vector<std::vector<std::size_t>> block_columns(subsets);
    for (std::size_t b = 1; b < subsets; ++b)
        for (std::size_t c = 0; c < layout.color.size(); ++c)
            if (b & (std::size_t{1} << (layout.color[c] - 1))) block_columns[b].push_back(c);

    struct Weighted {
        long long weight;
        std::vector<ColorMask> blocks;
    };
    std::vector<Weighted> partitions;
    for (const SetPartition& pi : set_partitions(problem.all_colors()))
        partitions.push_back({cumulant_weight(pi.block_count()), pi.blocks});

    const auto& parts = partitions_of(n);
    auto coeffs = parallel_map<MPoly>(parts.size(), [&](std::size_t idx) {
        std::map<std::pair<int, int>, long long> counts;
        std::vector<int> inv_of(subsets), maj_of(subsets);
        Rows sub;
        sweep_content(layout, parts[idx], [&](const Rows& rows) {
            for (std::size_t b = 1; b < subsets; ++b) {
                sub.clear();
                for (const auto& row : rows) {
                    std::vector<int> cut;
                    for (std::size_t c : block_columns[b]) {
                        if (c >= row.size()) break;
                        cut.push_back(row[c]);
                    }
                    if (cut.empty()) break;
                    sub.push_back(std::move(cut));
                }
                inv_of[b] = detail::coded_inv(sub);
                maj_of[b] = detail::coded_maj(sub);
            }
            for (const auto& pi : partitions) {
                int qe = 0, te = 0;
                for (ColorMask b : pi.blocks) {
                    qe += inv_of[b];
                    te += maj_of[b];
                }
                counts[{qe, te}] += pi.weight;
            }
        });
        MPoly c;
        for (const auto& [e, k] : counts) c.add_term(mpz_class(static_cast<long>(k)), Exponent{e.first, e.second, 0});
        return c;
    });
    return assemble(n, coeffs);
}

SymFunc cumulant_by_definition(const CumulantProblem& problem) {
    SymFunc numerator = cumulant_numerator(problem);
    SymFunc out(numerator.degree, Basis::m);
    for (const auto& [p, c] : numerator.coeffs) out.add(p, divide_by_q_minus_1(c, problem.r() - 1));
    return out;
}

SymFunc cumulant_by_products(const CumulantProblem& problem) {
    const int n = problem.n();
    std::map<ColorMask, SymFunc> block_value;
    SymFunc numerator(n, Basis::m);
    for (const SetPartition& pi : set_partitions(problem.all_colors())) {
        SymFunc term = SymFunc::one();
        for (ColorMask b : pi.blocks) {
            auto it = block_value.find(b);
            if (it == block_value.end()) {
                Partition shape;
                for (int c = 1; c <= problem.r(); ++c)
                    if (b & (ColorMask{1} << (c - 1))) shape = oplus(shape, problem.partitions()[std::size_t(c - 1)]);
                it = block_value.emplace(b, haglund(shape)).first;
            }
            term = multiply(term, it->second);
        }
        numerator += term * MPoly(static_cast<long>(cumulant_weight(pi.block_count())));
    }
    SymFunc out(n, Basis::m);
    for (const auto& [p, c] : numerator.coeffs) out.add(p, divide_by_q_minus_1(c, problem.r() - 1));
    return out;
}

SymFunc cumulant_combinatorial(const CumulantProblem& problem) {
    const int r = problem.r();
    const int n = problem.n();
    Layout layout(problem.colored());
    const auto& parts = partitions_of(n);
    auto coeffs = parallel_map<MPoly>(parts.size(), [&](std::size_t idx) {
        GraphCounts counts;
        sweep_content(layout, parts[idx], [&](const Rows& rows) {
            ++counts[{graph_key(rows, layout, r), detail::coded_maj(rows)}];
        });
        return resolve(counts, r);
    });
    return assemble(n, coeffs);
}

QSymExpansion cumulant_qsym(const CumulantProblem& problem) {
    const int r = problem.r();
    const int n = problem.n();
    Layout layout(problem.colored());
    std::map<std::uint32_t, GraphCounts> counts;
    std::vector<int> position(static_cast<std::size_t>(n + 1));
    sweep_content(layout, Partition(std::vector<int>(std::size_t(n), 1)), [&](const Rows& rows) {
        for (std::size_t k = 0; k < layout.reading.size(); ++k) {
            auto [j, i] = layout.reading[k];
            position[std::size_t(rows[j][i] / 2)] = static_cast<int>(k);
        }
        std::uint32_t d = 0;
        for (int v = 1; v < n; ++v)
            if (position[std::size_t(v + 1)] < position[std::size_t(v)]) d |= std::uint32_t{1} << (v - 1);
        ++counts[d][{graph_key(rows, layout, r), detail::coded_maj(rows)}];
    });
    QSymExpansion out{n, {}};
    for (const auto& [d, c] : counts) out.add(d, resolve(c, r));
    return out;
}

// ---------------------------------------------------------------------------

Multigraph hook_graph(const CumulantProblem& problem, const std::vector<Box>& boxes) {
    const ColoredDiagram& d = problem.colored();
    Multigraph g(problem.r(), {});
    for (Box b : boxes) {
        if (!contains(d.shape(), b))
            throw Error(ErrorKind::BoxOutside,
                        "box (" + std::to_string(b.col) + "," + std::to_string(b.row) + ") is not in the diagram");
        for (int left = 1; left < b.col; ++left) g.add_edge(d.column_color(left), d.column_color(b.col));
    }
    return g;
}

namespace {

MPoly hook_sum(const CumulantProblem& problem, int s, bool skip_corner) {
    std::vector<Box> pool = boxes_in_reading_order(problem.colored().shape());
    if (skip_corner) std::erase(pool, Box{1, 1});
    if (s < 0 || s > static_cast<int>(pool.size())) return {};
    MPoly total;
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.end() - s, pick.end(), true);
    do {
        std::vector<Box> chosen;
        int colegs = 0;
        for (std::size_t k = 0; k < pool.size(); ++k)
            if (pick[k]) {
                chosen.push_back(pool[k]);
                colegs += pool[k].row - 1;
            }
        total += cached_inversion_poly(hook_graph(problem, chosen)) * MPoly::t(colegs);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return total;
}

} // namespace

MPoly hook_kostka(const CumulantProblem& problem, int s) { return hook_sum(problem, s, true); }

MPoly hook_kostka_all_boxes(const CumulantProblem& problem, int s) { return hook_sum(problem, s, false); }

MPoly hook_superfilling_sum(const CumulantProblem& problem, int s) {
    const int r = problem.r();
    const int n = problem.n();
    if (s < 0 || s > n) return {};
    Layout layout(problem.colored());
    SuperFilling probe{problem.colored().shape(), {}};
    probe.rows = {{SuperLetter{1, false}, SuperLetter{1, true}}};
    Rows codes = detail::code_rows(probe, SuperOrder::NegativesFirst);
    const int plain = codes[0][0];
    const int barred = codes[0][1];

    GraphCounts counts;
    Rows rows = layout.blank();
    std::vector<bool> pick(std::size_t(n), false);
    std::fill(pick.end() - s, pick.end(), true);
    do {
        for (std::size_t k = 0; k < layout.reading.size(); ++k) {
            auto [j, i] = layout.reading[k];
            rows[j][i] = pick[k] ? barred : plain;
        }
        ++counts[{graph_key(rows, layout, r), detail::coded_maj(rows)}];
    } while (std::next_permutation(pick.begin(), pick.end()));
    return resolve(counts, r);
}

// ---------------------------------------------------------------------------

CumulantProblem fully_colored_problem(const Partition& mu) {
    if (mu.empty()) throw Error(ErrorKind::InvalidInput, "fully colored polynomial of the empty partition");
    std::vector<Partition> columns;
    const Partition heights = conjugate(mu);
    for (int h : heights.parts()) columns.emplace_back(std::vector<int>(std::size_t(h), 1));
    return CumulantProblem(std::move(columns));
}

SymFunc fully_colored(const Partition& mu) { return cumulant_combinatorial(fully_colored_problem(mu)); }

SymFunc cumulant_pleth_super(const CumulantProblem& problem) {
    const int r = problem.r();
    const int n = problem.n();
    Layout layout(problem.colored());
    const auto& parts = partitions_of(n);

    auto coeffs = parallel_map<MPoly>(parts.size(), [&](std::size_t idx) {
        GraphCounts counts;
        sweep_content(layout, parts[idx], [&](const Rows& rows) {
            for (std::uint32_t neg = 0; neg < (std::uint32_t{1} << n); ++neg) {
                SuperFilling f{layout.shape, {}};
                bool compatible = true;
                for (std::size_t j = 0; j < rows.size(); ++j) {
                    std::vector<SuperLetter> row;
                    for (int code : rows[j]) row.push_back({code / 2, false});
                    f.rows.push_back(std::move(row));
                }
                for (std::size_t k = 0; k < layout.reading.size() && compatible; ++k) {
                    auto [j, i] = layout.reading[k];
                    f.rows[j][i].negative = (neg >> k) & 1U;
                    compatible = f.rows[j][i].magnitude >= static_cast<int>(j) + 1;
                }
                if (!compatible) continue;
                Rows coded = detail::code_rows(f, SuperOrder::PositivesFirst);
                int m = std::popcount(neg);
                int p = n - m;
                long long sign = m % 2 == 0 ? 1 : -1;
                counts[{graph_key(coded, layout, r), p + detail::coded_maj(coded)}] += sign;
            }
        });
        return resolve(counts, r);
    });
    return assemble(n, coeffs);
}

// ---------------------------------------------------------------------------

namespace {

bool supported_below(const SymFunc& schur, const Partition& top, std::string& bad) {
    for (const auto& [p, c] : schur.coeffs)
        if (!dominance_leq(p, top)) {
            bad = p.to_string();
            return false;
        }
    return true;
}

} // namespace

AxiomReport verify_axioms(const Partition& lambda) {
    AxiomReport report;
    SymFunc h = haglund(lambda);
    std::string bad;
    report.c1 = supported_below(to_schur(plethysm(h, Alphabet::XTimesQMinus1)), conjugate(lambda), bad);
    if (!report.c1) report.detail += "C1 fails at s" + bad + "; ";
    report.c2 = supported_below(to_schur(plethysm(h, Alphabet::XTimesTMinus1)), lambda, bad);
    if (!report.c2) report.detail += "C2 fails at s" + bad + "; ";
    MPoly pairing = hall_inner(h, SymFunc::schur(Partition{lambda.size()}));
    report.c3 = pairing == MPoly(1);
    if (!report.c3) report.detail += "C3 gives " + pairing.to_string() + "; ";
    return report;
}

MPoly determinant(std::vector<std::vector<MPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return MPoly(1);
    for (const auto& row : m)
        if (row.size() != n) throw Error(ErrorKind::SizeMismatch, "determinant of a non-square matrix");
    long sign = 1;
    MPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MPoly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1] * mpz_class(sign);
}

std::vector<std::vector<MPoly>> fully_colored_matrix(int n) {
    const auto& parts = partitions_of(n);
    std::vector<std::vector<MPoly>> m;
    for (const Partition& mu : parts) {
        SymFunc h = fully_colored(mu);
        std::vector<MPoly> row;
        for (const Partition& nu : parts) row.push_back(h.coefficient(nu));
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace macq
