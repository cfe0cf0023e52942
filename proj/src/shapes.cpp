#include "macq/shapes.hpp"

#include "macq/error.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace macq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error(ErrorKind::InvalidInput, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(ErrorKind::InvalidInput, "partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Partition conjugate(const Partition& p) {
    std::vector<int> c;
    for (int j = 1; j <= p.part(1); ++j) {
        int count = 0;
        for (int part : p.parts())
            if (part >= j) ++count;
        c.push_back(count);
    }
    return Partition(std::move(c));
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::SizeMismatch, a.to_string() + " vs " + b.to_string());
    int sa = 0, sb = 0;
    for (int j = 1; j <= std::max(a.length(), b.length()); ++j) {
        sa += a.part(j);
        sb += b.part(j);
        if (sa > sb) return false;
    }
    return true;
}

Partition oplus(const Partition& a, const Partition& b) {
    std::vector<int> s(std::max(a.length(), b.length()));
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = a.part(int(j) + 1) + b.part(int(j) + 1);
    return Partition(std::move(s));
}

int n_statistic(const Partition& p) {
    int n = 0;
    for (int i = 1; i <= p.length(); ++i) n += (i - 1) * p.part(i);
    return n;
}

namespace {

void generate_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        generate_partitions(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n >= 0) generate_partitions(n, n, cur, out);
    return cache.emplace(n, std::move(out)).first->second;
}

Partition sort_to_partition(std::vector<int> composition) {
    std::erase(composition, 0);
    std::sort(composition.begin(), composition.end(), std::greater<>());
    return Partition(std::move(composition));
}

Partition hook(int n, int s) {
    std::vector<int> parts{n - s};
    parts.insert(parts.end(), static_cast<std::size_t>(s), 1);
    return Partition(std::move(parts));
}

bool contains(const Partition& p, Box b) {
    return b.row >= 1 && b.row <= p.length() && b.col >= 1 && b.col <= p.part(b.row);
}

namespace {

void require_box(const Partition& p, Box b) {
    if (!contains(p, b))
        throw Error(ErrorKind::BoxOutside,
                    "(" + std::to_string(b.col) + "," + std::to_string(b.row) + ") not in " + p.to_string());
}

int column_height(const Partition& p, int col) {
    int h = 0;
    while (h < p.length() && p.part(h + 1) >= col) ++h;
    return h;
}

} // namespace

int arm(const Partition& p, Box b) {
    require_box(p, b);
    return p.part(b.row) - b.col;
}

int coarm(const Partition& p, Box b) {
    require_box(p, b);
    return b.col - 1;
}

int leg(const Partition& p, Box b) {
    require_box(p, b);
    return column_height(p, b.col) - b.row;
}

int coleg(const Partition& p, Box b) {
    require_box(p, b);
    return b.row - 1;
}

std::vector<Box> boxes_in_reading_order(const Partition& p) {
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(p.size()));
    for (int j = p.length(); j >= 1; --j)
        for (int i = 1; i <= p.part(j); ++i) out.push_back({i, j});
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct ColumnRecord {
    int height;
    int source;  // index into sources
    int back;    // 1-based column index within the source
};

} // namespace

ColoredDiagram ColoredDiagram::color_sum(const std::vector<Partition>& sources) {
    if (sources.empty()) throw Error(ErrorKind::InvalidInput, "color_sum needs at least one partition");
    ColoredDiagram d;
    d.sources_ = sources;
    d.labels_.resize(sources.size());
    std::iota(d.labels_.begin(), d.labels_.end(), 1);

    std::vector<ColumnRecord> cols;
    for (std::size_t s = 0; s < sources.size(); ++s) {
        Partition c = conjugate(sources[s]);
        for (int k = 1; k <= c.length(); ++k) cols.push_back({c.part(k), static_cast<int>(s), k});
    }
    std::stable_sort(cols.begin(), cols.end(), [](const ColumnRecord& a, const ColumnRecord& b) {
        if (a.height != b.height) return a.height > b.height;
        return a.source < b.source;
    });
    std::vector<int> heights;
    for (const auto& c : cols) {
        heights.push_back(c.height);
        d.column_color_.push_back(d.labels_[static_cast<std::size_t>(c.source)]);
        d.column_back_.push_back(c.back);
    }
    d.shape_ = conjugate(Partition(heights));
    return d;
}

ColorMask ColoredDiagram::mask() const {
    ColorMask m = 0;
    for (int l : labels_) m |= ColorMask{1} << (l - 1);
    return m;
}

ColoredDiagram ColoredDiagram::restrict_to(ColorMask block) const {
    std::vector<Partition> sub;
    std::vector<int> labels;
    for (std::size_t s = 0; s < sources_.size(); ++s) {
        if (block & (ColorMask{1} << (labels_[s] - 1))) {
            sub.push_back(sources_[s]);
            labels.push_back(labels_[s]);
        }
    }
    if (sub.empty()) throw Error(ErrorKind::InvalidInput, "empty color block");
    ColoredDiagram d = color_sum(sub);
    for (int& c : d.column_color_) c = labels[static_cast<std::size_t>(c - 1)];
    d.labels_ = std::move(labels);
    return d;
}

int ColoredDiagram::column_of(int color, int back_index) const {
    for (int c = 1; c <= column_count(); ++c)
        if (column_color_[c - 1] == color && column_back_[c - 1] == back_index) return c;
    return 0;
}

// ---------------------------------------------------------------------------

Filling::Filling(Partition s, std::vector<std::vector<int>> r) : shape(std::move(s)), rows(std::move(r)) {
    if (static_cast<int>(rows.size()) != shape.length())
        throw Error(ErrorKind::InvalidInput, "filling row count does not match shape");
    for (int j = 1; j <= shape.length(); ++j)
        if (static_cast<int>(rows[j - 1].size()) != shape.part(j))
            throw Error(ErrorKind::InvalidInput, "filling row length does not match shape");
}

std::string SuperLetter::to_string() const {
    return std::to_string(magnitude) + (negative ? "~" : "");
}

SuperLetter SuperLetter::parse(const std::string& s) {
    if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty super letter");
    bool neg = s.back() == '~';
    std::string digits = neg ? s.substr(0, s.size() - 1) : s;
    int m = 0;
    try {
        m = std::stoi(digits);
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidInput, "bad super letter '" + s + "'");
    }
    if (m <= 0) throw Error(ErrorKind::InvalidInput, "super letters have positive magnitude");
    return {m, neg};
}

namespace detail {

std::vector<std::vector<int>> code_rows(const Filling& f) {
    std::vector<std::vector<int>> rows = f.rows;
    for (auto& row : rows)
        for (int& v : row) v *= 2;
    return rows;
}

std::vector<std::vector<int>> code_rows(const SuperFilling& f, SuperOrder order) {
    constexpr int kOffset = 1 << 20;
    std::vector<std::vector<int>> rows;
    for (const auto& row : f.rows) {
        std::vector<int> coded;
        for (const SuperLetter& l : row) {
            int rank = l.magnitude;
            if (l.negative)
                rank = order == SuperOrder::PositivesFirst ? kOffset - l.magnitude : l.magnitude - kOffset;
            coded.push_back(2 * rank + (l.negative ? 1 : 0));
        }
        rows.push_back(std::move(coded));
    }
    return rows;
}

} // namespace detail

namespace {

using CodedRows = std::vector<std::vector<int>>;

std::vector<Box> coded_descents(const CodedRows& rows) {
    std::vector<Box> out;
    for (std::size_t j = 1; j < rows.size(); ++j)
        for (std::size_t i = 0; i < rows[j].size(); ++i) {
            int up = rows[j][i], down = rows[j - 1][i];
            if (detail::letter_lt(down, up) || (up == down && (up & 1) == 1))
                out.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
        }
    return out;
}

std::vector<BoxPair> coded_inversion_pairs(const CodedRows& rows) {
    std::vector<BoxPair> out;
    detail::for_each_inversion_pair(rows, [&](int row, int a, int b) { out.push_back({{a, row}, {b, row}}); });
    return out;
}

// Inversions: attacking pairs whose earlier box in reading order holds a letter
// that is >=_- the later one.
std::vector<BoxPair> coded_inversions(const CodedRows& rows) {
    auto geq_minus = [](int x, int y) { return detail::letter_le_minus(y, x); };
    std::vector<BoxPair> out;
    for (std::size_t j = rows.size(); j-- > 0;) {
        const auto& row = rows[j];
        for (std::size_t a = 0; a < row.size(); ++a) {
            for (std::size_t b = a + 1; b < row.size(); ++b)
                if (geq_minus(row[a], row[b]))
                    out.push_back({{int(a) + 1, int(j) + 1}, {int(b) + 1, int(j) + 1}});
            if (j > 0) {
                // upper box (a, j+1) attacks lower boxes (k, j) with k < a
                for (std::size_t k = 0; k < a; ++k)
                    if (geq_minus(row[a], rows[j - 1][k]))
                        out.push_back({{int(a) + 1, int(j) + 1}, {int(k) + 1, int(j)}});
            }
        }
    }
    return out;
}

} // namespace

std::vector<Box> descents(const Filling& f) { return coded_descents(detail::code_rows(f)); }

int maj(const Filling& f) { return detail::coded_maj(detail::code_rows(f)); }

std::vector<BoxPair> inversion_pairs(const Filling& f) { return coded_inversion_pairs(detail::code_rows(f)); }

std::vector<BoxPair> inversions(const Filling& f) { return coded_inversions(detail::code_rows(f)); }

int inv(const Filling& f) { return detail::coded_inv(detail::code_rows(f)); }

int inv_from_attacks(const Filling& f) {
    int total = static_cast<int>(inversions(f).size());
    for (Box b : descents(f)) total -= arm(f.shape, b);
    return total;
}

SuperFilling to_super(const Filling& f) {
    SuperFilling s;
    s.shape = f.shape;
    for (const auto& row : f.rows) {
        std::vector<SuperLetter> r;
        for (int v : row) r.push_back({v, false});
        s.rows.push_back(std::move(r));
    }
    return s;
}

SuperStats super_stats(const SuperFilling& f, SuperOrder order) {
    CodedRows rows = detail::code_rows(f, order);
    SuperStats st;
    st.descents = coded_descents(rows);
    st.maj = detail::coded_maj(rows);
    st.inversion_pairs = coded_inversion_pairs(rows);
    st.inversions = coded_inversions(rows);
    st.compatible = true;
    for (std::size_t j = 0; j < f.rows.size(); ++j)
        for (const SuperLetter& l : f.rows[j]) {
            (l.negative ? st.negatives : st.positives) += 1;
            if (l.magnitude < static_cast<int>(j) + 1) st.compatible = false;
        }
    return st;
}

// ---------------------------------------------------------------------------

std::map<ColorMask, Filling> split_filling(const ColoredDiagram& d, const Filling& f,
                                           const std::vector<ColorMask>& blocks) {
    if (f.shape != d.shape()) throw Error(ErrorKind::InvalidInput, "filling shape differs from the colored diagram");
    std::map<ColorMask, Filling> out;
    for (ColorMask block : blocks) {
        ColoredDiagram sub = d.restrict_to(block);
        const Partition& shape = sub.shape();
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
        for (int j = 1; j <= shape.length(); ++j) {
            rows[j - 1].resize(static_cast<std::size_t>(shape.part(j)));
            for (int i = 1; i <= shape.part(j); ++i) {
                int src = d.column_of(sub.column_color(i), sub.column_back_index(i));
                rows[j - 1][i - 1] = f.at({src, j});
            }
        }
        out.emplace(block, Filling(shape, std::move(rows)));
    }
    return out;
}

Filling merge_fillings(const ColoredDiagram& d, const std::map<ColorMask, Filling>& parts) {
    const Partition& shape = d.shape();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    for (int j = 1; j <= shape.length(); ++j) rows[j - 1].assign(static_cast<std::size_t>(shape.part(j)), 0);
    ColorMask covered = 0;
    for (const auto& [block, filling] : parts) {
        if (covered & block) throw Error(ErrorKind::InvalidInput, "overlapping color blocks");
        covered |= block;
        ColoredDiagram sub = d.restrict_to(block);
        if (filling.shape != sub.shape()) throw Error(ErrorKind::InvalidInput, "block filling has the wrong shape");
        for (int j = 1; j <= sub.shape().length(); ++j)
            for (int i = 1; i <= sub.shape().part(j); ++i) {
                int dst = d.column_of(sub.column_color(i), sub.column_back_index(i));
                rows[j - 1][dst - 1] = filling.at({i, j});
            }
    }
    if (covered != d.mask()) throw Error(ErrorKind::InvalidInput, "blocks do not cover all colors");
    return Filling(shape, std::move(rows));
}

// ---------------------------------------------------------------------------

namespace {

Filling empty_filling(const Partition& shape) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    for (int j = 1; j <= shape.length(); ++j) rows[j - 1].assign(static_cast<std::size_t>(shape.part(j)), 1);
    return Filling(shape, std::move(rows));
}

} // namespace

void for_each_filling(const Partition& shape, int max_entry, const std::function<void(const Filling&)>& fn) {
    if (max_entry < 1) throw Error(ErrorKind::InvalidInput, "max_entry must be at least 1");
    std::vector<Box> order = boxes_in_reading_order(shape);
    Filling f = empty_filling(shape);
    while (true) {
        fn(f);
        // odometer: the last box in reading order is the least significant digit
        std::size_t k = order.size();
        while (k > 0) {
            int& v = f.at(order[k - 1]);
            if (v < max_entry) {
                ++v;
                break;
            }
            v = 1;
            --k;
        }
        if (k == 0) return;
    }
}

std::vector<Filling> enumerate_fillings(const Partition& shape, int max_entry) {
    std::vector<Filling> out;
    for_each_filling(shape, max_entry, [&](const Filling& f) { out.push_back(f); });
    return out;
}

void for_each_filling_with_content(const Partition& shape, const std::vector<int>& content,
                                   const std::function<void(const Filling&)>& fn) {
    std::vector<int> letters;
    for (std::size_t v = 0; v < content.size(); ++v)
        letters.insert(letters.end(), static_cast<std::size_t>(content[v]), static_cast<int>(v) + 1);
    if (static_cast<int>(letters.size()) != shape.size())
        throw Error(ErrorKind::SizeMismatch, "content size differs from the number of boxes");
    std::vector<Box> order = boxes_in_reading_order(shape);
    Filling f = empty_filling(shape);
    do {
        for (std::size_t k = 0; k < order.size(); ++k) f.at(order[k]) = letters[k];
        fn(f);
    } while (std::next_permutation(letters.begin(), letters.end()));
}

std::vector<int> reading_word(const Filling& f) {
    std::vector<int> w;
    for (Box b : boxes_in_reading_order(f.shape)) w.push_back(f.at(b));
    return w;
}

Filling filling_from_reading_word(const Partition& shape, const std::vector<int>& word) {
    std::vector<Box> order = boxes_in_reading_order(shape);
    if (order.size() != word.size()) throw Error(ErrorKind::SizeMismatch, "word length differs from shape size");
    Filling f = empty_filling(shape);
    for (std::size_t k = 0; k < order.size(); ++k) f.at(order[k]) = word[k];
    return f;
}

bool is_standard(const Filling& f) {
    std::vector<int> w = reading_word(f);
    std::sort(w.begin(), w.end());
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] != static_cast<int>(k) + 1) return false;
    return true;
}

std::vector<int> inverse_descents(const std::vector<int>& word) {
    std::vector<int> position(word.size() + 1, -1);
    for (std::size_t k = 0; k < word.size(); ++k) {
        int v = word[k];
        if (v < 1 || v > static_cast<int>(word.size()) || position[static_cast<std::size_t>(v)] != -1)
            throw Error(ErrorKind::NotStandard, "word is not a permutation");
        position[static_cast<std::size_t>(v)] = static_cast<int>(k);
    }
    std::vector<int> out;
    for (std::size_t i = 1; i < word.size(); ++i)
        if (position[i + 1] < position[i]) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> ides(const Filling& f) {
    if (!is_standard(f)) throw Error(ErrorKind::NotStandard, "filling is not standard");
    return inverse_descents(reading_word(f));
}

namespace {

void ssyt_fill(const Partition& shape, std::vector<int>& remaining, Filling& f, std::size_t idx,
               const std::vector<Box>& order, std::vector<Filling>& out) {
    if (idx == order.size()) {
        out.push_back(f);
        return;
    }
    Box b = order[idx];
    int lo = 1;
    if (b.col > 1) lo = std::max(lo, f.at({b.col - 1, b.row}));
    if (b.row > 1) lo = std::max(lo, f.at({b.col, b.row - 1}) + 1);
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
        if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
        --remaining[static_cast<std::size_t>(v - 1)];
        f.at(b) = v;
        ssyt_fill(shape, remaining, f, idx + 1, order, out);
        ++remaining[static_cast<std::size_t>(v - 1)];
    }
}

} // namespace

std::vector<Filling> ssyt(const Partition& shape, const std::vector<int>& weight) {
    int total = std::accumulate(weight.begin(), weight.end(), 0);
    if (total != shape.size()) throw Error(ErrorKind::SizeMismatch, "weight size differs from shape size");
    std::vector<Box> order;  // bottom row first, left to right
    for (int j = 1; j <= shape.length(); ++j)
        for (int i = 1; i <= shape.part(j); ++i) order.push_back({i, j});
    std::vector<int> remaining = weight;
    Filling f = empty_filling(shape);
    std::vector<Filling> out;
    ssyt_fill(shape, remaining, f, 0, order, out);
    return out;
}

long long kostka_number(const Partition& shape, const std::vector<int>& weight) {
    return static_cast<long long>(ssyt(shape, weight).size());
}

std::vector<Filling> standard_tableaux(const Partition& shape) {
    return ssyt(shape, std::vector<int>(static_cast<std::size_t>(shape.size()), 1));
}

} // namespace macq
