#pragma once

// Partitions, Young diagrams (French convention: row 1 at the bottom), the
// column-colored diagram of an entry-wise sum, and fillings with their
// descent / major index / inversion statistics.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace macq {

class Partition {
public:
    Partition() = default;
    /// Validates weakly decreasing positive parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// lambda_j with 1-based j; zero beyond the length.
    int part(int j) const { return j >= 1 && j <= length() ? parts_[j - 1] : 0; }

    std::string to_string() const;

    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition conjugate(const Partition& p);
/// Prefix-sum comparison; throws SizeMismatch when |a| != |b|.
bool dominance_leq(const Partition& a, const Partition& b);
Partition oplus(const Partition& a, const Partition& b);
/// n(mu) = sum (i-1) mu_i.
int n_statistic(const Partition& p);
/// Partitions of n, reverse lexicographic ([n] first); a linear extension of dominance.
const std::vector<Partition>& partitions_of(int n);
/// Sorts a weak composition into a partition (zeros dropped).
Partition sort_to_partition(std::vector<int> composition);
/// Hook shape (n-s, 1^s).
Partition hook(int n, int s);

/// Box (i, j): column i, row j, both 1-based.
struct Box {
    int col = 1;
    int row = 1;
    friend auto operator<=>(const Box&, const Box&) = default;
};

bool contains(const Partition& p, Box b);
int arm(const Partition& p, Box b);
int coarm(const Partition& p, Box b);
int leg(const Partition& p, Box b);
int coleg(const Partition& p, Box b);
/// All boxes in reading order: rows top to bottom, left to right within a row.
std::vector<Box> boxes_in_reading_order(const Partition& p);

/// Color sets are bitmasks over [r]: color b is bit (b-1).
using ColorMask = std::uint32_t;

/// Young diagram of the entry-wise sum of its sources with columns colored by
/// source. Columns are sorted by decreasing height, ties broken by source order.
class ColoredDiagram {
public:
    ColoredDiagram() = default;
    static ColoredDiagram color_sum(const std::vector<Partition>& sources);

    const std::vector<Partition>& sources() const { return sources_; }
    const Partition& shape() const { return shape_; }
    /// Number of sources of the full problem (colors are labels in [r]).
    int color_count() const { return static_cast<int>(labels_.size()); }
    /// Original color labels present in this diagram, increasing.
    const std::vector<int>& labels() const { return labels_; }
    ColorMask mask() const;

    int column_count() const { return static_cast<int>(column_color_.size()); }
    /// Color label (1-based) of column i (1-based).
    int column_color(int col) const { return column_color_.at(col - 1); }
    /// Index (1-based) of column i within its source partition.
    int column_back_index(int col) const { return column_back_.at(col - 1); }
    int box_color(Box b) const { return column_color(b.col); }

    /// Diagram of lambda^B for a block B of colors, keeping the original labels.
    ColoredDiagram restrict_to(ColorMask block) const;
    /// Column of this diagram holding (color, back index); 0 if absent.
    int column_of(int color, int back_index) const;

private:
    std::vector<Partition> sources_;
    std::vector<int> labels_;
    Partition shape_;
    std::vector<int> column_color_;
    std::vector<int> column_back_;
};

/// Filling of a Young diagram by positive integers; rows bottom first.
struct Filling {
    Partition shape;
    std::vector<std::vector<int>> rows;

    Filling() = default;
    Filling(Partition s, std::vector<std::vector<int>> r);

    int at(Box b) const { return rows[b.row - 1][b.col - 1]; }
    int& at(Box b) { return rows[b.row - 1][b.col - 1]; }
    friend bool operator==(const Filling&, const Filling&) = default;
};

/// Letter of the super alphabet: i or its negative copy (written "i~").
struct SuperLetter {
    int magnitude = 1;
    bool negative = false;
    friend bool operator==(const SuperLetter&, const SuperLetter&) = default;
    std::string to_string() const;
    static SuperLetter parse(const std::string& s);
};

/// Total orders of the super alphabet, both preserving 1 < 2 < ...
enum class SuperOrder {
    PositivesFirst,  ///< 1 < 2 < ... < 2~ < 1~
    NegativesFirst,  ///< 1~ < 2~ < ... < 1 < 2 < ...
};

struct SuperFilling {
    Partition shape;
    std::vector<std::vector<SuperLetter>> rows;
    SuperLetter at(Box b) const { return rows[b.row - 1][b.col - 1]; }
};

using BoxPair = std::pair<Box, Box>;

/// Upper boxes of strict vertical decreases.
std::vector<Box> descents(const Filling& f);
int maj(const Filling& f);
/// Counterclockwise-increasing triples with a virtual -infinity below row 1.
std::vector<BoxPair> inversion_pairs(const Filling& f);
/// Attacking pairs (first in reading order holds the larger entry).
std::vector<BoxPair> inversions(const Filling& f);
/// #InvP.
int inv(const Filling& f);
/// #Inv minus the arm lengths of the descents; equals inv(f).
int inv_from_attacks(const Filling& f);

struct SuperStats {
    std::vector<Box> descents;
    int maj = 0;
    std::vector<BoxPair> inversion_pairs;
    std::vector<BoxPair> inversions;
    int negatives = 0;  ///< m(sigma)
    int positives = 0;  ///< p(sigma)
    bool compatible = false;  ///< |sigma(x,y)| >= y everywhere
};
SuperStats super_stats(const SuperFilling& f, SuperOrder order = SuperOrder::PositivesFirst);
SuperFilling to_super(const Filling& f);

/// Splits a filling of the colored diagram into fillings of lambda^B, one per block.
std::map<ColorMask, Filling> split_filling(const ColoredDiagram& d, const Filling& f,
                                           const std::vector<ColorMask>& blocks);
Filling merge_fillings(const ColoredDiagram& d, const std::map<ColorMask, Filling>& parts);

/// All n^(#boxes) fillings with entries in [n], lexicographic in reading order.
void for_each_filling(const Partition& shape, int max_entry, const std::function<void(const Filling&)>& fn);
std::vector<Filling> enumerate_fillings(const Partition& shape, int max_entry);
/// Fillings whose multiset of entries is {1^c1, 2^c2, ...}, lexicographic in reading order.
void for_each_filling_with_content(const Partition& shape, const std::vector<int>& content,
                                   const std::function<void(const Filling&)>& fn);

std::vector<int> reading_word(const Filling& f);
Filling filling_from_reading_word(const Partition& shape, const std::vector<int>& word);
bool is_standard(const Filling& f);
/// Inverse descents of a permutation word given as values 1..n.
std::vector<int> inverse_descents(const std::vector<int>& word);
/// Inverse descents of the reading word; throws NotStandard.
std::vector<int> ides(const Filling& f);

/// Semistandard tableaux of the given shape and weight (weakly increasing rows,
/// strictly increasing up columns).
std::vector<Filling> ssyt(const Partition& shape, const std::vector<int>& weight);
long long kostka_number(const Partition& shape, const std::vector<int>& weight);
std::vector<Filling> standard_tableaux(const Partition& shape);

namespace detail {

// Letters are coded as ints: code = 2*rank + (negative ? 1 : 0). Ordinary
// entries v become 2v. The sentinel below row 1 is smaller than any code.
inline constexpr int kBelowFloor = -(1 << 29);

inline bool letter_lt(int a, int b) { return (a >> 1) < (b >> 1); }
inline bool letter_le_plus(int a, int b) { return letter_lt(a, b) || (a == b && (a & 1) == 0); }
inline bool letter_le_minus(int a, int b) { return letter_lt(a, b) || (a == b && (a & 1) == 1); }

inline bool counterclockwise_increasing(int s1, int s2, int s3) {
    return (letter_le_plus(s1, s3) && letter_le_minus(s3, s2)) ||
           (letter_le_minus(s3, s2) && letter_le_minus(s2, s1)) ||
           (letter_le_minus(s2, s1) && letter_le_plus(s1, s3));
}

/// Calls fn(row, left_col, right_col) (1-based) for every inversion pair.
template <class Rows, class Fn>
void for_each_inversion_pair(const Rows& rows, Fn&& fn) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const auto& row = rows[j];
        for (std::size_t a = 0; a < row.size(); ++a) {
            int s1 = row[a];
            int s3 = j == 0 ? kBelowFloor : rows[j - 1][a];
            for (std::size_t b = a + 1; b < row.size(); ++b)
                if (counterclockwise_increasing(s1, row[b], s3))
                    fn(static_cast<int>(j) + 1, static_cast<int>(a) + 1, static_cast<int>(b) + 1);
        }
    }
}

/// maj over coded rows, legs taken in the diagram the rows describe.
template <class Rows>
int coded_maj(const Rows& rows) {
    int total = 0;
    for (std::size_t j = 1; j < rows.size(); ++j) {
        for (std::size_t i = 0; i < rows[j].size(); ++i) {
            int up = rows[j][i];
            int down = rows[j - 1][i];
            if (letter_lt(down, up) || (up == down && (up & 1) == 1)) {
                std::size_t height = j + 1;
                while (height < rows.size() && rows[height].size() > i) ++height;
                total += static_cast<int>(height - 1 - j) + 1;
            }
        }
    }
    return total;
}

template <class Rows>
int coded_inv(const Rows& rows) {
    int count = 0;
    for_each_inversion_pair(rows, [&](int, int, int) { ++count; });
    return count;
}

std::vector<std::vector<int>> code_rows(const Filling& f);
std::vector<std::vector<int>> code_rows(const SuperFilling& f, SuperOrder order);

} // namespace detail

} // namespace macq
