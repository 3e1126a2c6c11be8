#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lht {

/// Integer partition stored without trailing zeros. Rows and columns are
/// 1-based in the accessors; parts beyond the length read as 0.
class Partition {
public:
    Partition() = default;
    /// Accepts a weakly decreasing list; trailing zeros are dropped.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// "6,6,4,3" or "(6,6,4,3)"; "", "()" and "0" give the empty partition.
    static Partition parse(std::string_view text);
    /// All partitions of size exactly n, in reverse lexicographic order.
    static std::vector<Partition> all_of_size(int n);
    /// (1^k).
    static Partition column(int k);

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    std::span<const int> parts() const { return parts_; }

    Partition conjugate() const;
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

private:
    std::vector<int> parts_;
};

/// Σ (i-1) λ_i.
int n_stat(const Partition& p);
inline int content(int i, int j) { return j - i; }
/// μ ⊆ λ cell-wise.
bool contains(const Partition& outer, const Partition& inner);
/// Every μ ⊆ outer, in increasing order.
std::vector<Partition> sub_partitions(const Partition& outer);

struct Cell {
    int row;
    int col;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner = {});

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    /// Row-major cell list.
    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool contains_cell(int i, int j) const { return j > inner_[i] && j <= outer_[i]; }
    SkewShape conjugate() const { return SkewShape(outer_.conjugate(), inner_.conjugate()); }
    std::string to_string() const;

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.outer_ == b.outer_ && a.inner_ == b.inner_;
    }

private:
    Partition outer_;
    Partition inner_;
    std::vector<Cell> cells_;
};

}  // namespace lht
