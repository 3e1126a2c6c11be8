#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lht/partition.hpp"
#include "lht/qseries.hpp"
#include "lht/serialize.hpp"

namespace lht {

enum class Relation { Less, LessEq, Greater, GreaterEq };

/// Row and column relations between consecutive ratios T(i,j)/(n+c(i,j)).
/// Supported: (≥,>), (<,≤), and the positive-entry families (>,≥), (≤,<).
struct OrderType {
    Relation row = Relation::GreaterEq;
    Relation col = Relation::Greater;
    int n = 1;

    static OrderType ge_gt(int n) { return {Relation::GreaterEq, Relation::Greater, n}; }
    static OrderType lt_le(int n) { return {Relation::Less, Relation::LessEq, n}; }
    static OrderType gt_ge(int n) { return {Relation::Greater, Relation::GreaterEq, n}; }
    static OrderType le_lt(int n) { return {Relation::LessEq, Relation::Less, n}; }
    /// "ge-gt", "lt-le", "gt-ge", "le-lt".
    static OrderType parse(std::string_view name, int n);

    std::string name() const;
    /// The (>,≥) and (≤,<) families: positive entries, ceiling weight.
    bool is_bar() const;
    /// Ratios weakly decrease along rows (types (≥,>) and (>,≥)).
    bool is_decreasing() const;
    void require_supported() const;

    friend bool operator==(const OrderType&, const OrderType&) = default;
};

/// Denominator n + c(i,j).
int cell_denominator(int n, int i, int j);

/// A monomial q^q_exp u^u_exp v^v_exp.
struct Weight {
    int q_exp = 0;
    int u_exp = 0;
    int v_exp = 0;
    friend bool operator==(const Weight&, const Weight&) = default;
};

class Tableau {
public:
    Tableau(SkewShape shape, OrderType type, std::vector<int> entries);
    /// Rows of entries, each listing the row's cells left to right.
    static Tableau from_rows(SkewShape shape, OrderType type, const std::vector<std::vector<int>>& rows);

    const SkewShape& shape() const { return shape_; }
    const OrderType& type() const { return type_; }
    /// Entries aligned with shape().cells().
    const std::vector<int>& entries() const { return entries_; }
    int at(int i, int j) const;
    std::vector<std::vector<int>> rows() const;
    int entry_sum() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    SkewShape shape_;
    OrderType type_;
    std::vector<int> entries_;
};

bool validate(const Tableau& t);
/// Floor weight, or ceiling weight when bar is set.
Weight weight(const Tableau& t, bool bar);
/// The family's own weight: ceilings for the bar types.
Weight natural_weight(const Tableau& t);

/// Calls visit for every valid tableau of the shape and type with entry sum
/// <= cap; the visit order is deterministic.
void for_each_tableau(const SkewShape& shape, const OrderType& type, int cap,
                      const std::function<void(const std::vector<int>&, int)>& visit);
std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, const OrderType& type, int cap);
std::int64_t count_tableaux(const SkewShape& shape, const OrderType& type, int cap);

/// Σ wt(T) at the principal specialization.
QSeries ls_series(const SkewShape& shape, const OrderType& type, int cap);

enum class JtForm { H, E };
QSeries jacobi_trudi(const SkewShape& shape, const OrderType& type, int cap, JtForm form);

/// The product formulas for straight shapes.
QSeries ls_product(const Partition& lambda, const OrderType& type, int cap);
/// Π_{i<j} (q^{λ_j+n-j} - q^{λ_i+n-i}) / (q^{i-1} - q^{j-1}) as a series.
QSeries vandermonde_ratio(const Partition& lambda, int n, int cap);
/// s_λ(1, q, ..., q^{n-1}) by the hook-content product.
QSeries principal_schur(const Partition& lambda, int n, int cap);

/// T ↦ T⁺ from (≥,>) to (>,≥) and from (<,≤) to (≤,<); inverse maps back.
Tableau tableau_plus(const Tableau& t);
Tableau tableau_minus(const Tableau& t);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

/// The example tableau with n = 5, shape (6,6,4,3)/(3,1), type (≥,>).
Tableau example_tableau();

}  // namespace lht
