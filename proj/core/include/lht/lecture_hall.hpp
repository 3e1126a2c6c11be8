#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lht/qseries.hpp"

namespace lht {

/// The four truncated families. L and Lbar use denominators (n, ..., n-k+1);
/// AL and ALbar use (n-k+1, ..., n).
///   L      strict chain, last ratio >= 0, floor statistics
///   Lbar   weak chain,   last ratio >  0, ceiling statistics
///   AL     weak chain,   last ratio >= 0, floor statistics
///   ALbar  strict chain, last ratio >  0, ceiling statistics
enum class Variant { L, Lbar, AL, ALbar };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);
bool uses_ceiling(Variant v);

struct BoundedSequence {
    Variant variant = Variant::L;
    int n = 0;
    int k = 0;
    std::vector<int> entries;

    std::vector<int> denominators() const;
    int weight() const;
    /// Σ ⌊e_i/s_i⌋ (or ceilings for the bar variants).
    int u_exponent() const;
    /// Number of odd floors (or ceilings).
    int v_exponent() const;
    bool is_valid() const;

    friend bool operator==(const BoundedSequence&, const BoundedSequence&) = default;
    friend auto operator<=>(const BoundedSequence& a, const BoundedSequence& b) { return a.entries <=> b.entries; }
};

std::vector<int> denominators(Variant v, int n, int k);

/// All members with entry sum <= cap, in lexicographic order of entries.
std::vector<BoundedSequence> enum_set(Variant v, int n, int k, int cap);
/// Σ u^{|⌊·⌋|} v^{o(⌊·⌋)} q^{|·|} over the truncated set (ceilings for bar variants).
QSeries genfun_enum(Variant v, int n, int k, int cap);
/// The four product formulas.
QSeries genfun_closed(Variant v, int n, int k, int cap);

/// λ ↦ λ⁺: every entry increased by one, L -> Lbar, AL -> ALbar.
BoundedSequence plus_map(const BoundedSequence& s);
BoundedSequence minus_map(const BoundedSequence& s);

/// h_k^{(n)}, e_k^{(n)} and their bar versions at the principal
/// specialization.
QSeries h_series(int n, int k, int cap);
QSeries e_series(int n, int k, int cap);
QSeries hbar_series(int n, int k, int cap);
QSeries ebar_series(int n, int k, int cap);

/// Index-tolerant versions used inside determinants: 0 for negative k (and
/// for k > n in the e family), 1 for k = 0.
QSeries h_entry(int n, int k, int cap, bool bar);
QSeries e_entry(int n, int k, int cap, bool bar);

/// Both h/e orthogonality relations at (m, n) up to cap.
bool orthogonality_check(int m, int n, int cap);

/// Σ q^{|λ|} over λ_1/n >= λ_2/(n-1) >= ... >= λ_n/1 >= 0.
QSeries lecture_hall_partition_series(int n, int cap);

std::ostream& operator<<(std::ostream& os, const BoundedSequence& s);

}  // namespace lht
