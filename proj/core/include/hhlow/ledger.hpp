#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhlow/rational.hpp"

namespace hhlow {

/// One named power of λ (or N) with its provenance.
struct LedgerRow {
    std::string name;
    AffineExponent exponent;
    std::string source;   // nonempty citation text
    std::string note;     // optional flag, e.g. the micro-window clamp
};

/// Admissible δ range; default is the working interval (1/6, 5/8].
struct DeltaDomain {
    Rational lo{1, 6};  // exclusive
    Rational hi{5, 8};  // inclusive
    bool contains(const Rational& d) const { return lo < d && d <= hi; }
};

struct BalanceTable {
    std::vector<LedgerRow> rows;
    AffineExponent total;          // -3 + 7δ/4
    AffineExponent minimal_total;  // -3 + 2δ  (local L⁴ row zeroed)
};

/// Summary balance of the five mechanism rows.
BalanceTable table1();

/// The sharp variants kept alongside the simplified table rows.
std::vector<LedgerRow> sharp_rows();

/// Cap/tile/window counting exponents.
std::vector<LedgerRow> counting_rows();

struct NegativityResult {
    bool always_negative = false;
    std::optional<Rational> witness;  // a δ in the domain where a+bδ ≥ 0
};

/// Exact sign analysis of a + b·δ < 0 over dom (lo exclusive, hi inclusive).
NegativityResult negativity_interval(const AffineExponent& e, const DeltaDomain& dom);

struct ThresholdResult {
    std::optional<Rational> crossing;  // δ* with lhs = rhs; empty for parallel lines
    bool parallel = false;
    bool identical = false;            // parallel with equal constant part
    // Inequality direction for δ below/above the crossing (or everywhere when
    // parallel): -1 means lhs < rhs, 0 equal, +1 lhs > rhs.
    int below = 0;
    int above = 0;
};

/// Exact crossing of two affine exponents.
ThresholdResult threshold(const AffineExponent& lhs, const AffineExponent& rhs);

/// One evaluated exponent inside a branch report.
struct BranchEntry {
    std::string name;
    AffineExponent exponent;
    Rational value;       // exponent evaluated at δ
    std::string source;
    bool summable = false;          // value < target
    Rational summability_target{0};  // 0 for λ-series, -1 for squared-norm series
    bool has_target = false;
};

/// Piecewise conclusion of the time-maximum appendix at a fixed δ.
struct BranchReport {
    Rational delta;
    bool in_working_range = true;   // δ ∈ (1/6, 5/8]
    bool endpoint_branch = true;    // δ ≤ 5/9
    Rational threshold_delta{5, 9};
    Rational gap_at_delta;          // (-9/4+5δ/4) - (-1-δ)
    std::vector<BranchEntry> entries;
    std::string conclusion;
};

/// Evaluates every time-maximum exponent at δ, selects the endpoint vs
/// ε-loss branch at the 5/9 threshold, and checks series summability.
/// δ outside (0,1) → parameter_error; outside (1/6,5/8] → warning flag.
BranchReport branch_report(const Rational& delta);

}  // namespace hhlow
