#include "hhlow/ledger.hpp"

namespace hhlow {

namespace {
AffineExponent aff(Rational a, Rational b) { return AffineExponent(a, b); }
}  // namespace

BalanceTable table1() {
    BalanceTable t;
    t.rows = {
        {"local_l4", aff(0, {-1, 4}), "local (4,4) estimate on a tile", ""},
        {"phase_ibp_simplified", aff(-2, 1), "fivefold time IBP, simplified bound", ""},
        {"nullform_2rho_hminus", aff(-2, 3), "null form + 2x(rho-IBP) + H^-1 channel", ""},
        {"angular_l2_tiling", aff(1, -2), "angular l2 sum + tiling in time", ""},
        {"rank3_decoupling", aff(0, 0), "rank-3 decoupling, gain cancels tile cost", ""},
    };
    t.total = aff(0, 0);
    for (const auto& r : t.rows) t.total = t.total + r.exponent;
    // Same sum with the optional local L4 row zeroed.
    t.minimal_total = t.total - t.rows[0].exponent;
    return t;
}

std::vector<LedgerRow> sharp_rows() {
    return {
        {"phase_ibp_sharp", aff({-19, 4}, {13, 2}), "sevenfold IBP, full derivative bookkeeping", ""},
        {"mixed_time_case", aff({-29, 4}, {19, 2}), "five time IBP with oscillator in the amplitude + 2 rho-IBP", ""},
        {"amplitude_l2", aff({-25, 4}, 7), "amplitude block in L2 over the tile", ""},
        {"counting_decoupling_sum", aff({-13, 2}, {19, 2}), "tile growth x phase suppression x spatial block residue", ""},
        {"tile_growth", aff(0, 2), "(K/kappa)^{2/3} growth compensated by tile bookkeeping", ""},
    };
}

std::vector<LedgerRow> counting_rows() {
    return {
        {"cap_count", aff({4, 3}, -2), "active caps at radius lambda^{-2/3} in a lambda^{-delta} cone", ""},
        {"tile_count", aff({5, 3}, -2), "caps x longitudinal cylinders per packet", ""},
        {"l2_cost", aff({5, 6}, -1), "square root of the tile count", ""},
        {"net_counting_decoupling", aff({1, 6}, -1), "l2 cost times the lambda^{-2/3} decoupling gain", ""},
        {"micro_window_count", aff({-1, 2}, 1), "micro-windows of length lambda^{-1} in one working window",
         "literal formula; clamp at 1 in harness"},
        {"window_count", aff({3, 2}, -1), "working windows covering the unit time interval", ""},
    };
}

NegativityResult negativity_interval(const AffineExponent& e, const DeltaDomain& dom) {
    if (!(dom.lo < dom.hi)) throw parameter_error("empty delta domain");
    NegativityResult out;
    const Rational at_lo = e.eval(dom.lo);
    const Rational at_hi = e.eval(dom.hi);
    if (e.b.sign() >= 0) {
        // Nondecreasing: max attained at hi.
        out.always_negative = at_hi.sign() < 0;
        if (!out.always_negative) out.witness = dom.hi;
        return out;
    }
    // Decreasing: sup at lo, not attained.
    out.always_negative = at_lo.sign() <= 0;
    if (!out.always_negative) {
        // f(lo) > 0; f hits zero at d0 = -a/b. Any point of (lo, min(d0,hi)]
        // is a witness; use the midpoint of the positive stretch.
        Rational d0 = -e.a / e.b;
        Rational top = d0 < dom.hi ? d0 : dom.hi;
        Rational w = (dom.lo + top) / Rational(2);
        if (e.eval(w).sign() < 0) w = top;  // top itself must then be ≥ 0
        out.witness = w;
    }
    return out;
}

ThresholdResult threshold(const AffineExponent& lhs, const AffineExponent& rhs) {
    ThresholdResult r;
    AffineExponent d = lhs - rhs;  // d.a + d.b δ
    if (d.b.is_zero()) {
        r.parallel = true;
        r.identical = d.a.is_zero();
        r.below = r.above = d.a.sign();
        return r;
    }
    r.crossing = -d.a / d.b;
    // Just below the crossing, sign of d is -sign(b); above it, +sign(b).
    r.below = -d.b.sign();
    r.above = d.b.sign();
    return r;
}

BranchReport branch_report(const Rational& delta) {
    if (!(Rational(0) < delta && delta < Rational(1))) {
        throw parameter_error("delta must lie in (0,1), got " + delta.str());
    }
    BranchReport rep;
    rep.delta = delta;
    rep.in_working_range = DeltaDomain{}.contains(delta);
    rep.threshold_delta = Rational(5, 9);
    rep.endpoint_branch = delta <= rep.threshold_delta;

    const AffineExponent window_endpoint = {{-9, 4}, {5, 4}};
    const AffineExponent target = {-1, -1};
    rep.gap_at_delta = (window_endpoint - target).eval(delta);

    auto add = [&](std::string name, AffineExponent e, std::string source,
                   std::optional<Rational> target_for_sum) {
        BranchEntry be;
        be.name = std::move(name);
        be.exponent = e;
        be.value = e.eval(delta);
        be.source = std::move(source);
        if (target_for_sum) {
            be.has_target = true;
            be.summability_target = *target_for_sum;
            be.summable = be.value < *target_for_sum;
        }
        rep.entries.push_back(std::move(be));
    };

    add("weak_window_max", {{-5, 4}, {5, 2}}, "tile->max with the L2 H^-1 block", std::nullopt);
    add("window_max_strengthened", window_endpoint, "tile->max with the full tabulated block",
        std::nullopt);
    add("single_frequency_endpoint", target, "target per-frequency decay", Rational(0));
    add("leray_commutator", {-3, 3}, "commutator correction, better by three powers", Rational(-1));
    add("squared_norm_series", {-6, {7, 2}}, "frequency series of squared norms", Rational(-1));
    add("global_sup_series", {-2, -1}, "global series exponent -(2+delta)", Rational(-1));

    if (rep.endpoint_branch) {
        rep.conclusion =
            "endpoint branch: per-frequency decay lambda^(" + target.eval(delta).str() +
            ") holds with no epsilon loss (window max exponent " +
            window_endpoint.eval(delta).str() + " <= target)";
    } else {
        rep.conclusion =
            "epsilon branch: window max exponent " + window_endpoint.eval(delta).str() +
            " misses the target " + target.eval(delta).str() + " by " + rep.gap_at_delta.str() +
            "; almost-maximal bound with arbitrarily small epsilon applies";
    }
    return rep;
}

}  // namespace hhlow
