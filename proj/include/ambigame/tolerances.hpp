#pragma once

namespace ambigame {

/// Central numeric tolerances. Every module reads from one of these so that
/// a CLI-level override lands in exactly one place.
struct Tolerances {
    double mass = 1e-12;   ///< probability-mass bookkeeping (normalization, support)
    double order = 1e-10;  ///< stochastic-order and lattice comparisons
    double regret = 1e-9;  ///< equilibrium regret threshold
    double snap = 1e-9;    ///< grid snapping for pushforward targets
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t;
    return t;
}

} // namespace ambigame
