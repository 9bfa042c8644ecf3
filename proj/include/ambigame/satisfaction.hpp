#pragma once

#include <cstdint>
#include <string>

#include "ambigame/payoffvec.hpp"

namespace ambigame {

/// Expected utility of the vector under one state prior: the prior-weighted
/// average of the entry means (utilities are already baked into the entries).
double s0(const PayoffDistVector& pi, const DiscreteDistribution& rho);

/// Scalar satisfaction of the vector under a traditional / alarmist /
/// enterprising attitude: single / min / max of s0 over the prior set.
/// Throws for custom preferences, which have no scalar.
double satisfaction(const PayoffDistVector& pi, const Attitude& attitude);

/// Strict preference between vectors with the same owner. Satisfaction
/// attitudes compare with exact strict >; custom attitudes delegate.
bool prefers(const PayoffDistVector& pi, const PayoffDistVector& pi_other, const Attitude& attitude);

struct ShapeVerdict {
    bool holds = true;
    std::string counterexample; ///< empty when no counterexample was found
};

/// Sampled curvature report for a satisfaction attitude. A "true" verdict
/// means no counterexample in the requested number of samples, not a proof.
struct ShapeReport {
    ShapeVerdict concave;
    ShapeVerdict convex;
    ShapeVerdict quasi_concave;
    ShapeVerdict strongly_concave;
    ShapeVerdict strongly_convex;
    std::uint64_t seed = 0;
    int samples = 0;
};

ShapeReport check_shape(const Attitude& attitude, int samples = 1000, std::uint64_t seed = 12345);

/// Spot-samples a custom comparator for irreflexivity and transitivity on
/// random vectors over the player's utility grid; throws validation_error on
/// a violation. Satisfaction attitudes pass trivially.
void spot_check_comparator(const GameSpec& game, int n, int t, int triples = 100,
                           std::uint64_t seed = 20240901);

/// Structural validation happens in the GameSpec constructor; this adds the
/// comparator sampling for every custom attitude in the game.
void validate_game(const GameSpec& game, std::uint64_t seed = 20240901);

} // namespace ambigame
