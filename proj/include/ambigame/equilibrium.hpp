#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ambigame/bestresponse.hpp"

namespace ambigame {

enum class VerifyMode { action, distribution };
const char* to_string(VerifyMode mode);

struct PairVerification {
    int player = 0;
    int type = 0;
    double regret = 0.0;
    double off_support_mass = 0.0;
    bool ok = true;
    bool approximate = false; ///< custom preference checked on a grid only
    std::string witness;      ///< best deviation, empty when ok
};

struct EquilibriumReport {
    VerifyMode mode = VerifyMode::action;
    double epsilon = 0.0;
    bool verdict = true;
    std::vector<PairVerification> pairs;

    double max_regret() const;
    double max_off_support_mass() const;
};

struct VerifyOptions {
    double custom_grid_step = 0.05; ///< simplex step for custom distribution checks
    long long grid_cap = 1000000;
};

/// Membership test for the two equilibrium notions. Action mode checks that
/// each player-type's support sits inside the eps-maximal action set;
/// distribution mode compares against the distribution best response.
EquilibriumReport verify_profile(const GameSpec& game, const StrategyProfile& profile,
                                 VerifyMode mode, double eps, const VerifyOptions& options = {});

struct PureEquilibrium {
    std::vector<int> actions; ///< action index per agent
    EquilibriumReport report;
};

/// Exhaustive verification of every pure profile. Throws cap_exceeded_error
/// when the profile count exceeds the cap; jobs > 1 splits the scan across
/// threads with a deterministic merge.
std::vector<PureEquilibrium> enumerate_pure_equilibria(const GameSpec& game, VerifyMode mode,
                                                       double eps, long long cap = 1000000,
                                                       int jobs = 1);

/// Heuristic mixed-equilibrium search. alpha = 1 runs the raw best-response
/// iteration; alpha < 1 runs damped steps that decay harmonically, plus a
/// candidate-snapping polish. Any success is re-verified at eps = 10 * tol
/// before being reported, so the heuristic cannot return a false positive.
struct IterationResult {
    bool converged = false;
    std::optional<StrategyProfile> profile;
    std::optional<EquilibriumReport> verification;
    long long iterations = 0;
    std::string reason;                 ///< set when not converged
    std::vector<double> trajectory_tail; ///< last sup-norm step sizes
};

IterationResult best_response_iteration(const GameSpec& game, VerifyMode mode,
                                        const StrategyProfile& init, double alpha,
                                        long long max_iter, double tol);

/// One monotone (weakly increasing in type) action per player and type.
struct MonotoneProfile {
    std::vector<std::vector<int>> actions; // [player][type] action index
    bool leq(const MonotoneProfile& other) const;
    bool operator==(const MonotoneProfile& other) const { return actions == other.actions; }
};

enum class TarskiDirection { bottom, top };

struct TarskiResult {
    MonotoneProfile profile;
    int sweeps = 0;
    EquilibriumReport verification; ///< action mode at the regret tolerance
};

/// Extremal monotone pure equilibrium by lattice iteration on the agent
/// form: Jacobi sweeps replacing each action with the lowest (bottom) or
/// highest (top) eps-maximal action until a fixed point. Requires a
/// structured game with enterprising (or traditional) attitudes that passes
/// check_monotone_assumptions, unless force is set.
TarskiResult tarski_iterate(const GameSpec& game, TarskiDirection direction, bool force = false);

enum class CheckStatus { pass, fail, undecidable };
const char* to_string(CheckStatus status);

struct CheckItem {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::vector<std::string> witnesses; ///< first few violations
    std::string note;
};

struct AssumptionReport {
    std::vector<CheckItem> items;
    bool all_pass() const;
};

/// Exhaustive finite-grid verification of the five monotonicity assumptions
/// behind the Tarski pipeline. Lattice construction failures surface as
/// undecidable items, never as exceptions.
AssumptionReport check_monotone_assumptions(const GameSpec& game);

struct IncreasingDifferencesResult {
    bool holds = true;
    std::string witness;
};

/// Increasing differences of f over the product posets xs x ys, verified by
/// the discrete four-point inequality on adjacent cells of every coordinate
/// pair (equivalent to checking all ordered pairs on products of chains).
IncreasingDifferencesResult check_increasing_differences(
    const IndexSpace& xs, const IndexSpace& ys,
    const std::function<double(long long, long long)>& f);

/// Ordered parameter list plus a game builder, total on the list.
struct ParametricFamily {
    std::vector<double> lambdas;
    std::function<GameSpec(double)> builder;
};

struct SweepEntry {
    double lambda = 0.0;
    AssumptionReport assumptions;
    MonotoneProfile bottom;
    MonotoneProfile top;
    int bottom_sweeps = 0;
    int top_sweeps = 0;
};

struct SweepResult {
    std::vector<SweepEntry> entries;
    std::vector<AssumptionReport> parametric; ///< per consecutive lambda pair
    bool assumptions_ok = true;
    bool increasing = true; ///< both extremal selections increase along lambda
};

SweepResult comparative_statics_sweep(const ParametricFamily& family, int jobs = 1);

struct RobustnessEntry {
    double eta = 0.0;
    std::size_t equilibrium_count = 0;
    /// Directed distance from the perturbed equilibrium set to the base set:
    /// max over perturbed profiles of the min sup-norm weight distance.
    double directed_distance = 0.0;
};

struct RobustnessReport {
    std::vector<PureEquilibrium> base;
    std::vector<RobustnessEntry> entries;
};

/// Upper hemi-continuity probe: mixes every prior with the uniform one at
/// rate eta and tracks how far the perturbed pure equilibrium set strays.
RobustnessReport robustness_probe(const GameSpec& game, const std::vector<double>& etas,
                                  VerifyMode mode, double eps, long long cap = 1000000);

} // namespace ambigame
