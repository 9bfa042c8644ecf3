#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ambigame/distribution.hpp"
#include "ambigame/grid.hpp"
#include "ambigame/indexing.hpp"

namespace ambigame {

class PayoffDistVector;

enum class AttitudeKind { traditional, alarmist, enterprising, custom };

const char* to_string(AttitudeKind kind);

/// Strict-preference oracle over payoff-distribution vectors; returns true
/// when the first argument is strictly preferred.
using PreferenceOracle = std::function<bool(const PayoffDistVector&, const PayoffDistVector&)>;

/// Factored prior data for structured games: a single opponent-type mass
/// function plus a finite set of state-prior vectors, one distribution on the
/// common state grid per opponent-type profile.
struct StructuredPriors {
    std::vector<double> type_probs;                          ///< over opponent type profiles
    std::vector<std::vector<DiscreteDistribution>> vectors;  ///< [member][opp profile] on the state grid

    /// Scenario bookkeeping, kept when the set was produced by a scenario
    /// constructor; the monotone assumption checks need the source sets.
    std::vector<std::vector<DiscreteDistribution>> scenario_a_sets; ///< [opp profile][member]
    std::vector<DiscreteDistribution> scenario_b_set;
};

struct Attitude {
    AttitudeKind kind = AttitudeKind::traditional;
    /// Priors over the owner's state slots; exactly one for traditional.
    std::vector<DiscreteDistribution> priors;
    std::optional<StructuredPriors> structured;
    PreferenceOracle comparator; ///< custom kind only

    static Attitude traditional(DiscreteDistribution prior);
    static Attitude alarmist(std::vector<DiscreteDistribution> priors);
    static Attitude enterprising(std::vector<DiscreteDistribution> priors);
    static Attitude custom(PreferenceOracle comparator);
};

struct GeneralStates {
    int state_count = 0;
    /// Global state ids per type profile; cells are disjoint and cover the set.
    std::vector<std::vector<int>> partition;
};

struct StructuredStates {
    GridPtr tilde_grid;
};

using StateSpace = std::variant<GeneralStates, StructuredStates>;

/// Dense payoff-utility table indexed [player][type profile][action profile][state],
/// all row-major lexicographic, states local to the type profile's block.
using PayoffTable = std::vector<std::vector<std::vector<std::vector<double>>>>;

/// A validated game. Construction runs every structural invariant check and
/// precomputes the index machinery; instances are immutable afterwards and
/// safe to share across threads.
class GameSpec {
public:
    GameSpec(std::vector<int> type_counts, std::vector<std::vector<GridPtr>> action_grids,
             StateSpace states, PayoffTable payoff_utility,
             std::vector<std::vector<Attitude>> attitudes);

    int players() const { return static_cast<int>(type_counts_.size()); }
    int type_count(int n) const { return type_counts_[static_cast<std::size_t>(n)]; }
    const std::vector<int>& type_counts() const { return type_counts_; }
    const IndexSpace& type_profile_space() const { return type_profiles_; }

    int agent_count() const { return static_cast<int>(agent_offsets_.back()); }
    int agent_id(int n, int t) const { return agent_offsets_[static_cast<std::size_t>(n)] + t; }
    std::pair<int, int> agent_of(int id) const;

    const GridPtr& action_grid(int n, int t) const {
        return action_grids_[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
    }
    int action_count(int n, int t) const {
        return static_cast<int>(action_grid(n, t)->point_count());
    }
    double action_level(int n, int t, int a) const { return action_grid(n, t)->level(0, a); }

    const StateSpace& states() const { return states_; }
    bool structured() const { return std::holds_alternative<StructuredStates>(states_); }
    const GridPtr& tilde_grid() const;

    /// Opponent type profiles of player n: product over m != n in player order.
    const IndexSpace& opp_type_space(int n) const { return opp_type_spaces_[static_cast<std::size_t>(n)]; }
    std::vector<int> players_except(int n) const;
    int full_type_profile(int n, int t_n, long long opp_profile) const;

    /// One state slot of the (n, t_n) state space.
    struct StateSlot {
        int opp_profile; ///< index into opp_type_space(n)
        int local;       ///< index into the type profile's state block
    };
    const std::vector<StateSlot>& slots(int n, int t) const {
        return slots_[static_cast<std::size_t>(agent_id(n, t))];
    }
    int slot_count(int n, int t) const { return static_cast<int>(slots(n, t).size()); }
    int block_offset(int n, int t, int opp_profile) const {
        return block_offsets_[static_cast<std::size_t>(agent_id(n, t))][static_cast<std::size_t>(opp_profile)];
    }
    int block_size(int n, int t, int opp_profile) const;
    /// Index line used to carry priors over the slots.
    const GridPtr& slot_grid(int n, int t) const {
        return slot_grids_[static_cast<std::size_t>(agent_id(n, t))];
    }

    /// Size of the state block of a type profile.
    int state_block_size(int tp) const { return state_block_sizes_[static_cast<std::size_t>(tp)]; }
    /// Global state ids of the block (general games only).
    const std::vector<int>& state_block(int tp) const;

    const IndexSpace& action_profile_space(int tp) const {
        return action_profile_spaces_[static_cast<std::size_t>(tp)];
    }

    double utility(int n, int tp, long long action_profile, int local_omega) const {
        return payoff_utility_[static_cast<std::size_t>(n)][static_cast<std::size_t>(tp)]
                              [static_cast<std::size_t>(action_profile)]
                              [static_cast<std::size_t>(local_omega)];
    }
    /// Utility evaluated from the player's viewpoint: own action plus one
    /// action per opponent in ascending player order.
    double utility_at(int n, int t_n, int opp_profile, int own_action,
                      std::span<const int> opp_actions, int local_omega) const;

    const PayoffTable& payoff_utility() const { return payoff_utility_; }

    const Attitude& attitude(int n, int t) const {
        return attitudes_[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
    }
    const std::vector<std::vector<Attitude>>& attitudes() const { return attitudes_; }

    /// Utility-value grid of the (n, t_n) player: the sorted image of the
    /// payoff-utility table on that player's domain.
    const GridPtr& utility_grid(int n, int t) const {
        return utility_grids_[static_cast<std::size_t>(agent_id(n, t))];
    }
    /// Utility range max - min of the (n, t_n) player.
    double utility_range(int n, int t) const;

private:
    void validate_states_and_payoffs();
    void build_slots();
    void build_utility_grids();
    void validate_attitudes();

    std::vector<int> type_counts_;
    std::vector<std::vector<GridPtr>> action_grids_;
    StateSpace states_;
    PayoffTable payoff_utility_;
    std::vector<std::vector<Attitude>> attitudes_;

    IndexSpace type_profiles_;
    std::vector<int> agent_offsets_;
    std::vector<IndexSpace> opp_type_spaces_;
    std::vector<int> state_block_sizes_;
    std::vector<IndexSpace> action_profile_spaces_;
    std::vector<std::vector<StateSlot>> slots_;          // per agent
    std::vector<std::vector<int>> block_offsets_;        // per agent, per opp profile
    std::vector<GridPtr> slot_grids_;                    // per agent
    std::vector<GridPtr> utility_grids_;                 // per agent
};

/// One action distribution per (player, type) pair.
struct StrategyProfile {
    std::vector<std::vector<DiscreteDistribution>> dists; // [n][t]

    const DiscreteDistribution& at(int n, int t) const {
        return dists[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
    }
    DiscreteDistribution& at(int n, int t) {
        return dists[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
    }
    double sup_distance(const StrategyProfile& other) const;
};

/// Profile of diracs given one action index per agent.
StrategyProfile pure_profile(const GameSpec& game, std::span<const int> actions);
StrategyProfile uniform_profile(const GameSpec& game);
void check_profile(const GameSpec& game, const StrategyProfile& profile);

/// All monotone selections from per-opponent-profile prior sets: one member
/// of sets[t_{-n}] per profile, weakly increasing along the componentwise
/// order of opponent type profiles. Throws validation_error when no monotone
/// selection exists.
std::vector<std::vector<DiscreteDistribution>> scenario_a_priors(
    const std::vector<std::vector<DiscreteDistribution>>& sets, const IndexSpace& opp_space,
    const Tolerances& tol = default_tolerances());

/// Constant selections (one per member of the single set).
std::vector<std::vector<DiscreteDistribution>> scenario_b_priors(
    const std::vector<DiscreteDistribution>& set, const IndexSpace& opp_space);

/// Traditional-game reduction: opponent-type probabilities and conditional
/// expected utilities, per agent.
struct TraditionalReduction {
    /// p[agent][opp profile]
    std::vector<std::vector<double>> p;
    /// v[agent][opp profile][own action][opp action profile]
    std::vector<std::vector<std::vector<std::vector<double>>>> v;
};

TraditionalReduction reduce_traditional(const GameSpec& game);

/// Re-encodes a structured game as a general one over states (t, omega).
GameSpec to_general(const GameSpec& game);

} // namespace ambigame
