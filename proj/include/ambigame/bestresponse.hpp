#pragma once

#include <optional>
#include <vector>

#include "ambigame/payoffvec.hpp"
#include "ambigame/satisfaction.hpp"

namespace ambigame {

/// Satisfaction of every pure action against the opponents' part of the
/// profile: s^a(a, delta_{-n}) per action index. Satisfaction attitudes only.
std::vector<double> action_satisfactions(const GameSpec& game, int n, int t,
                                         const StrategyProfile& profile);

/// The eps-maximal action set. Satisfaction attitudes use the eps-argmax of
/// s^a; custom preferences return the pairwise-maximal actions (eps ignored).
std::vector<int> action_best_set(const GameSpec& game, int n, int t, const StrategyProfile& profile,
                                 double eps);

struct SupportCheck {
    bool ok = true;
    double off_support_mass = 0.0;
};

/// True iff the distribution puts (almost) no mass outside action_best_set.
SupportCheck is_action_best_response(const DiscreteDistribution& delta, const GameSpec& game, int n,
                                     int t, const StrategyProfile& profile, double eps);

/// Distribution-based best response of a satisfaction attitude. Traditional
/// and enterprising players reduce to a pure argmax; alarmists solve the
/// exact maximin linear program over the finite prior set.
struct BestResponseResult {
    double value = 0.0;
    std::optional<DiscreteDistribution> optimal_dist;
    std::vector<int> maximal_actions; ///< eps-argmax of s^a at the regret tolerance
    AttitudeKind kind = AttitudeKind::traditional;
    /// s0 of the pure-action vectors per prior: matrix[action][prior].
    std::vector<std::vector<double>> satisfaction_matrix;

    /// s^d of a candidate action distribution, evaluated from the matrix.
    double mixed_satisfaction(const DiscreteDistribution& candidate) const;
    /// value - achieved satisfaction, clamped at zero within float noise.
    double regret_of(const DiscreteDistribution& candidate) const;
};

BestResponseResult dist_best_response(const GameSpec& game, int n, int t,
                                      const StrategyProfile& profile);

/// All points of the action simplex with weights in steps of h.
std::vector<DiscreteDistribution> simplex_grid(const GridPtr& actions, double h,
                                               long long cap = 1000000);

struct GridBestResponse {
    std::vector<DiscreteDistribution> maximal;
    double best_value = 0.0; ///< meaningful for satisfaction attitudes only
};

/// h-approximate maximal set among simplex grid points under `prefers` on
/// the mixed payoff vectors. Fallback route for custom preferences and the
/// cross-validation oracle for the exact solvers.
GridBestResponse dist_best_response_grid(const GameSpec& game, int n, int t,
                                         const StrategyProfile& profile, double h,
                                         long long cap = 1000000);

/// Agent-form value: satisfaction of the (n, t_n) player holding own_action
/// while every other agent (m, t_m) plays its pure action from the
/// assignment (indexed by agent id; the own entry is ignored).
double agent_form_value(const GameSpec& game, int n, int t, int own_action,
                        std::span<const int> actions_by_agent);

/// Materialized agent-form tables s~_{n,t_n}(a, a_{-n}) over own actions and
/// the other players' agent actions. Input games need satisfaction attitudes.
class AgentForm {
public:
    explicit AgentForm(const GameSpec& game, long long cap = 50000000);

    double value(int agent, int own_action, std::span<const int> actions_by_agent) const;
    /// Max over own actions at the given assignment.
    double row_max(int agent, std::span<const int> actions_by_agent) const;

    const GameSpec& game() const { return *game_; }

private:
    long long flatten(int agent, int own_action, std::span<const int> actions_by_agent) const;

    const GameSpec* game_;
    struct PerAgent {
        std::vector<int> other_agents; ///< agent ids of other players' agents
        IndexSpace space;              ///< [own action] + other agents' action counts
        std::vector<double> values;
    };
    std::vector<PerAgent> agents_;
};

} // namespace ambigame
