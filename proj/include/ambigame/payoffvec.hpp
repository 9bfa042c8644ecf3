#pragma once

#include <vector>

#include "ambigame/game.hpp"

namespace ambigame {

/// Map from each state the (n, t_n) player considers possible to the
/// distribution of utility values received there. Entries follow the owner's
/// slot order; means are cached because every ranking below consumes them.
class PayoffDistVector {
public:
    PayoffDistVector(int player, int type, std::vector<DiscreteDistribution> entries);

    int player() const { return player_; }
    int type() const { return type_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const DiscreteDistribution& entry(int slot) const { return entries_[static_cast<std::size_t>(slot)]; }
    const std::vector<DiscreteDistribution>& entries() const { return entries_; }
    double entry_mean(int slot) const { return means_[static_cast<std::size_t>(slot)]; }
    const std::vector<double>& entry_means() const { return means_; }

private:
    int player_;
    int type_;
    std::vector<DiscreteDistribution> entries_;
    std::vector<double> means_;
};

/// One payoff-distribution vector per own pure action.
struct FiniteKernel {
    int player = 0;
    int type = 0;
    std::vector<PayoffDistVector> rows; ///< indexed by the owner's action grid
};

/// Payoff-distribution vector of the (n, t_n) player holding action a while
/// opponents play their parts of the profile (the player's own row of the
/// profile is ignored).
PayoffDistVector action_payoff_vector(const GameSpec& game, int n, int t, int action,
                                      const StrategyProfile& profile);

/// Entrywise mixture of the pure-action vectors under the player's own
/// action distribution.
PayoffDistVector strategy_payoff_vector(const GameSpec& game, int n, int t,
                                        const DiscreteDistribution& own,
                                        const StrategyProfile& profile);

FiniteKernel kernel(const GameSpec& game, int n, int t, const StrategyProfile& profile);

/// Entrywise mixture of kernel rows with the given action distribution.
PayoffDistVector integrate_kernel(const FiniteKernel& kernel, const DiscreteDistribution& own);

/// Entrywise convex combination of payoff vectors with the same owner.
PayoffDistVector mix_vectors(const std::vector<std::pair<double, PayoffDistVector>>& components);

} // namespace ambigame
