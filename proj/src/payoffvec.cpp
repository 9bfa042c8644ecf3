#include "ambigame/payoffvec.hpp"

#include <string>

#include "ambigame/errors.hpp"

namespace ambigame {

PayoffDistVector::PayoffDistVector(int player, int type, std::vector<DiscreteDistribution> entries)
    : player_(player), type_(type), entries_(std::move(entries)) {
    if (entries_.empty()) throw validation_error("PayoffDistVector: empty domain");
    means_.reserve(entries_.size());
    for (const auto& d : entries_) means_.push_back(d.mean());
}

PayoffDistVector action_payoff_vector(const GameSpec& game, int n, int t, int action,
                                      const StrategyProfile& profile) {
    if (action < 0 || action >= game.action_count(n, t)) {
        throw validation_error("action_payoff_vector: action off the grid");
    }
    const GridPtr& vgrid = game.utility_grid(n, t);
    const std::vector<int> opponents = game.players_except(n);
    const IndexSpace& opp_space = game.opp_type_space(n);

    std::vector<DiscreteDistribution> entries;
    entries.reserve(static_cast<std::size_t>(game.slot_count(n, t)));
    const Tolerances& tol = default_tolerances();

    for (long long o = 0; o < opp_space.total(); ++o) {
        const std::vector<int> opp_types = opp_space.unflatten(o);
        std::vector<int> sizes;
        sizes.reserve(opponents.size());
        for (std::size_t k = 0; k < opponents.size(); ++k) {
            sizes.push_back(game.action_count(opponents[k], opp_types[k]));
        }
        const IndexSpace combos(sizes);
        const int block = game.block_size(n, t, static_cast<int>(o));

        std::vector<std::vector<double>> weights(
            static_cast<std::size_t>(block),
            std::vector<double>(static_cast<std::size_t>(vgrid->point_count()), 0.0));

        std::vector<int> opp_actions(opponents.size(), 0);
        for (long long c = 0; c < combos.total(); ++c) {
            long long rest = c;
            double w = 1.0;
            for (std::size_t k = opponents.size(); k-- > 0;) {
                opp_actions[k] = static_cast<int>(rest % sizes[k]);
                rest /= sizes[k];
                w *= profile.at(opponents[k], opp_types[k]).mass(opp_actions[k]);
            }
            if (w == 0.0) continue;
            for (int local = 0; local < block; ++local) {
                const double u = game.utility_at(n, t, static_cast<int>(o), action, opp_actions, local);
                const auto idx = vgrid->find_level(u, tol.snap);
                if (!idx) throw validation_error("action_payoff_vector: utility value off the payoff grid");
                weights[static_cast<std::size_t>(local)][static_cast<std::size_t>(*idx)] += w;
            }
        }
        for (int local = 0; local < block; ++local) {
            entries.emplace_back(vgrid, std::move(weights[static_cast<std::size_t>(local)]), tol);
        }
    }
    return PayoffDistVector(n, t, std::move(entries));
}

PayoffDistVector strategy_payoff_vector(const GameSpec& game, int n, int t,
                                        const DiscreteDistribution& own,
                                        const StrategyProfile& profile) {
    if (!same_grid(own.grid(), game.action_grid(n, t))) {
        throw validation_error("strategy_payoff_vector: distribution off the action grid");
    }
    std::vector<std::pair<double, PayoffDistVector>> parts;
    for (int a = 0; a < game.action_count(n, t); ++a) {
        const double w = own.mass(a);
        if (w == 0.0) continue;
        parts.emplace_back(w, action_payoff_vector(game, n, t, a, profile));
    }
    return mix_vectors(parts);
}

FiniteKernel kernel(const GameSpec& game, int n, int t, const StrategyProfile& profile) {
    FiniteKernel k;
    k.player = n;
    k.type = t;
    k.rows.reserve(static_cast<std::size_t>(game.action_count(n, t)));
    for (int a = 0; a < game.action_count(n, t); ++a) {
        k.rows.push_back(action_payoff_vector(game, n, t, a, profile));
    }
    return k;
}

PayoffDistVector integrate_kernel(const FiniteKernel& kernel, const DiscreteDistribution& own) {
    if (own.size() != static_cast<long long>(kernel.rows.size())) {
        throw validation_error("integrate_kernel: distribution off the kernel's action grid");
    }
    std::vector<std::pair<double, PayoffDistVector>> parts;
    for (std::size_t a = 0; a < kernel.rows.size(); ++a) {
        const double w = own.mass(static_cast<long long>(a));
        if (w == 0.0) continue;
        parts.emplace_back(w, kernel.rows[a]);
    }
    return mix_vectors(parts);
}

PayoffDistVector mix_vectors(const std::vector<std::pair<double, PayoffDistVector>>& components) {
    if (components.empty()) throw validation_error("mix_vectors: no components");
    const PayoffDistVector& first = components.front().second;
    std::vector<DiscreteDistribution> entries;
    entries.reserve(static_cast<std::size_t>(first.size()));
    for (int slot = 0; slot < first.size(); ++slot) {
        std::vector<std::pair<double, DiscreteDistribution>> parts;
        parts.reserve(components.size());
        for (const auto& [w, vec] : components) {
            if (vec.player() != first.player() || vec.type() != first.type() || vec.size() != first.size()) {
                throw validation_error("mix_vectors: mismatched owners");
            }
            parts.emplace_back(w, vec.entry(slot));
        }
        entries.push_back(mix(parts));
    }
    return PayoffDistVector(first.player(), first.type(), std::move(entries));
}

} // namespace ambigame
