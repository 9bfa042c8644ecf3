#include "ambigame/bestresponse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ambigame/errors.hpp"
#include "ambigame/simplex.hpp"

namespace ambigame {

namespace {

std::vector<std::vector<double>> satisfaction_matrix(const GameSpec& game, int n, int t,
                                                     const StrategyProfile& profile) {
    const Attitude& att = game.attitude(n, t);
    std::vector<std::vector<double>> g;
    g.reserve(static_cast<std::size_t>(game.action_count(n, t)));
    for (int a = 0; a < game.action_count(n, t); ++a) {
        const PayoffDistVector pi = action_payoff_vector(game, n, t, a, profile);
        std::vector<double> row;
        row.reserve(att.priors.size());
        for (const auto& rho : att.priors) row.push_back(s0(pi, rho));
        g.push_back(std::move(row));
    }
    return g;
}

double row_value(const std::vector<double>& row, AttitudeKind kind) {
    switch (kind) {
    case AttitudeKind::traditional: return row.front();
    case AttitudeKind::alarmist: return *std::min_element(row.begin(), row.end());
    case AttitudeKind::enterprising: return *std::max_element(row.begin(), row.end());
    case AttitudeKind::custom: break;
    }
    throw validation_error("row_value: custom preference has no scalar");
}

} // namespace

std::vector<double> action_satisfactions(const GameSpec& game, int n, int t,
                                         const StrategyProfile& profile) {
    const Attitude& att = game.attitude(n, t);
    if (att.kind == AttitudeKind::custom) {
        throw validation_error("action_satisfactions: satisfaction attitude required");
    }
    std::vector<double> s;
    for (auto& row : satisfaction_matrix(game, n, t, profile)) s.push_back(row_value(row, att.kind));
    return s;
}

std::vector<int> action_best_set(const GameSpec& game, int n, int t, const StrategyProfile& profile,
                                 double eps) {
    const Attitude& att = game.attitude(n, t);
    std::vector<int> best;
    if (att.kind == AttitudeKind::custom) {
        std::vector<PayoffDistVector> vectors;
        vectors.reserve(static_cast<std::size_t>(game.action_count(n, t)));
        for (int a = 0; a < game.action_count(n, t); ++a) {
            vectors.push_back(action_payoff_vector(game, n, t, a, profile));
        }
        for (int a = 0; a < game.action_count(n, t); ++a) {
            bool beaten = false;
            for (int b = 0; b < game.action_count(n, t) && !beaten; ++b) {
                if (b != a && prefers(vectors[static_cast<std::size_t>(b)],
                                      vectors[static_cast<std::size_t>(a)], att)) {
                    beaten = true;
                }
            }
            if (!beaten) best.push_back(a);
        }
        return best;
    }
    if (eps < 0.0) throw validation_error("action_best_set: negative tolerance");
    const std::vector<double> s = action_satisfactions(game, n, t, profile);
    const double top = *std::max_element(s.begin(), s.end());
    for (int a = 0; a < static_cast<int>(s.size()); ++a) {
        if (s[static_cast<std::size_t>(a)] >= top - eps) best.push_back(a);
    }
    return best;
}

SupportCheck is_action_best_response(const DiscreteDistribution& delta, const GameSpec& game, int n,
                                     int t, const StrategyProfile& profile, double eps) {
    const std::vector<int> best = action_best_set(game, n, t, profile, eps);
    std::vector<bool> in_best(static_cast<std::size_t>(game.action_count(n, t)), false);
    for (int a : best) in_best[static_cast<std::size_t>(a)] = true;
    SupportCheck check;
    for (int a = 0; a < game.action_count(n, t); ++a) {
        if (!in_best[static_cast<std::size_t>(a)]) check.off_support_mass += delta.mass(a);
    }
    check.ok = check.off_support_mass <= default_tolerances().mass;
    return check;
}

double BestResponseResult::mixed_satisfaction(const DiscreteDistribution& candidate) const {
    const std::size_t priors = satisfaction_matrix.front().size();
    double out = kind == AttitudeKind::enterprising ? -std::numeric_limits<double>::infinity()
                                                    : std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < priors; ++p) {
        double acc = 0.0;
        for (std::size_t a = 0; a < satisfaction_matrix.size(); ++a) {
            acc += candidate.mass(static_cast<long long>(a)) * satisfaction_matrix[a][p];
        }
        if (kind == AttitudeKind::enterprising) {
            out = std::max(out, acc);
        } else if (kind == AttitudeKind::alarmist) {
            out = std::min(out, acc);
        } else {
            return acc;
        }
    }
    return out;
}

double BestResponseResult::regret_of(const DiscreteDistribution& candidate) const {
    const double achieved = mixed_satisfaction(candidate);
    const double regret = value - achieved;
    if (regret < -1e-9) {
        throw error("dist_best_response: candidate beat the solved optimum by " + std::to_string(-regret));
    }
    return std::max(0.0, regret);
}

BestResponseResult dist_best_response(const GameSpec& game, int n, int t,
                                      const StrategyProfile& profile) {
    const Attitude& att = game.attitude(n, t);
    if (att.kind == AttitudeKind::custom) {
        throw validation_error("dist_best_response: use dist_best_response_grid for custom preferences");
    }
    BestResponseResult result;
    result.kind = att.kind;
    result.satisfaction_matrix = satisfaction_matrix(game, n, t, profile);

    std::vector<double> s;
    s.reserve(result.satisfaction_matrix.size());
    for (const auto& row : result.satisfaction_matrix) s.push_back(row_value(row, att.kind));
    const double pure_max = *std::max_element(s.begin(), s.end());
    for (int a = 0; a < static_cast<int>(s.size()); ++a) {
        if (s[static_cast<std::size_t>(a)] >= pure_max - default_tolerances().regret) {
            result.maximal_actions.push_back(a);
        }
    }

    if (att.kind == AttitudeKind::alarmist && att.priors.size() > 1) {
        const MatrixGameSolution lp = solve_matrix_game(result.satisfaction_matrix);
        result.value = lp.value;
        result.optimal_dist = DiscreteDistribution(game.action_grid(n, t), lp.row_strategy);
    } else {
        // Pure reduction: the optimum over distributions sits at a dirac.
        const int argmax = static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
        result.value = pure_max;
        result.optimal_dist = DiscreteDistribution::dirac(game.action_grid(n, t), argmax);
    }
    return result;
}

std::vector<DiscreteDistribution> simplex_grid(const GridPtr& actions, double h, long long cap) {
    if (!(h > 0.0) || h > 1.0) throw validation_error("simplex_grid: step must lie in (0, 1]");
    const int k = static_cast<int>(actions->point_count());
    const int steps = std::max(1, static_cast<int>(std::lround(1.0 / h)));

    std::vector<DiscreteDistribution> out;
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    // enumerate compositions of `steps` into k nonnegative parts
    std::vector<int> cursor(static_cast<std::size_t>(k), 0);
    long long produced = 0;
    const std::function<void(int, int)> recurse = [&](int pos, int remaining) {
        if (pos == k - 1) {
            cursor[static_cast<std::size_t>(pos)] = remaining;
            if (++produced > cap) throw cap_exceeded_error("simplex_grid: grid too large");
            std::vector<double> w(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) {
                w[static_cast<std::size_t>(i)] =
                    static_cast<double>(cursor[static_cast<std::size_t>(i)]) / steps;
            }
            out.emplace_back(actions, std::move(w));
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            cursor[static_cast<std::size_t>(pos)] = c;
            recurse(pos + 1, remaining - c);
        }
    };
    recurse(0, steps);
    return out;
}

GridBestResponse dist_best_response_grid(const GameSpec& game, int n, int t,
                                         const StrategyProfile& profile, double h, long long cap) {
    const Attitude& att = game.attitude(n, t);
    const std::vector<DiscreteDistribution> grid = simplex_grid(game.action_grid(n, t), h, cap);
    GridBestResponse out;

    if (att.kind != AttitudeKind::custom) {
        BestResponseResult base = dist_best_response(game, n, t, profile);
        double best = -std::numeric_limits<double>::infinity();
        std::vector<double> values;
        values.reserve(grid.size());
        for (const auto& d : grid) {
            const double v = base.mixed_satisfaction(d);
            values.push_back(v);
            best = std::max(best, v);
        }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (values[i] >= best - 1e-12) out.maximal.push_back(grid[i]);
        }
        out.best_value = best;
        return out;
    }

    std::vector<PayoffDistVector> vectors;
    vectors.reserve(grid.size());
    for (const auto& d : grid) vectors.push_back(strategy_payoff_vector(game, n, t, d, profile));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < grid.size() && !beaten; ++j) {
            if (i != j && prefers(vectors[j], vectors[i], att)) beaten = true;
        }
        if (!beaten) out.maximal.push_back(grid[i]);
    }
    out.best_value = std::numeric_limits<double>::quiet_NaN();
    return out;
}

double agent_form_value(const GameSpec& game, int n, int t, int own_action,
                        std::span<const int> actions_by_agent) {
    const Attitude& att = game.attitude(n, t);
    if (att.kind == AttitudeKind::custom) {
        throw validation_error("agent_form_value: satisfaction attitude required");
    }
    const std::vector<int> opponents = game.players_except(n);
    const IndexSpace& opp_space = game.opp_type_space(n);

    // Per opponent profile, the opponents' pure actions under the assignment.
    const long long opps = opp_space.total();
    std::vector<std::vector<int>> opp_actions(static_cast<std::size_t>(opps));
    for (long long o = 0; o < opps; ++o) {
        const auto opp_types = opp_space.unflatten(o);
        auto& acts = opp_actions[static_cast<std::size_t>(o)];
        acts.reserve(opponents.size());
        for (std::size_t k = 0; k < opponents.size(); ++k) {
            acts.push_back(actions_by_agent[static_cast<std::size_t>(
                game.agent_id(opponents[k], opp_types[k]))]);
        }
    }

    const bool maximize = att.kind == AttitudeKind::enterprising;
    double out = maximize ? -std::numeric_limits<double>::infinity()
                          : std::numeric_limits<double>::infinity();

    if (att.structured && game.structured()) {
        // factored evaluation: opt over nu of sum_t p * integral u d nu
        const StructuredPriors& sp = *att.structured;
        for (const auto& nu : sp.vectors) {
            double acc = 0.0;
            for (long long o = 0; o < opps; ++o) {
                const double p = sp.type_probs[static_cast<std::size_t>(o)];
                if (p == 0.0) continue;
                const DiscreteDistribution& mu = nu[static_cast<std::size_t>(o)];
                double inner = 0.0;
                for (long long w = 0; w < mu.size(); ++w) {
                    const double mass = mu.mass(w);
                    if (mass == 0.0) continue;
                    inner += mass * game.utility_at(n, t, static_cast<int>(o), own_action,
                                                    opp_actions[static_cast<std::size_t>(o)],
                                                    static_cast<int>(w));
                }
                acc += p * inner;
            }
            out = maximize ? std::max(out, acc) : std::min(out, acc);
            if (att.kind == AttitudeKind::traditional) return acc;
        }
        return out;
    }

    for (const auto& rho : att.priors) {
        double acc = 0.0;
        const auto& slots = game.slots(n, t);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const double mass = rho.mass(static_cast<long long>(s));
            if (mass == 0.0) continue;
            acc += mass * game.utility_at(n, t, slots[s].opp_profile, own_action,
                                          opp_actions[static_cast<std::size_t>(slots[s].opp_profile)],
                                          slots[s].local);
        }
        out = maximize ? std::max(out, acc) : std::min(out, acc);
        if (att.kind == AttitudeKind::traditional) return acc;
    }
    return out;
}

AgentForm::AgentForm(const GameSpec& game, long long cap) : game_(&game) {
    agents_.resize(static_cast<std::size_t>(game.agent_count()));
    std::vector<int> assignment(static_cast<std::size_t>(game.agent_count()), 0);
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            PerAgent& per = agents_[static_cast<std::size_t>(game.agent_id(n, t))];
            std::vector<int> sizes{game.action_count(n, t)};
            for (int m = 0; m < game.players(); ++m) {
                if (m == n) continue;
                for (int tm = 0; tm < game.type_count(m); ++tm) {
                    per.other_agents.push_back(game.agent_id(m, tm));
                    sizes.push_back(game.action_count(m, tm));
                }
            }
            per.space = IndexSpace(sizes);
            if (per.space.total() > cap) throw cap_exceeded_error("AgentForm: table too large");
            per.values.resize(static_cast<std::size_t>(per.space.total()));
            for (long long flat = 0; flat < per.space.total(); ++flat) {
                const auto multi = per.space.unflatten(flat);
                for (std::size_t k = 0; k < per.other_agents.size(); ++k) {
                    assignment[static_cast<std::size_t>(per.other_agents[k])] = multi[k + 1];
                }
                per.values[static_cast<std::size_t>(flat)] =
                    agent_form_value(game, n, t, multi[0], assignment);
            }
        }
    }
}

long long AgentForm::flatten(int agent, int own_action, std::span<const int> actions_by_agent) const {
    const PerAgent& per = agents_[static_cast<std::size_t>(agent)];
    std::vector<int> multi;
    multi.reserve(per.other_agents.size() + 1);
    multi.push_back(own_action);
    for (int other : per.other_agents) {
        multi.push_back(actions_by_agent[static_cast<std::size_t>(other)]);
    }
    return per.space.flatten(multi);
}

double AgentForm::value(int agent, int own_action, std::span<const int> actions_by_agent) const {
    return agents_[static_cast<std::size_t>(agent)]
        .values[static_cast<std::size_t>(flatten(agent, own_action, actions_by_agent))];
}

double AgentForm::row_max(int agent, std::span<const int> actions_by_agent) const {
    const auto [n, t] = game_->agent_of(agent);
    double best = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < game_->action_count(n, t); ++a) {
        best = std::max(best, value(agent, a, actions_by_agent));
    }
    return best;
}

} // namespace ambigame
