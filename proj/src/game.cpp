#include "ambigame/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "ambigame/errors.hpp"

namespace ambigame {

const char* to_string(AttitudeKind kind) {
    switch (kind) {
    case AttitudeKind::traditional: return "traditional";
    case AttitudeKind::alarmist: return "alarmist";
    case AttitudeKind::enterprising: return "enterprising";
    case AttitudeKind::custom: return "custom";
    }
    return "?";
}

Attitude Attitude::traditional(DiscreteDistribution prior) {
    Attitude a;
    a.kind = AttitudeKind::traditional;
    a.priors.push_back(std::move(prior));
    return a;
}

Attitude Attitude::alarmist(std::vector<DiscreteDistribution> priors) {
    Attitude a;
    a.kind = AttitudeKind::alarmist;
    a.priors = std::move(priors);
    return a;
}

Attitude Attitude::enterprising(std::vector<DiscreteDistribution> priors) {
    Attitude a;
    a.kind = AttitudeKind::enterprising;
    a.priors = std::move(priors);
    return a;
}

Attitude Attitude::custom(PreferenceOracle comparator) {
    Attitude a;
    a.kind = AttitudeKind::custom;
    a.comparator = std::move(comparator);
    return a;
}

GameSpec::GameSpec(std::vector<int> type_counts, std::vector<std::vector<GridPtr>> action_grids,
                   StateSpace states, PayoffTable payoff_utility,
                   std::vector<std::vector<Attitude>> attitudes)
    : type_counts_(std::move(type_counts)),
      action_grids_(std::move(action_grids)),
      states_(std::move(states)),
      payoff_utility_(std::move(payoff_utility)),
      attitudes_(std::move(attitudes)) {
    if (type_counts_.empty()) throw validation_error("game: no players");
    for (int c : type_counts_) {
        if (c < 1) throw validation_error("game: player with no types");
    }
    type_profiles_ = IndexSpace(type_counts_);

    agent_offsets_.assign(1, 0);
    for (int c : type_counts_) agent_offsets_.push_back(agent_offsets_.back() + c);

    if (static_cast<int>(action_grids_.size()) != players()) {
        throw validation_error("game: action grids missing for some player");
    }
    for (int n = 0; n < players(); ++n) {
        if (static_cast<int>(action_grids_[static_cast<std::size_t>(n)].size()) != type_count(n)) {
            throw validation_error("game: action grids missing for some type");
        }
        for (const auto& g : action_grids_[static_cast<std::size_t>(n)]) {
            if (!g || g->dim_count() != 1) {
                throw validation_error("game: action grids must be one-dimensional");
            }
        }
    }

    opp_type_spaces_.reserve(static_cast<std::size_t>(players()));
    for (int n = 0; n < players(); ++n) {
        std::vector<int> sizes;
        for (int m = 0; m < players(); ++m) {
            if (m != n) sizes.push_back(type_count(m));
        }
        opp_type_spaces_.emplace_back(std::move(sizes));
    }

    validate_states_and_payoffs();
    build_slots();
    build_utility_grids();
    validate_attitudes();
}

void GameSpec::validate_states_and_payoffs() {
    const long long tps = type_profiles_.total();
    state_block_sizes_.resize(static_cast<std::size_t>(tps));
    if (const auto* general = std::get_if<GeneralStates>(&states_)) {
        if (general->state_count <= 0) throw validation_error("game: general states empty");
        if (static_cast<long long>(general->partition.size()) != tps) {
            throw validation_error("game: partition must list every type profile");
        }
        std::vector<int> seen(static_cast<std::size_t>(general->state_count), -1);
        for (long long tp = 0; tp < tps; ++tp) {
            for (int s : general->partition[static_cast<std::size_t>(tp)]) {
                if (s < 0 || s >= general->state_count) {
                    throw validation_error("game: partition references unknown state " + std::to_string(s));
                }
                if (seen[static_cast<std::size_t>(s)] >= 0) {
                    throw validation_error("game: partition cells overlap at state " + std::to_string(s));
                }
                seen[static_cast<std::size_t>(s)] = static_cast<int>(tp);
            }
            state_block_sizes_[static_cast<std::size_t>(tp)] =
                static_cast<int>(general->partition[static_cast<std::size_t>(tp)].size());
        }
        for (int s = 0; s < general->state_count; ++s) {
            if (seen[static_cast<std::size_t>(s)] < 0) {
                throw validation_error("game: state " + std::to_string(s) + " not covered by the partition");
            }
        }
    } else {
        const auto& st = std::get<StructuredStates>(states_);
        if (!st.tilde_grid) throw validation_error("game: structured state grid missing");
        for (long long tp = 0; tp < tps; ++tp) {
            state_block_sizes_[static_cast<std::size_t>(tp)] = static_cast<int>(st.tilde_grid->point_count());
        }
    }

    action_profile_spaces_.reserve(static_cast<std::size_t>(tps));
    for (long long tp = 0; tp < tps; ++tp) {
        const std::vector<int> types = type_profiles_.unflatten(tp);
        std::vector<int> sizes;
        for (int m = 0; m < players(); ++m) sizes.push_back(action_count(m, types[static_cast<std::size_t>(m)]));
        action_profile_spaces_.emplace_back(std::move(sizes));
    }

    if (static_cast<int>(payoff_utility_.size()) != players()) {
        throw validation_error("game: payoff_utility missing some player");
    }
    for (int n = 0; n < players(); ++n) {
        const auto& per_tp = payoff_utility_[static_cast<std::size_t>(n)];
        if (static_cast<long long>(per_tp.size()) != tps) {
            throw validation_error("game: payoff_utility of player " + std::to_string(n) +
                                   " missing some type profile");
        }
        for (long long tp = 0; tp < tps; ++tp) {
            const auto& per_ap = per_tp[static_cast<std::size_t>(tp)];
            const long long aps = action_profile_spaces_[static_cast<std::size_t>(tp)].total();
            if (static_cast<long long>(per_ap.size()) != aps) {
                throw validation_error("game: payoff_utility missing action profiles at (n=" +
                                       std::to_string(n) + ", t=" + std::to_string(tp) + ")");
            }
            for (long long ap = 0; ap < aps; ++ap) {
                if (static_cast<int>(per_ap[static_cast<std::size_t>(ap)].size()) !=
                    state_block_sizes_[static_cast<std::size_t>(tp)]) {
                    throw validation_error("game: payoff_utility missing state entry at (n=" +
                                           std::to_string(n) + ", t=" + std::to_string(tp) +
                                           ", a=" + std::to_string(ap) + ")");
                }
            }
        }
    }
}

void GameSpec::build_slots() {
    slots_.resize(static_cast<std::size_t>(agent_count()));
    block_offsets_.resize(static_cast<std::size_t>(agent_count()));
    slot_grids_.resize(static_cast<std::size_t>(agent_count()));
    for (int n = 0; n < players(); ++n) {
        for (int t = 0; t < type_count(n); ++t) {
            const int agent = agent_id(n, t);
            auto& slots = slots_[static_cast<std::size_t>(agent)];
            auto& offsets = block_offsets_[static_cast<std::size_t>(agent)];
            const IndexSpace& opp = opp_type_space(n);
            for (long long o = 0; o < opp.total(); ++o) {
                offsets.push_back(static_cast<int>(slots.size()));
                const int tp = full_type_profile(n, t, o);
                const int block = state_block_sizes_[static_cast<std::size_t>(tp)];
                for (int local = 0; local < block; ++local) {
                    slots.push_back(StateSlot{static_cast<int>(o), local});
                }
            }
            if (slots.empty()) {
                throw validation_error("game: player " + std::to_string(n) + " type " + std::to_string(t) +
                                       " has an empty state space");
            }
            slot_grids_[static_cast<std::size_t>(agent)] =
                SupportGrid::index_line(static_cast<int>(slots.size()));
        }
    }
}

void GameSpec::build_utility_grids() {
    utility_grids_.resize(static_cast<std::size_t>(agent_count()));
    for (int n = 0; n < players(); ++n) {
        for (int t = 0; t < type_count(n); ++t) {
            std::set<double> values;
            const IndexSpace& opp = opp_type_space(n);
            for (long long o = 0; o < opp.total(); ++o) {
                const int tp = full_type_profile(n, t, o);
                for (const auto& per_state :
                     payoff_utility_[static_cast<std::size_t>(n)][static_cast<std::size_t>(tp)]) {
                    values.insert(per_state.begin(), per_state.end());
                }
            }
            utility_grids_[static_cast<std::size_t>(agent_id(n, t))] =
                SupportGrid::line(std::vector<double>(values.begin(), values.end()));
        }
    }
}

void GameSpec::validate_attitudes() {
    if (static_cast<int>(attitudes_.size()) != players()) {
        throw validation_error("game: attitudes missing some player");
    }
    for (int n = 0; n < players(); ++n) {
        if (static_cast<int>(attitudes_[static_cast<std::size_t>(n)].size()) != type_count(n)) {
            throw validation_error("game: attitudes missing some type");
        }
        for (int t = 0; t < type_count(n); ++t) {
            Attitude& att = attitudes_[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
            const std::string where = " at (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")";
            if (att.kind == AttitudeKind::custom) {
                if (!att.comparator) throw validation_error("game: custom attitude without comparator" + where);
                continue;
            }
            if (att.structured) {
                if (!structured()) {
                    throw validation_error("game: factored priors on a general game" + where);
                }
                const auto& sp = *att.structured;
                const long long opps = opp_type_space(n).total();
                if (static_cast<long long>(sp.type_probs.size()) != opps) {
                    throw validation_error("game: type_probs length mismatch" + where);
                }
                double total = 0.0;
                for (double p : sp.type_probs) {
                    if (p < 0.0) throw validation_error("game: negative type probability" + where);
                    total += p;
                }
                if (std::abs(total - 1.0) > 1e-9) {
                    throw validation_error("game: type probabilities sum to " + std::to_string(total) + where);
                }
                if (sp.vectors.empty()) throw validation_error("game: empty structured prior set" + where);
                for (const auto& nu : sp.vectors) {
                    if (static_cast<long long>(nu.size()) != opps) {
                        throw validation_error("game: structured prior vector length mismatch" + where);
                    }
                    for (const auto& d : nu) {
                        if (!same_grid(d.grid(), tilde_grid())) {
                            throw validation_error("game: structured prior not on the state grid" + where);
                        }
                    }
                }
                // Expand p x nu into full priors over the state slots; when
                // explicit priors were also given they must agree memberwise,
                // otherwise the factored and expanded evaluation paths would
                // silently rank vectors differently.
                const bool expanding = att.priors.empty();
                if (!expanding && att.priors.size() != sp.vectors.size()) {
                    throw validation_error("game: priors and factored prior set disagree in size" + where);
                }
                for (std::size_t v = 0; v < sp.vectors.size(); ++v) {
                    const auto& nu = sp.vectors[v];
                    std::vector<double> w(static_cast<std::size_t>(slot_count(n, t)), 0.0);
                    const auto& slot_list = slots(n, t);
                    for (std::size_t s = 0; s < slot_list.size(); ++s) {
                        const StateSlot& slot = slot_list[s];
                        w[s] = sp.type_probs[static_cast<std::size_t>(slot.opp_profile)] *
                               nu[static_cast<std::size_t>(slot.opp_profile)].mass(slot.local);
                    }
                    DiscreteDistribution expanded(slot_grid(n, t), std::move(w));
                    if (expanding) {
                        att.priors.push_back(std::move(expanded));
                    } else if (att.priors[v].sup_distance(expanded) > 1e-12) {
                        throw validation_error("game: explicit prior " + std::to_string(v) +
                                               " contradicts the factored prior set" + where);
                    }
                }
            }
            if (att.priors.empty()) throw validation_error("game: empty prior set" + where);
            if (att.kind == AttitudeKind::traditional && att.priors.size() != 1) {
                throw validation_error("game: traditional attitude needs exactly one prior" + where);
            }
            for (const auto& prior : att.priors) {
                if (prior.size() != slot_count(n, t)) {
                    throw validation_error("game: prior not supported inside the state space" + where);
                }
            }
        }
    }
}

std::pair<int, int> GameSpec::agent_of(int id) const {
    for (int n = 0; n < players(); ++n) {
        if (id < agent_offsets_[static_cast<std::size_t>(n + 1)]) {
            return {n, id - agent_offsets_[static_cast<std::size_t>(n)]};
        }
    }
    throw error("agent_of: bad agent id");
}

const GridPtr& GameSpec::tilde_grid() const {
    const auto* st = std::get_if<StructuredStates>(&states_);
    if (!st) throw error("tilde_grid: game is not structured");
    return st->tilde_grid;
}

std::vector<int> GameSpec::players_except(int n) const {
    std::vector<int> out;
    for (int m = 0; m < players(); ++m) {
        if (m != n) out.push_back(m);
    }
    return out;
}

int GameSpec::full_type_profile(int n, int t_n, long long opp_profile) const {
    const std::vector<int> opp = opp_type_space(n).unflatten(opp_profile);
    std::vector<int> full(static_cast<std::size_t>(players()));
    int k = 0;
    for (int m = 0; m < players(); ++m) {
        full[static_cast<std::size_t>(m)] = (m == n) ? t_n : opp[static_cast<std::size_t>(k++)];
    }
    return static_cast<int>(type_profiles_.flatten(full));
}

int GameSpec::block_size(int n, int t, int opp_profile) const {
    return state_block_sizes_[static_cast<std::size_t>(full_type_profile(n, t, opp_profile))];
}

const std::vector<int>& GameSpec::state_block(int tp) const {
    const auto* general = std::get_if<GeneralStates>(&states_);
    if (!general) throw error("state_block: game is not general");
    return general->partition[static_cast<std::size_t>(tp)];
}

double GameSpec::utility_at(int n, int t_n, int opp_profile, int own_action,
                            std::span<const int> opp_actions, int local_omega) const {
    const int tp = full_type_profile(n, t_n, opp_profile);
    std::vector<int> actions(static_cast<std::size_t>(players()));
    int k = 0;
    for (int m = 0; m < players(); ++m) {
        actions[static_cast<std::size_t>(m)] = (m == n) ? own_action : opp_actions[static_cast<std::size_t>(k++)];
    }
    const long long ap = action_profile_space(tp).flatten(actions);
    return utility(n, tp, ap, local_omega);
}

double GameSpec::utility_range(int n, int t) const {
    const auto& grid = *utility_grid(n, t);
    const int count = grid.dim_size(0);
    return grid.level(0, count - 1) - grid.level(0, 0);
}

double StrategyProfile::sup_distance(const StrategyProfile& other) const {
    double d = 0.0;
    for (std::size_t n = 0; n < dists.size(); ++n) {
        for (std::size_t t = 0; t < dists[n].size(); ++t) {
            d = std::max(d, dists[n][t].sup_distance(other.dists[n][t]));
        }
    }
    return d;
}

StrategyProfile pure_profile(const GameSpec& game, std::span<const int> actions) {
    StrategyProfile profile;
    profile.dists.resize(static_cast<std::size_t>(game.players()));
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            profile.dists[static_cast<std::size_t>(n)].push_back(
                DiscreteDistribution::dirac(game.action_grid(n, t), actions[static_cast<std::size_t>(game.agent_id(n, t))]));
        }
    }
    return profile;
}

StrategyProfile uniform_profile(const GameSpec& game) {
    StrategyProfile profile;
    profile.dists.resize(static_cast<std::size_t>(game.players()));
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            profile.dists[static_cast<std::size_t>(n)].push_back(
                DiscreteDistribution::uniform(game.action_grid(n, t)));
        }
    }
    return profile;
}

void check_profile(const GameSpec& game, const StrategyProfile& profile) {
    if (static_cast<int>(profile.dists.size()) != game.players()) {
        throw validation_error("profile: wrong player count");
    }
    for (int n = 0; n < game.players(); ++n) {
        if (static_cast<int>(profile.dists[static_cast<std::size_t>(n)].size()) != game.type_count(n)) {
            throw validation_error("profile: wrong type count for player " + std::to_string(n));
        }
        for (int t = 0; t < game.type_count(n); ++t) {
            if (!same_grid(profile.at(n, t).grid(), game.action_grid(n, t))) {
                throw validation_error("profile: distribution off the action grid at (n=" +
                                       std::to_string(n) + ", t=" + std::to_string(t) + ")");
            }
        }
    }
}

std::vector<std::vector<DiscreteDistribution>> scenario_a_priors(
    const std::vector<std::vector<DiscreteDistribution>>& sets, const IndexSpace& opp_space,
    const Tolerances& tol) {
    if (static_cast<long long>(sets.size()) != opp_space.total()) {
        throw validation_error("scenario_a_priors: one prior set per opponent type profile required");
    }
    long long combos = 1;
    for (const auto& s : sets) {
        if (s.empty()) throw validation_error("scenario_a_priors: empty prior set");
        combos *= static_cast<long long>(s.size());
        if (combos > 1000000) throw cap_exceeded_error("scenario_a_priors: selection space too large");
    }

    // comparable opponent-profile pairs under the componentwise order
    std::vector<std::pair<int, int>> comparable;
    const long long profiles = opp_space.total();
    for (long long i = 0; i < profiles; ++i) {
        const auto mi = opp_space.unflatten(i);
        for (long long j = 0; j < profiles; ++j) {
            if (i == j) continue;
            const auto mj = opp_space.unflatten(j);
            if (IndexSpace::leq(mi, mj)) comparable.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }

    std::vector<std::vector<DiscreteDistribution>> result;
    std::vector<int> pick(sets.size(), 0);
    for (long long c = 0; c < combos; ++c) {
        long long rest = c;
        for (std::size_t k = sets.size(); k-- > 0;) {
            pick[k] = static_cast<int>(rest % static_cast<long long>(sets[k].size()));
            rest /= static_cast<long long>(sets[k].size());
        }
        bool monotone = true;
        for (const auto& [i, j] : comparable) {
            if (!stochastic_leq(sets[static_cast<std::size_t>(i)][static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])],
                                sets[static_cast<std::size_t>(j)][static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])],
                                tol)) {
                monotone = false;
                break;
            }
        }
        if (!monotone) continue;
        std::vector<DiscreteDistribution> selection;
        selection.reserve(sets.size());
        for (std::size_t k = 0; k < sets.size(); ++k) {
            selection.push_back(sets[k][static_cast<std::size_t>(pick[k])]);
        }
        result.push_back(std::move(selection));
    }
    if (result.empty()) {
        throw validation_error("scenario_a_priors: no monotone selection exists");
    }
    return result;
}

std::vector<std::vector<DiscreteDistribution>> scenario_b_priors(
    const std::vector<DiscreteDistribution>& set, const IndexSpace& opp_space) {
    if (set.empty()) throw validation_error("scenario_b_priors: empty prior set");
    std::vector<std::vector<DiscreteDistribution>> result;
    result.reserve(set.size());
    for (const auto& nu : set) {
        result.emplace_back(static_cast<std::size_t>(opp_space.total()), nu);
    }
    return result;
}

TraditionalReduction reduce_traditional(const GameSpec& game) {
    TraditionalReduction out;
    out.p.resize(static_cast<std::size_t>(game.agent_count()));
    out.v.resize(static_cast<std::size_t>(game.agent_count()));
    for (int n = 0; n < game.players(); ++n) {
        const std::vector<int> opponents = game.players_except(n);
        for (int t = 0; t < game.type_count(n); ++t) {
            const Attitude& att = game.attitude(n, t);
            if (att.kind != AttitudeKind::traditional) {
                throw validation_error("reduce_traditional: non-traditional attitude at (n=" +
                                       std::to_string(n) + ", t=" + std::to_string(t) + ")");
            }
            const DiscreteDistribution& rho = att.priors.front();
            const int agent = game.agent_id(n, t);
            const IndexSpace& opp_space = game.opp_type_space(n);
            auto& p = out.p[static_cast<std::size_t>(agent)];
            auto& v = out.v[static_cast<std::size_t>(agent)];
            p.resize(static_cast<std::size_t>(opp_space.total()));
            v.resize(static_cast<std::size_t>(opp_space.total()));
            for (long long o = 0; o < opp_space.total(); ++o) {
                const int offset = game.block_offset(n, t, static_cast<int>(o));
                const int block = game.block_size(n, t, static_cast<int>(o));
                double mass = 0.0;
                for (int local = 0; local < block; ++local) mass += rho.mass(offset + local);
                if (mass <= 0.0) {
                    throw validation_error("reduce_traditional: zero-probability opponent profile " +
                                           std::to_string(o) + " at (n=" + std::to_string(n) + ", t=" +
                                           std::to_string(t) + ")");
                }
                p[static_cast<std::size_t>(o)] = mass;

                const std::vector<int> opp_types = opp_space.unflatten(o);
                std::vector<int> opp_sizes;
                for (std::size_t k = 0; k < opponents.size(); ++k) {
                    opp_sizes.push_back(game.action_count(opponents[k], opp_types[k]));
                }
                const IndexSpace opp_actions(opp_sizes);
                auto& per_own = v[static_cast<std::size_t>(o)];
                per_own.resize(static_cast<std::size_t>(game.action_count(n, t)));
                for (int a = 0; a < game.action_count(n, t); ++a) {
                    auto& per_opp = per_own[static_cast<std::size_t>(a)];
                    per_opp.resize(static_cast<std::size_t>(opp_actions.total()));
                    for (long long oa = 0; oa < opp_actions.total(); ++oa) {
                        const std::vector<int> opp_a = opp_actions.unflatten(oa);
                        double acc = 0.0;
                        for (int local = 0; local < block; ++local) {
                            acc += rho.mass(offset + local) *
                                   game.utility_at(n, t, static_cast<int>(o), a, opp_a, local);
                        }
                        per_opp[static_cast<std::size_t>(oa)] = acc / mass;
                    }
                }
            }
        }
    }
    return out;
}

GameSpec to_general(const GameSpec& game) {
    if (!game.structured()) throw validation_error("to_general: game is already general");
    const int block = static_cast<int>(game.tilde_grid()->point_count());
    const long long tps = game.type_profile_space().total();
    GeneralStates general;
    general.state_count = static_cast<int>(tps) * block;
    general.partition.resize(static_cast<std::size_t>(tps));
    for (long long tp = 0; tp < tps; ++tp) {
        for (int local = 0; local < block; ++local) {
            general.partition[static_cast<std::size_t>(tp)].push_back(static_cast<int>(tp) * block + local);
        }
    }

    std::vector<std::vector<GridPtr>> action_grids;
    action_grids.resize(static_cast<std::size_t>(game.players()));
    std::vector<std::vector<Attitude>> attitudes;
    attitudes.resize(static_cast<std::size_t>(game.players()));
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            action_grids[static_cast<std::size_t>(n)].push_back(game.action_grid(n, t));
            Attitude att = game.attitude(n, t);
            att.structured.reset(); // expanded priors carry the same information
            attitudes[static_cast<std::size_t>(n)].push_back(std::move(att));
        }
    }

    return GameSpec(game.type_counts(), std::move(action_grids), StateSpace(std::move(general)),
                    game.payoff_utility(), std::move(attitudes));
}

} // namespace ambigame
