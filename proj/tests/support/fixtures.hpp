#pragma once

// Hand-built desk-scale games shared by the unit and acceptance suites.

#include <vector>

#include "ambigame/game.hpp"
#include "ambigame/models.hpp"

namespace fixtures {

using namespace ambigame;

/// The shipped pricing instance: symmetric duopoly, two local-signal types,
/// singleton ordered scenario-A prior sets on a three-point global grid.
inline PricingSpec pricing_spec(int price_points = 21, double b_scale = 1.0) {
    PricingSpec spec;
    PricingSpec::Firm firm;
    firm.cost = 1.0;
    firm.price_levels.clear();
    for (int i = 0; i < price_points; ++i) {
        firm.price_levels.push_back(1.0 + 2.0 * i / (price_points - 1));
    }
    firm.b = 2.0 * b_scale;
    firm.c = 1.5;
    firm.d = {0.5};
    firm.e = 0.3;
    firm.f = 0.4;
    firm.g = 0.2;
    firm.types = 2;
    spec.firms = {firm, firm};
    spec.state_levels = {0.0, 0.5, 1.0};
    spec.attitude = AttitudeKind::enterprising;
    spec.type_probs = {{0.5, 0.5}, {0.5, 0.5}};
    const std::vector<double> low{0.5, 0.3, 0.2};
    const std::vector<double> high{0.2, 0.3, 0.5};
    for (int n = 0; n < 2; ++n) {
        spec.prior_sets.push_back({
            {{low}, {low}},  // type 0: one prior per opponent profile
            {{high}, {high}} // type 1
        });
    }
    return spec;
}

/// One player bets on which coin face pays (action 0 = tails, 1 = heads,
/// paying 1 when right) under the ambiguous prior pair {(0.4,0.6),(0.6,0.4)}
/// over the paying face. The classic hedging-separation instance.
inline GameSpec ambiguous_coin(AttitudeKind kind = AttitudeKind::alarmist) {
    auto actions = SupportGrid::line({0.0, 1.0});
    auto tilde = SupportGrid::line({0.0, 1.0});
    PayoffTable u = {{
        // one type profile; action profiles (0), (1); states (T pays, H pays)
        {{1.0, 0.0}, {0.0, 1.0}},
    }};
    auto slot_grid = SupportGrid::index_line(2);
    std::vector<DiscreteDistribution> priors{DiscreteDistribution(slot_grid, {0.4, 0.6}),
                                             DiscreteDistribution(slot_grid, {0.6, 0.4})};
    Attitude att;
    att.kind = kind;
    att.priors = std::move(priors);
    if (kind == AttitudeKind::traditional) att.priors.erase(att.priors.begin() + 1, att.priors.end());
    return GameSpec({1}, {{actions}}, StructuredStates{tilde}, std::move(u), {{att}});
}

/// Two-player zero-sum matching game, single type, single state.
inline GameSpec matching_pennies() {
    auto actions = SupportGrid::line({0.0, 1.0});
    auto tilde = SupportGrid::line({0.0});
    // action profiles row-major: (0,0), (0,1), (1,0), (1,1)
    PayoffTable u = {
        {{{1.0}, {-1.0}, {-1.0}, {1.0}}},
        {{{-1.0}, {1.0}, {1.0}, {-1.0}}},
    };
    auto slot_grid = SupportGrid::index_line(1);
    Attitude att = Attitude::traditional(DiscreteDistribution(slot_grid, {1.0}));
    return GameSpec({1, 1}, {{actions}, {actions}}, StructuredStates{tilde}, std::move(u),
                    {{att}, {att}});
}

/// Standard prisoner's dilemma (action 0 = cooperate, 1 = defect).
inline GameSpec prisoners_dilemma() {
    auto actions = SupportGrid::line({0.0, 1.0});
    auto tilde = SupportGrid::line({0.0});
    PayoffTable u = {
        {{{3.0}, {0.0}, {4.0}, {1.0}}},
        {{{3.0}, {4.0}, {0.0}, {1.0}}},
    };
    auto slot_grid = SupportGrid::index_line(1);
    Attitude att = Attitude::traditional(DiscreteDistribution(slot_grid, {1.0}));
    return GameSpec({1, 1}, {{actions}, {actions}}, StructuredStates{tilde}, std::move(u),
                    {{att}, {att}});
}

/// Prisoner's dilemma with two payoff-irrelevant ambiguous states; the
/// defect-dominance survives any prior, so the equilibrium set is stable
/// under prior perturbation.
inline GameSpec ambiguous_prisoners_dilemma() {
    auto actions = SupportGrid::line({0.0, 1.0});
    auto tilde = SupportGrid::line({0.0, 1.0});
    auto dup = [](std::initializer_list<double> vals) {
        std::vector<std::vector<double>> rows;
        for (double v : vals) rows.push_back({v, v + 0.25});
        return rows;
    };
    PayoffTable u = {
        {dup({3.0, 0.0, 4.0, 1.0})},
        {dup({3.0, 4.0, 0.0, 1.0})},
    };
    auto slot_grid = SupportGrid::index_line(2);
    Attitude att = Attitude::alarmist({DiscreteDistribution(slot_grid, {0.8, 0.2}),
                                       DiscreteDistribution(slot_grid, {0.2, 0.8})});
    return GameSpec({1, 1}, {{actions}, {actions}}, StructuredStates{tilde}, std::move(u),
                    {{att}, {att}});
}

/// Two-player, two-type supermodular fixture: quadratic payoffs with
/// positive cross partials in (own action) x (type, opponent action, state),
/// enterprising scenario-A attitudes with singleton ordered prior sets.
/// `boost` shifts the marginal value of the own action (the sweep knob).
inline GameSpec supermodular_fixture(double boost = 0.0) {
    auto actions = SupportGrid::line({0.0, 0.5, 1.0});
    auto tilde = SupportGrid::line({0.0, 1.0});
    const IndexSpace types({2, 2});

    auto util = [&](int t_own, double a_own, double a_other, double omega) {
        const double t_val = 1.0 + t_own;
        return a_own * (0.5 + 0.5 * t_val + 0.5 * a_other + 0.5 * omega + boost) - a_own * a_own;
    };

    PayoffTable u(2);
    for (int n = 0; n < 2; ++n) {
        u[static_cast<std::size_t>(n)].resize(4);
        for (long long tp = 0; tp < 4; ++tp) {
            const auto ts = types.unflatten(tp);
            for (int a0 = 0; a0 < 3; ++a0) {
                for (int a1 = 0; a1 < 3; ++a1) {
                    const double own = actions->level(0, n == 0 ? a0 : a1);
                    const double other = actions->level(0, n == 0 ? a1 : a0);
                    std::vector<double> per_state;
                    for (int w = 0; w < 2; ++w) {
                        per_state.push_back(util(ts[static_cast<std::size_t>(n)], own, other,
                                                 tilde->level(0, w)));
                    }
                    u[static_cast<std::size_t>(n)][static_cast<std::size_t>(tp)].push_back(per_state);
                }
            }
        }
    }

    DiscreteDistribution low(tilde, {0.6, 0.4});
    DiscreteDistribution high(tilde, {0.4, 0.6});
    std::vector<std::vector<Attitude>> attitudes(2);
    for (int n = 0; n < 2; ++n) {
        for (int t = 0; t < 2; ++t) {
            StructuredPriors sp;
            sp.type_probs = {0.5, 0.5};
            sp.scenario_a_sets = {{t == 0 ? low : high}, {t == 0 ? low : high}};
            sp.vectors = scenario_a_priors(sp.scenario_a_sets, IndexSpace({2}));
            Attitude att;
            att.kind = AttitudeKind::enterprising;
            att.structured = std::move(sp);
            attitudes[static_cast<std::size_t>(n)].push_back(std::move(att));
        }
    }
    return GameSpec({2, 2}, {{actions, actions}, {actions, actions}}, StructuredStates{tilde},
                    std::move(u), std::move(attitudes));
}

/// 2x2 traditional game with strictly dominant actions (1,1).
inline GameSpec dominant_game() {
    auto actions = SupportGrid::line({0.0, 1.0});
    auto tilde = SupportGrid::line({0.0});
    PayoffTable u = {
        {{{0.0}, {0.0}, {1.0}, {1.0}}},
        {{{0.0}, {1.0}, {0.0}, {1.0}}},
    };
    auto slot_grid = SupportGrid::index_line(1);
    Attitude att = Attitude::traditional(DiscreteDistribution(slot_grid, {1.0}));
    return GameSpec({1, 1}, {{actions}, {actions}}, StructuredStates{tilde}, std::move(u),
                    {{att}, {att}});
}

} // namespace fixtures
