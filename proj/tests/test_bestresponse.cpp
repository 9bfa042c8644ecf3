#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "ambigame/bestresponse.hpp"
#include "ambigame/errors.hpp"
#include "ambigame/rng.hpp"
#include "support/fixtures.hpp"
#include "support/random_games.hpp"

using namespace ambigame;

TEST_CASE("ambiguous coin: action values, hedging LP, enterprising reduction") {
    GameSpec coin = fixtures::ambiguous_coin();
    StrategyProfile none = uniform_profile(coin);

    const std::vector<double> s = action_satisfactions(coin, 0, 0, none);
    CHECK(s[0] == doctest::Approx(0.4).epsilon(1e-14)); // evaluate the four s0 values by hand
    CHECK(s[1] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(action_best_set(coin, 0, 0, none, 1e-9).size() == 2);

    BestResponseResult br = dist_best_response(coin, 0, 0, none);
    CHECK(br.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(br.optimal_dist->mass(0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(br.regret_of(DiscreteDistribution::dirac(coin.action_grid(0, 0), 1)) ==
          doctest::Approx(0.1).epsilon(1e-12));

    GameSpec coin_e = fixtures::ambiguous_coin(AttitudeKind::enterprising);
    BestResponseResult bre = dist_best_response(coin_e, 0, 0, none);
    CHECK(bre.value == doctest::Approx(0.6).epsilon(1e-14)); // sup over the 2 priors per action
    CHECK(bre.optimal_dist->mass(0) + bre.optimal_dist->mass(1) == 1.0);
    CHECK(bre.maximal_actions.size() == 2);

    // the even mix is action-mode supported: both actions are maximal
    SupportCheck even = is_action_best_response(DiscreteDistribution(coin.action_grid(0, 0), {0.5, 0.5}),
                                                coin, 0, 0, none, 1e-9);
    CHECK(even.ok);
    CHECK(even.off_support_mass == 0.0);
}

TEST_CASE("a single-action grid is its own best set") {
    auto actions = SupportGrid::line({0.7});
    auto tilde = SupportGrid::line({0.0, 1.0});
    auto slot_grid = SupportGrid::index_line(2);
    PayoffTable u = {{{{0.2, 0.9}}}};
    Attitude att = Attitude::traditional(DiscreteDistribution(slot_grid, {0.5, 0.5}));
    GameSpec g({1}, {{actions}}, StructuredStates{tilde}, std::move(u), {{att}});
    CHECK(action_best_set(g, 0, 0, uniform_profile(g), 1e-9) == std::vector<int>{0});
}

TEST_CASE("single prior reduces to the pure argmax") {
    GameSpec pd = fixtures::prisoners_dilemma();
    StrategyProfile opp = uniform_profile(pd);
    BestResponseResult br = dist_best_response(pd, 0, 0, opp);
    CHECK(br.value == doctest::Approx(2.5).epsilon(1e-14)); // defect against 50/50: (4+1)/2
    CHECK(br.optimal_dist->mass(1) == 1.0);
    CHECK(br.maximal_actions == std::vector<int>{1});

    const int pure[] = {1, 1};
    StrategyProfile dd = pure_profile(pd, pure);
    CHECK(is_action_best_response(dd.at(0, 0), pd, 0, 0, dd, 1e-9).ok);
    auto mixed = DiscreteDistribution(pd.action_grid(0, 0), {0.5, 0.5});
    SupportCheck check = is_action_best_response(mixed, pd, 0, 0, dd, 1e-9);
    CHECK_FALSE(check.ok);
    CHECK(check.off_support_mass == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("grid search matches the exact solvers") {
    GameSpec coin = fixtures::ambiguous_coin();
    StrategyProfile none = uniform_profile(coin);

    SUBCASE("alarmist coin at h=0.01 finds the even mix") {
        GridBestResponse g = dist_best_response_grid(coin, 0, 0, none, 0.01);
        CHECK(g.best_value == doctest::Approx(0.5).epsilon(1e-12));
        REQUIRE(g.maximal.size() == 1);
        CHECK(g.maximal[0].mass(0) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("traditional grid optimum is within L*h of the exact value") {
        GameSpec pd = fixtures::prisoners_dilemma();
        StrategyProfile opp = uniform_profile(pd);
        BestResponseResult exact = dist_best_response(pd, 0, 0, opp);
        GridBestResponse g = dist_best_response_grid(pd, 0, 0, opp, 0.01);
        const double L = pd.utility_range(0, 0);
        CHECK(g.best_value <= exact.value + 1e-12);
        CHECK(g.best_value >= exact.value - L * 0.01 - 1e-12);
    }
    SUBCASE("custom wrapper reproduces the traditional maximal set") {
        GameSpec pd = fixtures::prisoners_dilemma();
        // same game, but player 0 ranks vectors by a hand-rolled single-prior mean
        auto slot_grid = SupportGrid::index_line(1);
        Attitude custom = Attitude::custom([](const PayoffDistVector& a, const PayoffDistVector& b) {
            return a.entry_mean(0) > b.entry_mean(0);
        });
        GameSpec wrapped({1, 1}, {{pd.action_grid(0, 0)}, {pd.action_grid(1, 0)}},
                         StructuredStates{SupportGrid::line({0.0})}, pd.payoff_utility(),
                         {{custom}, {Attitude::traditional(DiscreteDistribution(slot_grid, {1.0}))}});
        StrategyProfile opp = uniform_profile(wrapped);
        GridBestResponse via_custom = dist_best_response_grid(wrapped, 0, 0, opp, 0.25);
        GridBestResponse via_trad = dist_best_response_grid(pd, 0, 0, opp, 0.25);
        REQUIRE(via_custom.maximal.size() == via_trad.maximal.size());
        for (std::size_t i = 0; i < via_custom.maximal.size(); ++i) {
            CHECK(via_custom.maximal[i].sup_distance(via_trad.maximal[i]) == 0.0);
        }
        CHECK(action_best_set(wrapped, 0, 0, opp, 0.0) == action_best_set(pd, 0, 0, opp, 1e-9));
    }
}

TEST_CASE("value sandwich and much-ep on random games") {
    Rng rng(321);
    testgen::RandomGameParams params;
    for (int trial = 0; trial < 25; ++trial) {
        GameSpec g = testgen::random_structured_game(params, rng);
        StrategyProfile profile = testgen::random_profile(g, rng);
        for (int n = 0; n < g.players(); ++n) {
            for (int t = 0; t < g.type_count(n); ++t) {
                const std::vector<double> s = action_satisfactions(g, n, t, profile);
                const double pure_max = *std::max_element(s.begin(), s.end());
                BestResponseResult br = dist_best_response(g, n, t, profile);
                CHECK(br.value >= pure_max - 1e-12);
                if (g.attitude(n, t).kind != AttitudeKind::alarmist) {
                    CHECK(br.value == doctest::Approx(pure_max).epsilon(1e-10));
                }
                // s^a(a) = s^d(dirac(a)) exactly
                for (int a = 0; a < g.action_count(n, t); ++a) {
                    auto dirac = DiscreteDistribution::dirac(g.action_grid(n, t), a);
                    CHECK(br.mixed_satisfaction(dirac) == doctest::Approx(s[static_cast<std::size_t>(a)]).epsilon(1e-13));
                }
                // the optimum beats every pure action (result invariant)
                for (int a = 0; a < g.action_count(n, t); ++a) {
                    CHECK(br.value >= s[static_cast<std::size_t>(a)] - 1e-12);
                }
            }
        }
    }
}

TEST_CASE("mixed satisfaction agrees between the matrix and payoff-vector routes") {
    // s^d(delta) computed from the pure-action satisfaction matrix must match
    // the direct evaluation on the mixed payoff vector for every attitude
    Rng rng(606);
    testgen::RandomGameParams params;
    for (int trial = 0; trial < 15; ++trial) {
        GameSpec g = testgen::random_structured_game(params, rng);
        StrategyProfile profile = testgen::random_profile(g, rng);
        for (int n = 0; n < g.players(); ++n) {
            for (int t = 0; t < g.type_count(n); ++t) {
                BestResponseResult br = dist_best_response(g, n, t, profile);
                DiscreteDistribution own(g.action_grid(n, t),
                                         rng.probability_vector(g.action_count(n, t)));
                const double via_matrix = br.mixed_satisfaction(own);
                const double via_vector =
                    satisfaction(strategy_payoff_vector(g, n, t, own, profile), g.attitude(n, t));
                CHECK(via_matrix == doctest::Approx(via_vector).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("alarmist LP matches fine grid search") {
    Rng rng(5150);
    testgen::RandomGameParams params;
    params.policy = testgen::AttitudePolicy::all_alarmist;
    params.min_actions = 3;
    params.max_actions = 3;
    params.min_priors = 2;
    for (int trial = 0; trial < 20; ++trial) {
        GameSpec g = testgen::random_structured_game(params, rng);
        StrategyProfile profile = testgen::random_profile(g, rng);
        const int n = rng.uniform_int(0, g.players() - 1);
        const int t = rng.uniform_int(0, g.type_count(n) - 1);
        BestResponseResult br = dist_best_response(g, n, t, profile);
        GridBestResponse grid = dist_best_response_grid(g, n, t, profile, 0.01);
        const double L = g.utility_range(n, t);
        CHECK(br.value >= grid.best_value - 1e-10);
        CHECK(br.value <= grid.best_value + L * 0.01 + 1e-10);
    }
}

TEST_CASE("agent form equals the payoff-vector pipeline at dirac profiles") {
    Rng rng(777);
    testgen::RandomGameParams params;
    for (int trial = 0; trial < 10; ++trial) {
        GameSpec g = testgen::random_structured_game(params, rng);
        AgentForm table(g);
        // a random pure assignment
        std::vector<int> assignment(static_cast<std::size_t>(g.agent_count()));
        for (int id = 0; id < g.agent_count(); ++id) {
            const auto [n, t] = g.agent_of(id);
            assignment[static_cast<std::size_t>(id)] = rng.uniform_int(0, g.action_count(n, t) - 1);
        }
        StrategyProfile diracs = pure_profile(g, assignment);
        for (int id = 0; id < g.agent_count(); ++id) {
            const auto [n, t] = g.agent_of(id);
            for (int a = 0; a < g.action_count(n, t); ++a) {
                const double via_table = table.value(id, a, assignment);
                const double via_pipeline =
                    satisfaction(action_payoff_vector(g, n, t, a, diracs), g.attitude(n, t));
                CHECK(via_table == doctest::Approx(via_pipeline).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("factored structured evaluation agrees with expanded priors") {
    // two players, types (1,2), factored scenario-style priors for player 0
    auto actions = SupportGrid::line({0.0, 1.0, 2.0});
    auto tilde = SupportGrid::line({0.0, 1.0});
    Rng rng(4242);

    PayoffTable u(2);
    for (int n = 0; n < 2; ++n) {
        u[static_cast<std::size_t>(n)].resize(2);
        for (int tp = 0; tp < 2; ++tp) {
            for (int ap = 0; ap < 9; ++ap) {
                u[static_cast<std::size_t>(n)][static_cast<std::size_t>(tp)].push_back(
                    {rng.uniform(), rng.uniform()});
            }
        }
    }

    StructuredPriors sp;
    sp.type_probs = {0.3, 0.7};
    for (int k = 0; k < 2; ++k) {
        sp.vectors.push_back({DiscreteDistribution(tilde, rng.probability_vector(2)),
                              DiscreteDistribution(tilde, rng.probability_vector(2))});
    }
    Attitude factored;
    factored.kind = AttitudeKind::enterprising;
    factored.structured = sp;

    auto slot_grid_p1 = SupportGrid::index_line(2);
    Attitude opp_att = Attitude::traditional(DiscreteDistribution(slot_grid_p1, {0.4, 0.6}));

    GameSpec g({1, 2}, {{actions}, {actions, actions}}, StructuredStates{tilde}, u,
               {{factored}, {opp_att, opp_att}});

    // strip the factored data so evaluation must use the expanded priors
    Attitude expanded = g.attitude(0, 0);
    expanded.structured.reset();
    GameSpec g2({1, 2}, {{actions}, {actions, actions}}, StructuredStates{tilde}, u,
                {{expanded}, {opp_att, opp_att}});

    std::vector<int> assignment(static_cast<std::size_t>(g.agent_count()), 0);
    for (int a0 = 0; a0 < 3; ++a0) {
        for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 3; ++c) {
                assignment[1] = b;
                assignment[2] = c;
                CHECK(agent_form_value(g, 0, 0, a0, assignment) ==
                      doctest::Approx(agent_form_value(g2, 0, 0, a0, assignment)).epsilon(1e-12));
            }
        }
    }
}
