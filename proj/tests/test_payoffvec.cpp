#include "doctest.h"

#include "ambigame/payoffvec.hpp"
#include "ambigame/rng.hpp"
#include "support/fixtures.hpp"
#include "support/random_games.hpp"

using namespace ambigame;

TEST_CASE("action payoff vector under pure opponents is a dirac vector") {
    GameSpec g = fixtures::matching_pennies();
    const int actions0[] = {0, 1};
    StrategyProfile profile = pure_profile(g, actions0);
    PayoffDistVector v = action_payoff_vector(g, 0, 0, 0, profile);
    // player 0 plays 0 against 1: payoff -1, a point mass
    CHECK(v.size() == 1);
    CHECK(v.entry_mean(0) == -1.0);
    CHECK(v.entry(0).mass(0) == 1.0);
}

TEST_CASE("opponent mixing yields the Bernoulli payoff distribution") {
    GameSpec g = fixtures::matching_pennies();
    StrategyProfile profile = uniform_profile(g);
    PayoffDistVector v = action_payoff_vector(g, 0, 0, 0, profile);
    // against the 50/50 opponent, payoffs -1 / +1 with equal chance
    CHECK(v.entry(0).mass(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(v.entry(0).mass(1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(v.entry_mean(0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("strategy payoff vector of a dirac equals the action vector") {
    Rng rng(5);
    testgen::RandomGameParams params;
    for (int trial = 0; trial < 10; ++trial) {
        GameSpec g = testgen::random_structured_game(params, rng);
        StrategyProfile profile = testgen::random_profile(g, rng);
        const int n = rng.uniform_int(0, g.players() - 1);
        const int t = rng.uniform_int(0, g.type_count(n) - 1);
        for (int a = 0; a < g.action_count(n, t); ++a) {
            auto own = DiscreteDistribution::dirac(g.action_grid(n, t), a);
            PayoffDistVector lhs = strategy_payoff_vector(g, n, t, own, profile);
            PayoffDistVector rhs = action_payoff_vector(g, n, t, a, profile);
            for (int s = 0; s < lhs.size(); ++s) {
                CHECK(lhs.entry(s).sup_distance(rhs.entry(s)) == 0.0);
            }
        }
    }
}

TEST_CASE("strategy payoff vector matches the full product-measure pushforward") {
    // two actions, two opponent outcomes: both construction routes agree
    GameSpec g = fixtures::matching_pennies();
    StrategyProfile profile = uniform_profile(g);
    DiscreteDistribution own(g.action_grid(0, 0), {0.3, 0.7});
    PayoffDistVector via_mix = strategy_payoff_vector(g, 0, 0, own, profile);

    // direct route: push the joint (own x opponent) distribution through the table
    auto joint = product({own, profile.at(1, 0)});
    auto target = g.utility_grid(0, 0);
    auto mapped = pushforward(joint, target, [&](std::span<const double> a) {
        const int a0 = a[0] > 0.5 ? 1 : 0;
        const int a1 = a[1] > 0.5 ? 1 : 0;
        const int opp[] = {a1};
        return std::vector<double>{g.utility_at(0, 0, 0, a0, opp, 0)};
    });
    CHECK(via_mix.entry(0).sup_distance(mapped) <= 1e-15);
}

TEST_CASE("kernel integration reproduces the strategy vector") {
    Rng rng(13);
    testgen::RandomGameParams params;
    for (int trial = 0; trial < 10; ++trial) {
        GameSpec g = testgen::random_structured_game(params, rng);
        StrategyProfile profile = testgen::random_profile(g, rng);
        const int n = rng.uniform_int(0, g.players() - 1);
        const int t = rng.uniform_int(0, g.type_count(n) - 1);
        FiniteKernel k = kernel(g, n, t, profile);
        CHECK(static_cast<int>(k.rows.size()) == g.action_count(n, t));

        DiscreteDistribution own(g.action_grid(n, t), rng.probability_vector(g.action_count(n, t)));
        PayoffDistVector integrated = integrate_kernel(k, own);
        PayoffDistVector direct = strategy_payoff_vector(g, n, t, own, profile);
        for (int s = 0; s < integrated.size(); ++s) {
            CHECK(integrated.entry(s).sup_distance(direct.entry(s)) == 0.0);
        }

        // dirac picks out the kernel row
        PayoffDistVector row0 = integrate_kernel(k, DiscreteDistribution::dirac(g.action_grid(n, t), 0));
        for (int s = 0; s < row0.size(); ++s) {
            CHECK(row0.entry(s).sup_distance(k.rows[0].entry(s)) == 0.0);
        }
    }
}

TEST_CASE("strategy vector is linear in the own distribution") {
    Rng rng(21);
    testgen::RandomGameParams params;
    GameSpec g = testgen::random_structured_game(params, rng);
    StrategyProfile profile = testgen::random_profile(g, rng);
    const int n = 0, t = 0;
    DiscreteDistribution d0(g.action_grid(n, t), rng.probability_vector(g.action_count(n, t)));
    DiscreteDistribution d1(g.action_grid(n, t), rng.probability_vector(g.action_count(n, t)));
    for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
        auto blended = mix({{1.0 - alpha, d0}, {alpha, d1}});
        PayoffDistVector lhs = strategy_payoff_vector(g, n, t, blended, profile);
        PayoffDistVector rhs = mix_vectors({{1.0 - alpha, strategy_payoff_vector(g, n, t, d0, profile)},
                                            {alpha, strategy_payoff_vector(g, n, t, d1, profile)}});
        for (int s = 0; s < lhs.size(); ++s) {
            CHECK(lhs.entry(s).sup_distance(rhs.entry(s)) <= 1e-12);
        }
    }
}

TEST_CASE("utility constant in opponents actions makes entries profile independent") {
    // 1-player game: no opponents at all, entries are diracs at the table value
    GameSpec coin = fixtures::ambiguous_coin();
    StrategyProfile empty = uniform_profile(coin);
    PayoffDistVector v = action_payoff_vector(coin, 0, 0, 1, empty);
    CHECK(v.size() == 2);
    CHECK(v.entry_mean(0) == 0.0);
    CHECK(v.entry_mean(1) == 1.0);
}
