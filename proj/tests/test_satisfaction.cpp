#include "doctest.h"

#include <algorithm>

#include "ambigame/errors.hpp"
#include "ambigame/rng.hpp"
#include "ambigame/satisfaction.hpp"
#include "support/fixtures.hpp"

using namespace ambigame;

namespace {

PayoffDistVector vector_with_means(double m0, double m1) {
    // entries are diracs on a value grid, so entry means are exactly m0, m1
    auto grid = (m0 == m1) ? SupportGrid::line({m0, m0 + 1.0})
                           : SupportGrid::line({std::min(m0, m1), std::max(m0, m1)});
    auto d_of = [&](double v) {
        return DiscreteDistribution::dirac(grid, v == grid->level(0, 0) ? 0 : 1);
    };
    return PayoffDistVector(0, 0, {d_of(m0), d_of(m1)});
}

Attitude with_kind(AttitudeKind kind, std::vector<DiscreteDistribution> priors) {
    Attitude a;
    a.kind = kind;
    a.priors = std::move(priors);
    return a;
}

} // namespace

TEST_CASE("s0 is the prior-weighted mean") {
    auto slot_grid = SupportGrid::index_line(2);
    PayoffDistVector pi = vector_with_means(1.0, 0.0);
    CHECK(s0(pi, DiscreteDistribution(slot_grid, {0.25, 0.75})) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(s0(pi, DiscreteDistribution::dirac(slot_grid, 0)) == 1.0); // dirac prior -> entry mean

    PayoffDistVector constant = vector_with_means(0.4, 0.4);
    CHECK(s0(constant, DiscreteDistribution(slot_grid, {0.9, 0.1})) == doctest::Approx(0.4));

    auto wrong = SupportGrid::index_line(3);
    CHECK_THROWS_AS(s0(pi, DiscreteDistribution::dirac(wrong, 0)), validation_error);
}

TEST_CASE("satisfaction takes min, max, or the single prior value") {
    auto slot_grid = SupportGrid::index_line(2);
    PayoffDistVector pi = vector_with_means(1.0, 0.0);
    std::vector<DiscreteDistribution> extremes{DiscreteDistribution::dirac(slot_grid, 0),
                                               DiscreteDistribution::dirac(slot_grid, 1)};
    CHECK(satisfaction(pi, with_kind(AttitudeKind::alarmist, extremes)) == 0.0);
    CHECK(satisfaction(pi, with_kind(AttitudeKind::enterprising, extremes)) == 1.0);

    // fixture with s0 values (0.3, 0.55) computed per prior first
    std::vector<DiscreteDistribution> pair{DiscreteDistribution(slot_grid, {0.3, 0.7}),
                                           DiscreteDistribution(slot_grid, {0.55, 0.45})};
    CHECK(satisfaction(pi, with_kind(AttitudeKind::alarmist, pair)) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(satisfaction(pi, with_kind(AttitudeKind::enterprising, pair)) ==
          doctest::Approx(0.55).epsilon(1e-14));

    PayoffDistVector constant = vector_with_means(0.7, 0.7);
    for (AttitudeKind kind : {AttitudeKind::traditional, AttitudeKind::alarmist, AttitudeKind::enterprising}) {
        auto att = with_kind(kind, kind == AttitudeKind::traditional
                                       ? std::vector<DiscreteDistribution>{pair[0]}
                                       : pair);
        CHECK(satisfaction(constant, att) == doctest::Approx(0.7).epsilon(1e-14));
    }

    CHECK_THROWS_AS(satisfaction(pi, Attitude::custom([](const PayoffDistVector&, const PayoffDistVector&) {
                        return false;
                    })),
                    validation_error);
}

TEST_CASE("prefers is a strict comparison") {
    auto slot_grid = SupportGrid::index_line(2);
    PayoffDistVector hi = vector_with_means(1.0, 1.0);
    PayoffDistVector lo = vector_with_means(0.0, 0.0);
    Attitude trad = with_kind(AttitudeKind::traditional,
                              {DiscreteDistribution(slot_grid, {0.5, 0.5})});
    CHECK(prefers(hi, lo, trad));
    CHECK_FALSE(prefers(lo, hi, trad));
    CHECK_FALSE(prefers(hi, hi, trad)); // irreflexivity

    // alarmist indifference: equal worst-case values both ways
    PayoffDistVector a = vector_with_means(0.3, 0.6);
    PayoffDistVector b = vector_with_means(0.6, 0.3);
    std::vector<DiscreteDistribution> extremes{DiscreteDistribution::dirac(slot_grid, 0),
                                               DiscreteDistribution::dirac(slot_grid, 1)};
    Attitude alarm = with_kind(AttitudeKind::alarmist, extremes);
    CHECK(satisfaction(a, alarm) == satisfaction(b, alarm));
    CHECK_FALSE(prefers(a, b, alarm));
    CHECK_FALSE(prefers(b, a, alarm));
}

TEST_CASE("satisfaction invariants across random vectors") {
    Rng rng(42);
    auto slot_grid = SupportGrid::index_line(3);
    auto vgrid = SupportGrid::line({0.0, 0.5, 1.0});
    auto random_vec = [&]() {
        std::vector<DiscreteDistribution> entries;
        for (int s = 0; s < 3; ++s) entries.emplace_back(vgrid, rng.probability_vector(3));
        return PayoffDistVector(0, 0, std::move(entries));
    };
    std::vector<DiscreteDistribution> priors;
    for (int k = 0; k < 3; ++k) priors.emplace_back(slot_grid, rng.probability_vector(3));

    Attitude alarm = with_kind(AttitudeKind::alarmist, priors);
    Attitude enter = with_kind(AttitudeKind::enterprising, priors);

    for (int trial = 0; trial < 100; ++trial) {
        PayoffDistVector pi = random_vec();
        const double lo = satisfaction(pi, alarm);
        const double hi = satisfaction(pi, enter);
        for (const auto& rho : priors) {
            Attitude trad = with_kind(AttitudeKind::traditional, {rho});
            const double mid = satisfaction(pi, trad);
            CHECK(lo <= mid);
            CHECK(mid <= hi);
        }
        // order independence under permutation of the prior list
        auto shuffled = priors;
        std::swap(shuffled[0], shuffled[2]);
        CHECK(satisfaction(pi, with_kind(AttitudeKind::alarmist, shuffled)) == lo);

        // linearity of s0 in pi
        PayoffDistVector pi2 = random_vec();
        const double alpha = rng.uniform();
        PayoffDistVector mixed = mix_vectors({{1.0 - alpha, pi}, {alpha, pi2}});
        CHECK(s0(mixed, priors[0]) ==
              doctest::Approx((1.0 - alpha) * s0(pi, priors[0]) + alpha * s0(pi2, priors[0]))
                  .epsilon(1e-12));

        // alarmist value = min over the convex hull: random mixtures never go below
        const double w = rng.uniform();
        auto hull_point = mix({{1.0 - w, priors[0]}, {w, priors[1]}});
        CHECK(s0(pi, hull_point) >= lo - 1e-12);
    }
}

TEST_CASE("check_shape classifies the three satisfaction attitudes") {
    GameSpec coin = fixtures::ambiguous_coin();

    SUBCASE("traditional is linear, hence strongly concave and convex") {
        Attitude trad = Attitude::traditional(coin.attitude(0, 0).priors.front());
        ShapeReport r = check_shape(trad, 400, 7);
        CHECK(r.concave.holds);
        CHECK(r.convex.holds);
        CHECK(r.quasi_concave.holds);
        CHECK(r.strongly_concave.holds);
        CHECK(r.strongly_convex.holds);
    }
    SUBCASE("alarmist is concave with a convexity counterexample") {
        ShapeReport r = check_shape(coin.attitude(0, 0), 400, 7);
        CHECK(r.concave.holds);
        CHECK(r.strongly_concave.holds);
        CHECK_FALSE(r.convex.holds);
        CHECK(!r.convex.counterexample.empty());
    }
    SUBCASE("enterprising is convex with a concavity counterexample") {
        GameSpec coin_e = fixtures::ambiguous_coin(AttitudeKind::enterprising);
        ShapeReport r = check_shape(coin_e.attitude(0, 0), 400, 7);
        CHECK(r.convex.holds);
        CHECK(r.strongly_convex.holds);
        CHECK_FALSE(r.concave.holds);
    }
    SUBCASE("explicit alarmist convexity counterexample from the extreme priors") {
        // pi0 pays on state 0 only, pi1 on state 1 only; the even mixture has
        // worst case 0.5 while both endpoints have worst case 0.
        auto att = coin.attitude(0, 0);
        Attitude extremes = att;
        auto slot_grid = SupportGrid::index_line(2);
        extremes.priors = {DiscreteDistribution::dirac(slot_grid, 0),
                           DiscreteDistribution::dirac(slot_grid, 1)};
        PayoffDistVector pi0 = vector_with_means(1.0, 0.0);
        PayoffDistVector pi1 = vector_with_means(0.0, 1.0);
        PayoffDistVector mid = mix_vectors({{0.5, pi0}, {0.5, pi1}});
        const double s_mid = satisfaction(mid, extremes);
        const double chord = 0.5 * satisfaction(pi0, extremes) + 0.5 * satisfaction(pi1, extremes);
        CHECK(s_mid > chord); // violates convexity
    }
}
