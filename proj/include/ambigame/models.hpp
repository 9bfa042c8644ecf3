#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ambigame/game.hpp"

namespace ambigame {

enum class AuctionRule { first_price, second_price };

/// Payment owed by bidder n at a pure bid profile, evaluated after the
/// uniform tie-breaking has been integrated out; may be nonzero for losers
/// (all-pay style rules).
using PaymentRule =
    std::function<double(std::span<const double> bids, int n, double winner_share)>;

/// Single-item auction over finite bid and worth grids. Ties are resolved
/// equitably; the uniform tie-breaking permutation is integrated out
/// analytically, so the winner share of a bid tied at the top is 1/#argmax
/// and the permutation coordinate never enters the state space.
struct AuctionSpec {
    int bidders = 2;
    int types = 1; ///< signal count, shared across bidders
    std::vector<double> bid_levels;
    std::vector<std::vector<double>> worth_levels; ///< per bidder, in [0, w_max]
    AuctionRule rule = AuctionRule::first_price;
    /// Overrides the built-in first/second-price payment when set; the
    /// shipped rules charge nothing to losers, this hook lifts that.
    PaymentRule payment;
    AttitudeKind attitude = AttitudeKind::alarmist;

    /// One member of the prior set: an opponent-type mass function plus one
    /// worth-profile distribution (weights over the worth-profile grid in
    /// row-major order) per opponent type profile.
    struct Prior {
        std::vector<double> type_probs;
        std::vector<std::vector<double>> worth_weights;
    };
    /// priors[n][t] is the finite prior set of the (n, t) bidder.
    std::vector<std::vector<std::vector<Prior>>> priors;

    long long state_cap = 1000000;
};

GameSpec build_auction(const AuctionSpec& spec);

/// Discretized private-values auction in which a bidder's type IS the item's
/// worth to him and ambiguity concerns opponents' worths only. The prior
/// sets are independent of the own type.
struct LoAuctionSpec {
    int bidders = 2;
    std::vector<double> worth_levels; ///< shared type grid = worth grid
    std::vector<double> bid_levels;
    AuctionRule rule = AuctionRule::first_price;
    AttitudeKind attitude = AttitudeKind::alarmist;
    /// opponent_worth_weights[n][k] = weights over opponents' worth profiles
    /// (row-major over opponents in player order).
    std::vector<std::vector<std::vector<double>>> opponent_worth_weights;
    long long state_cap = 1000000;
};

GameSpec build_lo_auction(const LoAuctionSpec& spec);

/// Price competition with linear demand, local (type) and global (state)
/// demand boosters, and scenario-A ambiguity about the global signal.
struct PricingSpec {
    struct Firm {
        double cost = 1.0;
        std::vector<double> price_levels; ///< 1-D increasing, within [cost, cap]
        double b = 1.0;                   ///< demand base
        double c = 1.0;                   ///< own-price sensitivity
        std::vector<double> d;            ///< cross-price sensitivities, opponent order
        double e = 1.0;                   ///< local signal booster
        double f = 1.0;                   ///< global signal booster
        double g = 1.0;                   ///< compounding booster
        int types = 1;                    ///< type values are 1..types
    };
    std::vector<Firm> firms;
    std::vector<double> state_levels; ///< 1-D global demand factor grid
    AttitudeKind attitude = AttitudeKind::enterprising;
    /// Scenario A: type probabilities independent of the own type.
    std::vector<std::vector<double>> type_probs; ///< [firm][opp type profile]
    /// prior_sets[n][t][opp profile] = finite set of weight vectors over the
    /// state grid.
    std::vector<std::vector<std::vector<std::vector<std::vector<double>>>>> prior_sets;
};

GameSpec build_pricing_game(const PricingSpec& spec);

/// Interior best response of the pricing game from the first-order
/// condition, given the opponents' prices and the mean global signal.
double pricing_interior_best_response(const PricingSpec::Firm& firm, double type_value,
                                      const std::vector<double>& opponent_prices,
                                      double mean_state);

} // namespace ambigame
