#include "ambigame/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ambigame/errors.hpp"

namespace ambigame {

namespace {

/// Winner share of bidder n at a bid profile: 1 for the strict high bidder,
/// 1/#argmax within the tied top group, 0 otherwise.
double winner_share(std::span<const double> bids, int n) {
    double top = bids[0];
    for (double b : bids) top = std::max(top, b);
    if (bids[static_cast<std::size_t>(n)] < top) return 0.0;
    int tied = 0;
    for (double b : bids) {
        if (b == top) ++tied;
    }
    return 1.0 / static_cast<double>(tied);
}

double auction_payoff(std::span<const double> bids, int n, double worth, AuctionRule rule,
                      const PaymentRule& payment) {
    const double share = winner_share(bids, n);
    if (payment) return share * worth - payment(bids, n, share);
    if (share == 0.0) return 0.0;
    double price = bids[static_cast<std::size_t>(n)];
    if (rule == AuctionRule::second_price) {
        price = 0.0;
        for (std::size_t m = 0; m < bids.size(); ++m) {
            if (static_cast<int>(m) != n) price = std::max(price, bids[m]);
        }
    }
    return share * (worth - price);
}

} // namespace

GameSpec build_auction(const AuctionSpec& spec) {
    if (spec.bidders < 1) throw validation_error("build_auction: no bidders");
    if (spec.types < 1) throw validation_error("build_auction: no types");
    if (spec.bid_levels.empty()) throw validation_error("build_auction: empty bid grid");
    if (static_cast<int>(spec.worth_levels.size()) != spec.bidders) {
        throw validation_error("build_auction: one worth grid per bidder required");
    }

    std::vector<std::vector<double>> worth_dims = spec.worth_levels;
    auto tilde = std::make_shared<SupportGrid>(worth_dims);
    auto bids = SupportGrid::line(spec.bid_levels);

    long long opp_profiles = 1;
    for (int m = 1; m < spec.bidders; ++m) opp_profiles *= spec.types;
    if (opp_profiles * tilde->point_count() > spec.state_cap) {
        throw cap_exceeded_error("build_auction: state space exceeds the cap");
    }

    const std::vector<int> type_counts(static_cast<std::size_t>(spec.bidders), spec.types);
    const IndexSpace type_space(type_counts);
    const long long states = tilde->point_count();
    const long long actions = static_cast<long long>(spec.bid_levels.size());

    PayoffTable u(static_cast<std::size_t>(spec.bidders));
    IndexSpace action_space(std::vector<int>(static_cast<std::size_t>(spec.bidders),
                                             static_cast<int>(actions)));
    for (int n = 0; n < spec.bidders; ++n) {
        auto& per_tp = u[static_cast<std::size_t>(n)];
        per_tp.resize(static_cast<std::size_t>(type_space.total()));
        for (long long tp = 0; tp < type_space.total(); ++tp) {
            auto& per_ap = per_tp[static_cast<std::size_t>(tp)];
            per_ap.resize(static_cast<std::size_t>(action_space.total()));
            for (long long ap = 0; ap < action_space.total(); ++ap) {
                const auto multi = action_space.unflatten(ap);
                std::vector<double> bid_values(static_cast<std::size_t>(spec.bidders));
                for (int m = 0; m < spec.bidders; ++m) {
                    bid_values[static_cast<std::size_t>(m)] =
                        spec.bid_levels[static_cast<std::size_t>(multi[static_cast<std::size_t>(m)])];
                }
                auto& per_state = per_ap[static_cast<std::size_t>(ap)];
                per_state.resize(static_cast<std::size_t>(states));
                for (long long w = 0; w < states; ++w) {
                    const std::vector<double> worths = tilde->point(w);
                    per_state[static_cast<std::size_t>(w)] =
                        auction_payoff(bid_values, n, worths[static_cast<std::size_t>(n)], spec.rule, spec.payment);
                }
            }
        }
    }

    if (static_cast<int>(spec.priors.size()) != spec.bidders) {
        throw validation_error("build_auction: priors missing for some bidder");
    }
    std::vector<std::vector<GridPtr>> action_grids(static_cast<std::size_t>(spec.bidders));
    std::vector<std::vector<Attitude>> attitudes(static_cast<std::size_t>(spec.bidders));
    const int slot_count = static_cast<int>(opp_profiles * states);
    auto slot_grid = SupportGrid::index_line(slot_count);
    for (int n = 0; n < spec.bidders; ++n) {
        if (static_cast<int>(spec.priors[static_cast<std::size_t>(n)].size()) != spec.types) {
            throw validation_error("build_auction: priors missing for some type");
        }
        for (int t = 0; t < spec.types; ++t) {
            action_grids[static_cast<std::size_t>(n)].push_back(bids);
            const auto& prior_set = spec.priors[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
            if (prior_set.empty()) throw validation_error("build_auction: empty prior set");
            Attitude att;
            att.kind = spec.attitude;
            for (const auto& prior : prior_set) {
                if (static_cast<long long>(prior.type_probs.size()) != opp_profiles ||
                    static_cast<long long>(prior.worth_weights.size()) != opp_profiles) {
                    throw validation_error("build_auction: prior shape mismatch");
                }
                std::vector<double> w(static_cast<std::size_t>(slot_count), 0.0);
                for (long long o = 0; o < opp_profiles; ++o) {
                    const auto& nu = prior.worth_weights[static_cast<std::size_t>(o)];
                    if (static_cast<long long>(nu.size()) != states) {
                        throw validation_error("build_auction: worth distribution shape mismatch");
                    }
                    for (long long s = 0; s < states; ++s) {
                        w[static_cast<std::size_t>(o * states + s)] =
                            prior.type_probs[static_cast<std::size_t>(o)] * nu[static_cast<std::size_t>(s)];
                    }
                }
                att.priors.emplace_back(slot_grid, std::move(w));
            }
            attitudes[static_cast<std::size_t>(n)].push_back(std::move(att));
        }
    }

    return GameSpec(type_counts, std::move(action_grids), StructuredStates{tilde}, std::move(u),
                    std::move(attitudes));
}

GameSpec build_lo_auction(const LoAuctionSpec& spec) {
    if (spec.bidders < 1) throw validation_error("build_lo_auction: no bidders");
    if (spec.worth_levels.empty() || spec.bid_levels.empty()) {
        throw validation_error("build_lo_auction: empty grids");
    }
    const int worths = static_cast<int>(spec.worth_levels.size());
    long long opp_profiles = 1;
    for (int m = 1; m < spec.bidders; ++m) opp_profiles *= worths;
    if (opp_profiles > spec.state_cap) {
        throw cap_exceeded_error("build_lo_auction: state space exceeds the cap");
    }

    auto tilde = SupportGrid::line({0.0}); // types resolve all payoff uncertainty
    auto bids = SupportGrid::line(spec.bid_levels);
    const std::vector<int> type_counts(static_cast<std::size_t>(spec.bidders), worths);
    const IndexSpace type_space(type_counts);
    const long long actions = static_cast<long long>(spec.bid_levels.size());
    IndexSpace action_space(std::vector<int>(static_cast<std::size_t>(spec.bidders),
                                             static_cast<int>(actions)));

    PayoffTable u(static_cast<std::size_t>(spec.bidders));
    for (int n = 0; n < spec.bidders; ++n) {
        auto& per_tp = u[static_cast<std::size_t>(n)];
        per_tp.resize(static_cast<std::size_t>(type_space.total()));
        for (long long tp = 0; tp < type_space.total(); ++tp) {
            const auto types = type_space.unflatten(tp);
            const double worth =
                spec.worth_levels[static_cast<std::size_t>(types[static_cast<std::size_t>(n)])];
            auto& per_ap = per_tp[static_cast<std::size_t>(tp)];
            per_ap.resize(static_cast<std::size_t>(action_space.total()));
            for (long long ap = 0; ap < action_space.total(); ++ap) {
                const auto multi = action_space.unflatten(ap);
                std::vector<double> bid_values(static_cast<std::size_t>(spec.bidders));
                for (int m = 0; m < spec.bidders; ++m) {
                    bid_values[static_cast<std::size_t>(m)] =
                        spec.bid_levels[static_cast<std::size_t>(multi[static_cast<std::size_t>(m)])];
                }
                per_ap[static_cast<std::size_t>(ap)] = {auction_payoff(bid_values, n, worth, spec.rule, PaymentRule{})};
            }
        }
    }

    if (static_cast<int>(spec.opponent_worth_weights.size()) != spec.bidders) {
        throw validation_error("build_lo_auction: prior sets missing for some bidder");
    }
    std::vector<std::vector<GridPtr>> action_grids(static_cast<std::size_t>(spec.bidders));
    std::vector<std::vector<Attitude>> attitudes(static_cast<std::size_t>(spec.bidders));
    auto slot_grid = SupportGrid::index_line(static_cast<int>(opp_profiles));
    for (int n = 0; n < spec.bidders; ++n) {
        const auto& q_set = spec.opponent_worth_weights[static_cast<std::size_t>(n)];
        if (q_set.empty()) throw validation_error("build_lo_auction: empty prior set");
        std::vector<DiscreteDistribution> priors;
        for (const auto& q : q_set) priors.emplace_back(slot_grid, q);
        for (int t = 0; t < worths; ++t) {
            action_grids[static_cast<std::size_t>(n)].push_back(bids);
            Attitude att;
            att.kind = spec.attitude;
            att.priors = priors; // independent of the own type
            attitudes[static_cast<std::size_t>(n)].push_back(std::move(att));
        }
    }

    return GameSpec(type_counts, std::move(action_grids), StructuredStates{tilde}, std::move(u),
                    std::move(attitudes));
}

GameSpec build_pricing_game(const PricingSpec& spec) {
    const int firms = static_cast<int>(spec.firms.size());
    if (firms < 1) throw validation_error("build_pricing_game: no firms");
    if (spec.state_levels.empty()) throw validation_error("build_pricing_game: empty state grid");
    for (const auto& firm : spec.firms) {
        if (firm.price_levels.empty()) throw validation_error("build_pricing_game: empty price grid");
        if (!(firm.b > 0.0) || !(firm.c > 0.0) || !(firm.e > 0.0) || !(firm.f > 0.0) ||
            !(firm.g > 0.0)) {
            throw validation_error("build_pricing_game: demand constants must be positive");
        }
        if (static_cast<int>(firm.d.size()) != firms - 1) {
            throw validation_error("build_pricing_game: one cross sensitivity per opponent required");
        }
        for (double d : firm.d) {
            if (!(d > 0.0)) throw validation_error("build_pricing_game: demand constants must be positive");
        }
        if (firm.types < 1) throw validation_error("build_pricing_game: no types");
    }

    auto tilde = SupportGrid::line(spec.state_levels);
    std::vector<int> type_counts;
    for (const auto& firm : spec.firms) type_counts.push_back(firm.types);
    const IndexSpace type_space(type_counts);
    const long long states = tilde->point_count();

    PayoffTable u(static_cast<std::size_t>(firms));
    for (int n = 0; n < firms; ++n) {
        const PricingSpec::Firm& firm = spec.firms[static_cast<std::size_t>(n)];
        auto& per_tp = u[static_cast<std::size_t>(n)];
        per_tp.resize(static_cast<std::size_t>(type_space.total()));
        for (long long tp = 0; tp < type_space.total(); ++tp) {
            const auto types = type_space.unflatten(tp);
            const double t_val = 1.0 + types[static_cast<std::size_t>(n)];
            std::vector<int> sizes;
            for (const auto& f : spec.firms) sizes.push_back(static_cast<int>(f.price_levels.size()));
            const IndexSpace action_space(sizes);
            auto& per_ap = per_tp[static_cast<std::size_t>(tp)];
            per_ap.resize(static_cast<std::size_t>(action_space.total()));
            for (long long ap = 0; ap < action_space.total(); ++ap) {
                const auto multi = action_space.unflatten(ap);
                const double own =
                    firm.price_levels[static_cast<std::size_t>(multi[static_cast<std::size_t>(n)])];
                double cross = 0.0;
                int k = 0;
                for (int m = 0; m < firms; ++m) {
                    if (m == n) continue;
                    cross += firm.d[static_cast<std::size_t>(k++)] *
                             spec.firms[static_cast<std::size_t>(m)]
                                 .price_levels[static_cast<std::size_t>(multi[static_cast<std::size_t>(m)])];
                }
                auto& per_state = per_ap[static_cast<std::size_t>(ap)];
                per_state.resize(static_cast<std::size_t>(states));
                for (long long w = 0; w < states; ++w) {
                    const double omega = tilde->level(0, static_cast<int>(w));
                    const double demand = firm.b - firm.c * own + cross + firm.e * t_val +
                                          firm.f * omega + firm.g * t_val * omega;
                    per_state[static_cast<std::size_t>(w)] = (own - firm.cost) * demand;
                }
            }
        }
    }

    if (static_cast<int>(spec.type_probs.size()) != firms ||
        static_cast<int>(spec.prior_sets.size()) != firms) {
        throw validation_error("build_pricing_game: prior data missing for some firm");
    }
    std::vector<std::vector<GridPtr>> action_grids(static_cast<std::size_t>(firms));
    std::vector<std::vector<Attitude>> attitudes(static_cast<std::size_t>(firms));
    for (int n = 0; n < firms; ++n) {
        const PricingSpec::Firm& firm = spec.firms[static_cast<std::size_t>(n)];
        auto prices = SupportGrid::line(firm.price_levels);
        long long opp_profiles = 1;
        for (int m = 0; m < firms; ++m) {
            if (m != n) opp_profiles *= spec.firms[static_cast<std::size_t>(m)].types;
        }
        if (static_cast<long long>(spec.type_probs[static_cast<std::size_t>(n)].size()) != opp_profiles) {
            throw validation_error("build_pricing_game: type_probs shape mismatch");
        }
        if (static_cast<int>(spec.prior_sets[static_cast<std::size_t>(n)].size()) != firm.types) {
            throw validation_error("build_pricing_game: prior sets missing for some type");
        }
        std::vector<int> opp_sizes;
        for (int m = 0; m < firms; ++m) {
            if (m != n) opp_sizes.push_back(spec.firms[static_cast<std::size_t>(m)].types);
        }
        const IndexSpace opp_space(opp_sizes);
        for (int t = 0; t < firm.types; ++t) {
            action_grids[static_cast<std::size_t>(n)].push_back(prices);
            const auto& per_opp =
                spec.prior_sets[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
            if (static_cast<long long>(per_opp.size()) != opp_profiles) {
                throw validation_error("build_pricing_game: one prior set per opponent profile required");
            }
            StructuredPriors sp;
            sp.type_probs = spec.type_probs[static_cast<std::size_t>(n)];
            for (const auto& set : per_opp) {
                std::vector<DiscreteDistribution> dists;
                for (const auto& weights : set) dists.emplace_back(tilde, weights);
                sp.scenario_a_sets.push_back(std::move(dists));
            }
            sp.vectors = scenario_a_priors(sp.scenario_a_sets, opp_space);
            Attitude att;
            att.kind = spec.attitude;
            att.structured = std::move(sp);
            attitudes[static_cast<std::size_t>(n)].push_back(std::move(att));
        }
    }

    return GameSpec(type_counts, std::move(action_grids), StructuredStates{tilde}, std::move(u),
                    std::move(attitudes));
}

double pricing_interior_best_response(const PricingSpec::Firm& firm, double type_value,
                                      const std::vector<double>& opponent_prices,
                                      double mean_state) {
    double cross = 0.0;
    for (std::size_t k = 0; k < opponent_prices.size(); ++k) {
        cross += firm.d[k] * opponent_prices[k];
    }
    return (firm.cost * firm.c + firm.b + cross + firm.e * type_value + firm.f * mean_state +
            firm.g * type_value * mean_state) /
           (2.0 * firm.c);
}

} // namespace ambigame
