#include "ambigame/game_io.hpp"

#include <fstream>

#include "ambigame/errors.hpp"
#include "ambigame/models.hpp"

namespace ambigame {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) throw validation_error(where + ": missing key '" + key + "'");
    return *it;
}

AttitudeKind attitude_kind_from(const std::string& name, const std::string& where) {
    if (name == "traditional") return AttitudeKind::traditional;
    if (name == "alarmist") return AttitudeKind::alarmist;
    if (name == "enterprising") return AttitudeKind::enterprising;
    throw validation_error(where + ": unknown attitude kind '" + name + "'");
}

AuctionRule rule_from(const json& j, const std::string& where) {
    const std::string name = j.value("rule", "first");
    if (name == "first" || name == "first_price") return AuctionRule::first_price;
    if (name == "second" || name == "second_price") return AuctionRule::second_price;
    throw validation_error(where + ": unknown pricing rule '" + name + "'");
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) ok = true;
        }
        if (!ok) throw validation_error(where + ": unknown key '" + key + "'");
    }
}

GameSpec model_from_json(const json& m) {
    const std::string kind = require(m, "kind", "model").get<std::string>();
    if (kind == "auction") {
        AuctionSpec spec;
        spec.bidders = require(m, "bidders", "auction").get<int>();
        spec.types = m.value("types", 1);
        spec.bid_levels = require(m, "bids", "auction").get<std::vector<double>>();
        spec.worth_levels = require(m, "worths", "auction").get<std::vector<std::vector<double>>>();
        spec.rule = rule_from(m, "auction");
        spec.attitude = attitude_kind_from(m.value("attitude", "alarmist"), "auction");
        for (const auto& per_bidder : require(m, "priors", "auction")) {
            std::vector<std::vector<AuctionSpec::Prior>> bidder_priors;
            for (const auto& per_type : per_bidder) {
                std::vector<AuctionSpec::Prior> prior_set;
                for (const auto& p : per_type) {
                    AuctionSpec::Prior prior;
                    prior.type_probs = require(p, "type_probs", "auction prior").get<std::vector<double>>();
                    prior.worth_weights =
                        require(p, "worth_weights", "auction prior").get<std::vector<std::vector<double>>>();
                    prior_set.push_back(std::move(prior));
                }
                bidder_priors.push_back(std::move(prior_set));
            }
            spec.priors.push_back(std::move(bidder_priors));
        }
        return build_auction(spec);
    }
    if (kind == "lo_auction") {
        LoAuctionSpec spec;
        spec.bidders = require(m, "bidders", "lo_auction").get<int>();
        spec.worth_levels = require(m, "worths", "lo_auction").get<std::vector<double>>();
        spec.bid_levels = require(m, "bids", "lo_auction").get<std::vector<double>>();
        spec.rule = rule_from(m, "lo_auction");
        spec.attitude = attitude_kind_from(m.value("attitude", "alarmist"), "lo_auction");
        spec.opponent_worth_weights = require(m, "opponent_worth_weights", "lo_auction")
                                          .get<std::vector<std::vector<std::vector<double>>>>();
        return build_lo_auction(spec);
    }
    if (kind == "pricing") {
        PricingSpec spec;
        spec.state_levels = require(m, "state_levels", "pricing").get<std::vector<double>>();
        spec.attitude = attitude_kind_from(m.value("attitude", "enterprising"), "pricing");
        for (const auto& f : require(m, "firms", "pricing")) {
            PricingSpec::Firm firm;
            firm.cost = require(f, "cost", "pricing firm").get<double>();
            firm.price_levels = require(f, "prices", "pricing firm").get<std::vector<double>>();
            firm.b = require(f, "b", "pricing firm").get<double>();
            firm.c = require(f, "c", "pricing firm").get<double>();
            firm.d = require(f, "d", "pricing firm").get<std::vector<double>>();
            firm.e = require(f, "e", "pricing firm").get<double>();
            firm.f = require(f, "f", "pricing firm").get<double>();
            firm.g = require(f, "g", "pricing firm").get<double>();
            firm.types = f.value("types", 1);
            spec.firms.push_back(std::move(firm));
        }
        spec.type_probs = require(m, "type_probs", "pricing").get<std::vector<std::vector<double>>>();
        spec.prior_sets =
            require(m, "prior_sets", "pricing")
                .get<std::vector<std::vector<std::vector<std::vector<std::vector<double>>>>>>();
        return build_pricing_game(spec);
    }
    throw validation_error("model: unknown kind '" + kind + "'");
}

Attitude attitude_from_json(const json& a, const GridPtr& slot_grid, const GridPtr& tilde,
                            const IndexSpace& opp_space, const std::string& where) {
    reject_unknown_keys(a, {"kind", "prior", "priors", "type_probs", "state_priors"}, where);
    Attitude att;
    att.kind = attitude_kind_from(require(a, "kind", where).get<std::string>(), where);
    if (a.contains("prior")) {
        att.priors.emplace_back(slot_grid, a["prior"].get<std::vector<double>>());
    }
    if (a.contains("priors")) {
        for (const auto& w : a["priors"]) {
            att.priors.emplace_back(slot_grid, w.get<std::vector<double>>());
        }
    }
    if (a.contains("type_probs") || a.contains("state_priors")) {
        if (!tilde) throw validation_error(where + ": factored priors need a structured game");
        StructuredPriors sp;
        sp.type_probs = require(a, "type_probs", where).get<std::vector<double>>();
        const json& state_priors = require(a, "state_priors", where);
        if (state_priors.contains("vectors")) {
            for (const auto& nu : state_priors["vectors"]) {
                std::vector<DiscreteDistribution> vec;
                for (const auto& w : nu) vec.emplace_back(tilde, w.get<std::vector<double>>());
                sp.vectors.push_back(std::move(vec));
            }
        } else if (state_priors.contains("scenario_a")) {
            for (const auto& set : state_priors["scenario_a"]) {
                std::vector<DiscreteDistribution> dists;
                for (const auto& w : set) dists.emplace_back(tilde, w.get<std::vector<double>>());
                sp.scenario_a_sets.push_back(std::move(dists));
            }
            sp.vectors = scenario_a_priors(sp.scenario_a_sets, opp_space);
        } else if (state_priors.contains("scenario_b")) {
            for (const auto& w : state_priors["scenario_b"]) {
                sp.scenario_b_set.emplace_back(tilde, w.get<std::vector<double>>());
            }
            sp.vectors = scenario_b_priors(sp.scenario_b_set, opp_space);
        } else {
            throw validation_error(where + ": state_priors needs vectors, scenario_a, or scenario_b");
        }
        att.structured = std::move(sp);
    }
    if (att.priors.empty() && !att.structured) {
        throw validation_error(where + ": attitude carries no priors");
    }
    return att;
}

} // namespace

GameSpec game_from_json(const json& j) {
    if (j.contains("model")) return model_from_json(j["model"]);
    reject_unknown_keys(j, {"players", "types", "actions", "states", "payoff_utility", "attitudes"},
                        "game");

    const int players = require(j, "players", "game").get<int>();
    const std::vector<int> types = require(j, "types", "game").get<std::vector<int>>();
    if (static_cast<int>(types.size()) != players) {
        throw validation_error("game: 'types' must list one count per player");
    }

    std::vector<std::vector<GridPtr>> action_grids;
    for (const auto& per_player : require(j, "actions", "game")) {
        std::vector<GridPtr> grids;
        for (const auto& levels : per_player) {
            grids.push_back(SupportGrid::line(levels.get<std::vector<double>>()));
        }
        action_grids.push_back(std::move(grids));
    }

    const json& states_json = require(j, "states", "game");
    StateSpace states = GeneralStates{};
    GridPtr tilde;
    if (states_json.contains("structured")) {
        tilde = std::make_shared<SupportGrid>(
            require(states_json["structured"], "grid", "states").get<std::vector<std::vector<double>>>());
        states = StructuredStates{tilde};
    } else if (states_json.contains("general")) {
        GeneralStates general;
        general.state_count = require(states_json["general"], "count", "states").get<int>();
        general.partition =
            require(states_json["general"], "partition", "states").get<std::vector<std::vector<int>>>();
        states = std::move(general);
    } else {
        throw validation_error("game: states must be 'structured' or 'general'");
    }

    PayoffTable payoff = require(j, "payoff_utility", "game").get<PayoffTable>();

    // slot counts per (n, t) for attitude priors
    const IndexSpace type_space(types);
    std::vector<std::vector<Attitude>> attitudes;
    const json& attitudes_json = require(j, "attitudes", "game");
    if (static_cast<int>(attitudes_json.size()) != players) {
        throw validation_error("game: attitudes must list every player");
    }
    for (int n = 0; n < players; ++n) {
        long long opp_profiles = 1;
        for (int m = 0; m < players; ++m) {
            if (m != n) opp_profiles *= types[static_cast<std::size_t>(m)];
        }
        std::vector<Attitude> per_player;
        const json& per_player_json = attitudes_json[static_cast<std::size_t>(n)];
        for (int t = 0; t < static_cast<int>(per_player_json.size()); ++t) {
            long long slots = 0;
            const IndexSpace opp_space = [&] {
                std::vector<int> sizes;
                for (int m = 0; m < players; ++m) {
                    if (m != n) sizes.push_back(types[static_cast<std::size_t>(m)]);
                }
                return IndexSpace(sizes);
            }();
            if (tilde) {
                slots = opp_profiles * tilde->point_count();
            } else {
                const auto& general = std::get<GeneralStates>(states);
                for (long long o = 0; o < opp_space.total(); ++o) {
                    const auto opp_types = opp_space.unflatten(o);
                    std::vector<int> full(static_cast<std::size_t>(players));
                    int k = 0;
                    for (int m = 0; m < players; ++m) {
                        full[static_cast<std::size_t>(m)] =
                            m == n ? t : opp_types[static_cast<std::size_t>(k++)];
                    }
                    const long long tp = type_space.flatten(full);
                    slots += static_cast<long long>(general.partition[static_cast<std::size_t>(tp)].size());
                }
            }
            const std::string where =
                "attitude (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")";
            per_player.push_back(attitude_from_json(per_player_json[static_cast<std::size_t>(t)],
                                                    SupportGrid::index_line(static_cast<int>(slots)),
                                                    tilde, opp_space, where));
        }
        attitudes.push_back(std::move(per_player));
    }

    return GameSpec(types, std::move(action_grids), std::move(states), std::move(payoff),
                    std::move(attitudes));
}

json game_to_json(const GameSpec& game) {
    json j = json::object();
    j["players"] = game.players();
    j["types"] = game.type_counts();

    json actions = json::array();
    for (int n = 0; n < game.players(); ++n) {
        json per_player = json::array();
        for (int t = 0; t < game.type_count(n); ++t) {
            per_player.push_back(game.action_grid(n, t)->levels(0));
        }
        actions.push_back(std::move(per_player));
    }
    j["actions"] = std::move(actions);

    if (game.structured()) {
        j["states"] = {{"structured", {{"grid", game.tilde_grid()->dims()}}}};
    } else {
        const auto& general = std::get<GeneralStates>(game.states());
        j["states"] = {{"general", {{"count", general.state_count}, {"partition", general.partition}}}};
    }

    j["payoff_utility"] = game.payoff_utility();

    json attitudes = json::array();
    for (int n = 0; n < game.players(); ++n) {
        json per_player = json::array();
        for (int t = 0; t < game.type_count(n); ++t) {
            const Attitude& att = game.attitude(n, t);
            if (att.kind == AttitudeKind::custom) {
                throw validation_error("save_game: custom comparators are not serializable");
            }
            json a = json::object();
            a["kind"] = to_string(att.kind);
            if (att.structured) {
                const StructuredPriors& sp = *att.structured;
                a["type_probs"] = sp.type_probs;
                json state_priors = json::object();
                auto weights_of = [](const std::vector<DiscreteDistribution>& dists) {
                    json arr = json::array();
                    for (const auto& d : dists) arr.push_back(d.weights());
                    return arr;
                };
                if (!sp.scenario_a_sets.empty()) {
                    json sets = json::array();
                    for (const auto& set : sp.scenario_a_sets) sets.push_back(weights_of(set));
                    state_priors["scenario_a"] = std::move(sets);
                } else if (!sp.scenario_b_set.empty()) {
                    state_priors["scenario_b"] = weights_of(sp.scenario_b_set);
                } else {
                    json vectors = json::array();
                    for (const auto& nu : sp.vectors) vectors.push_back(weights_of(nu));
                    state_priors["vectors"] = std::move(vectors);
                }
                a["state_priors"] = std::move(state_priors);
            } else if (att.kind == AttitudeKind::traditional) {
                a["prior"] = att.priors.front().weights();
            } else {
                json priors = json::array();
                for (const auto& p : att.priors) priors.push_back(p.weights());
                a["priors"] = std::move(priors);
            }
            per_player.push_back(std::move(a));
        }
        attitudes.push_back(std::move(per_player));
    }
    j["attitudes"] = std::move(attitudes);
    return j;
}

GameSpec load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("load_game: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw validation_error("load_game: '" + path + "' is not valid JSON: " + e.what());
    }
    return game_from_json(j);
}

void save_game(const GameSpec& game, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw validation_error("save_game: cannot open '" + path + "'");
    out << game_to_json(game).dump(2) << "\n";
}

ParametricFamily LoadedFamily::family() const {
    ParametricFamily f;
    f.lambdas = lambdas;
    f.builder = [ls = lambdas, gs = games](double lambda) -> GameSpec {
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (ls[i] == lambda) return gs[i];
        }
        throw validation_error("family: builder queried off the lambda list");
    };
    return f;
}

LoadedFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("load_family: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw validation_error("load_family: '" + path + "' is not valid JSON: " + e.what());
    }
    const json& family = require(j, "family", "family file");
    LoadedFamily out;
    out.lambdas = require(family, "lambda", "family").get<std::vector<double>>();
    const json& games = require(family, "games", "family");
    if (games.size() != out.lambdas.size()) {
        throw validation_error("family: one game per lambda required");
    }
    for (const auto& g : games) out.games.push_back(game_from_json(g));
    for (std::size_t i = 1; i < out.lambdas.size(); ++i) {
        if (!(out.lambdas[i - 1] < out.lambdas[i])) {
            throw validation_error("family: lambdas must strictly increase");
        }
    }
    return out;
}

} // namespace ambigame
