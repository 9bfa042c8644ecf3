#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ambigame/equilibrium.hpp"
#include "ambigame/game.hpp"

namespace ambigame {

/// Builds a validated game from its JSON form. Accepts either the canonical
/// layout (players/types/actions/states/payoff_utility/attitudes) or a
/// `model` object expanded through the builders in models.hpp.
GameSpec game_from_json(const nlohmann::json& j);

/// Canonical JSON form. Games holding custom comparators cannot be
/// serialized and raise validation_error.
nlohmann::json game_to_json(const GameSpec& game);

GameSpec load_game(const std::string& path);
void save_game(const GameSpec& game, const std::string& path);

struct LoadedFamily {
    std::vector<double> lambdas;
    std::vector<GameSpec> games;

    /// View as the solver-facing family type (builds by lambda lookup).
    ParametricFamily family() const;
};

/// Reads a `family` file: ordered lambdas plus one game (or model) per value.
LoadedFamily load_family(const std::string& path);

} // namespace ambigame
