#pragma once

#include <vector>

namespace ambigame {

/// Exact mixed maximin for a finite matrix game: the row player picks a
/// probability vector x to maximize min over columns j of sum_i x_i * G[i][j].
struct MatrixGameSolution {
    double value = 0.0;
    std::vector<double> row_strategy;
};

/// Solves the row player's maximin by the classic positive-matrix LP
/// transformation with a dense tableau simplex (Bland's rule, so no cycling).
/// Desk-scale instances only; throws ambigame::error on solver breakdown,
/// which cannot happen for finite inputs.
MatrixGameSolution solve_matrix_game(const std::vector<std::vector<double>>& payoff);

} // namespace ambigame
