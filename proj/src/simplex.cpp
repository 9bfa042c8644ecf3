#include "ambigame/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ambigame/errors.hpp"

namespace ambigame {

namespace {
constexpr double kPivotEps = 1e-11;
}

MatrixGameSolution solve_matrix_game(const std::vector<std::vector<double>>& payoff) {
    const int rows = static_cast<int>(payoff.size());
    if (rows == 0) throw error("solve_matrix_game: empty payoff matrix");
    const int cols = static_cast<int>(payoff.front().size());
    if (cols == 0) throw error("solve_matrix_game: empty payoff matrix");
    for (const auto& r : payoff) {
        if (static_cast<int>(r.size()) != cols) throw error("solve_matrix_game: ragged matrix");
    }

    // Shift so every entry is >= 1; the game value shifts by the same amount.
    double lo = payoff[0][0];
    for (const auto& r : payoff) {
        for (double x : r) lo = std::min(lo, x);
    }
    const double shift = 1.0 - lo;

    // Column player's scaled LP: maximize sum(y) s.t. G' y <= 1, y >= 0.
    // Row strategy comes out of the slack duals.
    const int n = cols;          // structural variables
    const int m = rows;          // constraints
    const int width = n + m + 1; // structurals, slacks, rhs
    std::vector<std::vector<double>> t(static_cast<std::size_t>(m + 1),
                                       std::vector<double>(static_cast<std::size_t>(width), 0.0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = payoff[i][j] + shift;
        t[i][n + i] = 1.0;
        t[i][width - 1] = 1.0;
    }
    for (int j = 0; j < n; ++j) t[m][j] = -1.0;

    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

    const long long max_pivots = 2000LL * (n + m) * (n + m) + 1000;
    for (long long pivots = 0;; ++pivots) {
        if (pivots > max_pivots) throw error("solve_matrix_game: pivot limit exceeded");
        // Bland's rule: lowest-index improving column.
        int enter = -1;
        for (int j = 0; j < n + m; ++j) {
            if (t[m][j] < -kPivotEps) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;
        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] > kPivotEps) {
                const double ratio = t[i][width - 1] / t[i][enter];
                if (ratio < best_ratio - kPivotEps ||
                    (ratio < best_ratio + kPivotEps && leave >= 0 &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) throw error("solve_matrix_game: unbounded LP (impossible for shifted game)");
        const double pivot = t[leave][enter];
        for (int j = 0; j < width; ++j) t[leave][j] /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double factor = t[i][enter];
            if (factor == 0.0) continue;
            for (int j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    // Slack reduced costs are the duals; normalized they are the row strategy.
    std::vector<double> x(static_cast<std::size_t>(rows), 0.0);
    double dual_total = 0.0;
    for (int i = 0; i < m; ++i) {
        x[static_cast<std::size_t>(i)] = std::max(0.0, t[m][n + i]);
        dual_total += x[static_cast<std::size_t>(i)];
    }
    if (dual_total <= 0.0) throw error("solve_matrix_game: degenerate dual solution");
    for (double& xi : x) xi /= dual_total;

    // Report the value the returned strategy actually guarantees.
    MatrixGameSolution solution;
    solution.row_strategy = std::move(x);
    double value = std::numeric_limits<double>::infinity();
    for (int j = 0; j < cols; ++j) {
        double col = 0.0;
        for (int i = 0; i < rows; ++i) col += solution.row_strategy[static_cast<std::size_t>(i)] * payoff[i][j];
        value = std::min(value, col);
    }
    solution.value = value;
    return solution;
}

} // namespace ambigame
