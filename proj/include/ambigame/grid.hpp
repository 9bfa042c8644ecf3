#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ambigame/indexing.hpp"

namespace ambigame {

/// Finite ordered support grid: a Cartesian product of strictly increasing
/// real level lists, one list per dimension. Points are addressed by their
/// flat lexicographic index (first dimension most significant).
class SupportGrid {
public:
    explicit SupportGrid(std::vector<std::vector<double>> dims);

    /// 1-D grid over the given levels.
    static std::shared_ptr<const SupportGrid> line(std::vector<double> levels);

    /// 1-D grid with levels 0, 1, ..., count-1. Used to index abstract
    /// finite sets (general-game states, opponent-type profiles).
    static std::shared_ptr<const SupportGrid> index_line(int count);

    int dim_count() const { return static_cast<int>(dims_.size()); }
    int dim_size(int d) const { return static_cast<int>(dims_[static_cast<std::size_t>(d)].size()); }
    double level(int d, int i) const { return dims_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]; }
    const std::vector<double>& levels(int d) const { return dims_[static_cast<std::size_t>(d)]; }
    const std::vector<std::vector<double>>& dims() const { return dims_; }

    long long point_count() const { return space_.total(); }
    const IndexSpace& index_space() const { return space_; }

    /// Coordinates of the point with the given flat index.
    std::vector<double> point(long long flat) const;

    /// Flat index of the grid point whose every coordinate lies within
    /// snap_tol of the query; nullopt when some coordinate misses the grid.
    std::optional<long long> find_point(std::span<const double> coords, double snap_tol) const;

    /// Flat index of the nearest level in a 1-D grid, or nullopt off-grid.
    std::optional<long long> find_level(double value, double snap_tol) const;

    bool same_as(const SupportGrid& other) const;

private:
    std::vector<std::vector<double>> dims_;
    IndexSpace space_;
};

using GridPtr = std::shared_ptr<const SupportGrid>;

/// Structural equality, tolerating distinct shared instances.
bool same_grid(const GridPtr& a, const GridPtr& b);

} // namespace ambigame
