#include "ambigame/grid.hpp"

#include <algorithm>
#include <cmath>

#include "ambigame/errors.hpp"

namespace ambigame {

SupportGrid::SupportGrid(std::vector<std::vector<double>> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw validation_error("SupportGrid: no dimensions");
    std::vector<int> sizes;
    sizes.reserve(dims_.size());
    for (const auto& levels : dims_) {
        if (levels.empty()) throw validation_error("SupportGrid: empty level list");
        for (std::size_t i = 1; i < levels.size(); ++i) {
            if (!(levels[i - 1] < levels[i])) {
                throw validation_error("SupportGrid: levels not strictly increasing");
            }
        }
        sizes.push_back(static_cast<int>(levels.size()));
    }
    space_ = IndexSpace(sizes);
}

std::shared_ptr<const SupportGrid> SupportGrid::line(std::vector<double> levels) {
    return std::make_shared<SupportGrid>(std::vector<std::vector<double>>{std::move(levels)});
}

std::shared_ptr<const SupportGrid> SupportGrid::index_line(int count) {
    std::vector<double> levels(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) levels[static_cast<std::size_t>(i)] = i;
    return line(std::move(levels));
}

std::vector<double> SupportGrid::point(long long flat) const {
    const std::vector<int> multi = space_.unflatten(flat);
    std::vector<double> coords(dims_.size());
    for (std::size_t d = 0; d < dims_.size(); ++d) {
        coords[d] = dims_[d][static_cast<std::size_t>(multi[d])];
    }
    return coords;
}

std::optional<long long> SupportGrid::find_point(std::span<const double> coords, double snap_tol) const {
    if (coords.size() != dims_.size()) return std::nullopt;
    std::vector<int> multi(dims_.size());
    for (std::size_t d = 0; d < dims_.size(); ++d) {
        const auto& levels = dims_[d];
        const auto it = std::lower_bound(levels.begin(), levels.end(), coords[d]);
        int best = -1;
        double best_err = snap_tol;
        if (it != levels.end() && std::abs(*it - coords[d]) <= best_err) {
            best = static_cast<int>(it - levels.begin());
            best_err = std::abs(*it - coords[d]);
        }
        if (it != levels.begin() && std::abs(*(it - 1) - coords[d]) <= best_err) {
            best = static_cast<int>(it - levels.begin()) - 1;
        }
        if (best < 0) return std::nullopt;
        multi[d] = best;
    }
    return space_.flatten(multi);
}

std::optional<long long> SupportGrid::find_level(double value, double snap_tol) const {
    const double coords[1] = {value};
    return find_point(coords, snap_tol);
}

bool SupportGrid::same_as(const SupportGrid& other) const {
    return dims_ == other.dims_;
}

bool same_grid(const GridPtr& a, const GridPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

} // namespace ambigame
