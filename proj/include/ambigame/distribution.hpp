#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ambigame/grid.hpp"
#include "ambigame/tolerances.hpp"

namespace ambigame {

/// Probability weights over a finite ordered support grid. Immutable after
/// construction; the constructor enforces nonnegativity and unit mass.
class DiscreteDistribution {
public:
    DiscreteDistribution(GridPtr grid, std::vector<double> weights,
                         const Tolerances& tol = default_tolerances());

    static DiscreteDistribution dirac(GridPtr grid, long long point_index);
    static DiscreteDistribution dirac_at(GridPtr grid, std::span<const double> coords,
                                         double snap_tol = default_tolerances().snap);
    static DiscreteDistribution uniform(GridPtr grid);

    const GridPtr& grid() const { return grid_; }
    const std::vector<double>& weights() const { return weights_; }
    long long size() const { return static_cast<long long>(weights_.size()); }
    double mass(long long i) const { return weights_[static_cast<std::size_t>(i)]; }

    /// Sum of f(point coordinates) weighted by mass.
    double expectation(const std::function<double(std::span<const double>)>& f) const;

    /// Expectation of the identity on a 1-D grid.
    double mean() const;

    /// Largest absolute weight difference against another distribution on a
    /// structurally equal grid.
    double sup_distance(const DiscreteDistribution& other) const;

private:
    GridPtr grid_;
    std::vector<double> weights_;
};

/// Pointwise convex combination of distributions sharing one grid.
DiscreteDistribution mix(const std::vector<std::pair<double, DiscreteDistribution>>& components,
                         const Tolerances& tol = default_tolerances());

/// Product measure on the product grid (dimensions concatenated in order).
DiscreteDistribution product(const std::vector<DiscreteDistribution>& dists,
                             const Tolerances& tol = default_tolerances());

/// Image measure under a point map into the target grid. Map outputs snap to
/// the nearest target level within tol.snap, otherwise the call fails.
DiscreteDistribution pushforward(const DiscreteDistribution& dist, const GridPtr& target,
                                 const std::function<std::vector<double>(std::span<const double>)>& map,
                                 const Tolerances& tol = default_tolerances());

/// Usual stochastic order: mu1(U) <= mu2(U) for every upper set U of the
/// grid's componentwise order. 1-D grids use the CDF shortcut; multi-D grids
/// enumerate all upper sets and require point_count <= 20.
bool stochastic_leq(const DiscreteDistribution& mu1, const DiscreteDistribution& mu2,
                    const Tolerances& tol = default_tolerances());

/// Least upper bound in the usual stochastic order, constructed by forcing
/// the mass of every upper rectangular set to the max of the two inputs and
/// recovering point masses by inclusion-exclusion. Throws
/// lattice_construction_error when inclusion-exclusion yields a mass below
/// -1e-9; tiny negatives are clamped and the result renormalized.
DiscreteDistribution lattice_join(const DiscreteDistribution& mu1, const DiscreteDistribution& mu2,
                                  const Tolerances& tol = default_tolerances());

/// Greatest lower bound, dual construction to lattice_join.
DiscreteDistribution lattice_meet(const DiscreteDistribution& mu1, const DiscreteDistribution& mu2,
                                  const Tolerances& tol = default_tolerances());

} // namespace ambigame
