#include "ambigame/distribution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "ambigame/errors.hpp"

namespace ambigame {

namespace {

void check_shared_grid(const GridPtr& a, const GridPtr& b, const char* who) {
    if (!same_grid(a, b)) throw validation_error(std::string(who) + ": distributions on mismatched grids");
}

/// Mass of every upper orthant K_x = { y : y >= x componentwise }.
std::vector<double> upper_orthant_masses(const DiscreteDistribution& mu) {
    const SupportGrid& g = *mu.grid();
    std::vector<double> u = mu.weights();
    // Suffix-sum along each dimension in turn.
    const auto& sizes = g.index_space().sizes();
    const int dims = g.dim_count();
    std::vector<long long> strides(static_cast<std::size_t>(dims), 1);
    for (int d = dims - 2; d >= 0; --d) {
        strides[static_cast<std::size_t>(d)] =
            strides[static_cast<std::size_t>(d + 1)] * sizes[static_cast<std::size_t>(d + 1)];
    }
    const long long total = g.point_count();
    for (int d = 0; d < dims; ++d) {
        const long long stride = strides[static_cast<std::size_t>(d)];
        const int count = sizes[static_cast<std::size_t>(d)];
        // Walk top-down per line; larger flat = higher coordinate on this axis.
        for (long long flat = total - 1; flat >= 0; --flat) {
            const int coord = static_cast<int>((flat / stride) % count);
            if (coord + 1 < count) {
                u[static_cast<std::size_t>(flat)] += u[static_cast<std::size_t>(flat + stride)];
            }
        }
    }
    return u;
}

/// Recover point masses from upper-orthant values by inclusion-exclusion:
/// m(x) = sum over dimension subsets S of (-1)^|S| U(x + e_S), U = 0 off-grid.
std::vector<double> masses_from_upper_orthants(const SupportGrid& g, const std::vector<double>& u) {
    const auto& sizes = g.index_space().sizes();
    const int dims = g.dim_count();
    std::vector<long long> strides(static_cast<std::size_t>(dims), 1);
    for (int d = dims - 2; d >= 0; --d) {
        strides[static_cast<std::size_t>(d)] =
            strides[static_cast<std::size_t>(d + 1)] * sizes[static_cast<std::size_t>(d + 1)];
    }
    const long long total = g.point_count();
    std::vector<double> m(static_cast<std::size_t>(total), 0.0);
    std::vector<int> multi(static_cast<std::size_t>(dims));
    for (long long flat = 0; flat < total; ++flat) {
        long long rest = flat;
        for (int d = dims - 1; d >= 0; --d) {
            multi[static_cast<std::size_t>(d)] = static_cast<int>(rest % sizes[static_cast<std::size_t>(d)]);
            rest /= sizes[static_cast<std::size_t>(d)];
        }
        double acc = 0.0;
        for (unsigned subset = 0; subset < (1u << dims); ++subset) {
            long long shifted = flat;
            bool in_range = true;
            for (int d = 0; d < dims && in_range; ++d) {
                if (subset & (1u << d)) {
                    if (multi[static_cast<std::size_t>(d)] + 1 >= sizes[static_cast<std::size_t>(d)]) {
                        in_range = false;
                    } else {
                        shifted += strides[static_cast<std::size_t>(d)];
                    }
                }
            }
            if (!in_range) continue;
            const double sign = (std::popcount(subset) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * u[static_cast<std::size_t>(shifted)];
        }
        m[static_cast<std::size_t>(flat)] = acc;
    }
    return m;
}

constexpr double kLatticeMassFloor = -1e-9;

DiscreteDistribution lattice_combine(const DiscreteDistribution& mu1, const DiscreteDistribution& mu2,
                                     bool join, const Tolerances& tol) {
    check_shared_grid(mu1.grid(), mu2.grid(), join ? "lattice_join" : "lattice_meet");
    const SupportGrid& g = *mu1.grid();
    const std::vector<double> u1 = upper_orthant_masses(mu1);
    const std::vector<double> u2 = upper_orthant_masses(mu2);
    std::vector<double> u(u1.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = join ? std::max(u1[i], u2[i]) : std::min(u1[i], u2[i]);
    }

    std::vector<double> m;
    if (g.dim_count() == 1) {
        // Closed form: survival max/min, masses by adjacent differences.
        const long long n = g.point_count();
        m.assign(static_cast<std::size_t>(n), 0.0);
        for (long long i = 0; i < n; ++i) {
            const double next = (i + 1 < n) ? u[static_cast<std::size_t>(i + 1)] : 0.0;
            m[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] - next;
        }
    } else {
        m = masses_from_upper_orthants(g, u);
    }

    double total = 0.0;
    for (double& x : m) {
        if (x < kLatticeMassFloor) {
            throw lattice_construction_error(
                std::string(join ? "lattice_join" : "lattice_meet") +
                ": inclusion-exclusion produced mass " + std::to_string(x));
        }
        if (x < 0.0) x = 0.0;
        total += x;
    }
    if (total <= 0.0) {
        throw lattice_construction_error("lattice combine: vanished total mass");
    }
    for (double& x : m) x /= total;
    return DiscreteDistribution(mu1.grid(), std::move(m), tol);
}

} // namespace

DiscreteDistribution::DiscreteDistribution(GridPtr grid, std::vector<double> weights, const Tolerances& tol)
    : grid_(std::move(grid)), weights_(std::move(weights)) {
    if (!grid_) throw validation_error("DiscreteDistribution: null grid");
    if (static_cast<long long>(weights_.size()) != grid_->point_count()) {
        throw validation_error("DiscreteDistribution: weight count does not match grid");
    }
    double total = 0.0;
    for (double& w : weights_) {
        if (w < -tol.mass) throw validation_error("DiscreteDistribution: negative weight");
        if (w < 0.0) w = 0.0;
        total += w;
    }
    if (std::abs(total - 1.0) > tol.mass) {
        throw validation_error("DiscreteDistribution: weights sum to " + std::to_string(total));
    }
}

DiscreteDistribution DiscreteDistribution::dirac(GridPtr grid, long long point_index) {
    if (!grid || point_index < 0 || point_index >= grid->point_count()) {
        throw validation_error("dirac: point not on grid");
    }
    std::vector<double> w(static_cast<std::size_t>(grid->point_count()), 0.0);
    w[static_cast<std::size_t>(point_index)] = 1.0;
    return DiscreteDistribution(std::move(grid), std::move(w));
}

DiscreteDistribution DiscreteDistribution::dirac_at(GridPtr grid, std::span<const double> coords,
                                                    double snap_tol) {
    if (!grid) throw validation_error("dirac_at: null grid");
    const auto idx = grid->find_point(coords, snap_tol);
    if (!idx) throw validation_error("dirac_at: point not on grid");
    return dirac(std::move(grid), *idx);
}

DiscreteDistribution DiscreteDistribution::uniform(GridPtr grid) {
    if (!grid) throw validation_error("uniform: null grid");
    const auto n = static_cast<std::size_t>(grid->point_count());
    return DiscreteDistribution(std::move(grid), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double DiscreteDistribution::expectation(const std::function<double(std::span<const double>)>& f) const {
    double acc = 0.0;
    const long long n = size();
    for (long long i = 0; i < n; ++i) {
        const double w = weights_[static_cast<std::size_t>(i)];
        if (w == 0.0) continue;
        const std::vector<double> coords = grid_->point(i);
        acc += w * f(coords);
    }
    return acc;
}

double DiscreteDistribution::mean() const {
    if (grid_->dim_count() != 1) throw validation_error("mean: grid is not one-dimensional");
    double acc = 0.0;
    for (long long i = 0; i < size(); ++i) {
        acc += weights_[static_cast<std::size_t>(i)] * grid_->level(0, static_cast<int>(i));
    }
    return acc;
}

double DiscreteDistribution::sup_distance(const DiscreteDistribution& other) const {
    check_shared_grid(grid_, other.grid_, "sup_distance");
    double d = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        d = std::max(d, std::abs(weights_[i] - other.weights_[i]));
    }
    return d;
}

DiscreteDistribution mix(const std::vector<std::pair<double, DiscreteDistribution>>& components,
                         const Tolerances& tol) {
    if (components.empty()) throw validation_error("mix: no components");
    const GridPtr& grid = components.front().second.grid();
    double wsum = 0.0;
    for (const auto& [w, d] : components) {
        if (w < -tol.mass) throw validation_error("mix: negative component weight");
        check_shared_grid(grid, d.grid(), "mix");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-9) {
        throw validation_error("mix: weights are not a probability vector");
    }
    std::vector<double> out(static_cast<std::size_t>(grid->point_count()), 0.0);
    for (const auto& [w, d] : components) {
        const auto& dw = d.weights();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * dw[i];
    }
    return DiscreteDistribution(grid, std::move(out), tol);
}

DiscreteDistribution product(const std::vector<DiscreteDistribution>& dists, const Tolerances& tol) {
    if (dists.empty()) throw validation_error("product: empty distribution list");
    std::vector<std::vector<double>> dims;
    for (const auto& d : dists) {
        for (const auto& levels : d.grid()->dims()) dims.push_back(levels);
    }
    auto grid = std::make_shared<SupportGrid>(std::move(dims));
    std::vector<double> out(static_cast<std::size_t>(grid->point_count()), 1.0);
    long long block = grid->point_count();
    for (const auto& d : dists) {
        const long long n = d.size();
        block /= n;
        for (long long flat = 0; flat < grid->point_count(); ++flat) {
            const long long idx = (flat / block) % n;
            out[static_cast<std::size_t>(flat)] *= d.mass(idx);
        }
    }
    return DiscreteDistribution(std::move(grid), std::move(out), tol);
}

DiscreteDistribution pushforward(const DiscreteDistribution& dist, const GridPtr& target,
                                 const std::function<std::vector<double>(std::span<const double>)>& map,
                                 const Tolerances& tol) {
    if (!target) throw validation_error("pushforward: null target grid");
    std::vector<double> out(static_cast<std::size_t>(target->point_count()), 0.0);
    for (long long i = 0; i < dist.size(); ++i) {
        const double w = dist.mass(i);
        if (w == 0.0) continue;
        const std::vector<double> src = dist.grid()->point(i);
        const std::vector<double> dst = map(src);
        const auto idx = target->find_point(dst, tol.snap);
        if (!idx) throw validation_error("pushforward: mapped point not on target grid");
        out[static_cast<std::size_t>(*idx)] += w;
    }
    return DiscreteDistribution(target, std::move(out), tol);
}

bool stochastic_leq(const DiscreteDistribution& mu1, const DiscreteDistribution& mu2,
                    const Tolerances& tol) {
    check_shared_grid(mu1.grid(), mu2.grid(), "stochastic_leq");
    const SupportGrid& g = *mu1.grid();
    if (g.dim_count() == 1) {
        // CDF dominance: mu1 <= mu2 iff CDF1 >= CDF2 pointwise.
        double c1 = 0.0, c2 = 0.0;
        for (long long i = 0; i + 1 < g.point_count(); ++i) {
            c1 += mu1.mass(i);
            c2 += mu2.mass(i);
            if (c1 < c2 - tol.order) return false;
        }
        return true;
    }
    const long long n = g.point_count();
    if (n > 20) {
        throw cap_exceeded_error("stochastic_leq: grid too large for exhaustive upper-set enumeration");
    }
    // Immediate covers per point: one step up in each dimension.
    const auto& sizes = g.index_space().sizes();
    const int dims = g.dim_count();
    std::vector<long long> strides(static_cast<std::size_t>(dims), 1);
    for (int d = dims - 2; d >= 0; --d) {
        strides[static_cast<std::size_t>(d)] =
            strides[static_cast<std::size_t>(d + 1)] * sizes[static_cast<std::size_t>(d + 1)];
    }
    std::vector<std::uint32_t> covers(static_cast<std::size_t>(n), 0);
    for (long long flat = 0; flat < n; ++flat) {
        long long rest = flat;
        for (int d = dims - 1; d >= 0; --d) {
            const int coord = static_cast<int>(rest % sizes[static_cast<std::size_t>(d)]);
            rest /= sizes[static_cast<std::size_t>(d)];
            if (coord + 1 < sizes[static_cast<std::size_t>(d)]) {
                covers[static_cast<std::size_t>(flat)] |=
                    (std::uint32_t{1} << (flat + strides[static_cast<std::size_t>(d)]));
            }
        }
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool closed = true;
        double m1 = 0.0, m2 = 0.0;
        for (long long i = 0; i < n && closed; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                if ((covers[static_cast<std::size_t>(i)] & ~mask) != 0) {
                    closed = false;
                    break;
                }
                m1 += mu1.mass(i);
                m2 += mu2.mass(i);
            }
        }
        if (closed && m1 > m2 + tol.order) return false;
    }
    return true;
}

DiscreteDistribution lattice_join(const DiscreteDistribution& mu1, const DiscreteDistribution& mu2,
                                  const Tolerances& tol) {
    return lattice_combine(mu1, mu2, /*join=*/true, tol);
}

DiscreteDistribution lattice_meet(const DiscreteDistribution& mu1, const DiscreteDistribution& mu2,
                                  const Tolerances& tol) {
    return lattice_combine(mu1, mu2, /*join=*/false, tol);
}

} // namespace ambigame
