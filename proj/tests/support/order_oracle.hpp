#pragma once

// Brute-force stochastic-order oracle, independent of the library's CDF and
// cover-mask shortcuts: enumerates every subset of grid points, keeps those
// closed upward under the componentwise order checked pair by pair, and
// compares masses on each.

#include <cstdint>
#include <vector>

#include "ambigame/distribution.hpp"

namespace oracle {

inline bool upward_closed(const ambigame::SupportGrid& g, std::uint32_t mask) {
    const long long n = g.point_count();
    for (long long i = 0; i < n; ++i) {
        if (!(mask & (std::uint32_t{1} << i))) continue;
        const std::vector<double> pi = g.point(i);
        for (long long j = 0; j < n; ++j) {
            if (mask & (std::uint32_t{1} << j)) continue;
            const std::vector<double> pj = g.point(j);
            bool i_leq_j = true;
            for (std::size_t d = 0; d < pi.size(); ++d) {
                if (pi[d] > pj[d]) {
                    i_leq_j = false;
                    break;
                }
            }
            if (i_leq_j) return false; // j >= i must be inside the set
        }
    }
    return true;
}

inline bool stochastic_leq_oracle(const ambigame::DiscreteDistribution& mu1,
                                  const ambigame::DiscreteDistribution& mu2, double tol = 1e-10) {
    const ambigame::SupportGrid& g = *mu1.grid();
    const long long n = g.point_count();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (!upward_closed(g, mask)) continue;
        double m1 = 0.0, m2 = 0.0;
        for (long long i = 0; i < n; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                m1 += mu1.mass(i);
                m2 += mu2.mass(i);
            }
        }
        if (m1 > m2 + tol) return false;
    }
    return true;
}

} // namespace oracle
