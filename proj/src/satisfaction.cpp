#include "ambigame/satisfaction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ambigame/errors.hpp"
#include "ambigame/rng.hpp"

namespace ambigame {

double s0(const PayoffDistVector& pi, const DiscreteDistribution& rho) {
    if (rho.size() != pi.size()) throw validation_error("s0: prior domain mismatch");
    double acc = 0.0;
    for (int slot = 0; slot < pi.size(); ++slot) {
        const double w = rho.mass(slot);
        if (w == 0.0) continue;
        acc += w * pi.entry_mean(slot);
    }
    return acc;
}

double satisfaction(const PayoffDistVector& pi, const Attitude& attitude) {
    switch (attitude.kind) {
    case AttitudeKind::traditional:
        return s0(pi, attitude.priors.front());
    case AttitudeKind::alarmist: {
        double v = std::numeric_limits<double>::infinity();
        for (const auto& rho : attitude.priors) v = std::min(v, s0(pi, rho));
        return v;
    }
    case AttitudeKind::enterprising: {
        double v = -std::numeric_limits<double>::infinity();
        for (const auto& rho : attitude.priors) v = std::max(v, s0(pi, rho));
        return v;
    }
    case AttitudeKind::custom:
        break;
    }
    throw validation_error("satisfaction: no scalar exists for a custom preference");
}

bool prefers(const PayoffDistVector& pi, const PayoffDistVector& pi_other, const Attitude& attitude) {
    if (pi.player() != pi_other.player() || pi.type() != pi_other.type()) {
        throw validation_error("prefers: vectors with different owners");
    }
    if (attitude.kind == AttitudeKind::custom) return attitude.comparator(pi, pi_other);
    return satisfaction(pi, attitude) > satisfaction(pi_other, attitude);
}

namespace {

PayoffDistVector random_vector(const GridPtr& value_grid, int slots, Rng& rng) {
    std::vector<DiscreteDistribution> entries;
    entries.reserve(static_cast<std::size_t>(slots));
    for (int s = 0; s < slots; ++s) {
        entries.emplace_back(value_grid, rng.probability_vector(static_cast<int>(value_grid->point_count())));
    }
    return PayoffDistVector(0, 0, std::move(entries));
}

std::string describe(const char* what, double lhs, double rhs, int sample) {
    std::ostringstream os;
    os << what << " violated at sample " << sample << ": lhs=" << lhs << " rhs=" << rhs;
    return os.str();
}

constexpr double kShapeSlack = 1e-9;

} // namespace

ShapeReport check_shape(const Attitude& attitude, int samples, std::uint64_t seed) {
    if (attitude.kind == AttitudeKind::custom) {
        throw validation_error("check_shape: satisfaction attitude required");
    }
    if (attitude.priors.empty()) throw validation_error("check_shape: attitude without priors");
    const int slots = static_cast<int>(attitude.priors.front().size());
    const GridPtr value_grid = SupportGrid::line({0.0, 0.25, 0.5, 0.75, 1.0});

    ShapeReport report;
    report.seed = seed;
    report.samples = samples;
    Rng rng(seed);

    for (int i = 0; i < samples; ++i) {
        const PayoffDistVector pi0 = random_vector(value_grid, slots, rng);
        const PayoffDistVector pi1 = random_vector(value_grid, slots, rng);
        const double alpha = rng.uniform();
        const PayoffDistVector mixed = mix_vectors({{1.0 - alpha, pi0}, {alpha, pi1}});

        const double s_mixed = satisfaction(mixed, attitude);
        const double v0 = satisfaction(pi0, attitude);
        const double v1 = satisfaction(pi1, attitude);
        const double chord = (1.0 - alpha) * v0 + alpha * v1;

        if (report.concave.holds && s_mixed < chord - kShapeSlack) {
            report.concave = {false, describe("concavity", s_mixed, chord, i)};
        }
        if (report.convex.holds && s_mixed > chord + kShapeSlack) {
            report.convex = {false, describe("convexity", s_mixed, chord, i)};
        }
        if (report.quasi_concave.holds && s_mixed < std::min(v0, v1) - kShapeSlack) {
            report.quasi_concave = {false, describe("quasi-concavity", s_mixed, std::min(v0, v1), i)};
        }

        // strong properties: random finite kernel plus action distribution
        const int rows = rng.uniform_int(2, 4);
        std::vector<PayoffDistVector> kernel_rows;
        kernel_rows.reserve(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r) kernel_rows.push_back(random_vector(value_grid, slots, rng));
        const std::vector<double> delta = rng.probability_vector(rows);

        std::vector<std::pair<double, PayoffDistVector>> parts;
        double side_sum = 0.0;
        for (int r = 0; r < rows; ++r) {
            parts.emplace_back(delta[static_cast<std::size_t>(r)], kernel_rows[static_cast<std::size_t>(r)]);
            side_sum += delta[static_cast<std::size_t>(r)] *
                        satisfaction(kernel_rows[static_cast<std::size_t>(r)], attitude);
        }
        const double s_integrated = satisfaction(mix_vectors(parts), attitude);
        if (report.strongly_concave.holds && s_integrated < side_sum - kShapeSlack) {
            report.strongly_concave = {false, describe("strong concavity", s_integrated, side_sum, i)};
        }
        if (report.strongly_convex.holds && s_integrated > side_sum + kShapeSlack) {
            report.strongly_convex = {false, describe("strong convexity", s_integrated, side_sum, i)};
        }
    }
    return report;
}

void spot_check_comparator(const GameSpec& game, int n, int t, int triples, std::uint64_t seed) {
    const Attitude& att = game.attitude(n, t);
    if (att.kind != AttitudeKind::custom) return;
    Rng rng(seed);
    const GridPtr& vgrid = game.utility_grid(n, t);
    const int slots = game.slot_count(n, t);
    for (int i = 0; i < triples; ++i) {
        const PayoffDistVector a = random_vector(vgrid, slots, rng);
        const PayoffDistVector b = random_vector(vgrid, slots, rng);
        const PayoffDistVector c = random_vector(vgrid, slots, rng);
        if (att.comparator(a, a)) {
            throw validation_error("comparator: irreflexivity violated at (n=" + std::to_string(n) +
                                   ", t=" + std::to_string(t) + ")");
        }
        if (att.comparator(a, b) && att.comparator(b, c) && !att.comparator(a, c)) {
            throw validation_error("comparator: transitivity violated at (n=" + std::to_string(n) +
                                   ", t=" + std::to_string(t) + ")");
        }
    }
}

void validate_game(const GameSpec& game, std::uint64_t seed) {
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            spot_check_comparator(game, n, t, 100, seed + static_cast<std::uint64_t>(game.agent_id(n, t)));
        }
    }
}

} // namespace ambigame
