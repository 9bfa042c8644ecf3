#include "ambigame/equilibrium.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "ambigame/errors.hpp"
#include "ambigame/simplex.hpp"

namespace ambigame {

const char* to_string(VerifyMode mode) {
    return mode == VerifyMode::action ? "action" : "distribution";
}

const char* to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::undecidable: return "undecidable";
    }
    return "?";
}

double EquilibriumReport::max_regret() const {
    double r = 0.0;
    for (const auto& p : pairs) r = std::max(r, p.regret);
    return r;
}

double EquilibriumReport::max_off_support_mass() const {
    double m = 0.0;
    for (const auto& p : pairs) m = std::max(m, p.off_support_mass);
    return m;
}

bool AssumptionReport::all_pass() const {
    for (const auto& item : items) {
        if (item.status != CheckStatus::pass) return false;
    }
    return true;
}

namespace {

std::string format_weights(const DiscreteDistribution& d) {
    std::ostringstream os;
    os << "(";
    for (long long i = 0; i < d.size(); ++i) {
        if (i) os << ", ";
        os << d.mass(i);
    }
    os << ")";
    return os.str();
}

PairVerification verify_pair_action(const GameSpec& game, const StrategyProfile& profile, int n,
                                    int t, double eps) {
    PairVerification out;
    out.player = n;
    out.type = t;
    const Tolerances& tol = default_tolerances();
    const DiscreteDistribution& delta = profile.at(n, t);
    const Attitude& att = game.attitude(n, t);

    if (att.kind == AttitudeKind::custom) {
        const std::vector<int> best = action_best_set(game, n, t, profile, eps);
        std::vector<bool> in_best(static_cast<std::size_t>(game.action_count(n, t)), false);
        for (int a : best) in_best[static_cast<std::size_t>(a)] = true;
        for (int a = 0; a < game.action_count(n, t); ++a) {
            if (!in_best[static_cast<std::size_t>(a)]) out.off_support_mass += delta.mass(a);
        }
        out.ok = out.off_support_mass <= tol.mass;
        if (!out.ok) {
            std::ostringstream os;
            os << "mass " << out.off_support_mass << " sits outside the maximal action set";
            out.witness = os.str();
        }
        return out;
    }

    const std::vector<double> s = action_satisfactions(game, n, t, profile);
    const double top = *std::max_element(s.begin(), s.end());
    for (int a = 0; a < game.action_count(n, t); ++a) {
        if (s[static_cast<std::size_t>(a)] < top - eps) out.off_support_mass += delta.mass(a);
    }
    double best_supported = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < game.action_count(n, t); ++a) {
        if (delta.mass(a) > tol.mass) {
            best_supported = std::max(best_supported, s[static_cast<std::size_t>(a)]);
        }
    }
    out.regret = std::max(0.0, top - best_supported);
    out.ok = out.off_support_mass <= tol.mass && out.regret <= eps;
    if (!out.ok) {
        const int argmax = static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
        std::ostringstream os;
        os << "action " << argmax << " (level " << game.action_level(n, t, argmax) << ") achieves "
           << top << " vs supported best " << best_supported << "; off-support mass "
           << out.off_support_mass;
        out.witness = os.str();
    }
    return out;
}

PairVerification verify_pair_distribution(const GameSpec& game, const StrategyProfile& profile,
                                          int n, int t, double eps, const VerifyOptions& options) {
    PairVerification out;
    out.player = n;
    out.type = t;
    const Attitude& att = game.attitude(n, t);
    const DiscreteDistribution& delta = profile.at(n, t);

    if (att.kind == AttitudeKind::custom) {
        out.approximate = true;
        const PayoffDistVector mine = strategy_payoff_vector(game, n, t, delta, profile);
        const auto grid =
            simplex_grid(game.action_grid(n, t), options.custom_grid_step, options.grid_cap);
        for (const auto& candidate : grid) {
            const PayoffDistVector other = strategy_payoff_vector(game, n, t, candidate, profile);
            if (prefers(other, mine, att)) {
                out.ok = false;
                out.regret = std::numeric_limits<double>::infinity();
                out.witness = "grid distribution " + format_weights(candidate) + " is strictly preferred";
                break;
            }
        }
        return out;
    }

    BestResponseResult br = dist_best_response(game, n, t, profile);
    out.regret = br.regret_of(delta);
    out.ok = out.regret <= eps;
    if (!out.ok) {
        out.witness = "distribution " + format_weights(*br.optimal_dist) + " achieves " +
                      std::to_string(br.value);
    }
    return out;
}

} // namespace

EquilibriumReport verify_profile(const GameSpec& game, const StrategyProfile& profile,
                                 VerifyMode mode, double eps, const VerifyOptions& options) {
    check_profile(game, profile);
    EquilibriumReport report;
    report.mode = mode;
    report.epsilon = eps;
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            PairVerification pair = mode == VerifyMode::action
                                        ? verify_pair_action(game, profile, n, t, eps)
                                        : verify_pair_distribution(game, profile, n, t, eps, options);
            report.verdict = report.verdict && pair.ok;
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

namespace {

/// Precomputed pure-profile scan tables: per agent the satisfaction of every
/// (own action, other agents' actions) cell plus the per-cell target value
/// the equilibrium condition compares against.
struct ScanTables {
    std::vector<std::vector<int>> other_agents; // per agent
    std::vector<IndexSpace> other_space;        // per agent
    std::vector<std::vector<double>> values;    // per agent: [own action * other_total + other_flat]
    std::vector<std::vector<double>> target;    // per agent: per other_flat
};

ScanTables build_scan_tables(const GameSpec& game, VerifyMode mode) {
    ScanTables tables;
    const int agents = game.agent_count();
    tables.other_agents.resize(static_cast<std::size_t>(agents));
    tables.other_space.resize(static_cast<std::size_t>(agents));
    tables.values.resize(static_cast<std::size_t>(agents));
    tables.target.resize(static_cast<std::size_t>(agents));

    std::vector<int> assignment(static_cast<std::size_t>(agents), 0);
    for (int id = 0; id < agents; ++id) {
        const auto [n, t] = game.agent_of(id);
        const Attitude& att = game.attitude(n, t);
        auto& others = tables.other_agents[static_cast<std::size_t>(id)];
        std::vector<int> sizes;
        for (int m = 0; m < game.players(); ++m) {
            if (m == n) continue;
            for (int tm = 0; tm < game.type_count(m); ++tm) {
                others.push_back(game.agent_id(m, tm));
                sizes.push_back(game.action_count(m, tm));
            }
        }
        tables.other_space[static_cast<std::size_t>(id)] = IndexSpace(sizes);
        const long long other_total = tables.other_space[static_cast<std::size_t>(id)].total();
        const int own = game.action_count(n, t);
        auto& values = tables.values[static_cast<std::size_t>(id)];
        auto& target = tables.target[static_cast<std::size_t>(id)];
        values.resize(static_cast<std::size_t>(own * other_total));
        target.resize(static_cast<std::size_t>(other_total));

        const bool needs_lp =
            mode == VerifyMode::distribution && att.kind == AttitudeKind::alarmist && att.priors.size() > 1;
        for (long long of = 0; of < other_total; ++of) {
            const auto multi = tables.other_space[static_cast<std::size_t>(id)].unflatten(of);
            for (std::size_t k = 0; k < others.size(); ++k) {
                assignment[static_cast<std::size_t>(others[k])] = multi[k];
            }
            double row_max = -std::numeric_limits<double>::infinity();
            for (int a = 0; a < own; ++a) {
                const double v = agent_form_value(game, n, t, a, assignment);
                values[static_cast<std::size_t>(a * other_total + of)] = v;
                row_max = std::max(row_max, v);
            }
            if (needs_lp) {
                // matrix of prior-weighted values, rows = actions, cols = priors
                std::vector<std::vector<double>> matrix(
                    static_cast<std::size_t>(own), std::vector<double>(att.priors.size(), 0.0));
                const auto& slots = game.slots(n, t);
                const IndexSpace& opp_space = game.opp_type_space(n);
                const std::vector<int> opponents = game.players_except(n);
                std::vector<std::vector<int>> opp_actions(static_cast<std::size_t>(opp_space.total()));
                for (long long o = 0; o < opp_space.total(); ++o) {
                    const auto opp_types = opp_space.unflatten(o);
                    for (std::size_t k = 0; k < opponents.size(); ++k) {
                        opp_actions[static_cast<std::size_t>(o)].push_back(
                            assignment[static_cast<std::size_t>(game.agent_id(opponents[k], opp_types[k]))]);
                    }
                }
                for (int a = 0; a < own; ++a) {
                    for (std::size_t p = 0; p < att.priors.size(); ++p) {
                        double acc = 0.0;
                        for (std::size_t s = 0; s < slots.size(); ++s) {
                            const double mass = att.priors[p].mass(static_cast<long long>(s));
                            if (mass == 0.0) continue;
                            acc += mass * game.utility_at(n, t, slots[s].opp_profile, a,
                                                          opp_actions[static_cast<std::size_t>(
                                                              slots[s].opp_profile)],
                                                          slots[s].local);
                        }
                        matrix[static_cast<std::size_t>(a)][p] = acc;
                    }
                }
                target[static_cast<std::size_t>(of)] = solve_matrix_game(matrix).value;
            } else {
                target[static_cast<std::size_t>(of)] = row_max;
            }
        }
    }
    return tables;
}

bool scan_pass(const GameSpec& game, const ScanTables& tables, std::span<const int> actions,
               double eps) {
    const int agents = game.agent_count();
    std::vector<int> other(16);
    for (int id = 0; id < agents; ++id) {
        const auto& others = tables.other_agents[static_cast<std::size_t>(id)];
        other.resize(others.size());
        for (std::size_t k = 0; k < others.size(); ++k) {
            other[k] = actions[static_cast<std::size_t>(others[k])];
        }
        const long long of = tables.other_space[static_cast<std::size_t>(id)].flatten(other);
        const long long other_total = tables.other_space[static_cast<std::size_t>(id)].total();
        const double v = tables.values[static_cast<std::size_t>(id)]
                                      [static_cast<std::size_t>(actions[static_cast<std::size_t>(id)] *
                                                                    other_total +
                                                                of)];
        if (v < tables.target[static_cast<std::size_t>(id)][static_cast<std::size_t>(of)] - eps - 1e-12) {
            return false;
        }
    }
    return true;
}

bool any_custom(const GameSpec& game) {
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            if (game.attitude(n, t).kind == AttitudeKind::custom) return true;
        }
    }
    return false;
}

} // namespace

std::vector<PureEquilibrium> enumerate_pure_equilibria(const GameSpec& game, VerifyMode mode,
                                                       double eps, long long cap, int jobs) {
    std::vector<int> sizes;
    for (int id = 0; id < game.agent_count(); ++id) {
        const auto [n, t] = game.agent_of(id);
        sizes.push_back(game.action_count(n, t));
    }
    const IndexSpace profiles(sizes);
    if (profiles.total() > cap) {
        throw cap_exceeded_error("enumerate_pure_equilibria: " + std::to_string(profiles.total()) +
                                 " pure profiles exceed the cap " + std::to_string(cap));
    }

    std::vector<long long> candidates;
    if (any_custom(game)) {
        // slow path: full verification per profile
        for (long long flat = 0; flat < profiles.total(); ++flat) candidates.push_back(flat);
    } else {
        const ScanTables tables = build_scan_tables(game, mode);
        const long long total = profiles.total();
        const int workers = std::max(1, jobs);
        if (workers == 1) {
            std::vector<int> actions;
            for (long long flat = 0; flat < total; ++flat) {
                const auto multi = profiles.unflatten(flat);
                if (scan_pass(game, tables, multi, eps)) candidates.push_back(flat);
            }
        } else {
            std::vector<std::vector<long long>> found(static_cast<std::size_t>(workers));
            std::vector<std::thread> pool;
            const long long chunk = (total + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w]() {
                    const long long lo = w * chunk;
                    const long long hi = std::min(total, lo + chunk);
                    for (long long flat = lo; flat < hi; ++flat) {
                        const auto multi = profiles.unflatten(flat);
                        if (scan_pass(game, tables, multi, eps)) {
                            found[static_cast<std::size_t>(w)].push_back(flat);
                        }
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (const auto& part : found) candidates.insert(candidates.end(), part.begin(), part.end());
        }
    }

    std::vector<PureEquilibrium> out;
    for (long long flat : candidates) {
        const auto multi = profiles.unflatten(flat);
        StrategyProfile profile = pure_profile(game, multi);
        EquilibriumReport report = verify_profile(game, profile, mode, eps);
        if (report.verdict) {
            out.push_back(PureEquilibrium{multi, std::move(report)});
        }
    }
    return out;
}

namespace {

StrategyProfile blend(const StrategyProfile& a, const StrategyProfile& b, double weight_b) {
    StrategyProfile out = a;
    for (std::size_t n = 0; n < a.dists.size(); ++n) {
        for (std::size_t t = 0; t < a.dists[n].size(); ++t) {
            out.dists[n][t] = mix({{1.0 - weight_b, a.dists[n][t]}, {weight_b, b.dists[n][t]}});
        }
    }
    return out;
}

/// Uniform distribution over each player-type's eps-argmax actions.
StrategyProfile snapped_candidate(const GameSpec& game, const StrategyProfile& at, double eps) {
    StrategyProfile out = at;
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            const std::vector<int> best = action_best_set(game, n, t, at, eps);
            std::vector<double> w(static_cast<std::size_t>(game.action_count(n, t)), 0.0);
            for (int a : best) w[static_cast<std::size_t>(a)] = 1.0 / static_cast<double>(best.size());
            out.at(n, t) = DiscreteDistribution(game.action_grid(n, t), std::move(w));
        }
    }
    return out;
}

StrategyProfile iteration_target(const GameSpec& game, const StrategyProfile& at, VerifyMode mode,
                                 double tie_eps) {
    StrategyProfile out = at;
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            if (mode == VerifyMode::distribution &&
                game.attitude(n, t).kind == AttitudeKind::alarmist) {
                out.at(n, t) = *dist_best_response(game, n, t, at).optimal_dist;
            } else {
                const std::vector<int> best = action_best_set(game, n, t, at, tie_eps);
                std::vector<double> w(static_cast<std::size_t>(game.action_count(n, t)), 0.0);
                for (int a : best) w[static_cast<std::size_t>(a)] = 1.0 / static_cast<double>(best.size());
                out.at(n, t) = DiscreteDistribution(game.action_grid(n, t), std::move(w));
            }
        }
    }
    return out;
}

} // namespace

IterationResult best_response_iteration(const GameSpec& game, VerifyMode mode,
                                        const StrategyProfile& init, double alpha,
                                        long long max_iter, double tol) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw validation_error("best_response_iteration: damping must lie in (0, 1]");
    }
    if (!(tol > 0.0)) throw validation_error("best_response_iteration: tolerance must be positive");
    if (any_custom(game)) {
        throw validation_error("best_response_iteration: satisfaction attitudes required");
    }
    check_profile(game, init);

    double range = 0.0;
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) range = std::max(range, game.utility_range(n, t));
    }
    const double verify_eps = 10.0 * tol;
    const std::vector<double> ladder = {verify_eps, 1e-4 * range, 1e-3 * range, 1e-2 * range,
                                        5e-2 * range};

    IterationResult result;
    StrategyProfile current = init;
    std::vector<double> tail;
    const long long poll = 200;

    auto try_candidates = [&](long long iterations) -> bool {
        EquilibriumReport raw = verify_profile(game, current, mode, verify_eps);
        if (raw.verdict) {
            result.converged = true;
            result.profile = current;
            result.verification = std::move(raw);
            result.iterations = iterations;
            return true;
        }
        for (double eps : ladder) {
            StrategyProfile snapped = snapped_candidate(game, current, eps);
            EquilibriumReport report = verify_profile(game, snapped, mode, verify_eps);
            if (report.verdict) {
                result.converged = true;
                result.profile = std::move(snapped);
                result.verification = std::move(report);
                result.iterations = iterations;
                return true;
            }
        }
        return false;
    };

    for (long long k = 0; k < max_iter; ++k) {
        if (k > 0 && k % poll == 0 && try_candidates(k)) return result;
        const StrategyProfile target = iteration_target(game, current, mode, tol);
        const double step_weight = alpha >= 1.0 ? 1.0 : alpha / (1.0 + alpha * static_cast<double>(k));
        StrategyProfile next = blend(current, target, step_weight);
        const double step = next.sup_distance(current);
        current = std::move(next);
        tail.push_back(step);
        if (tail.size() > 10) tail.erase(tail.begin());
        if (step < tol) {
            if (try_candidates(k + 1)) return result;
            result.iterations = k + 1;
            result.reason = "step size converged but no candidate verified at 10*tol";
            result.trajectory_tail = tail;
            return result;
        }
    }
    result.iterations = max_iter;
    result.reason = "no convergence within the iteration budget";
    result.trajectory_tail = tail;
    return result;
}

bool MonotoneProfile::leq(const MonotoneProfile& other) const {
    for (std::size_t n = 0; n < actions.size(); ++n) {
        for (std::size_t t = 0; t < actions[n].size(); ++t) {
            if (actions[n][t] > other.actions[n][t]) return false;
        }
    }
    return true;
}

TarskiResult tarski_iterate(const GameSpec& game, TarskiDirection direction, bool force) {
    if (!game.structured()) throw validation_error("tarski_iterate: structured game required");
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            const AttitudeKind kind = game.attitude(n, t).kind;
            if (kind != AttitudeKind::enterprising && kind != AttitudeKind::traditional) {
                throw validation_error("tarski_iterate: enterprising attitudes required");
            }
            if (t > 0 && !same_grid(game.action_grid(n, t), game.action_grid(n, 0))) {
                throw validation_error("tarski_iterate: action grids must agree across types");
            }
        }
    }
    if (!force) {
        const AssumptionReport report = check_monotone_assumptions(game);
        if (!report.all_pass()) {
            std::string names;
            for (const auto& item : report.items) {
                if (item.status != CheckStatus::pass) names += " [" + item.name + "]";
            }
            throw validation_error("tarski_iterate: monotone assumptions not verified:" + names);
        }
    }

    const Tolerances& tol = default_tolerances();
    const int agents = game.agent_count();
    std::vector<int> current(static_cast<std::size_t>(agents), 0);
    int max_actions = 1, max_types = 1;
    for (int id = 0; id < agents; ++id) {
        const auto [n, t] = game.agent_of(id);
        max_actions = std::max(max_actions, game.action_count(n, t));
        max_types = std::max(max_types, game.type_count(n));
        current[static_cast<std::size_t>(id)] =
            direction == TarskiDirection::bottom ? 0 : game.action_count(n, t) - 1;
    }

    const int sweep_cap = max_actions * max_types * game.players() + 1;
    int sweeps = 0;
    while (true) {
        if (sweeps > sweep_cap) {
            throw validation_error("tarski_iterate: oscillation beyond the sweep bound; "
                                   "monotone assumption violation evidence");
        }
        std::vector<int> next(static_cast<std::size_t>(agents));
        for (int id = 0; id < agents; ++id) {
            const auto [n, t] = game.agent_of(id);
            double best = -std::numeric_limits<double>::infinity();
            std::vector<double> row(static_cast<std::size_t>(game.action_count(n, t)));
            for (int a = 0; a < game.action_count(n, t); ++a) {
                row[static_cast<std::size_t>(a)] = agent_form_value(game, n, t, a, current);
                best = std::max(best, row[static_cast<std::size_t>(a)]);
            }
            int pick = -1;
            if (direction == TarskiDirection::bottom) {
                for (int a = 0; a < game.action_count(n, t); ++a) {
                    if (row[static_cast<std::size_t>(a)] >= best - tol.regret) {
                        pick = a;
                        break;
                    }
                }
            } else {
                for (int a = game.action_count(n, t) - 1; a >= 0; --a) {
                    if (row[static_cast<std::size_t>(a)] >= best - tol.regret) {
                        pick = a;
                        break;
                    }
                }
            }
            next[static_cast<std::size_t>(id)] = pick;
        }
        ++sweeps;
        if (next == current) break;
        current = std::move(next);
    }

    TarskiResult result;
    result.sweeps = sweeps;
    result.profile.actions.resize(static_cast<std::size_t>(game.players()));
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            result.profile.actions[static_cast<std::size_t>(n)].push_back(
                current[static_cast<std::size_t>(game.agent_id(n, t))]);
        }
        for (int t = 1; t < game.type_count(n); ++t) {
            if (result.profile.actions[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)] <
                result.profile.actions[static_cast<std::size_t>(n)][static_cast<std::size_t>(t - 1)]) {
                throw validation_error("tarski_iterate: fixed point not monotone in type; "
                                       "monotone assumption violation evidence");
            }
        }
    }
    result.verification = verify_profile(game, pure_profile(game, current), VerifyMode::action,
                                         tol.regret);
    if (!result.verification.verdict) {
        throw validation_error("tarski_iterate: fixed point failed equilibrium verification");
    }
    return result;
}

IncreasingDifferencesResult check_increasing_differences(
    const IndexSpace& xs, const IndexSpace& ys,
    const std::function<double(long long, long long)>& f) {
    IncreasingDifferencesResult out;
    // four-point inequality on adjacent cells of every (x axis, y axis) pair
    for (int dx = 0; dx < xs.axes(); ++dx) {
        for (long long x = 0; x < xs.total(); ++x) {
            const auto mx = xs.unflatten(x);
            if (mx[static_cast<std::size_t>(dx)] + 1 >= xs.size(dx)) continue;
            auto mx2 = mx;
            ++mx2[static_cast<std::size_t>(dx)];
            const long long x2 = xs.flatten(mx2);
            for (int dy = 0; dy < ys.axes(); ++dy) {
                for (long long y = 0; y < ys.total(); ++y) {
                    const auto my = ys.unflatten(y);
                    if (my[static_cast<std::size_t>(dy)] + 1 >= ys.size(dy)) continue;
                    auto my2 = my;
                    ++my2[static_cast<std::size_t>(dy)];
                    const long long y2 = ys.flatten(my2);
                    const double lhs = f(x2, y2) - f(x, y2);
                    const double rhs = f(x2, y) - f(x, y);
                    if (lhs < rhs - 1e-10) {
                        out.holds = false;
                        std::ostringstream os;
                        os << "four-point violation at x=" << x << "->" << x2 << ", y=" << y << "->"
                           << y2 << ": " << lhs << " < " << rhs;
                        out.witness = os.str();
                        return out;
                    }
                }
            }
        }
    }
    return out;
}

namespace {

constexpr double kMonotoneTol = 1e-10;
constexpr std::size_t kMaxWitnesses = 5;

void add_witness(CheckItem& item, const std::string& text) {
    item.status = CheckStatus::fail;
    if (item.witnesses.size() < kMaxWitnesses) item.witnesses.push_back(text);
}

/// Walks every (t_n, opponent profile, opponent action combo, own action,
/// state) context of player n and hands the utility accessor to the visitor.
template <typename Visitor>
void for_each_context(const GameSpec& game, int n, Visitor&& visit) {
    const std::vector<int> opponents = game.players_except(n);
    for (int t = 0; t < game.type_count(n); ++t) {
        const IndexSpace& opp_space = game.opp_type_space(n);
        for (long long o = 0; o < opp_space.total(); ++o) {
            const auto opp_types = opp_space.unflatten(o);
            std::vector<int> sizes;
            for (std::size_t k = 0; k < opponents.size(); ++k) {
                sizes.push_back(game.action_count(opponents[k], opp_types[k]));
            }
            const IndexSpace combos(sizes);
            for (long long c = 0; c < combos.total(); ++c) {
                const auto opp_actions = combos.unflatten(c);
                visit(t, static_cast<int>(o), opp_actions);
            }
        }
    }
}

bool is_member(const std::vector<DiscreteDistribution>& set, const DiscreteDistribution& d) {
    for (const auto& member : set) {
        if (member.sup_distance(d) <= 1e-9) return true;
    }
    return false;
}

/// Sublattice closure of one prior set; nullopt = undecidable.
std::optional<bool> sublattice_closed(const std::vector<DiscreteDistribution>& set,
                                      std::string* witness) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            try {
                const DiscreteDistribution join = lattice_join(set[i], set[j]);
                const DiscreteDistribution meet = lattice_meet(set[i], set[j]);
                if (!is_member(set, join) || !is_member(set, meet)) {
                    *witness = "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") escapes the set";
                    return false;
                }
            } catch (const lattice_construction_error&) {
                return std::nullopt;
            }
        }
    }
    return true;
}

/// Induced set order low <= high; nullopt = undecidable.
std::optional<bool> induced_leq(const std::vector<DiscreteDistribution>& low,
                                const std::vector<DiscreteDistribution>& high,
                                std::string* witness) {
    for (std::size_t i = 0; i < low.size(); ++i) {
        for (std::size_t j = 0; j < high.size(); ++j) {
            try {
                const DiscreteDistribution join = lattice_join(low[i], high[j]);
                const DiscreteDistribution meet = lattice_meet(low[i], high[j]);
                if (!is_member(low, meet) || !is_member(high, join)) {
                    *witness = "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") violates the induced set order";
                    return false;
                }
            } catch (const lattice_construction_error&) {
                return std::nullopt;
            }
        }
    }
    return true;
}

} // namespace

AssumptionReport check_monotone_assumptions(const GameSpec& game) {
    AssumptionReport report;
    if (!game.structured()) {
        report.items.push_back({"structured state space", CheckStatus::fail, {},
                                "the monotone pipeline needs a structured game"});
        return report;
    }
    bool shared_grids = true;
    for (int n = 0; n < game.players() && shared_grids; ++n) {
        for (int t = 1; t < game.type_count(n); ++t) {
            if (!same_grid(game.action_grid(n, t), game.action_grid(n, 0))) shared_grids = false;
        }
    }
    if (!shared_grids) {
        report.items.push_back({"shared action grids", CheckStatus::fail, {},
                                "action grids must not vary across a player's types"});
        return report;
    }

    const SupportGrid& tilde = *game.tilde_grid();
    const IndexSpace& tilde_space = tilde.index_space();
    const long long states = tilde.point_count();

    // A1: payoff-utility increasing in the state.
    CheckItem a1{"A1 payoff increasing in state", CheckStatus::pass, {}, ""};
    for (int n = 0; n < game.players(); ++n) {
        for_each_context(game, n, [&](int t, int o, const std::vector<int>& opp_actions) {
            for (int a = 0; a < game.action_count(n, t); ++a) {
                for (int d = 0; d < tilde_space.axes(); ++d) {
                    for (long long w = 0; w < states; ++w) {
                        const auto mw = tilde_space.unflatten(w);
                        if (mw[static_cast<std::size_t>(d)] + 1 >= tilde_space.size(d)) continue;
                        auto mw2 = mw;
                        ++mw2[static_cast<std::size_t>(d)];
                        const long long w2 = tilde_space.flatten(mw2);
                        const double lo = game.utility_at(n, t, o, a, opp_actions, static_cast<int>(w));
                        const double hi = game.utility_at(n, t, o, a, opp_actions, static_cast<int>(w2));
                        if (hi < lo - kMonotoneTol) {
                            std::ostringstream os;
                            os << "u(n=" << n << ",t=" << t << ",opp=" << o << ",a=" << a
                               << ") drops from " << lo << " to " << hi << " along state dim " << d;
                            add_witness(a1, os.str());
                        }
                    }
                }
            }
        });
    }
    report.items.push_back(std::move(a1));

    // A2: the increasing-differences families, by adjacent four-point cells.
    CheckItem a2{"A2 increasing differences", CheckStatus::pass, {}, ""};
    for (int n = 0; n < game.players(); ++n) {
        const std::vector<int> opponents = game.players_except(n);
        const IndexSpace& opp_space = game.opp_type_space(n);
        auto u = [&](int t, int o, int a, const std::vector<int>& opp_actions, long long w) {
            return game.utility_at(n, t, o, a, opp_actions, static_cast<int>(w));
        };
        auto four_point = [&](const char* family, double hi_hi, double lo_hi, double hi_lo,
                              double lo_lo) {
            if ((hi_hi - lo_hi) < (hi_lo - lo_lo) - kMonotoneTol) {
                std::ostringstream os;
                os << family << " fails for player " << n << ": " << (hi_hi - lo_hi) << " < "
                   << (hi_lo - lo_lo);
                add_witness(a2, os.str());
            }
        };
        for_each_context(game, n, [&](int t, int o, const std::vector<int>& opp_actions) {
            const int own = game.action_count(n, t);
            const auto opp_types = opp_space.unflatten(o);
            for (int a = 0; a + 1 < own; ++a) {
                for (long long w = 0; w < states; ++w) {
                    // own action x own type
                    if (t + 1 < game.type_count(n)) {
                        four_point("ID(a_n, t_n)", u(t + 1, o, a + 1, opp_actions, w),
                                   u(t + 1, o, a, opp_actions, w), u(t, o, a + 1, opp_actions, w),
                                   u(t, o, a, opp_actions, w));
                    }
                    // own action x one opponent's type
                    for (int k = 0; k < opp_space.axes(); ++k) {
                        if (opp_types[static_cast<std::size_t>(k)] + 1 >= opp_space.size(k)) continue;
                        auto types2 = opp_types;
                        ++types2[static_cast<std::size_t>(k)];
                        const int o2 = static_cast<int>(opp_space.flatten(types2));
                        four_point("ID(a_n, t_m)", u(t, o2, a + 1, opp_actions, w),
                                   u(t, o2, a, opp_actions, w), u(t, o, a + 1, opp_actions, w),
                                   u(t, o, a, opp_actions, w));
                    }
                    // own action x one opponent's action
                    for (std::size_t k = 0; k < opponents.size(); ++k) {
                        if (opp_actions[k] + 1 >=
                            game.action_count(opponents[k], opp_types[k])) {
                            continue;
                        }
                        auto acts2 = opp_actions;
                        ++acts2[k];
                        four_point("ID(a_n, a_m)", u(t, o, a + 1, acts2, w), u(t, o, a, acts2, w),
                                   u(t, o, a + 1, opp_actions, w), u(t, o, a, opp_actions, w));
                    }
                    // own action x state
                    const auto mw = tilde_space.unflatten(w);
                    for (int d = 0; d < tilde_space.axes(); ++d) {
                        if (mw[static_cast<std::size_t>(d)] + 1 >= tilde_space.size(d)) continue;
                        auto mw2 = mw;
                        ++mw2[static_cast<std::size_t>(d)];
                        const long long w2 = tilde_space.flatten(mw2);
                        four_point("ID(a_n, state)", u(t, o, a + 1, opp_actions, w2),
                                   u(t, o, a, opp_actions, w2), u(t, o, a + 1, opp_actions, w),
                                   u(t, o, a, opp_actions, w));
                    }
                }
            }
            // (t_n, t_{-n}, a_{-n}) x state families
            for (long long w = 0; w < states; ++w) {
                const auto mw = tilde_space.unflatten(w);
                for (int d = 0; d < tilde_space.axes(); ++d) {
                    if (mw[static_cast<std::size_t>(d)] + 1 >= tilde_space.size(d)) continue;
                    auto mw2 = mw;
                    ++mw2[static_cast<std::size_t>(d)];
                    const long long w2 = tilde_space.flatten(mw2);
                    for (int a = 0; a < game.action_count(n, t); ++a) {
                        if (t + 1 < game.type_count(n)) {
                            four_point("ID(t_n, state)", u(t + 1, o, a, opp_actions, w2),
                                       u(t, o, a, opp_actions, w2), u(t + 1, o, a, opp_actions, w),
                                       u(t, o, a, opp_actions, w));
                        }
                        for (int k = 0; k < opp_space.axes(); ++k) {
                            if (opp_types[static_cast<std::size_t>(k)] + 1 >= opp_space.size(k)) continue;
                            auto types2 = opp_types;
                            ++types2[static_cast<std::size_t>(k)];
                            const int o2 = static_cast<int>(opp_space.flatten(types2));
                            four_point("ID(t_m, state)", u(t, o2, a, opp_actions, w2),
                                       u(t, o, a, opp_actions, w2), u(t, o2, a, opp_actions, w),
                                       u(t, o, a, opp_actions, w));
                        }
                        for (std::size_t k = 0; k < opponents.size(); ++k) {
                            if (opp_actions[k] + 1 >=
                                game.action_count(opponents[k], opp_types[k])) {
                                continue;
                            }
                            auto acts2 = opp_actions;
                            ++acts2[k];
                            four_point("ID(a_m, state)", u(t, o, a, acts2, w2),
                                       u(t, o, a, opp_actions, w2), u(t, o, a, acts2, w),
                                       u(t, o, a, opp_actions, w));
                        }
                    }
                }
            }
        });
    }
    report.items.push_back(std::move(a2));

    // A3: opponent-type distribution stochastically increasing in own type.
    CheckItem a3{"A3 type distribution monotone", CheckStatus::pass, {}, ""};
    for (int n = 0; n < game.players(); ++n) {
        const IndexSpace& opp_space = game.opp_type_space(n);
        std::vector<std::vector<double>> dims;
        for (int k = 0; k < opp_space.axes(); ++k) {
            std::vector<double> levels;
            for (int i = 0; i < opp_space.size(k); ++i) levels.push_back(i);
            dims.push_back(std::move(levels));
        }
        GridPtr opp_grid = opp_space.axes() == 0
                               ? SupportGrid::index_line(1)
                               : std::make_shared<SupportGrid>(dims);
        for (int t = 0; t + 1 < game.type_count(n); ++t) {
            const auto& low = game.attitude(n, t).structured;
            const auto& high = game.attitude(n, t + 1).structured;
            if (!low || !high) {
                a3.status = a3.status == CheckStatus::fail ? CheckStatus::fail : CheckStatus::undecidable;
                a3.note = "factored type probabilities unavailable for some player-type";
                continue;
            }
            try {
                DiscreteDistribution p_low(opp_grid, low->type_probs);
                DiscreteDistribution p_high(opp_grid, high->type_probs);
                if (!stochastic_leq(p_low, p_high)) {
                    add_witness(a3, "p(n=" + std::to_string(n) + ") not increasing from type " +
                                        std::to_string(t) + " to " + std::to_string(t + 1));
                }
            } catch (const cap_exceeded_error&) {
                a3.status = CheckStatus::undecidable;
                a3.note = "opponent type profile space too large for upper-set enumeration";
            }
        }
    }
    report.items.push_back(std::move(a3));

    // A4: each prior set is a sublattice.
    CheckItem a4{"A4 prior sets are sublattices", CheckStatus::pass, {}, ""};
    // A5: prior sets increasing in own type (induced set order).
    CheckItem a5{"A5 prior sets increasing in type", CheckStatus::pass, {}, ""};
    for (int n = 0; n < game.players(); ++n) {
        auto sets_of = [&](int t) -> std::optional<std::vector<std::vector<DiscreteDistribution>>> {
            const auto& sp = game.attitude(n, t).structured;
            if (!sp) return std::nullopt;
            if (!sp->scenario_a_sets.empty()) return sp->scenario_a_sets;
            if (!sp->scenario_b_set.empty()) {
                return std::vector<std::vector<DiscreteDistribution>>{sp->scenario_b_set};
            }
            return std::nullopt;
        };
        for (int t = 0; t < game.type_count(n); ++t) {
            const auto sets = sets_of(t);
            if (!sets) {
                if (a4.status == CheckStatus::pass) a4.status = CheckStatus::undecidable;
                a4.note = "prior sets not given in factored scenario form";
                continue;
            }
            for (std::size_t s = 0; s < sets->size(); ++s) {
                std::string witness;
                const auto closed = sublattice_closed((*sets)[s], &witness);
                if (!closed) {
                    if (a4.status == CheckStatus::pass) a4.status = CheckStatus::undecidable;
                    a4.note = "lattice construction failed off the 1-D case";
                } else if (!*closed) {
                    add_witness(a4, "P(n=" + std::to_string(n) + ",t=" + std::to_string(t) +
                                        ",block=" + std::to_string(s) + "): " + witness);
                }
            }
        }
        for (int t = 0; t + 1 < game.type_count(n); ++t) {
            const auto low = sets_of(t);
            const auto high = sets_of(t + 1);
            if (!low || !high) {
                if (a5.status == CheckStatus::pass) a5.status = CheckStatus::undecidable;
                a5.note = "prior sets not given in factored scenario form";
                continue;
            }
            if (low->size() != high->size()) {
                add_witness(a5, "prior-set families differ in shape across types for player " +
                                    std::to_string(n));
                continue;
            }
            for (std::size_t s = 0; s < low->size(); ++s) {
                std::string witness;
                const auto leq = induced_leq((*low)[s], (*high)[s], &witness);
                if (!leq) {
                    if (a5.status == CheckStatus::pass) a5.status = CheckStatus::undecidable;
                    a5.note = "lattice construction failed off the 1-D case";
                } else if (!*leq) {
                    add_witness(a5, "P(n=" + std::to_string(n) + ", types " + std::to_string(t) +
                                        "->" + std::to_string(t + 1) + ", block " +
                                        std::to_string(s) + "): " + witness);
                }
            }
        }
    }
    report.items.push_back(std::move(a4));
    report.items.push_back(std::move(a5));
    return report;
}

namespace {

AssumptionReport check_parametric_pair(const GameSpec& g1, const GameSpec& g2, double l1, double l2) {
    AssumptionReport report;
    const std::string pair_tag = "lambda " + std::to_string(l1) + " -> " + std::to_string(l2);

    CheckItem p1{"P1' increasing differences in lambda", CheckStatus::pass, {}, pair_tag};
    bool shared_domain = g1.structured() && g2.structured() &&
                         g1.type_counts() == g2.type_counts() &&
                         same_grid(g1.tilde_grid(), g2.tilde_grid());
    for (int n = 0; shared_domain && n < g1.players(); ++n) {
        for (int t = 0; t < g1.type_count(n); ++t) {
            if (!same_grid(g1.action_grid(n, t), g2.action_grid(n, t))) shared_domain = false;
        }
    }
    if (!shared_domain) {
        p1.status = CheckStatus::fail;
        p1.note = "family members must share the structured domain";
        report.items.push_back(std::move(p1));
        return report;
    }
    const SupportGrid& tilde = *g1.tilde_grid();
    const IndexSpace& tilde_space = tilde.index_space();
    const long long states = tilde.point_count();
    for (int n = 0; n < g1.players(); ++n) {
        for_each_context(g1, n, [&](int t, int o, const std::vector<int>& opp_actions) {
            auto u1 = [&](int a, long long w) {
                return g1.utility_at(n, t, o, a, opp_actions, static_cast<int>(w));
            };
            auto u2 = [&](int a, long long w) {
                return g2.utility_at(n, t, o, a, opp_actions, static_cast<int>(w));
            };
            for (long long w = 0; w < states; ++w) {
                for (int a = 0; a + 1 < g1.action_count(n, t); ++a) {
                    if ((u2(a + 1, w) - u2(a, w)) < (u1(a + 1, w) - u1(a, w)) - kMonotoneTol) {
                        add_witness(p1, "ID(a_n, lambda) fails at player " + std::to_string(n));
                    }
                }
                const auto mw = tilde_space.unflatten(w);
                for (int d = 0; d < tilde_space.axes(); ++d) {
                    if (mw[static_cast<std::size_t>(d)] + 1 >= tilde_space.size(d)) continue;
                    auto mw2 = mw;
                    ++mw2[static_cast<std::size_t>(d)];
                    const long long w2 = tilde_space.flatten(mw2);
                    for (int a = 0; a < g1.action_count(n, t); ++a) {
                        if ((u2(a, w2) - u2(a, w)) < (u1(a, w2) - u1(a, w)) - kMonotoneTol) {
                            add_witness(p1, "ID(state, lambda) fails at player " + std::to_string(n));
                        }
                    }
                }
            }
        });
    }
    report.items.push_back(std::move(p1));

    CheckItem p2{"P2' type probabilities", CheckStatus::pass, {}, pair_tag};
    CheckItem p3{"P3' prior sets increasing in lambda", CheckStatus::pass, {}, pair_tag};
    for (int n = 0; n < g1.players(); ++n) {
        for (int t = 0; t < g1.type_count(n); ++t) {
            const auto& s1 = g1.attitude(n, t).structured;
            const auto& s2 = g2.attitude(n, t).structured;
            if (!s1 || !s2) {
                if (p2.status == CheckStatus::pass) p2.status = CheckStatus::undecidable;
                if (p3.status == CheckStatus::pass) p3.status = CheckStatus::undecidable;
                p2.note = p3.note = "factored priors unavailable";
                continue;
            }
            const bool scenario_a = !s1->scenario_a_sets.empty();
            // scenario A keeps p fixed; scenario B may move it up stochastically
            if (scenario_a) {
                for (std::size_t o = 0; o < s1->type_probs.size(); ++o) {
                    if (std::abs(s1->type_probs[o] - s2->type_probs[o]) > 1e-12) {
                        add_witness(p2, "p varies with lambda for player " + std::to_string(n));
                        break;
                    }
                }
            } else {
                const IndexSpace& opp_space = g1.opp_type_space(n);
                std::vector<std::vector<double>> dims;
                for (int k = 0; k < opp_space.axes(); ++k) {
                    std::vector<double> levels;
                    for (int i = 0; i < opp_space.size(k); ++i) levels.push_back(i);
                    dims.push_back(std::move(levels));
                }
                GridPtr opp_grid = opp_space.axes() == 0 ? SupportGrid::index_line(1)
                                                         : std::make_shared<SupportGrid>(dims);
                try {
                    if (!stochastic_leq(DiscreteDistribution(opp_grid, s1->type_probs),
                                        DiscreteDistribution(opp_grid, s2->type_probs))) {
                        add_witness(p2, "p(lambda) not stochastically increasing for player " +
                                            std::to_string(n));
                    }
                } catch (const cap_exceeded_error&) {
                    p2.status = CheckStatus::undecidable;
                    p2.note = "opponent type space too large";
                }
            }

            auto blocks = [&](const StructuredPriors& sp)
                -> std::vector<std::vector<DiscreteDistribution>> {
                if (!sp.scenario_a_sets.empty()) return sp.scenario_a_sets;
                if (!sp.scenario_b_set.empty()) return {sp.scenario_b_set};
                return {};
            };
            const auto b1 = blocks(*s1);
            const auto b2 = blocks(*s2);
            if (b1.empty() || b2.empty() || b1.size() != b2.size()) {
                if (p3.status == CheckStatus::pass) p3.status = CheckStatus::undecidable;
                p3.note = "prior sets not given in factored scenario form";
                continue;
            }
            for (std::size_t s = 0; s < b1.size(); ++s) {
                std::string witness;
                const auto leq = induced_leq(b1[s], b2[s], &witness);
                if (!leq) {
                    if (p3.status == CheckStatus::pass) p3.status = CheckStatus::undecidable;
                    p3.note = "lattice construction failed off the 1-D case";
                } else if (!*leq) {
                    add_witness(p3, "player " + std::to_string(n) + " type " + std::to_string(t) +
                                        " block " + std::to_string(s) + ": " + witness);
                }
            }
        }
    }
    report.items.push_back(std::move(p2));
    report.items.push_back(std::move(p3));
    return report;
}

} // namespace

SweepResult comparative_statics_sweep(const ParametricFamily& family, int jobs) {
    if (family.lambdas.empty()) throw validation_error("comparative_statics_sweep: empty family");
    for (std::size_t i = 1; i < family.lambdas.size(); ++i) {
        if (!(family.lambdas[i - 1] < family.lambdas[i])) {
            throw validation_error("comparative_statics_sweep: lambdas must strictly increase");
        }
    }
    std::vector<GameSpec> games;
    games.reserve(family.lambdas.size());
    for (double l : family.lambdas) games.push_back(family.builder(l));

    SweepResult result;
    result.entries.resize(family.lambdas.size());
    const int workers = std::max(1, jobs);
    std::vector<std::thread> pool;
    std::vector<std::string> failures(family.lambdas.size());
    auto run_entry = [&](std::size_t i) {
        SweepEntry entry;
        entry.lambda = family.lambdas[i];
        entry.assumptions = check_monotone_assumptions(games[i]);
        try {
            TarskiResult bottom = tarski_iterate(games[i], TarskiDirection::bottom,
                                                 /*force=*/!entry.assumptions.all_pass());
            TarskiResult top = tarski_iterate(games[i], TarskiDirection::top,
                                              /*force=*/!entry.assumptions.all_pass());
            entry.bottom = std::move(bottom.profile);
            entry.bottom_sweeps = bottom.sweeps;
            entry.top = std::move(top.profile);
            entry.top_sweeps = top.sweeps;
        } catch (const error& e) {
            failures[i] = e.what();
        }
        result.entries[i] = std::move(entry);
    };
    if (workers == 1) {
        for (std::size_t i = 0; i < family.lambdas.size(); ++i) run_entry(i);
    } else {
        std::atomic_size_t cursor{0};
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                while (true) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= family.lambdas.size()) return;
                    run_entry(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < family.lambdas.size(); ++i) {
        if (!failures[i].empty()) {
            throw validation_error("comparative_statics_sweep: lambda " +
                                   std::to_string(family.lambdas[i]) + ": " + failures[i]);
        }
        if (!result.entries[i].assumptions.all_pass()) result.assumptions_ok = false;
    }

    for (std::size_t i = 0; i + 1 < games.size(); ++i) {
        AssumptionReport pair = check_parametric_pair(games[i], games[i + 1], family.lambdas[i],
                                                      family.lambdas[i + 1]);
        if (!pair.all_pass()) result.assumptions_ok = false;
        result.parametric.push_back(std::move(pair));
        if (!result.entries[i].bottom.leq(result.entries[i + 1].bottom) ||
            !result.entries[i].top.leq(result.entries[i + 1].top)) {
            result.increasing = false;
        }
    }
    return result;
}

RobustnessReport robustness_probe(const GameSpec& game, const std::vector<double>& etas,
                                  VerifyMode mode, double eps, long long cap) {
    for (int n = 0; n < game.players(); ++n) {
        for (int t = 0; t < game.type_count(n); ++t) {
            if (game.attitude(n, t).kind == AttitudeKind::custom) {
                throw validation_error("robustness_probe: satisfaction attitudes required");
            }
        }
    }
    RobustnessReport report;
    report.base = enumerate_pure_equilibria(game, mode, eps, cap);

    auto profile_distance = [&](const std::vector<int>& a, const std::vector<int>& b) {
        // sup-norm distance between the dirac weight vectors
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return 1.0;
        }
        return 0.0;
    };

    for (double eta : etas) {
        if (eta < 0.0 || eta >= 1.0) throw validation_error("robustness_probe: eta must lie in [0, 1)");
        std::vector<std::vector<Attitude>> attitudes = game.attitudes();
        for (int n = 0; n < game.players(); ++n) {
            for (int t = 0; t < game.type_count(n); ++t) {
                Attitude& att = attitudes[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
                att.structured.reset(); // mixtures no longer factor
                for (auto& rho : att.priors) {
                    rho = mix({{1.0 - eta, rho}, {eta, DiscreteDistribution::uniform(rho.grid())}});
                }
            }
        }
        std::vector<std::vector<GridPtr>> grids(static_cast<std::size_t>(game.players()));
        for (int n = 0; n < game.players(); ++n) {
            for (int t = 0; t < game.type_count(n); ++t) {
                grids[static_cast<std::size_t>(n)].push_back(game.action_grid(n, t));
            }
        }
        GameSpec perturbed(game.type_counts(), std::move(grids), game.states(),
                           game.payoff_utility(), std::move(attitudes));
        const auto equilibria = enumerate_pure_equilibria(perturbed, mode, eps, cap);

        RobustnessEntry entry;
        entry.eta = eta;
        entry.equilibrium_count = equilibria.size();
        for (const auto& e : equilibria) {
            double nearest = report.base.empty() ? 1.0 : std::numeric_limits<double>::infinity();
            for (const auto& b : report.base) {
                nearest = std::min(nearest, profile_distance(e.actions, b.actions));
            }
            entry.directed_distance = std::max(entry.directed_distance, nearest);
        }
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace ambigame
