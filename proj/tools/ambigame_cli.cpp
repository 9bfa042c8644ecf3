// Command-line front end: validate game files, run solvers, run property
// suites, execute comparative-statics sweeps, and emit JSON reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ambigame/equilibrium.hpp"
#include "ambigame/errors.hpp"
#include "ambigame/game_io.hpp"
#include "ambigame/rng.hpp"
#include "ambigame/satisfaction.hpp"

namespace {

using ambigame::VerifyMode;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNoEquilibrium = 2;
constexpr int kExitInternal = 3;

int default_jobs() {
    if (const char* env = std::getenv("AMBIGAME_JOBS")) {
        const int jobs = std::atoi(env);
        if (jobs >= 1) return jobs;
    }
    return 1;
}

VerifyMode mode_from(const std::string& name) {
    if (name == "action") return VerifyMode::action;
    if (name == "distribution") return VerifyMode::distribution;
    throw ambigame::validation_error("unknown mode '" + name + "'");
}

ordered_json report_to_json(const ambigame::EquilibriumReport& report) {
    ordered_json j;
    j["mode"] = to_string(report.mode);
    j["epsilon"] = report.epsilon;
    j["verdict"] = report.verdict;
    ordered_json regrets = ordered_json::array();
    ordered_json witnesses = ordered_json::array();
    for (const auto& pair : report.pairs) {
        ordered_json p;
        p["player"] = pair.player;
        p["type"] = pair.type;
        p["regret"] = pair.regret;
        p["off_support_mass"] = pair.off_support_mass;
        p["ok"] = pair.ok;
        if (pair.approximate) p["approximate"] = true;
        regrets.push_back(std::move(p));
        if (!pair.witness.empty()) {
            witnesses.push_back({{"player", pair.player}, {"type", pair.type}, {"deviation", pair.witness}});
        }
    }
    j["regrets"] = std::move(regrets);
    j["witnesses"] = std::move(witnesses);
    return j;
}

ordered_json profile_to_json(const ambigame::GameSpec& game, const ambigame::StrategyProfile& profile) {
    ordered_json out = ordered_json::array();
    for (int n = 0; n < game.players(); ++n) {
        ordered_json per_player = ordered_json::array();
        for (int t = 0; t < game.type_count(n); ++t) per_player.push_back(profile.at(n, t).weights());
        out.push_back(std::move(per_player));
    }
    return out;
}

ordered_json pure_to_json(const ambigame::GameSpec& game, const ambigame::PureEquilibrium& e) {
    ordered_json j;
    j["actions"] = e.actions;
    ordered_json levels = ordered_json::array();
    for (int id = 0; id < game.agent_count(); ++id) {
        const auto [n, t] = game.agent_of(id);
        levels.push_back(game.action_level(n, t, e.actions[static_cast<std::size_t>(id)]));
    }
    j["levels"] = std::move(levels);
    j["report"] = report_to_json(e.report);
    return j;
}

ordered_json assumption_report_to_json(const ambigame::AssumptionReport& report) {
    ordered_json items = ordered_json::array();
    for (const auto& item : report.items) {
        ordered_json j;
        j["name"] = item.name;
        j["status"] = to_string(item.status);
        if (!item.witnesses.empty()) j["witnesses"] = item.witnesses;
        if (!item.note.empty()) j["note"] = item.note;
        items.push_back(std::move(j));
    }
    return items;
}

void print_assumption_table(const ambigame::AssumptionReport& report) {
    for (const auto& item : report.items) {
        std::cout << "  " << (item.status == ambigame::CheckStatus::pass          ? "PASS"
                              : item.status == ambigame::CheckStatus::fail        ? "FAIL"
                                                                                  : "UNDECIDABLE")
                  << "  " << item.name;
        if (!item.note.empty()) std::cout << "  (" << item.note << ")";
        std::cout << "\n";
        for (const auto& w : item.witnesses) std::cout << "        " << w << "\n";
    }
}

ordered_json monotone_profile_to_json(const ambigame::GameSpec& game,
                                      const ambigame::MonotoneProfile& profile) {
    ordered_json j;
    j["actions"] = profile.actions;
    ordered_json levels = ordered_json::array();
    for (int n = 0; n < game.players(); ++n) {
        ordered_json per_player = ordered_json::array();
        for (int t = 0; t < game.type_count(n); ++t) {
            per_player.push_back(
                game.action_level(n, t, profile.actions[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)]));
        }
        levels.push_back(std::move(per_player));
    }
    j["levels"] = std::move(levels);
    return j;
}

/// Reports are machine-readable: stdout (or the --out file) carries exactly
/// the JSON document; human-facing notes go to stderr.
void emit(const ordered_json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw ambigame::error("cannot write report to '" + out_path + "'");
        out << report.dump(2) << "\n";
        std::cerr << "report written to " << out_path << "\n";
    }
}

/// check prints its summary table on stdout, so its JSON goes to --out only.
void emit_check(const ordered_json& report, const std::string& out_path) {
    if (out_path.empty()) return;
    std::ofstream out(out_path);
    if (!out) throw ambigame::error("cannot write report to '" + out_path + "'");
    out << report.dump(2) << "\n";
}

ordered_json report_header(const std::string& command, const std::string& path) {
    ordered_json j;
    j["schema_version"] = 1;
    j["tool"] = "ambigame";
    j["command"] = command;
    j["input"] = path;
    return j;
}

int run_validate(const std::string& path) {
    try {
        ambigame::GameSpec game = ambigame::load_game(path);
        ambigame::validate_game(game);
        std::cout << "valid: " << game.players() << " players, " << game.agent_count()
                  << " player-type pairs\n";
        return kExitOk;
    } catch (const ambigame::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    }
}

int run_solve(const std::string& path, const std::string& mode_name, const std::string& method,
              double tolerance, std::uint64_t seed, int jobs, long long cap,
              const std::string& out_path) {
    const ambigame::GameSpec game = ambigame::load_game(path);
    const VerifyMode mode = mode_from(mode_name);
    ordered_json report = report_header("solve", path);
    report["mode"] = mode_name;
    report["method"] = method;
    report["tolerance"] = tolerance;
    report["seed"] = seed;

    if (method == "enumerate") {
        const auto found = ambigame::enumerate_pure_equilibria(game, mode, tolerance, cap, jobs);
        ordered_json list = ordered_json::array();
        for (const auto& e : found) list.push_back(pure_to_json(game, e));
        report["equilibria"] = std::move(list);
        report["count"] = found.size();
        emit(report, out_path);
        return found.empty() ? kExitNoEquilibrium : kExitOk;
    }
    if (method == "iterate") {
        const auto result = ambigame::best_response_iteration(
            game, mode, ambigame::uniform_profile(game), 0.5, 200000, tolerance / 10.0);
        report["converged"] = result.converged;
        report["iterations"] = result.iterations;
        if (result.converged) {
            report["profile"] = profile_to_json(game, *result.profile);
            report["verification"] = report_to_json(*result.verification);
        } else {
            report["reason"] = result.reason;
            report["trajectory_tail"] = result.trajectory_tail;
        }
        emit(report, out_path);
        return result.converged ? kExitOk : kExitNoEquilibrium;
    }
    if (method == "tarski") {
        const auto bottom = ambigame::tarski_iterate(game, ambigame::TarskiDirection::bottom);
        const auto top = ambigame::tarski_iterate(game, ambigame::TarskiDirection::top);
        report["bottom"] = monotone_profile_to_json(game, bottom.profile);
        report["bottom_sweeps"] = bottom.sweeps;
        report["bottom_verification"] = report_to_json(bottom.verification);
        report["top"] = monotone_profile_to_json(game, top.profile);
        report["top_sweeps"] = top.sweeps;
        report["top_verification"] = report_to_json(top.verification);
        emit(report, out_path);
        return kExitOk;
    }
    throw ambigame::validation_error("unknown method '" + method + "'");
}

int run_check(const std::string& path, const std::string& suite, int samples, std::uint64_t seed,
              double tolerance, long long cap, int jobs, const std::string& out_path) {
    ordered_json report = report_header("check", path);
    report["suite"] = suite;
    report["seed"] = seed;

    if (suite == "parametric") {
        const ambigame::LoadedFamily loaded = ambigame::load_family(path);
        ordered_json entries = ordered_json::array();
        bool all_ok = true;
        for (std::size_t i = 0; i < loaded.games.size(); ++i) {
            const auto rep = ambigame::check_monotone_assumptions(loaded.games[i]);
            std::cout << "lambda " << loaded.lambdas[i] << ":\n";
            print_assumption_table(rep);
            all_ok = all_ok && rep.all_pass();
            entries.push_back({{"lambda", loaded.lambdas[i]}, {"monotone", assumption_report_to_json(rep)}});
        }
        const auto family = loaded.family();
        ambigame::SweepResult sweep = ambigame::comparative_statics_sweep(family, jobs);
        ordered_json pairs = ordered_json::array();
        for (std::size_t i = 0; i < sweep.parametric.size(); ++i) {
            std::cout << "lambda " << family.lambdas[i] << " -> " << family.lambdas[i + 1] << ":\n";
            print_assumption_table(sweep.parametric[i]);
            all_ok = all_ok && sweep.parametric[i].all_pass();
            pairs.push_back(assumption_report_to_json(sweep.parametric[i]));
        }
        report["per_lambda"] = std::move(entries);
        report["pairwise"] = std::move(pairs);
        report["all_pass"] = all_ok;
        emit_check(report, out_path);
        return kExitOk;
    }

    const ambigame::GameSpec game = ambigame::load_game(path);
    if (suite == "monotone") {
        const auto rep = ambigame::check_monotone_assumptions(game);
        print_assumption_table(rep);
        report["monotone"] = assumption_report_to_json(rep);
        report["all_pass"] = rep.all_pass();
        emit_check(report, out_path);
        return kExitOk;
    }
    if (suite == "shape") {
        ordered_json rows = ordered_json::array();
        for (int n = 0; n < game.players(); ++n) {
            for (int t = 0; t < game.type_count(n); ++t) {
                const auto shape = ambigame::check_shape(
                    game.attitude(n, t), samples,
                    seed + static_cast<std::uint64_t>(game.agent_id(n, t)));
                ordered_json row;
                row["player"] = n;
                row["type"] = t;
                row["attitude"] = to_string(game.attitude(n, t).kind);
                auto set = [&](const char* name, const ambigame::ShapeVerdict& v) {
                    row[name] = v.holds;
                    if (!v.holds) row[std::string(name) + "_counterexample"] = v.counterexample;
                };
                set("concave", shape.concave);
                set("convex", shape.convex);
                set("quasi_concave", shape.quasi_concave);
                set("strongly_concave", shape.strongly_concave);
                set("strongly_convex", shape.strongly_convex);
                row["samples"] = shape.samples;
                std::cout << "(" << n << "," << t << ") " << to_string(game.attitude(n, t).kind)
                          << ": concave=" << shape.concave.holds << " convex=" << shape.convex.holds
                          << " quasi_concave=" << shape.quasi_concave.holds
                          << " strongly_concave=" << shape.strongly_concave.holds
                          << " strongly_convex=" << shape.strongly_convex.holds << "\n";
                rows.push_back(std::move(row));
            }
        }
        report["shape"] = std::move(rows);
        emit_check(report, out_path);
        return kExitOk;
    }
    if (suite == "theorems") {
        const auto action_set =
            ambigame::enumerate_pure_equilibria(game, VerifyMode::action, tolerance, cap, jobs);
        const auto dist_set =
            ambigame::enumerate_pure_equilibria(game, VerifyMode::distribution, tolerance, cap, jobs);
        auto contains = [](const auto& set, const std::vector<int>& actions) {
            for (const auto& e : set) {
                if (e.actions == actions) return true;
            }
            return false;
        };
        bool inclusion = true;
        for (const auto& e : dist_set) inclusion = inclusion && contains(action_set, e.actions);
        const bool equal = inclusion && action_set.size() == dist_set.size();

        bool all_enterprising = true, all_traditional = true;
        for (int n = 0; n < game.players(); ++n) {
            for (int t = 0; t < game.type_count(n); ++t) {
                all_enterprising &= game.attitude(n, t).kind == ambigame::AttitudeKind::enterprising;
                all_traditional &= game.attitude(n, t).kind == ambigame::AttitudeKind::traditional;
            }
        }
        report["pure_action_count"] = action_set.size();
        report["pure_distribution_count"] = dist_set.size();
        report["distribution_subset_of_action"] = inclusion;
        report["pure_sets_equal"] = equal;
        std::cout << "pure action-based: " << action_set.size()
                  << ", pure distribution-based: " << dist_set.size() << "\n";
        std::cout << "distribution subset of action: " << (inclusion ? "yes" : "NO") << "\n";
        if (all_enterprising) {
            std::cout << "enterprising pure-set equality: " << (equal ? "yes" : "NO") << "\n";
        }
        if (all_traditional) {
            // mode agreement on sampled mixed profiles
            ambigame::Rng rng(seed);
            int agreements = 0;
            for (int k = 0; k < samples; ++k) {
                ambigame::StrategyProfile profile = ambigame::uniform_profile(game);
                for (int n = 0; n < game.players(); ++n) {
                    for (int t = 0; t < game.type_count(n); ++t) {
                        profile.at(n, t) = ambigame::DiscreteDistribution(
                            game.action_grid(n, t), rng.probability_vector(game.action_count(n, t)));
                    }
                }
                const bool a = ambigame::verify_profile(game, profile, VerifyMode::action, tolerance).verdict;
                const bool d =
                    ambigame::verify_profile(game, profile, VerifyMode::distribution, tolerance).verdict;
                if (a == d) ++agreements;
            }
            report["mode_agreement_samples"] = samples;
            report["mode_agreements"] = agreements;
            std::cout << "traditional mode agreement: " << agreements << "/" << samples << "\n";
        }
        emit_check(report, out_path);
        return kExitOk;
    }
    throw ambigame::validation_error("unknown suite '" + suite + "'");
}

int run_sweep(const std::string& path, int jobs, const std::string& out_path) {
    const ambigame::LoadedFamily loaded = ambigame::load_family(path);
    const auto family = loaded.family();
    const ambigame::SweepResult result = ambigame::comparative_statics_sweep(family, jobs);

    ordered_json report = report_header("sweep", path);
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < result.entries.size(); ++i) {
        const auto& entry = result.entries[i];
        ordered_json j;
        j["lambda"] = entry.lambda;
        j["bottom"] = monotone_profile_to_json(loaded.games[i], entry.bottom);
        j["top"] = monotone_profile_to_json(loaded.games[i], entry.top);
        j["bottom_sweeps"] = entry.bottom_sweeps;
        j["top_sweeps"] = entry.top_sweeps;
        j["assumptions"] = assumption_report_to_json(entry.assumptions);
        entries.push_back(std::move(j));
    }
    report["entries"] = std::move(entries);
    ordered_json pairs = ordered_json::array();
    for (const auto& pair : result.parametric) pairs.push_back(assumption_report_to_json(pair));
    report["parametric"] = std::move(pairs);
    report["assumptions_ok"] = result.assumptions_ok;
    report["increasing"] = result.increasing;

    std::cerr << "extremal equilibria " << (result.increasing ? "increase" : "DO NOT increase")
              << " along lambda; assumptions " << (result.assumptions_ok ? "hold" : "FLAGGED") << "\n";
    emit(report, out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ambigame: solver and verification toolkit for finite games with prior-set ambiguity"};
    app.require_subcommand(1);

    std::string path, out_path;
    std::string mode = "action";
    std::string method = "enumerate";
    std::string suite = "monotone";
    double tolerance = 1e-9;
    std::uint64_t seed = 12345;
    int jobs = default_jobs();
    long long cap = 1000000;
    int samples = 50;

    CLI::App* validate = app.add_subcommand("validate", "validate a game file");
    validate->add_option("path", path, "game file")->required();

    CLI::App* solve = app.add_subcommand("solve", "find equilibria");
    solve->add_option("path", path, "game file")->required();
    solve->add_option("--mode", mode, "action|distribution");
    solve->add_option("--method", method, "enumerate|iterate|tarski");
    solve->add_option("--tolerance", tolerance, "regret tolerance");
    solve->add_option("--seed", seed, "rng seed recorded in the report");
    solve->add_option("--jobs", jobs, "worker threads");
    solve->add_option("--cap", cap, "pure-profile enumeration cap");
    solve->add_option("--out", out_path, "report file (default: stdout)");

    CLI::App* check = app.add_subcommand("check", "run a property suite");
    check->add_option("path", path, "game or family file")->required();
    check->add_option("--suite", suite, "monotone|parametric|shape|theorems");
    check->add_option("--samples", samples, "sample count for sampled suites");
    check->add_option("--seed", seed, "rng seed");
    check->add_option("--tolerance", tolerance, "regret tolerance");
    check->add_option("--jobs", jobs, "worker threads");
    check->add_option("--cap", cap, "pure-profile enumeration cap");
    check->add_option("--out", out_path, "report file");

    CLI::App* sweep = app.add_subcommand("sweep", "comparative-statics sweep over a family");
    sweep->add_option("path", path, "family file")->required();
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_option("--out", out_path, "report file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(path);
        if (solve->parsed()) return run_solve(path, mode, method, tolerance, seed, jobs, cap, out_path);
        if (check->parsed()) return run_check(path, suite, samples, seed, tolerance, cap, jobs, out_path);
        if (sweep->parsed()) return run_sweep(path, jobs, out_path);
    } catch (const ambigame::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ambigame::cap_exceeded_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
