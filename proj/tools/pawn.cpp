#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pawn/dispatch.hpp"
#include "pawn/explicit.hpp"
#include "pawn/game_io.hpp"
#include "pawn/generators.hpp"
#include "pawn/grab_or_give.hpp"
#include "pawn/kgrab_ovpp.hpp"
#include "pawn/lockkey.hpp"
#include "pawn/suites.hpp"

using namespace pawn;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

GameInstance read_game(const std::string& path) { return parse_game(read_input(path)); }

Mechanism parse_mechanism(const std::string& name, unsigned k)
{
    if (name == "optional-grabbing") return Mechanism::optional_grabbing();
    if (name == "always-grabbing") return Mechanism::always_grabbing();
    if (name == "grab-or-give") return Mechanism::grab_or_give();
    if (name == "k-grabbing") return Mechanism::k_grabbing(k);
    throw ValidationError("unknown mechanism '" + name + "'");
}

struct SolveArgs {
    std::string file;
    std::string algo = "auto";
    bool witness = false;
    bool json = false;
    std::uint64_t budget = kDefaultBudget;
};

int cmd_solve(const SolveArgs& a)
{
    auto inst = read_game(a.file);
    SolveOptions opt;
    opt.algo = a.algo == "explicit" ? Algo::Explicit : a.algo == "specialized" ? Algo::Specialized : Algo::Auto;
    opt.witness = a.witness;
    opt.budget = a.budget;
    auto start = std::chrono::steady_clock::now();
    auto rep = solve(inst.game, inst.init, opt);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (rep.fallback) std::cerr << "fallback: explicit\n";
    if (a.json) {
        nlohmann::json j = {{"winner", to_int(rep.winner)},
                            {"algo", rep.algo},
                            {"stats", {{"states", rep.states}, {"time-ms", ms}}}};
        if (a.witness) j["witness"] = rep.witness;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "winner: " << to_int(rep.winner) << '\n';
    for (const auto& line : rep.witness) std::cout << line << '\n';
    return 0;
}

int cmd_eta(const std::string& file)
{
    auto inst = read_game(file);
    auto eta = minimum_grabs(inst.game, inst.init.p1);
    for (VertexId v = 0; v < inst.game.vertex_count(); ++v) {
        std::cout << "eta " << inst.game.vertex_name(v) << ' '
                  << (eta[v] == kInfiniteGrabs ? std::string("inf") : std::to_string(eta[v])) << '\n';
    }
    return 0;
}

int cmd_reduce(const std::string& what, const std::string& file, std::uint64_t budget)
{
    if (what == "expand") {
        auto inst = read_game(file);
        auto ex = expand(inst.game, {inst.init}, ExpandOptions{budget});
        std::cout << serialize_tbgame(ex.tb);
    } else if (what == "grab-or-give") {
        auto inst = read_game(file);
        std::cout << serialize_tbgame(reduce_grab_or_give(inst.game).tb);
    } else if (what == "lockkey-to-optional") {
        auto lk = parse_lockkey(read_input(file));
        auto out = lockkey_to_optional(lk.game, lk.init);
        std::cout << serialize_game(out.game, out.init);
    } else if (what == "optional-to-always") {
        auto inst = read_game(file);
        auto out = to_always_grabbing(inst.game, inst.init);
        std::cout << serialize_game(out.game, out.init);
    } else {
        throw ValidationError("unknown reduction '" + what + "'");
    }
    return 0;
}

int cmd_check(const std::string& suite, std::uint64_t seed, std::optional<std::size_t> count)
{
    std::vector<std::string> names;
    if (suite == "all") names = suite_names();
    else names = {suite};
    bool all_ok = true;
    for (const auto& name : names) {
        auto start = std::chrono::steady_clock::now();
        auto rep = run_suite(name, seed, count.value_or(default_suite_count(name)));
        auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (rep.passed() ? "PASS " : "FAIL ") << name << ": " << rep.cases << " cases, " << rep.checks
                  << " checks, " << rep.failures.size() << " failures (" << s << " s)\n";
        for (const auto& f : rep.failures) std::cout << "  " << f << '\n';
        if (rep.counterexample) std::cout << "counterexample:\n" << *rep.counterexample;
        all_ok = all_ok && rep.passed();
    }
    return all_ok ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Solver and reduction toolkit for pawn games"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Decide the winner from the file's initial configuration");
    solve_cmd->add_option("file", solve_args.file, "pawngame file, - for stdin")->required();
    solve_cmd->add_option("--algo", solve_args.algo)->check(CLI::IsMember({"auto", "explicit", "specialized"}));
    solve_cmd->add_flag("--witness", solve_args.witness, "Print the winner's strategy or a winning play");
    solve_cmd->add_option("--budget", solve_args.budget, "Node budget for the explicit expansion");
    solve_cmd->add_flag("--json", solve_args.json);

    std::string eta_file;
    auto* eta_cmd = app.add_subcommand("eta", "Minimum number of grabs per vertex (OVPP k-grabbing)");
    eta_cmd->add_option("file", eta_file)->required();

    std::string reduce_what, reduce_file;
    std::uint64_t reduce_budget = kDefaultBudget;
    auto* reduce_cmd = app.add_subcommand("reduce", "Emit a reduced or expanded game");
    reduce_cmd->add_option("reduction", reduce_what)
        ->required()
        ->check(CLI::IsMember({"expand", "grab-or-give", "lockkey-to-optional", "optional-to-always"}));
    reduce_cmd->add_option("file", reduce_file)->required();
    reduce_cmd->add_option("--budget", reduce_budget);

    auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
    gen_cmd->require_subcommand(1);
    std::uint32_t sc_universe = 0, sc_k = 0;
    std::string sc_sets;
    auto* gen_sc = gen_cmd->add_subcommand("setcover", "k-grabbing game from a SET-COVER instance");
    gen_sc->add_option("--universe", sc_universe)->required();
    gen_sc->add_option("--sets", sc_sets, "sets separated by ';', elements by ','")->required();
    gen_sc->add_option("--k", sc_k)->required();
    std::string qbf_text;
    auto* gen_qbf = gen_cmd->add_subcommand("tqbf", "k-grabbing game from a quantified formula");
    gen_qbf->add_option("--formula", qbf_text, "e.g. Ex1.Ax2.(x1|~x2)&(x2)")->required();
    std::string atm_file, atm_word;
    auto* gen_atm = gen_cmd->add_subcommand("atm", "Lock & Key game from an alternating machine");
    gen_atm->add_option("--machine", atm_file)->required();
    auto* word_opt = gen_atm->add_option("--word", atm_word);
    RandomGameParams rp;
    std::uint64_t rnd_seed = 1;
    std::string rnd_kind = "ovpp", rnd_mech = "optional-grabbing";
    unsigned rnd_k = 1;
    auto* gen_rnd = gen_cmd->add_subcommand("random", "Seeded random pawn game");
    gen_rnd->add_option("--seed", rnd_seed);
    gen_rnd->add_option("--vertices", rp.vertices);
    gen_rnd->add_option("--pawns", rp.pawns);
    gen_rnd->add_option("--kind", rnd_kind)->check(CLI::IsMember({"ovpp", "mvpp", "omvpp"}));
    gen_rnd->add_option("--mechanism", rnd_mech)
        ->check(CLI::IsMember({"optional-grabbing", "always-grabbing", "grab-or-give", "k-grabbing"}));
    gen_rnd->add_option("--k", rnd_k);
    gen_rnd->add_option("--max-degree", rp.max_out_degree);

    std::string suite;
    std::uint64_t check_seed = 1;
    std::optional<std::size_t> check_count;
    auto* check_cmd = app.add_subcommand("check", "Cross-validate solvers against independent oracles");
    check_cmd->add_option("--suite", suite, "suite name or 'all'")->required();
    check_cmd->add_option("--seed", check_seed);
    check_cmd->add_option("--count", check_count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve_args);
        if (*eta_cmd) return cmd_eta(eta_file);
        if (*reduce_cmd) return cmd_reduce(reduce_what, reduce_file, reduce_budget);
        if (*gen_sc) {
            auto inst = gen_setcover({sc_universe, parse_set_list(sc_sets), sc_k});
            std::cout << serialize_game(inst.game, inst.init);
        } else if (*gen_qbf) {
            auto inst = gen_tqbf(parse_qbf(qbf_text));
            std::cout << serialize_game(inst.game, inst.init);
        } else if (*gen_atm) {
            auto atm = parse_atm(read_input(atm_file));
            if (*word_opt) {
                atm.word = parse_atm_word(atm, atm_word);
                atm.validate();
            }
            auto lk = gen_atm_lockkey(atm);
            std::cout << serialize_lockkey(lk.game, lk.init);
        } else if (*gen_rnd) {
            rp.kind = rnd_kind == "ovpp" ? OwnershipKind::OVPP : rnd_kind == "mvpp" ? OwnershipKind::MVPP
                                                                                    : OwnershipKind::OMVPP;
            rp.mechanism = parse_mechanism(rnd_mech, rnd_k);
            auto inst = gen_random_pawngame(rp, rnd_seed);
            std::cout << serialize_game(inst.game, inst.init);
        } else if (*check_cmd) {
            if (suite != "all") default_suite_count(suite);
            return cmd_check(suite, check_seed, check_count);
        }
        return 0;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
