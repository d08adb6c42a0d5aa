#include "pawn/dispatch.hpp"

#include "pawn/game_io.hpp"
#include "pawn/grab_or_give.hpp"
#include "pawn/kgrab_dfs.hpp"
#include "pawn/kgrab_ovpp.hpp"
#include "pawn/ovpp_optional.hpp"

namespace pawn {

std::optional<std::string> specialized_solver(const PawnGame& g)
{
    const auto kind = g.ownership_kind();
    switch (g.mechanism().kind) {
    case MechanismKind::OptionalGrabbing:
        if (kind == OwnershipKind::OVPP) return "ovpp-optional";
        break;
    case MechanismKind::AlwaysGrabOrGive:
        if (kind != OwnershipKind::OMVPP) return "grab-or-give";
        break;
    case MechanismKind::KGrabbing: return kind == OwnershipKind::OVPP ? "eta" : "kgrab-dfs";
    case MechanismKind::AlwaysGrabbing: break;
    }
    return std::nullopt;
}

namespace {

std::vector<std::string> explicit_witness(const ExplicitResult& res)
{
    std::vector<std::string> lines;
    for (auto [from, to] : res.witness())
        lines.push_back(res.expanded.describe(from) + " -> " + res.expanded.describe(to));
    return lines;
}

} // namespace

SolveReport solve(const PawnGame& g, const Configuration& c, const SolveOptions& opt)
{
    validate_configuration(g, c);
    SolveReport rep;
    std::optional<std::string> special;
    if (opt.algo != Algo::Explicit) {
        special = specialized_solver(g);
        if (!special && opt.algo == Algo::Specialized) {
            throw PreconditionError("no specialized solver for " + std::string(to_string(g.ownership_kind())) + " " +
                                    to_string(g.mechanism()) + " games; this class is EXPTIME-complete, use --algo explicit");
        }
        rep.fallback = !special;
    }
    const ExpandOptions eo{opt.budget};
    if (!special) {
        auto res = solve_explicit(g, c, eo);
        rep.winner = res.winner;
        rep.algo = "explicit";
        rep.states = res.expanded.tb.size();
        if (opt.witness) rep.witness = explicit_witness(res);
        return rep;
    }
    rep.algo = *special;
    if (*special == "kgrab-dfs") {
        auto res = solve_kgrab_dfs(g, c);
        rep.winner = res.winner;
        rep.states = res.nodes;
        for (const auto& s : res.witness) rep.witness.push_back(format_step(g, s));
        if (!opt.witness) rep.witness.clear();
        return rep;
    }
    if (*special == "ovpp-optional") {
        rep.winner = solve_ovpp_optional(g, c).winner;
        rep.states = g.vertex_count();
    } else if (*special == "grab-or-give") {
        rep.winner = solve_grab_or_give(g, c);
        rep.states = 4 * g.vertex_count();
    } else {
        rep.winner = solve_kgrab_ovpp(g, c);
        rep.states = g.vertex_count();
    }
    // These solvers decide without a strategy; the witness comes from the expansion.
    if (opt.witness) rep.witness = explicit_witness(solve_explicit(g, c, eo));
    return rep;
}

} // namespace pawn
