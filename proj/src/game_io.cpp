#include "pawn/game_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "text_util.hpp"

namespace pawn {

using detail::key_value;
using detail::parse_uint;

namespace {

struct RawVertex {
    std::string name;
    std::optional<std::vector<PawnId>> owners;
    bool target = false;
    std::size_t line = 0;
};

Mechanism parse_mechanism(const detail::Line& l)
{
    const auto& t = l.tokens;
    if (t.size() < 2) throw ParseError(l.number, "mechanism line needs a kind");
    if (t[1] == "optional-grabbing" && t.size() == 2) return Mechanism::optional_grabbing();
    if (t[1] == "always-grabbing" && t.size() == 2) return Mechanism::always_grabbing();
    if (t[1] == "grab-or-give" && t.size() == 2) return Mechanism::grab_or_give();
    if (t[1] == "k-grabbing" && t.size() == 3)
        return Mechanism::k_grabbing(static_cast<unsigned>(parse_uint(t[2], l.number, "k")));
    throw ParseError(l.number, "unknown mechanism '" + t[1] + "'");
}

} // namespace

GameInstance parse_game(std::istream& in)
{
    auto lines = detail::tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty input");
    const auto& header = lines.front();
    if (header.tokens[0] != "pawngame" || header.tokens.size() != 2)
        throw ParseError(header.number, "expected 'pawngame <name>'");

    std::optional<Mechanism> mechanism;
    std::optional<std::size_t> pawns;
    std::vector<RawVertex> vertices;
    std::vector<std::tuple<std::string, std::string, std::size_t>> edges;
    const detail::Line* init = nullptr;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const auto& t = l.tokens;
        const auto& kw = t[0];
        if (kw == "mechanism") {
            if (mechanism) throw ParseError(l.number, "duplicate mechanism line");
            mechanism = parse_mechanism(l);
        } else if (kw == "pawns") {
            if (t.size() != 2) throw ParseError(l.number, "expected 'pawns <d>'");
            if (pawns) throw ParseError(l.number, "duplicate pawns line");
            pawns = parse_uint(t[1], l.number, "pawn count");
        } else if (kw == "vertex") {
            if (t.size() < 2) throw ParseError(l.number, "vertex line needs a name");
            RawVertex rv{t[1], std::nullopt, false, l.number};
            for (std::size_t j = 2; j < t.size(); ++j) {
                if (auto val = key_value(t[j], "owners")) {
                    std::vector<PawnId> os;
                    for (auto x : detail::parse_uint_list(*val, l.number, "owner"))
                        os.push_back(static_cast<PawnId>(x));
                    rv.owners = std::move(os);
                } else if (t[j] == "target") {
                    rv.target = true;
                } else {
                    throw ParseError(l.number, "unexpected token '" + t[j] + "'");
                }
            }
            vertices.push_back(std::move(rv));
        } else if (kw == "edge") {
            if (t.size() != 3) throw ParseError(l.number, "expected 'edge <vname> <vname>'");
            edges.emplace_back(t[1], t[2], l.number);
        } else if (kw == "init") {
            if (init) throw ParseError(l.number, "duplicate init line");
            init = &l;
        } else {
            throw ParseError(l.number, "unknown keyword '" + kw + "'");
        }
    }
    if (!mechanism) throw ParseError(lines.back().number, "missing mechanism line");
    if (!pawns) throw ParseError(lines.back().number, "missing pawns line");
    if (!init) throw ParseError(lines.back().number, "missing init line");

    std::sort(vertices.begin(), vertices.end(),
              [](const RawVertex& a, const RawVertex& b) { return natural_less(a.name, b.name); });
    std::map<std::string, VertexId> ids;
    GameParts parts;
    parts.name = header.tokens[1];
    parts.pawn_count = *pawns;
    parts.mechanism = *mechanism;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto& rv = vertices[v];
        if (!ids.emplace(rv.name, static_cast<VertexId>(v)).second)
            throw ParseError(rv.line, "duplicate vertex " + rv.name);
        if (!rv.owners || rv.owners->empty()) throw ValidationError("vertex has no owner: " + rv.name);
        parts.vertex_names.push_back(rv.name);
        parts.owners.push_back(*rv.owners);
        if (rv.target) parts.targets.push_back(static_cast<VertexId>(v));
    }
    auto lookup = [&](const std::string& name, std::size_t line) {
        auto it = ids.find(name);
        if (it == ids.end()) throw ParseError(line, "unknown vertex '" + name + "'");
        return it->second;
    };
    for (const auto& [a, b, line] : edges) parts.edges.emplace_back(lookup(a, line), lookup(b, line));

    PawnGame game(std::move(parts));

    std::optional<VertexId> v0;
    std::optional<PawnSet> p1;
    std::optional<unsigned> r;
    for (std::size_t j = 1; j < init->tokens.size(); ++j) {
        const auto& tok = init->tokens[j];
        if (auto val = key_value(tok, "vertex")) {
            v0 = lookup(std::string(*val), init->number);
        } else if (auto val = key_value(tok, "p1pawns")) {
            PawnSet s(game.pawn_count());
            for (auto x : detail::parse_uint_list(*val, init->number, "pawn")) {
                if (x >= game.pawn_count()) throw ValidationError("pawn id out of range in init");
                s.insert(static_cast<PawnId>(x));
            }
            p1 = std::move(s);
        } else if (tok == "p1pawns=") {
            p1 = PawnSet(game.pawn_count());
        } else if (auto val = key_value(tok, "grabs-left")) {
            r = static_cast<unsigned>(parse_uint(*val, init->number, "grabs-left"));
        } else {
            throw ParseError(init->number, "unexpected token '" + tok + "'");
        }
    }
    if (!v0) throw ParseError(init->number, "init lacks vertex=");
    if (!p1) throw ParseError(init->number, "init lacks p1pawns=");
    Configuration c{*v0, *p1, std::nullopt};
    if (game.mechanism().is_k_grabbing()) {
        c.grabs_left = r.value_or(game.mechanism().k);
    } else if (r) {
        throw ValidationError("grabs-left given for a mechanism other than k-grabbing");
    }
    validate_configuration(game, c);
    return {std::move(game), std::move(c)};
}

GameInstance parse_game(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_game(in);
}

GameInstance load_game(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_game(in);
}

std::string format_pawn_set(const PawnSet& p) { return detail::join(p.elements()); }

std::string serialize_game(const PawnGame& g, const Configuration& c)
{
    std::ostringstream out;
    out << "pawngame " << g.name() << '\n';
    out << "mechanism " << to_string(g.mechanism()) << '\n';
    out << "pawns " << g.pawn_count() << '\n';
    // Natural name order, so the text does not depend on how ids were assigned.
    std::vector<VertexId> order(g.vertex_count());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return natural_less(g.vertex_name(a), g.vertex_name(b)); });
    for (VertexId v : order) {
        out << "vertex " << g.vertex_name(v) << " owners=" << detail::join(g.owners(v));
        if (g.is_target(v)) out << " target";
        out << '\n';
    }
    std::vector<std::size_t> rank(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    for (VertexId v : order) {
        auto succ = g.successors(v);
        std::sort(succ.begin(), succ.end(), [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });
        for (VertexId w : succ) out << "edge " << g.vertex_name(v) << ' ' << g.vertex_name(w) << '\n';
    }
    out << "init vertex=" << g.vertex_name(c.vertex) << " p1pawns=" << format_pawn_set(c.p1);
    if (c.grabs_left) out << " grabs-left=" << *c.grabs_left;
    out << '\n';
    return out.str();
}

std::string describe(const PawnGame& g, const Configuration& c)
{
    std::string s = "<" + g.vertex_name(c.vertex) + ", {" + format_pawn_set(c.p1) + "}";
    if (c.grabs_left) s += ", " + std::to_string(*c.grabs_left);
    return s + ">";
}

} // namespace pawn
