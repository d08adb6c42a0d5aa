#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "pawn/game.hpp"

namespace pawn {

// Parses the pawngame text format. Vertex ids follow the natural order of vertex names.
GameInstance parse_game(std::istream& in);
GameInstance parse_game(std::string_view text);
GameInstance load_game(const std::string& path);

// Canonical text: vertices in id order, edges sorted by (source, target).
std::string serialize_game(const PawnGame& g, const Configuration& c);

std::string format_pawn_set(const PawnSet& p);
std::string describe(const PawnGame& g, const Configuration& c);

} // namespace pawn
