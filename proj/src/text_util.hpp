#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pawn/game.hpp"

namespace pawn::detail {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

// Splits a stream into whitespace-separated tokens per line, dropping comments and blank lines.
inline std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> lines;
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{no, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

inline unsigned long long parse_uint(std::string_view s, std::size_t line, std::string_view what)
{
    unsigned long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw ParseError(line, "expected a natural number for " + std::string(what) + ", got '" + std::string(s) + "'");
    return v;
}

inline std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::vector<unsigned long long> parse_uint_list(std::string_view s, std::size_t line, std::string_view what)
{
    std::vector<unsigned long long> out;
    for (const auto& part : split(s, ',')) out.push_back(parse_uint(part, line, what));
    return out;
}

// Value of a `key=value` token, or nullopt if the token has another key.
inline std::optional<std::string_view> key_value(std::string_view tok, std::string_view key)
{
    if (tok.size() > key.size() && tok.substr(0, key.size()) == key && tok[key.size()] == '=')
        return tok.substr(key.size() + 1);
    return std::nullopt;
}

template <typename Container>
std::string join(const Container& items, char sep = ',')
{
    std::string out;
    bool first = true;
    for (const auto& x : items) {
        if (!first) out += sep;
        first = false;
        if constexpr (std::is_convertible_v<decltype(x), std::string_view>)
            out += x;
        else
            out += std::to_string(x);
    }
    return out;
}

} // namespace pawn::detail
