#include "pawn/generators.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "text_util.hpp"

namespace pawn {

// ---------------------------------------------------------------- ATM

void AtmSpec::validate() const
{
    if (states.empty()) throw ValidationError("machine has no states");
    if (owner.size() != states.size()) throw ValidationError("state owner table mismatch");
    if (alphabet.empty()) throw ValidationError("empty alphabet");
    if (accept >= states.size() || reject >= states.size()) throw ValidationError("halting state out of range");
    if (accept == reject) throw ValidationError("accepting and rejecting state coincide");
    if (cells == 0) throw ValidationError("tape needs at least one cell");
    if (word.size() > cells) throw ValidationError("input word longer than the tape");
    for (auto a : word) {
        if (a >= alphabet.size()) throw ValidationError("input letter out of range");
    }
    for (const auto& t : transitions) {
        if (t.state >= states.size() || t.next >= states.size()) throw ValidationError("transition state out of range");
        if (t.read >= alphabet.size() || t.write >= alphabet.size())
            throw ValidationError("transition letter out of range");
        if (t.move != -1 && t.move != 1) throw ValidationError("transition move must be L or R");
        if (t.state == accept || t.state == reject) throw ValidationError("halting state has a transition");
    }
}

AtmSpec parse_atm(std::istream& in)
{
    auto lines = detail::tokenize(in);
    if (lines.empty() || lines[0].tokens != std::vector<std::string>{"atm"}) throw ParseError(1, "expected 'atm'");
    AtmSpec atm;
    std::map<std::string, std::uint32_t> sid, aid;
    std::optional<std::string> acc, rej;
    std::vector<const detail::Line*> trans;
    std::vector<std::string> word;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const auto& t = l.tokens;
        if (t[0] == "states") {
            for (std::size_t j = 1; j < t.size(); ++j) {
                auto colon = t[j].rfind(':');
                if (colon == std::string::npos) throw ParseError(l.number, "state needs :E or :A");
                auto name = t[j].substr(0, colon), tag = t[j].substr(colon + 1);
                if (tag != "E" && tag != "A") throw ParseError(l.number, "state tag must be E or A");
                if (!sid.emplace(name, static_cast<std::uint32_t>(atm.states.size())).second)
                    throw ParseError(l.number, "duplicate state " + name);
                atm.states.push_back(name);
                atm.owner.push_back(tag == "E" ? Player::One : Player::Two);
            }
        } else if (t[0] == "alphabet") {
            for (std::size_t j = 1; j < t.size(); ++j) {
                if (!aid.emplace(t[j], static_cast<std::uint32_t>(atm.alphabet.size())).second)
                    throw ParseError(l.number, "duplicate letter " + t[j]);
                atm.alphabet.push_back(t[j]);
            }
        } else if (t[0] == "accept" && t.size() == 2) {
            acc = t[1];
        } else if (t[0] == "reject" && t.size() == 2) {
            rej = t[1];
        } else if (t[0] == "cells" && t.size() == 2) {
            atm.cells = static_cast<std::uint32_t>(detail::parse_uint(t[1], l.number, "cells"));
        } else if (t[0] == "trans") {
            if (t.size() != 7 || t[3] != "->") throw ParseError(l.number, "expected 'trans q a -> q2 b L|R'");
            trans.push_back(&l);
        } else if (t[0] == "word") {
            word.assign(t.begin() + 1, t.end());
        } else {
            throw ParseError(l.number, "unknown keyword '" + t[0] + "'");
        }
    }
    auto state = [&](const std::string& s, std::size_t line) {
        auto it = sid.find(s);
        if (it == sid.end()) throw ParseError(line, "unknown state '" + s + "'");
        return it->second;
    };
    auto letter = [&](const std::string& s, std::size_t line) {
        auto it = aid.find(s);
        if (it == aid.end()) throw ParseError(line, "unknown letter '" + s + "'");
        return it->second;
    };
    if (!acc || !rej) throw ParseError(lines.back().number, "missing accept or reject line");
    atm.accept = state(*acc, lines.back().number);
    atm.reject = state(*rej, lines.back().number);
    for (const auto* l : trans) {
        const auto& t = l->tokens;
        if (t[6] != "L" && t[6] != "R") throw ParseError(l->number, "move must be L or R");
        atm.transitions.push_back({state(t[1], l->number), letter(t[2], l->number), state(t[4], l->number),
                                   letter(t[5], l->number), t[6] == "L" ? -1 : 1});
    }
    for (const auto& w : word) atm.word.push_back(letter(w, lines.back().number));
    atm.validate();
    return atm;
}

AtmSpec parse_atm(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_atm(in);
}

std::string serialize_atm(const AtmSpec& atm)
{
    std::ostringstream out;
    out << "atm\nstates";
    for (std::size_t q = 0; q < atm.states.size(); ++q)
        out << ' ' << atm.states[q] << ':' << (atm.owner[q] == Player::One ? 'E' : 'A');
    out << "\nalphabet";
    for (const auto& a : atm.alphabet) out << ' ' << a;
    out << "\naccept " << atm.states[atm.accept] << "\nreject " << atm.states[atm.reject] << "\ncells "
        << atm.cells << '\n';
    for (const auto& t : atm.transitions) {
        out << "trans " << atm.states[t.state] << ' ' << atm.alphabet[t.read] << " -> " << atm.states[t.next] << ' '
            << atm.alphabet[t.write] << ' ' << (t.move < 0 ? 'L' : 'R') << '\n';
    }
    if (!atm.word.empty()) {
        out << "word";
        for (auto a : atm.word) out << ' ' << atm.alphabet[a];
        out << '\n';
    }
    return out.str();
}

std::vector<std::uint32_t> parse_atm_word(const AtmSpec& atm, std::string_view word)
{
    std::vector<std::string> parts;
    if (word.find(' ') != std::string_view::npos || word.find(',') != std::string_view::npos) {
        std::string w(word);
        std::replace(w.begin(), w.end(), ',', ' ');
        std::istringstream in(w);
        std::string tok;
        while (in >> tok) parts.push_back(tok);
    } else {
        for (char ch : word) parts.emplace_back(1, ch);
    }
    std::vector<std::uint32_t> out;
    for (const auto& p : parts) {
        auto it = std::find(atm.alphabet.begin(), atm.alphabet.end(), p);
        if (it == atm.alphabet.end()) throw ValidationError("letter '" + p + "' not in the alphabet");
        out.push_back(static_cast<std::uint32_t>(it - atm.alphabet.begin()));
    }
    return out;
}

LockId atm_lock(const AtmSpec& atm, std::uint32_t cell, std::uint32_t letter)
{
    return static_cast<LockId>((cell - 1) * atm.alphabet.size() + letter);
}

namespace {

std::vector<std::uint32_t> padded_tape(const AtmSpec& atm)
{
    auto tape = atm.word;
    tape.resize(atm.cells, 0);
    return tape;
}

bool halting(const AtmSpec& atm, std::uint32_t q) { return q == atm.accept || q == atm.reject; }

} // namespace

LockKeyInstance gen_atm_lockkey(const AtmSpec& atm)
{
    atm.validate();
    const std::uint32_t m = atm.cells;
    const auto gamma = static_cast<std::uint32_t>(atm.alphabet.size());
    LockKeyInstance inst;
    auto& lk = inst.game;
    lk.name = "atm";
    lk.lock_count = static_cast<std::size_t>(m) * gamma;

    auto main_id = [&](std::uint32_t q, std::uint32_t cell, std::uint32_t a) {
        return static_cast<VertexId>((q * m + (cell - 1)) * gamma + a);
    };
    for (std::uint32_t q = 0; q < atm.states.size(); ++q) {
        for (std::uint32_t cell = 1; cell <= m; ++cell) {
            for (std::uint32_t a = 0; a < gamma; ++a) {
                lk.add_vertex(atm.states[q] + "@" + std::to_string(cell) + ":" + atm.alphabet[a], atm.owner[q],
                              q == atm.accept);
            }
        }
    }
    for (std::uint32_t q = 0; q < atm.states.size(); ++q) {
        for (std::uint32_t cell = 1; cell <= m; ++cell) {
            for (std::uint32_t a = 0; a < gamma; ++a) {
                VertexId v = main_id(q, cell, a);
                std::size_t out = 0;
                for (std::size_t ti = 0; ti < atm.transitions.size(); ++ti) {
                    const auto& t = atm.transitions[ti];
                    if (t.state != q || t.read != a) continue;
                    long target_cell = static_cast<long>(cell) + t.move;
                    if (target_cell < 1 || target_cell > static_cast<long>(m)) continue;
                    auto next_cell = static_cast<std::uint32_t>(target_cell);
                    VertexId mid = lk.add_vertex(lk.vertex_names[v] + ">t" + std::to_string(ti), atm.owner[q]);
                    std::vector<LockId> keys;
                    if (t.write != a) keys = {atm_lock(atm, cell, a), atm_lock(atm, cell, t.write)};
                    lk.add_edge(v, mid, {}, keys);
                    for (std::uint32_t b = 0; b < gamma; ++b)
                        lk.add_edge(mid, main_id(t.next, next_cell, b), {atm_lock(atm, next_cell, b)}, {});
                    ++out;
                }
                if (out == 0) lk.add_edge(v, v);
            }
        }
    }
    lk.validate();
    auto tape = padded_tape(atm);
    std::uint64_t closed = 0;
    for (std::uint32_t cell = 1; cell <= m; ++cell) {
        for (std::uint32_t a = 0; a < gamma; ++a) {
            if (a != tape[cell - 1]) closed |= std::uint64_t{1} << atm_lock(atm, cell, a);
        }
    }
    inst.init = {main_id(0, 1, tape[0]), closed};
    return inst;
}

bool atm_accepts_bruteforce(const AtmSpec& atm, std::uint64_t budget)
{
    atm.validate();
    const std::uint64_t gamma = atm.alphabet.size();
    std::uint64_t tapes = 1;
    for (std::uint32_t i = 0; i < atm.cells; ++i) {
        tapes *= gamma;
        if (tapes > budget) throw BudgetExceeded(tapes, budget);
    }
    const std::uint64_t total = atm.states.size() * atm.cells * tapes;
    if (total > budget) throw BudgetExceeded(total, budget);

    struct Conf {
        std::uint32_t q, head;
        std::vector<std::uint32_t> tape;
    };
    auto encode = [&](const Conf& c) {
        std::uint64_t t = 0;
        for (auto it = c.tape.rbegin(); it != c.tape.rend(); ++it) t = t * gamma + *it;
        return (static_cast<std::uint64_t>(c.q) * atm.cells + c.head) * tapes + t;
    };
    auto decode = [&](std::uint64_t id) {
        Conf c;
        std::uint64_t t = id % tapes;
        id /= tapes;
        c.head = static_cast<std::uint32_t>(id % atm.cells);
        c.q = static_cast<std::uint32_t>(id / atm.cells);
        for (std::uint32_t i = 0; i < atm.cells; ++i) {
            c.tape.push_back(static_cast<std::uint32_t>(t % gamma));
            t /= gamma;
        }
        return c;
    };
    std::vector<std::vector<std::uint64_t>> succ(total);
    for (std::uint64_t id = 0; id < total; ++id) {
        Conf c = decode(id);
        if (halting(atm, c.q)) continue;
        for (const auto& t : atm.transitions) {
            if (t.state != c.q || t.read != c.tape[c.head]) continue;
            long h = static_cast<long>(c.head) + t.move;
            if (h < 0 || h >= static_cast<long>(atm.cells)) continue;
            Conf d = c;
            d.tape[c.head] = t.write;
            d.head = static_cast<std::uint32_t>(h);
            d.q = t.next;
            succ[id].push_back(encode(d));
        }
    }
    // Least fixed point; configurations without successors reject.
    std::vector<char> acc(total, 0);
    for (std::uint64_t id = 0; id < total; ++id) acc[id] = decode(id).q == atm.accept;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::uint64_t id = 0; id < total; ++id) {
            if (acc[id] || succ[id].empty()) continue;
            Conf c = decode(id);
            bool ok;
            if (atm.owner[c.q] == Player::One)
                ok = std::any_of(succ[id].begin(), succ[id].end(), [&](auto s) { return acc[s] != 0; });
            else
                ok = std::all_of(succ[id].begin(), succ[id].end(), [&](auto s) { return acc[s] != 0; });
            if (ok) acc[id] = changed = true;
        }
    }
    return acc[encode(Conf{0, 0, padded_tape(atm)})] != 0;
}

// ---------------------------------------------------------------- SET-COVER

GameInstance gen_setcover(const SetCoverInstance& sc)
{
    const std::uint32_t n = sc.universe;
    const auto m = static_cast<std::uint32_t>(sc.sets.size());
    if (n == 0) throw ValidationError("empty universe");
    for (const auto& s : sc.sets) {
        for (auto x : s) {
            if (x < 1 || x > n) throw ValidationError("set element out of range");
        }
    }
    PawnGameBuilder b;
    PawnId elements_pawn = b.add_pawn();
    for (std::uint32_t j = 0; j < m; ++j) b.add_pawn();
    std::vector<VertexId> elem(n + 1);
    for (std::uint32_t i = 1; i <= n; ++i) elem[i] = b.add_vertex("e" + std::to_string(i), {elements_pawn});
    std::vector<std::vector<VertexId>> member(m, std::vector<VertexId>(n + 1));
    for (std::uint32_t j = 0; j < m; ++j) {
        for (std::uint32_t i = 1; i <= n; ++i)
            member[j][i] = b.add_vertex("S" + std::to_string(j + 1) + "@" + std::to_string(i), {j + 1});
    }
    VertexId s = b.add_vertex("s", {elements_pawn});
    VertexId t = b.add_vertex("t", {elements_pawn}, true);
    b.add_edge(s, s);
    b.add_edge(t, t);
    for (std::uint32_t i = 1; i <= n; ++i) {
        bool covered = false;
        for (std::uint32_t j = 0; j < m; ++j) {
            if (std::find(sc.sets[j].begin(), sc.sets[j].end(), i) != sc.sets[j].end()) {
                b.add_edge(elem[i], member[j][i]);
                covered = true;
            }
        }
        if (!covered) b.add_edge(elem[i], s);
        for (std::uint32_t j = 0; j < m; ++j) {
            b.add_edge(member[j][i], i < n ? elem[i + 1] : t);
            b.add_edge(member[j][i], s);
        }
    }
    auto game = b.build("setcover", Mechanism::k_grabbing(sc.k));
    PawnSet p(game.pawn_count());
    p.insert(elements_pawn);
    return {std::move(game), Configuration{elem[1], std::move(p), sc.k}};
}

bool setcover_bruteforce(const SetCoverInstance& sc)
{
    const auto m = sc.sets.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
        if (static_cast<std::uint32_t>(std::popcount(pick)) > sc.k) continue;
        std::set<std::uint32_t> covered;
        for (std::size_t j = 0; j < m; ++j) {
            if ((pick >> j) & 1U) covered.insert(sc.sets[j].begin(), sc.sets[j].end());
        }
        bool all = true;
        for (std::uint32_t i = 1; i <= sc.universe; ++i) all = all && covered.count(i);
        if (all) return true;
    }
    return false;
}

std::vector<std::vector<std::uint32_t>> parse_set_list(std::string_view text)
{
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& part : detail::split(text, ';')) {
        std::vector<std::uint32_t> s;
        for (auto x : detail::parse_uint_list(part, 1, "set element")) s.push_back(static_cast<std::uint32_t>(x));
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------- TQBF

void QbfSpec::validate() const
{
    if (existential.empty()) throw ValidationError("formula has no variables");
    for (const auto& c : clauses) {
        if (c.empty()) throw ValidationError("empty clause");
        for (int lit : c) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > existential.size())
                throw ValidationError("literal out of range");
        }
    }
}

QbfSpec parse_qbf(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    QbfSpec q;
    std::map<std::string, int> var;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) { throw ParseError(1, what + " at offset " + std::to_string(i)); };
    auto read_var = [&]() {
        if (i >= s.size() || s[i] != 'x') fail("expected a variable");
        std::size_t j = i + 1;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i + 1) fail("expected a variable index");
        std::string name = s.substr(i, j - i);
        i = j;
        return name;
    };
    while (i < s.size() && (s[i] == 'E' || s[i] == 'A')) {
        bool ex = s[i] == 'E';
        ++i;
        auto name = read_var();
        if (i >= s.size() || s[i] != '.') fail("expected '.' after quantified variable");
        ++i;
        if (!var.emplace(name, static_cast<int>(q.existential.size()) + 1).second) fail("variable quantified twice");
        q.existential.push_back(ex);
    }
    while (i < s.size()) {
        if (s[i] != '(') fail("expected '('");
        ++i;
        std::vector<int> clause;
        while (true) {
            bool neg = false;
            if (i < s.size() && (s[i] == '~' || s[i] == '!' || s[i] == '-')) {
                neg = true;
                ++i;
            }
            auto name = read_var();
            auto it = var.find(name);
            if (it == var.end()) fail("unquantified variable " + name);
            clause.push_back(neg ? -it->second : it->second);
            if (i < s.size() && s[i] == '|') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            fail("expected '|' or ')'");
        }
        q.clauses.push_back(std::move(clause));
        if (i < s.size()) {
            if (s[i] != '&') fail("expected '&'");
            ++i;
        }
    }
    q.validate();
    return q;
}

std::string format_qbf(const QbfSpec& q)
{
    std::string out;
    for (std::size_t v = 0; v < q.existential.size(); ++v)
        out += (q.existential[v] ? "E" : "A") + std::string("x") + std::to_string(v + 1) + ".";
    for (std::size_t c = 0; c < q.clauses.size(); ++c) {
        if (c) out += "&";
        out += "(";
        for (std::size_t j = 0; j < q.clauses[c].size(); ++j) {
            int lit = q.clauses[c][j];
            if (j) out += "|";
            out += (lit < 0 ? "~x" : "x") + std::to_string(std::abs(lit));
        }
        out += ")";
    }
    return out;
}

namespace {

bool qbf_eval(const QbfSpec& q, std::size_t var, std::vector<bool>& value)
{
    if (var == q.existential.size()) {
        return std::all_of(q.clauses.begin(), q.clauses.end(), [&](const std::vector<int>& c) {
            return std::any_of(c.begin(), c.end(), [&](int lit) { return value[std::abs(lit) - 1] == (lit > 0); });
        });
    }
    bool results[2];
    for (int b = 0; b < 2; ++b) {
        value[var] = b != 0;
        results[b] = qbf_eval(q, var + 1, value);
    }
    return q.existential[var] ? (results[0] || results[1]) : (results[0] && results[1]);
}

} // namespace

bool qbf_bruteforce(const QbfSpec& q)
{
    q.validate();
    std::vector<bool> value(q.existential.size());
    return qbf_eval(q, 0, value);
}

GameInstance gen_tqbf(const QbfSpec& q)
{
    q.validate();
    const auto n = static_cast<std::uint32_t>(q.existential.size());
    const auto m = static_cast<std::uint32_t>(q.clauses.size());
    PawnGameBuilder b;
    PawnId chooser1 = b.add_pawn(), chooser2 = b.add_pawn();
    std::vector<PawnId> pos(n + 1), neg(n + 1);
    for (std::uint32_t i = 1; i <= n; ++i) {
        pos[i] = b.add_pawn();
        neg[i] = b.add_pawn();
    }
    std::vector<VertexId> x(n + 1), lit_pos(n + 1), lit_neg(n + 1), clause(m + 1);
    for (std::uint32_t i = 1; i <= n; ++i) {
        auto idx = std::to_string(i);
        x[i] = b.add_vertex("x" + idx, {q.existential[i - 1] ? chooser1 : chooser2});
        lit_pos[i] = b.add_vertex("p" + idx, {pos[i]});
        lit_neg[i] = b.add_vertex("n" + idx, {neg[i]});
    }
    for (std::uint32_t j = 1; j <= m; ++j) {
        std::vector<PawnId> owners;
        for (int lit : q.clauses[j - 1]) owners.push_back(lit > 0 ? pos[lit] : neg[-lit]);
        clause[j] = b.add_vertex("C" + std::to_string(j), owners);
    }
    VertexId s = b.add_vertex("s", {chooser2});
    VertexId t = b.add_vertex("t", {chooser2}, true);
    b.add_edge(s, s);
    b.add_edge(t, t);
    const VertexId after_literals = m > 0 ? clause[1] : t;
    for (std::uint32_t i = 1; i <= n; ++i) {
        b.add_edge(x[i], lit_pos[i]);
        b.add_edge(x[i], lit_neg[i]);
        VertexId next = i < n ? x[i + 1] : after_literals;
        for (VertexId l : {lit_pos[i], lit_neg[i]}) {
            b.add_edge(l, next);
            b.add_edge(l, s);
        }
    }
    for (std::uint32_t j = 1; j <= m; ++j) {
        b.add_edge(clause[j], j < m ? clause[j + 1] : t);
        b.add_edge(clause[j], s);
    }
    auto game = b.build("tqbf", Mechanism::k_grabbing(n));
    PawnSet p(game.pawn_count());
    p.insert(chooser1);
    return {std::move(game), Configuration{x[1], std::move(p), n}};
}

// ---------------------------------------------------------------- random instances

GameInstance gen_random_pawngame(const RandomGameParams& params, std::uint64_t seed)
{
    const std::size_t n = params.vertices, d = params.pawns;
    if (n == 0) throw ValidationError("at least one vertex is required");
    switch (params.kind) {
    case OwnershipKind::OVPP:
        if (d != n) throw ValidationError("OVPP requires as many pawns as vertices");
        break;
    case OwnershipKind::MVPP:
        if (d == 0 || d >= n) throw ValidationError("MVPP requires 1 <= pawns < vertices");
        break;
    case OwnershipKind::OMVPP:
        if (d < 2) throw ValidationError("OMVPP requires at least two pawns");
        break;
    }
    Rng rng(seed);
    GameParts parts;
    parts.name = "random" + std::to_string(seed);
    parts.pawn_count = d;
    parts.mechanism = params.mechanism;
    parts.owners.resize(n);
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    rng.shuffle(order);
    if (params.kind == OwnershipKind::OMVPP) {
        for (VertexId v = 0; v < n; ++v) {
            std::vector<PawnId> pool(d);
            for (PawnId p = 0; p < d; ++p) pool[p] = p;
            rng.shuffle(pool);
            auto count = rng.range(1, std::min<std::size_t>(d, 3));
            parts.owners[v].assign(pool.begin(), pool.begin() + static_cast<long>(count));
        }
        auto& shared = parts.owners[order[0]];
        if (shared.size() < 2) {
            PawnId other = static_cast<PawnId>((shared[0] + 1 + rng.below(d - 1)) % d);
            shared.push_back(other);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            parts.owners[order[i]] = {static_cast<PawnId>(i < d ? i : rng.below(d))};
    }
    const std::size_t max_deg = std::max<std::size_t>(1, std::min(params.max_out_degree, n));
    for (VertexId v = 0; v < n; ++v) {
        std::vector<VertexId> pool(n);
        for (VertexId w = 0; w < n; ++w) pool[w] = w;
        rng.shuffle(pool);
        auto deg = rng.range(1, max_deg);
        for (std::size_t i = 0; i < deg; ++i) parts.edges.emplace_back(v, pool[i]);
    }
    auto target_count = rng.range(1, std::max<std::size_t>(1, n / 3));
    std::vector<VertexId> pool(n);
    for (VertexId w = 0; w < n; ++w) pool[w] = w;
    rng.shuffle(pool);
    parts.targets.assign(pool.begin(), pool.begin() + static_cast<long>(target_count));

    PawnGame game(std::move(parts));
    PawnSet p(d);
    for (PawnId j = 0; j < d; ++j) {
        if (rng.chance(1, 2)) p.insert(j);
    }
    auto c = make_configuration(game, static_cast<VertexId>(rng.below(n)), p);
    return {std::move(game), std::move(c)};
}

TurnBasedGame random_turnbased(Rng& rng, std::size_t vertices, std::size_t max_out_degree, bool dead_ends)
{
    TurnBasedGame tb;
    for (std::size_t v = 0; v < vertices; ++v) tb.add_vertex(rng.chance(1, 2) ? Player::One : Player::Two, rng.chance(1, 6));
    for (VertexId v = 0; v < vertices; ++v) {
        std::size_t lo = dead_ends ? 0 : 1;
        auto deg = rng.range(lo, std::max<std::size_t>(lo, std::min(max_out_degree, vertices)));
        for (std::size_t i = 0; i < deg; ++i) tb.add_edge(v, static_cast<VertexId>(rng.below(vertices)));
    }
    tb.normalize();
    return tb;
}

LockKeyInstance random_lockkey(Rng& rng, std::size_t vertices, std::size_t locks, std::size_t max_locks_per_edge)
{
    LockKeyInstance inst;
    auto& lk = inst.game;
    lk.lock_count = locks;
    for (std::size_t v = 0; v < vertices; ++v)
        lk.add_vertex("v" + std::to_string(v), rng.chance(1, 2) ? Player::One : Player::Two, rng.chance(1, 5));
    for (VertexId v = 0; v < vertices; ++v) {
        auto deg = rng.range(0, 3);
        for (std::size_t i = 0; i < deg; ++i) {
            std::vector<LockId> ls, ks;
            for (LockId j = 0; j < locks; ++j) {
                if (ls.size() < max_locks_per_edge && rng.chance(1, 3)) ls.push_back(j);
                if (rng.chance(1, 3)) ks.push_back(j);
            }
            lk.add_edge(v, static_cast<VertexId>(rng.below(vertices)), ls, ks);
        }
    }
    lk.validate();
    inst.init.vertex = static_cast<VertexId>(rng.below(vertices));
    inst.init.closed = locks == 0 ? 0 : rng.below(std::uint64_t{1} << locks);
    return inst;
}

SetCoverInstance random_setcover(Rng& rng, std::uint32_t max_universe, std::uint32_t max_sets)
{
    SetCoverInstance sc;
    sc.universe = static_cast<std::uint32_t>(rng.range(1, max_universe));
    auto m = rng.range(1, max_sets);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::uint32_t> s;
        for (std::uint32_t i = 1; i <= sc.universe; ++i) {
            if (rng.chance(2, 5)) s.push_back(i);
        }
        if (s.empty()) s.push_back(static_cast<std::uint32_t>(rng.range(1, sc.universe)));
        sc.sets.push_back(std::move(s));
    }
    sc.k = static_cast<std::uint32_t>(rng.range(1, m));
    return sc;
}

QbfSpec random_qbf(Rng& rng, std::size_t max_vars, std::size_t max_clauses)
{
    QbfSpec q;
    auto n = rng.range(1, max_vars);
    for (std::size_t i = 0; i < n; ++i) q.existential.push_back(rng.chance(1, 2));
    auto m = rng.range(1, max_clauses);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<int> c;
        auto len = rng.range(1, std::min<std::size_t>(3, n));
        for (std::size_t i = 0; i < len; ++i) {
            int var = static_cast<int>(rng.range(1, n));
            c.push_back(rng.chance(1, 2) ? var : -var);
        }
        q.clauses.push_back(std::move(c));
    }
    return q;
}

AtmSpec random_atm(Rng& rng, std::size_t max_working_states, std::uint32_t cells)
{
    AtmSpec atm;
    auto working = rng.range(1, max_working_states);
    for (std::size_t q = 0; q < working; ++q) {
        atm.states.push_back("q" + std::to_string(q));
        atm.owner.push_back(rng.chance(1, 2) ? Player::One : Player::Two);
    }
    atm.accept = static_cast<std::uint32_t>(atm.states.size());
    atm.states.push_back("qA");
    atm.owner.push_back(Player::One);
    atm.reject = static_cast<std::uint32_t>(atm.states.size());
    atm.states.push_back("qR");
    atm.owner.push_back(Player::One);
    atm.alphabet = {"a", "b"};
    atm.cells = cells;
    for (std::uint32_t i = 0; i < cells; ++i) atm.word.push_back(static_cast<std::uint32_t>(rng.below(2)));
    for (std::uint32_t q = 0; q < working; ++q) {
        for (std::uint32_t a = 0; a < 2; ++a) {
            auto count = rng.range(0, 2);
            for (std::size_t i = 0; i < count; ++i) {
                atm.transitions.push_back({q, a, static_cast<std::uint32_t>(rng.below(atm.states.size())),
                                           static_cast<std::uint32_t>(rng.below(2)), rng.chance(1, 2) ? -1 : 1});
            }
        }
    }
    atm.validate();
    return atm;
}

} // namespace pawn
