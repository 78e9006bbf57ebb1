#include "dynideal/textio.hpp"

#include "dynideal/errors.hpp"

#include <cctype>
#include <sstream>

namespace dynideal::text {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& t) {
    throw ConfigError("parse " + what + ": '" + t + "'");
}

std::vector<std::string> split_ws(const std::string& t) {
    std::vector<std::string> out;
    std::istringstream is(t);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// Find the closing brace matching the '{' at t[open].
std::size_t match_brace(const std::string& t, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < t.size(); ++i) {
        if (t[i] == '{') ++depth;
        if (t[i] == '}' && --depth == 0) return i;
    }
    bad("braces", t);
}

}  // namespace

std::string print(const Rational& r) { return r.str(); }
std::string print(const QuadExt& q) { return q.str(); }
std::string print(const PLMap& f) { return f.str(); }
std::string print(const IntervalUnionSet& s) { return s.str(); }
std::string print(const BlockSet& s) { return s.str(); }

Rational parse_rational(const std::string& t) { return Rational::parse(t); }
QuadExt parse_quad(const std::string& t) { return QuadExt::parse(t); }

PLMap parse_plmap(const std::string& t) {
    if (t.size() < 4 || t.substr(0, 3) != "pl[" || t.back() != ']') bad("PLMap", t);
    std::string body = t.substr(3, t.size() - 4);
    auto bar = body.find('|');
    if (bar == std::string::npos) bad("PLMap", t);
    std::vector<Rational> breaks;
    for (const auto& tok : split_ws(body.substr(0, bar)))
        breaks.push_back(Rational::parse(tok));
    std::vector<PLMap::Piece> pieces;
    for (const auto& tok : split_ws(body.substr(bar + 1))) {
        auto comma = tok.find(',');
        if (comma == std::string::npos) bad("PLMap piece", tok);
        pieces.push_back(PLMap::Piece{Rational::parse(tok.substr(0, comma)),
                                      Rational::parse(tok.substr(comma + 1))});
    }
    return PLMap(std::move(breaks), std::move(pieces));
}

IntervalUnionSet parse_iuset(const std::string& t) {
    if (t.size() < 2 || t.front() != '{' || t.back() != '}') bad("IntervalUnionSet", t);
    std::string body = t.substr(1, t.size() - 2);
    std::vector<Interval> comps;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < body.size() && body[i] == ' ') ++i; };
    while (skip_ws(), i < body.size()) {
        char c = body[i];
        if (c == '[' || c == '(') {
            auto comma = body.find(',', i);
            auto close = body.find_first_of("])", comma);
            if (comma == std::string::npos || close == std::string::npos)
                bad("Interval", body.substr(i));
            std::string lo = body.substr(i + 1, comma - i - 1);
            std::string hi = body.substr(comma + 1, close - comma - 1);
            Interval iv;
            if (lo != "-inf") iv.lo = Rational::parse(lo);
            if (hi != "+inf") iv.hi = Rational::parse(hi);
            iv.lo_closed = c == '[';
            iv.hi_closed = body[close] == ']';
            comps.push_back(iv);
            i = close + 1;
        } else {
            auto end = body.find(' ', i);
            if (end == std::string::npos) end = body.size();
            comps.push_back(Interval::point(Rational::parse(body.substr(i, end - i))));
            i = end;
        }
    }
    return IntervalUnionSet(std::move(comps));
}

namespace {

// Parse one block body "start->limit pell@k|r=ratio [incl] [pat=bs{...}]".
Block parse_block(bool ascending, const std::string& body) {
    auto arrow = body.find("->");
    if (arrow == std::string::npos) bad("Block", body);
    Rational start = Rational::parse(body.substr(0, arrow));
    // The law marker is whichever of " pell@" / " r=" comes first; later
    // occurrences can belong to a nested pattern.
    auto p1 = body.find(" pell@", arrow);
    auto p2 = body.find(" r=", arrow);
    bool is_pell = p1 != std::string::npos && (p2 == std::string::npos || p1 < p2);
    std::size_t law = is_pell ? p1 : p2;
    if (law == std::string::npos) bad("Block law", body);
    QuadExt limit = QuadExt::parse(body.substr(arrow + 2, law - arrow - 2));

    std::string rest = body.substr(law + (is_pell ? 6 : 3));
    // rest = "<number-or-ratio>[ incl][ pat=...]"
    auto sp = rest.find(' ');
    std::string lawval = rest.substr(0, sp);
    bool incl = false;
    BlockSetPtr pattern;
    if (sp != std::string::npos) {
        std::string tail = rest.substr(sp + 1);
        if (tail.rfind("incl", 0) == 0) {
            incl = true;
            tail = tail.size() > 4 && tail[4] == ' ' ? tail.substr(5) : "";
        }
        if (tail.rfind("pat=", 0) == 0)
            pattern = std::make_shared<const BlockSet>(parse_blockset(tail.substr(4)));
    }
    if (is_pell) {
        Block b = Block::pell(ascending, limit, static_cast<unsigned>(std::stoul(lawval)),
                              pattern);
        Rational declared = start;
        if (declared != b.start) bad("Block pell start", body);
        return b;
    }
    return Block::geometric(ascending, start, limit.as_rational(),
                            Rational::parse(lawval), incl, pattern);
}

}  // namespace

BlockSet parse_blockset(const std::string& t) {
    if (t.rfind("bs{", 0) != 0) bad("BlockSet", t);
    std::size_t end = match_brace(t, 2);
    std::string body = t.substr(3, end - 3);
    auto open = body.find("pts[");
    auto close = body.find(']', open);
    if (open == std::string::npos || close == std::string::npos) bad("BlockSet pts", t);
    std::vector<Rational> pts;
    for (const auto& tok : split_ws(body.substr(open + 4, close - open - 4)))
        pts.push_back(Rational::parse(tok));
    std::vector<Block> blocks;
    std::size_t i = close + 1;
    while (i < body.size()) {
        if (body[i] == ' ') { ++i; continue; }
        bool asc;
        if (body.compare(i, 4, "asc(") == 0) { asc = true; i += 4; }
        else if (body.compare(i, 5, "desc(") == 0) { asc = false; i += 5; }
        else bad("BlockSet block", body.substr(i));
        // Find the matching ')', skipping nested pattern braces.
        int depth = 1;
        std::size_t j = i;
        for (; j < body.size() && depth > 0; ++j) {
            if (body[j] == '(') ++depth;
            else if (body[j] == ')') --depth;
            else if (body[j] == '{') { j = match_brace(body, j); }
        }
        if (depth != 0) bad("BlockSet block parens", body);
        blocks.push_back(parse_block(asc, body.substr(i, j - 1 - i)));
        i = j;
    }
    return BlockSet(std::move(pts), std::move(blocks));
}

}  // namespace dynideal::text
