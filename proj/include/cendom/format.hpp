#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "cendom/graph.hpp"

namespace cendom {

enum class ParseErrorKind {
    EmptyInput,
    MalformedHeader,   // bad first byte, including the n > 62 long forms
    OutOfRangeChar,
    Truncated,
    TrailingData,
    NonzeroPadding,
    BadToken,          // edge list: non-integer or malformed line
    VertexRange,       // edge list: index outside [0, n)
    SelfLoop,
    DuplicateEdge,
};

/// Parse failure carrying the byte offset (graph6) or line number (edge list)
/// where the problem was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t offset, const std::string& msg)
        : std::runtime_error(msg), kind_(kind), offset_(offset) {}

    ParseErrorKind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

private:
    ParseErrorKind kind_;
    std::size_t offset_;
};

namespace detail {

inline std::string_view strip_graph6_decorations(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                             text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    return text;
}

}  // namespace detail

/// Decode one graph6 line (short form, n ≤ 62). An optional ">>graph6<<"
/// prefix is tolerated and skipped.
inline Graph parse_graph6(std::string_view text) {
    std::string_view body = detail::strip_graph6_decorations(text);
    if (body.empty())
        throw ParseError(ParseErrorKind::EmptyInput, 0, "graph6: empty input");

    auto value_at = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126)
            throw ParseError(ParseErrorKind::OutOfRangeChar, i,
                             "graph6: character out of range 63..126 at byte " + std::to_string(i));
        return c - 63;
    };

    unsigned char head = static_cast<unsigned char>(body[0]);
    if (head == 126)
        throw ParseError(ParseErrorKind::MalformedHeader, 0,
                         "graph6: long form (n > 62) is not supported");
    if (head < 63)
        throw ParseError(ParseErrorKind::MalformedHeader, 0,
                         "graph6: invalid header byte at offset 0");
    int n = head - 63;

    Graph g(n);
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nchars = (nbits + 5) / 6;
    if (body.size() < 1 + nchars)
        throw ParseError(ParseErrorKind::Truncated, body.size(),
                         "graph6: adjacency bits truncated at byte " + std::to_string(body.size()) +
                             " (need " + std::to_string(1 + nchars) + " bytes)");
    if (body.size() > 1 + nchars)
        throw ParseError(ParseErrorKind::TrailingData, 1 + nchars,
                         "graph6: unexpected trailing data at byte " + std::to_string(1 + nchars));

    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int value = value_at(1 + bit / 6);
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // remaining bits of the last character must be zero padding
    for (; bit < nchars * 6; ++bit) {
        int value = value_at(1 + bit / 6);
        if ((value >> (5 - bit % 6)) & 1)
            throw ParseError(ParseErrorKind::NonzeroPadding, 1 + bit / 6,
                             "graph6: nonzero padding bits at byte " + std::to_string(1 + bit / 6));
    }
    return g;
}

/// Encode in graph6 short form; rejects n > 62.
inline std::string write_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("write_graph6: order > 62 needs the unsupported long form");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0;
    int used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

/// Edge-list text: first line the order n, then one "u v" pair per line,
/// 0-based. Rejects self-loops, duplicate edges (either orientation),
/// out-of-range endpoints and non-integer tokens.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) return true;
        }
        return false;
    };

    auto parse_int = [&](std::istringstream& ls, const char* what) -> int {
        std::string tok;
        if (!(ls >> tok))
            throw ParseError(ParseErrorKind::BadToken, lineno,
                             std::string("edge list: missing ") + what + " on line " + std::to_string(lineno));
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size())
            throw ParseError(ParseErrorKind::BadToken, lineno,
                             "edge list: non-integer token '" + tok + "' on line " + std::to_string(lineno));
        return value;
    };

    if (!next_line())
        throw ParseError(ParseErrorKind::EmptyInput, 0, "edge list: empty input");

    std::istringstream head(line);
    int n = parse_int(head, "order");
    std::string rest;
    if (head >> rest)
        throw ParseError(ParseErrorKind::BadToken, lineno,
                         "edge list: unexpected token after order on line " + std::to_string(lineno));
    if (n < 0)
        throw ParseError(ParseErrorKind::BadToken, lineno, "edge list: negative order");

    Graph g(n);
    while (next_line()) {
        std::istringstream ls(line);
        int u = parse_int(ls, "endpoint");
        int v = parse_int(ls, "endpoint");
        if (ls >> rest)
            throw ParseError(ParseErrorKind::BadToken, lineno,
                             "edge list: expected exactly two endpoints on line " + std::to_string(lineno));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(ParseErrorKind::VertexRange, lineno,
                             "edge list: endpoint outside [0, " + std::to_string(n) + ") on line " +
                                 std::to_string(lineno));
        if (u == v)
            throw ParseError(ParseErrorKind::SelfLoop, lineno,
                             "edge list: self-loop on line " + std::to_string(lineno));
        if (g.has_edge(u, v))
            throw ParseError(ParseErrorKind::DuplicateEdge, lineno,
                             "edge list: duplicate edge on line " + std::to_string(lineno));
        g.add_edge(u, v);
    }
    return g;
}

inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order());
    out.push_back('\n');
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

}  // namespace cendom
