#ifndef TR2_IO_HPP
#define TR2_IO_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "tr2/graph.hpp"

namespace tr2 {

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

inline int parse_int_field(std::string_view s, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw parse_error("line " + std::to_string(line_no) + ": malformed " + what);
    return value;
}

} // namespace detail

// Edge-list text: first line "n m", then m lines "u v" with 0 <= u,v < n,
// u != v, no duplicates (in either orientation). Errors name line numbers.
inline Graph parse_edge_list(std::string_view text) {
    auto lines = detail::split_lines(text);
    size_t li = 0;
    while (li < lines.size() && detail::split_fields(lines[li]).empty()) ++li;
    if (li == lines.size()) throw parse_error("line 1: missing header \"n m\"");
    auto header = detail::split_fields(lines[li]);
    if (header.size() != 2)
        throw parse_error("line " + std::to_string(li + 1) + ": header must be \"n m\"");
    int n = detail::parse_int_field(header[0], static_cast<int>(li + 1), "vertex count");
    int m = detail::parse_int_field(header[1], static_cast<int>(li + 1), "edge count");
    if (n <= 0) throw parse_error("line " + std::to_string(li + 1) + ": vertex count must be positive");
    if (m < 0) throw parse_error("line " + std::to_string(li + 1) + ": edge count must be non-negative");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    std::vector<std::vector<int>> seen(static_cast<size_t>(n));
    size_t cursor = li + 1;
    for (int e = 0; e < m; ++e) {
        while (cursor < lines.size() && detail::split_fields(lines[cursor]).empty()) ++cursor;
        if (cursor >= lines.size())
            throw parse_error("line " + std::to_string(lines.size() + 1) + ": expected " +
                              std::to_string(m) + " edge lines, got " + std::to_string(e));
        int line_no = static_cast<int>(cursor + 1);
        auto f = detail::split_fields(lines[cursor]);
        ++cursor;
        if (f.size() != 2)
            throw parse_error("line " + std::to_string(line_no) + ": edge line must be \"u v\"");
        int u = detail::parse_int_field(f[0], line_no, "vertex");
        int v = detail::parse_int_field(f[1], line_no, "vertex");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("line " + std::to_string(line_no) + ": vertex out of range");
        if (u == v) throw parse_error("line " + std::to_string(line_no) + ": self-loop");
        int a = std::min(u, v), b = std::max(u, v);
        auto& row = seen[static_cast<size_t>(a)];
        if (std::find(row.begin(), row.end(), b) != row.end())
            throw parse_error("line " + std::to_string(line_no) + ": duplicate edge");
        row.push_back(b);
        edges.emplace_back(u, v);
    }
    for (; cursor < lines.size(); ++cursor)
        if (!detail::split_fields(lines[cursor]).empty())
            throw parse_error("line " + std::to_string(cursor + 1) + ": unexpected extra line");
    return Graph::from_edges(n, edges);
}

inline std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// graph6: standard short form (n <= 62) and the 4-byte form (n <= 258047).
// Strict: length, character range and zero padding are all enforced.
inline Graph parse_graph6(std::string_view bytes) {
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r'))
        bytes.remove_suffix(1);
    if (!bytes.empty() && bytes.substr(0, 10) == ">>graph6<<") bytes.remove_prefix(10);
    if (bytes.empty()) throw parse_error("graph6: empty input");

    for (char c : bytes)
        if (c < 63 || c > 126) throw parse_error("graph6: character out of range");

    size_t pos = 0;
    long long n = 0;
    if (bytes[0] != 126) {
        n = bytes[0] - 63;
        pos = 1;
    } else {
        if (bytes.size() >= 2 && bytes[1] == 126)
            throw parse_error("graph6: 8-byte size form not supported");
        if (bytes.size() < 4) throw parse_error("graph6: truncated size field");
        n = ((long long)(bytes[1] - 63) << 12) | ((long long)(bytes[2] - 63) << 6) |
            (long long)(bytes[3] - 63);
        if (n < 63) throw parse_error("graph6: non-canonical size field");
        pos = 4;
    }
    if (n == 0) throw parse_error("graph6: empty graph not supported");

    long long bits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((bits + 5) / 6);
    if (bytes.size() - pos != need)
        throw parse_error("graph6: payload length mismatch");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = bytes[pos + static_cast<size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    // trailing pad bits must be zero
    for (long long b = bits; b < static_cast<long long>(need) * 6; ++b) {
        int byte = bytes[pos + static_cast<size_t>(b / 6)] - 63;
        if ((byte >> (5 - b % 6)) & 1) throw parse_error("graph6: nonzero padding");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string emit_graph6(const Graph& g) {
    long long n = g.vertex_count();
    if (n == 0) throw domain_error("graph6: empty graph not supported");
    if (n > 258047) throw domain_error("graph6: graph too large to encode");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    long long bits = n * (n - 1) / 2;
    std::vector<char> groups(static_cast<size_t>((bits + 5) / 6), 0);
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v))
                groups[static_cast<size_t>(bit / 6)] |= static_cast<char>(1 << (5 - bit % 6));
    for (char grp : groups) out.push_back(static_cast<char>(grp + 63));
    out.push_back('\n');
    return out;
}

} // namespace tr2

#endif
