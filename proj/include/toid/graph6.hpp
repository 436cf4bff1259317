#pragma once

#include <cstdint>

#include "toid/tree.hpp"

namespace toid {

// graph6 text codec. Header ">>graph6<<" is accepted and stripped on
// decode. All three N(n) size encodings are handled (1, 4, and 8 bytes),
// which covers every n this library supports (n < 2^18).

namespace g6 {

constexpr int kMaxN = 1 << 18;

inline void append_bits(std::string& out, std::uint64_t value, int sextets) {
    for (int i = sextets - 1; i >= 0; --i)
        out += static_cast<char>(((value >> (6 * i)) & 63) + 63);
}

}  // namespace g6

inline std::string to_graph6(const Graph& g) {
    if (g.n >= g6::kMaxN)
        throw std::invalid_argument("to_graph6: graph too large");
    std::string out;
    if (g.n <= 62) {
        out += static_cast<char>(g.n + 63);
    } else if (g.n <= 258047) {
        out += '~';
        g6::append_bits(out, static_cast<std::uint64_t>(g.n), 3);
    } else {
        out += "~~";
        g6::append_bits(out, static_cast<std::uint64_t>(g.n), 6);
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
    return out;
}

inline Graph from_graph6(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range at position " +
                                        std::to_string(pos - 1));
        return c - 63;
    };
    std::int64_t n;
    int first = take();
    if (first < 63) {
        n = first;
    } else {
        int width = 3;
        if (pos < s.size() && s[pos] == '~') {
            ++pos;
            width = 6;
        }
        n = 0;
        for (int i = 0; i < width; ++i) n = (n << 6) | take();
    }
    if (n < 1 || n >= g6::kMaxN)
        throw std::invalid_argument("graph6: unsupported vertex count " +
                                    std::to_string(n));
    Graph g;
    g.n = static_cast<int>(n);
    g.adj.assign(g.n, {});
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = take();
                nbits = 6;
            }
            if ((acc >> --nbits) & 1) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
        }
    if (pos != s.size())
        throw std::invalid_argument("graph6: trailing bytes after the edge bits");
    // Column-major fill keeps each list sorted already, but do not rely on it.
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

inline Tree tree_from_graph6(std::string_view s) {
    Graph g = from_graph6(s);
    Tree t;
    if (g.edge_count() != g.n - 1 || !is_connected(g))
        throw std::invalid_argument("graph6: input is not a tree");
    static_cast<Graph&>(t) = std::move(g);
    return t;
}

}  // namespace toid
