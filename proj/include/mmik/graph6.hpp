#pragma once

// graph6 encoding restricted to orders 0..16 (single header byte).

#include "mmik/graph.hpp"

#include <string>
#include <string_view>

namespace mmik {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_graph6(const SmallGraph& g)
{
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

inline SmallGraph from_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw Graph6Error("empty graph6 string");
    for (char c : line) {
        auto b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126)
            throw Graph6Error("byte " + std::to_string(b) + " outside the graph6 range 63..126");
    }
    const int n = static_cast<unsigned char>(line[0]) - 63;
    if (n > kMaxOrder)
        throw Graph6Error("graph6 order " + (n == 63 ? std::string(">62") : std::to_string(n)) + " exceeds " +
                          std::to_string(kMaxOrder));
    const int pairs = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
    if (line.size() - 1 < need)
        throw Graph6Error("truncated graph6 data: expected " + std::to_string(need) + " bytes, got " +
                          std::to_string(line.size() - 1));
    if (line.size() - 1 > need)
        throw Graph6Error("trailing bytes after graph6 data");

    SmallGraph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int value = static_cast<unsigned char>(line[1 + k / 6]) - 63;
            if ((value >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    return g;
}

} // namespace mmik
