#include "boxicity/graph.hpp"

namespace boxicity {

namespace {
    constexpr int max_graph6_order = 62;
    constexpr int graph6_offset = 63;
}

// Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
// packed six bits per character, most significant bit first.
auto parse_graph6(std::string_view text) -> Graph
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("empty graph6 string");

    for (char c : text)
        if (c < graph6_offset || c > graph6_offset + 63)
            throw Graph6Error(std::string("character out of range in graph6: '") + c + "'");

    int n = text[0] - graph6_offset;
    if (n > max_graph6_order)
        throw Graph6Error("graph6 length byte indicates n > 62, which is not supported");

    std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    std::size_t char_count = (bit_count + 5) / 6;
    if (text.size() != 1 + char_count)
        throw Graph6Error("graph6 body has " + std::to_string(text.size() - 1) + " characters, expected "
                          + std::to_string(char_count));

    auto bit = [&](std::size_t k) {
        int value = text[1 + k / 6] - graph6_offset;
        return ((value >> (5 - k % 6)) & 1) != 0;
    };

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (bit(k))
                g.add_edge(i, j);

    for (; k < char_count * 6; ++k)
        if (bit(k))
            throw Graph6Error("graph6 padding bits are not zero");
    return g;
}

auto serialize_graph6(const Graph &g) -> std::string
{
    const int n = g.order();
    if (n > max_graph6_order)
        throw Graph6Error("graph6 output supports n <= 62 only");

    std::string out(1, static_cast<char>(n + graph6_offset));
    int current = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(current + graph6_offset));
                current = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((current << (6 - filled)) + graph6_offset));
    return out;
}

} // namespace boxicity
