#include "wt/graph_io.hpp"

#include <charconv>
#include <stdexcept>

#include "wt/errors.hpp"

namespace wt {

namespace {

long parse_number(std::string_view token, std::string_view what) {
    long value = 0;
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), last, value);
    if (token.empty() || ec != std::errc() || ptr != last || value < 0) {
        throw ParseError("bad " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
    constexpr std::string_view kN = "n=";
    constexpr std::string_view kEdges = "edges=";
    if (!text.starts_with(kN)) {
        throw ParseError("edge list must start with 'n='");
    }
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw ParseError("edge list is missing ';edges='");
    }
    const long n = parse_number(text.substr(kN.size(), semi - kN.size()), "vertex count");
    if (n < 1 || n > static_cast<long>(kMaxVertices)) {
        throw ParseError("vertex count must lie in [1, 64]");
    }
    std::string_view rest = text.substr(semi + 1);
    if (!rest.starts_with(kEdges)) {
        throw ParseError("expected 'edges=' after ';'");
    }
    rest.remove_prefix(kEdges.size());

    SimpleGraph g(static_cast<std::size_t>(n));
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        const auto dash = token.find('-');
        if (dash == std::string_view::npos) {
            throw ParseError("edge '" + std::string(token) + "' is not of the form u-v");
        }
        const long u = parse_number(token.substr(0, dash), "vertex");
        const long v = parse_number(token.substr(dash + 1), "vertex");
        if (u >= n || v >= n) {
            throw ParseError("edge '" + std::string(token) + "' names a vertex >= n");
        }
        if (u == v) {
            throw ParseError("self-loop '" + std::string(token) + "'");
        }
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
        if (rest.empty()) {
            throw ParseError("trailing ',' in edge list");
        }
    }
    return g;
}

std::string format_edge_list(const SimpleGraph& g) {
    std::string out = "n=" + std::to_string(g.order()) + ";edges=";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(u) + '-' + std::to_string(v);
    }
    return out;
}

std::string to_graph6(const SimpleGraph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(((n >> 12) & 0x3F) + 63);
        out += static_cast<char>(((n >> 6) & 0x3F) + 63);
        out += static_cast<char>((n & 0x3F) + 63);
    }
    int acc = 0;
    int filled = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) {
        out += static_cast<char>((acc << (6 - filled)) + 63);
    }
    return out;
}

SimpleGraph from_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) {
        text.remove_prefix(10);
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("empty graph6 string");
    }
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw ParseError("graph6 byte out of the printable range 63..126");
        }
    }
    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] != 126) {
        n = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) {
            throw ParseError("unsupported graph6 size header");
        }
        n = (static_cast<std::size_t>(text[1] - 63) << 12) |
            (static_cast<std::size_t>(text[2] - 63) << 6) | static_cast<std::size_t>(text[3] - 63);
        pos = 4;
    }
    if (n == 0 || n > kMaxVertices) {
        throw ParseError("graph6 order must lie in [1, 64]");
    }
    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        throw ParseError("graph6 payload has " + std::to_string(text.size() - pos) +
                         " bytes, expected " + std::to_string(bytes));
    }
    SimpleGraph g(n);
    std::size_t index = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
        for (Vertex u = 0; u < v; ++u, ++index) {
            const int byte = text[pos + index / 6] - 63;
            if ((byte >> (5 - static_cast<int>(index % 6))) & 1) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

}  // namespace wt
