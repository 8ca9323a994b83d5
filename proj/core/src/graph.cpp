#include "wt/graph.hpp"

#include <stdexcept>

#include "wt/errors.hpp"

namespace wt {

VertexSet::VertexSet(std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) {
        insert(v);
    }
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) {
        out.push_back(v);
    }
    return out;
}

SimpleGraph::SimpleGraph(std::size_t n) {
    if (n == 0 || n > kMaxVertices) {
        throw SizeLimit("graph order " + std::to_string(n) + " outside [1, 64]", kMaxVertices);
    }
    rows_.assign(n, 0);
}

SimpleGraph::SimpleGraph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : SimpleGraph(n) {
    for (const auto& [u, v] : edges) {
        add_edge(u, v);
    }
}

std::size_t SimpleGraph::edge_count() const noexcept {
    std::size_t total = 0;
    for (auto row : rows_) {
        total += static_cast<std::size_t>(std::popcount(row));
    }
    return total / 2;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
    const auto n = static_cast<Vertex>(order());
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("self-loops are not allowed");
    }
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

SimpleGraph SimpleGraph::induced(std::span<const Vertex> keep) const {
    SimpleGraph sub(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (adjacent(keep[i], keep[j])) {
                sub.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return sub;
}

SimpleGraph SimpleGraph::induced(VertexSet keep) const {
    const auto list = keep.to_vector();
    return induced(list);
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> order) const {
    if (order.size() != this->order()) {
        throw std::invalid_argument("relabeling must be a permutation of all vertices");
    }
    return induced(order);
}

Vertex SimpleGraph::add_vertex(VertexSet nbrs) {
    if (order() >= kMaxVertices) {
        throw SizeLimit("cannot add a vertex", kMaxVertices);
    }
    const auto v = static_cast<Vertex>(order());
    rows_.push_back(0);
    for (Vertex u : nbrs) {
        add_edge(u, v);
    }
    return v;
}

DegreeSequence degree_sequence(const SimpleGraph& g) {
    std::vector<Degree> raw;
    raw.reserve(g.order());
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        raw.push_back(static_cast<Degree>(g.degree(v)));
    }
    return DegreeSequence::normalize(std::move(raw));
}

SimpleGraph complement(const SimpleGraph& g) {
    const std::size_t n = g.order();
    SimpleGraph out(n);
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) {
            if (!g.adjacent(u, v)) {
                out.add_edge(u, v);
            }
        }
    }
    return out;
}

bool is_connected(const SimpleGraph& g) {
    VertexSet seen{0};
    VertexSet frontier{0};
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) {
            next = next | g.neighbors(v);
        }
        frontier = next - seen;
        seen = seen | next;
    }
    return seen == g.vertices();
}

bool is_clique(const SimpleGraph& g, VertexSet s) {
    for (Vertex v : s) {
        if (!(s - VertexSet{v}).subset_of(g.neighbors(v))) {
            return false;
        }
    }
    return true;
}

bool is_independent(const SimpleGraph& g, VertexSet s) {
    for (Vertex v : s) {
        if (!(g.neighbors(v) & s).empty()) {
            return false;
        }
    }
    return true;
}

void for_each_labeled_graph(std::size_t n, const std::function<void(const SimpleGraph&)>& fn) {
    if (n == 0 || n > 8) {
        throw SizeLimit("labeled graph enumeration", 8);
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
        for (Vertex u = 0; u < v; ++u) {
            pairs.emplace_back(u, v);
        }
    }
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        SimpleGraph g(n);
        for (std::size_t bit = 0; bit < pairs.size(); ++bit) {
            if ((mask >> bit) & 1U) {
                g.add_edge(pairs[bit].first, pairs[bit].second);
            }
        }
        fn(g);
    }
}

namespace named {

SimpleGraph complete(std::size_t n) {
    SimpleGraph g(n);
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

SimpleGraph path(std::size_t n) {
    SimpleGraph g(n);
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
        g.add_edge(v - 1, v);
    }
    return g;
}

SimpleGraph cycle(std::size_t n) {
    SimpleGraph g = path(n);
    g.add_edge(0, static_cast<Vertex>(n) - 1);
    return g;
}

SimpleGraph empty(std::size_t n) { return SimpleGraph(n); }

SimpleGraph chair() { return SimpleGraph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}); }

SimpleGraph kite() { return SimpleGraph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}}); }

SimpleGraph paw() { return SimpleGraph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

}  // namespace named

}  // namespace wt
