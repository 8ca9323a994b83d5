#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wt/sequence.hpp"

namespace wt {

using Vertex = int;

/// Hard cap on the number of vertices: every adjacency row is one 64-bit word.
inline constexpr std::size_t kMaxVertices = 64;

/// A set of vertices of one graph, stored as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vertices);

    /// {0, ..., n-1}
    static constexpr VertexSet range(std::size_t n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr Vertex first() const noexcept { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool subset_of(VertexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

    std::vector<Vertex> to_vector() const;

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator& operator++() noexcept {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) noexcept {
            auto copy = *this;
            ++*this;
            return copy;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

    constexpr auto operator<=>(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Labeled simple undirected graph on vertices 0..n-1 (1 <= n <= 64).
class SimpleGraph {
public:
    /// Edgeless graph on n vertices. Throws SizeLimit when n is 0 or above kMaxVertices.
    explicit SimpleGraph(std::size_t n);
    SimpleGraph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t edge_count() const noexcept;
    VertexSet vertices() const noexcept { return VertexSet::range(order()); }

    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
    VertexSet closed_neighbors(Vertex v) const {
        return VertexSet(rows_[v] | (std::uint64_t{1} << v));
    }
    std::size_t degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(rows_[v])); }

    /// Adds edge uv. Throws std::invalid_argument on loops or out-of-range vertices.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Subgraph induced on `keep`, relabeled 0..k-1 in the order given.
    SimpleGraph induced(std::span<const Vertex> keep) const;
    SimpleGraph induced(VertexSet keep) const;

    /// Graph whose vertex i is this graph's vertex order[i]; `order` must be a permutation.
    SimpleGraph relabeled(std::span<const Vertex> order) const;

    /// Adds a new vertex adjacent to `nbrs` and returns its index.
    Vertex add_vertex(VertexSet nbrs);

    bool operator==(const SimpleGraph&) const = default;

private:
    std::vector<std::uint64_t> rows_;
};

DegreeSequence degree_sequence(const SimpleGraph& g);

SimpleGraph complement(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

bool is_clique(const SimpleGraph& g, VertexSet s);
bool is_independent(const SimpleGraph& g, VertexSet s);

/// Calls fn on every labeled graph with n vertices (2^(n(n-1)/2) of them); n <= 8.
void for_each_labeled_graph(std::size_t n, const std::function<void(const SimpleGraph&)>& fn);

/// Named small graphs used throughout the tests and the forbidden family.
namespace named {
SimpleGraph complete(std::size_t n);
SimpleGraph path(std::size_t n);
SimpleGraph cycle(std::size_t n);
SimpleGraph empty(std::size_t n);
/// Path 0-1-2-3 with pendant 4 attached to 1.
SimpleGraph chair();
/// Path 0-1-2-3 plus vertex 4 adjacent to 0, 1, 2.
SimpleGraph kite();
/// Triangle 0,1,2 with pendant 3 on 0.
SimpleGraph paw();
}  // namespace named

}  // namespace wt
