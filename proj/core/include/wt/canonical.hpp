#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wt/graph.hpp"

namespace wt {

/// Largest order accepted by the isomorphism operations.
inline constexpr std::size_t kCanonicalMaxVertices = 16;

/// Byte string identifying an isomorphism class: the graph6 encoding of the canonically
/// relabeled graph, followed by ":c0,c1,..." when a vertex coloring was supplied.
struct CanonicalForm {
    std::string code;

    std::string hex() const;
    static CanonicalForm from_hex(std::string_view hex);

    auto operator<=>(const CanonicalForm&) const = default;
};

/// Throws SizeLimit above kCanonicalMaxVertices.
CanonicalForm canonical_form(const SimpleGraph& g);

/// Isomorphism class of (g, colors) under color-preserving relabelings.
CanonicalForm canonical_form(const SimpleGraph& g, std::span<const int> colors);

/// order[i] is the vertex placed at canonical position i.
std::vector<Vertex> canonical_order(const SimpleGraph& g, std::span<const int> colors = {});

/// Representative graph of an uncolored canonical form.
SimpleGraph graph_from_canonical(const CanonicalForm& form);

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace wt
