#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "wt/canonical.hpp"
#include "wt/graph.hpp"

namespace wt {

/// A = independent set, B = clique, A ∪ B = V, A ∩ B = ∅.
struct SplitPartition {
    VertexSet independent;
    VertexSet clique;

    bool operator==(const SplitPartition&) const = default;
};

/// Partition with B = the m(d) highest-degree vertices; ties on the boundary degree are
/// resolved by trying the tied vertices in lexicographic combination order.
/// K1 yields B = {0}, A = ∅. Empty when g is not split.
std::optional<SplitPartition> split_partition(const SimpleGraph& g);

/// Exhaustive search over all 2^n subsets for a clique whose complement is independent,
/// preferring the largest clique, then the lexicographically smallest. n <= 20.
std::optional<SplitPartition> split_partition_exhaustive(const SimpleGraph& g);

bool is_valid_split_partition(const SimpleGraph& g, const SplitPartition& p);

/// Sorted vertex list of the lexicographically first |V(f)|-subset of g inducing a copy
/// of f, or empty if g is f-free.
std::optional<std::vector<Vertex>> contains_induced(const SimpleGraph& g, const SimpleGraph& f);

enum class ForbiddenGraph { two_k2, c4, c5, h, h_complement, s3, s3_complement };

std::string_view to_string(ForbiddenGraph which);

struct ForbiddenWitness {
    ForbiddenGraph member;
    std::vector<Vertex> vertices;

    bool operator==(const ForbiddenWitness&) const = default;
};

struct ForbiddenMember {
    ForbiddenGraph which;
    SimpleGraph graph;
};

/// {2K2, C4, C5, H, co-H, S3, co-S3} in that order. H is two adjacent centers each
/// carrying two private pendants; S3 is the net (triangle with one pendant per corner).
const std::array<ForbiddenMember, 7>& forbidden_family();

struct ForbiddenCheck {
    bool weakly_threshold = false;
    std::optional<ForbiddenWitness> witness;
};

/// Weakly threshold iff no member of forbidden_family() is induced; the first member
/// found (family order) is reported as the witness.
ForbiddenCheck is_wt_by_forbidden(const SimpleGraph& g);

/// Modules of a prime-ish graph (g and its complement connected), pairwise disjoint,
/// ordered by smallest vertex. K1 has none. Throws NotPrime otherwise.
std::vector<VertexSet> maximal_proper_modules(const SimpleGraph& g);

/// Smallest module containing `seed`.
VertexSet module_closure(const SimpleGraph& g, VertexSet seed);

bool is_module(const SimpleGraph& g, VertexSet m);

/// Classes of "equal open neighborhoods" (twins) or "equal closed neighborhoods" (clones),
/// ordered by smallest vertex.
std::vector<VertexSet> twins_and_clones(const SimpleGraph& g);

/// One representative per isomorphism class of graphs on n vertices, sorted by
/// canonical form. Grows class-by-class from n-1, so n <= 9 stays fast.
std::vector<SimpleGraph> enumerate_graphs(std::size_t n);

}  // namespace wt
