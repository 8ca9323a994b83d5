#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wt/canonical.hpp"
#include "wt/graph.hpp"
#include "wt/sequence.hpp"
#include "wt/structure.hpp"

namespace wt {

/// A split graph with a fixed partition: `independent` (A) and `clique` (B).
/// Either side may be empty but not both.
struct SplittedGraph {
    SimpleGraph graph;
    VertexSet independent;
    VertexSet clique;

    /// Throws std::invalid_argument when the partition is not a valid split partition.
    static SplittedGraph make(SimpleGraph graph, VertexSet independent, VertexSet clique);

    /// Canonical form that also preserves which side each vertex is on.
    CanonicalForm canonical() const;

    bool operator==(const SplittedGraph&) const = default;
};

/// Splitted degree sequence "c_1,...,c_k;a_1,...,a_r": clique terms then independent terms,
/// each nonincreasing.
struct SplittedSequence {
    std::vector<Degree> clique;
    std::vector<Degree> independent;

    /// Parses "2,2;1,1", "0;" or ";0". Throws ParseError.
    static SplittedSequence parse(std::string_view text);
    std::string to_string() const;

    std::size_t size() const noexcept { return clique.size() + independent.size(); }
    /// All terms as a plain degree sequence.
    DegreeSequence terms() const;

    auto operator<=>(const SplittedSequence&) const = default;
};

/// Builds a split graph realizing s with the declared sides (clique vertices first),
/// or nothing when no such graph exists.
std::optional<SplittedGraph> realize_splitted(const SplittedSequence& s);

bool is_valid_splitted(const SplittedSequence& s);

/// Disjoint union plus all edges B × V(h). Head vertices come first, then h's.
SimpleGraph compose_graph(const SplittedGraph& head, const SimpleGraph& h);

/// Same graph as compose_graph, kept as a splitted graph with sides A ∪ C and B ∪ D.
SplittedGraph compose_splitted(const SplittedGraph& head, const SplittedGraph& rest);

DegreeSequence compose_sequence(const SplittedSequence& head, const DegreeSequence& e);
SplittedSequence compose_splitted(const SplittedSequence& head, const SplittedSequence& rest);

struct GraphDecomposition {
    /// Leftmost component first. Vertices of each component are relabeled 0..k-1 in
    /// increasing order of the original labels.
    std::vector<SplittedGraph> heads;
    SimpleGraph tail;
    /// Original vertex of each position in compose(heads..., tail).
    std::vector<Vertex> vertex_order;
};

struct SequenceDecomposition {
    std::vector<SplittedSequence> heads;
    DegreeSequence tail;
};

/// First head of g found by scanning candidate sizes ascending, clique-part size
/// descending, drawing B from the highest degrees and A from the lowest.
struct HeadCandidate {
    VertexSet independent;
    VertexSet clique;
};
std::optional<HeadCandidate> find_head(const SimpleGraph& g);

/// Same scan over all vertex subsets; an oracle for find_head on small graphs (n <= 12).
std::optional<HeadCandidate> find_head_exhaustive(const SimpleGraph& g);

/// Canonical decomposition by repeated leftmost head extraction.
GraphDecomposition decompose_graph(const SimpleGraph& g);

/// Folds the heads right-to-left onto the tail.
SimpleGraph recompose(const GraphDecomposition& dec);

/// Throws NotGraphic.
SequenceDecomposition decompose_sequence(const DegreeSequence& d);

DegreeSequence recompose(const SequenceDecomposition& dec);

/// Union-find over 4-sets inducing 2K2, C4 or P4; indecomposable iff one class covers V.
/// K1 is indecomposable.
bool is_indecomposable_graph(const SimpleGraph& g);

struct EgConcatenationReport {
    SequenceDecomposition decomposition;
    std::vector<Degree> concatenated;
    std::vector<Degree> profile;

    bool ok() const { return concatenated == profile; }
};

/// Concatenates the first |clique| differences of each head and the first m(tail)
/// differences of the tail, and compares with eg_profile(d). Throws NotGraphic.
EgConcatenationReport check_eg_concatenation(const DegreeSequence& d);

/// Erdős–Gallai differences of a splitted sequence's underlying sequence, first k of them
/// (k = clique size, capped at m).
std::vector<Degree> head_differences(const SplittedSequence& s);

}  // namespace wt
