#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wt/canonical.hpp"
#include "wt/graph.hpp"
#include "wt/sequence.hpp"
#include "wt/structure.hpp"

namespace wt {

enum class OpKind { add_dominating, add_isolated, add_weakly_dominating, add_weakly_isolated, add_semijoined_p4 };

/// Type 1: dominating / isolated. Type 2: weakly dominating / weakly isolated. Type 3: P4.
int op_type(OpKind kind);

struct BuildOp {
    OpKind kind = OpKind::add_isolated;
    /// Skipped vertex (weakly dominating) or attached vertex (weakly isolated); unused otherwise.
    Vertex target = 0;

    static BuildOp dominating() { return {OpKind::add_dominating, 0}; }
    static BuildOp isolated() { return {OpKind::add_isolated, 0}; }
    static BuildOp weakly_dominating(Vertex skip) { return {OpKind::add_weakly_dominating, skip}; }
    static BuildOp weakly_isolated(Vertex attach) { return {OpKind::add_weakly_isolated, attach}; }
    static BuildOp semijoined_p4() { return {OpKind::add_semijoined_p4, 0}; }

    /// "D", "I", "WD(3)", "WI(1)", "SP4".
    std::string to_string() const;

    bool operator==(const BuildOp& o) const;
};

enum class Seed { k1, p4 };

struct BuildScript {
    Seed seed = Seed::k1;
    std::vector<BuildOp> ops;

    /// "seed=P4;ops=WI(1),WD(3),SP4". Throws ParseError.
    static BuildScript parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const BuildScript&) const = default;
};

/// Path 0-1-2-3.
SimpleGraph seed_graph(Seed seed);

/// True when op's skip/attach vertex is valid for g.
bool is_valid_op(const SimpleGraph& g, const BuildOp& op);

/// New vertices get the next indices. A semi-joined P4 is added as n, n+1, n+2, n+3 along
/// the path, so n+1 and n+2 are its midpoints. Throws InvalidOperation.
SimpleGraph apply_op(const SimpleGraph& g, const BuildOp& op);

/// Throws InvalidOperation carrying the position of the offending op.
SimpleGraph run_script(const BuildScript& script);

enum class PeelCase { isolated, dominating, weakly_isolated, weakly_dominating, semijoined_p4 };

std::string_view to_string(PeelCase c);

struct PeelStep {
    PeelCase which = PeelCase::isolated;
    VertexSet removed;
};

/// Which of the five reduction cases applies, read from the degrees alone. Cases are
/// tested in order a (d_n = 0), b (d_1 = n-1), c, d, e; the first that holds is returned.
/// Throws NotWeaklyThreshold, or OutOfDomain for n < 2.
PeelCase peel_case(const DegreeSequence& d);

/// The reduction case of g with the lowest-index vertex (or P4) that can be removed.
/// Throws NotWeaklyThreshold, or OutOfDomain for n < 2.
PeelStep peel(const SimpleGraph& g);

struct Recognition {
    /// Set when g is weakly threshold; run_script(*script) == g.relabeled(vertex_order).
    std::optional<BuildScript> script;
    std::vector<Vertex> vertex_order;
    /// Set otherwise.
    std::optional<ForbiddenWitness> witness;

    bool weakly_threshold() const noexcept { return script.has_value(); }
};

/// Peels removable vertices (isolated, dominating, weakly isolated, weakly dominating,
/// semi-joined P4; lowest index first) down to K1 or P4 without looking at the
/// Erdős–Gallai differences. When stuck, reports a forbidden induced subgraph.
Recognition recognize(const SimpleGraph& g);

/// Script realizing d, built by reducing the sequence case by case. Throws NotWeaklyThreshold.
BuildScript realize_script(const DegreeSequence& d);

/// run_script(realize_script(d)).
SimpleGraph realize(const DegreeSequence& d);

struct EnumerationOptions {
    bool seed_k1 = true;
    bool seed_p4 = true;
    bool type1 = true;
    bool type2 = true;
    bool type3 = true;
};

inline constexpr std::size_t kEnumerateGraphsBound = kCanonicalMaxVertices;
inline constexpr std::size_t kEnumerateSequencesBound = 10;

/// Canonical forms of every graph on n vertices reachable from the allowed seeds by the
/// allowed ops, trying every skip/attach choice. Throws SizeLimit.
std::set<CanonicalForm> enumerate_wt_graphs(std::size_t n, const EnumerationOptions& options = {});

/// Graphic sequences of length n with every difference at most 1. Throws SizeLimit.
std::set<DegreeSequence> enumerate_wt_sequences(std::size_t n);

/// Equivalent script in which every Type 2 op comes before any Type 1 op of the same
/// stretch between Type 3 ops. Produces a graph isomorphic to run_script(s).
BuildScript normalize_script(const BuildScript& s);

/// True when no Type 1 op is followed by a Type 2 op without a Type 3 op in between.
bool has_placement_property(const BuildScript& s);

}  // namespace wt
