#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "wt/sequence.hpp"

namespace wt {

/// Moves one unit from position `from` to position `to` (0-based positions in the
/// nonincreasing sequence). Applicable iff a[from] >= a[to] + 2.
struct UnitTransformation {
    std::size_t from = 0;
    std::size_t to = 0;
};

/// Equal totals and every prefix sum of p at least that of q; the shorter sequence is
/// read as zero-padded.
bool majorizes(const DegreeSequence& p, const DegreeSequence& q);

bool is_applicable(const DegreeSequence& a, const UnitTransformation& t);

/// Result is re-sorted. Throws InvalidTransformation when t is not applicable.
DegreeSequence apply_unit_transformation(const DegreeSequence& a, const UnitTransformation& t);

/// Distinct sequences reachable by one unit transformation.
std::set<DegreeSequence> downward_neighbors(const DegreeSequence& a);

/// Inverse moves: sequences e with a ∈ downward_neighbors(e), same length.
std::set<DegreeSequence> upward_neighbors(const DegreeSequence& a);

inline constexpr std::size_t kMajorizeOracleBound = 8;

/// True iff no other graphic sequence of the same length and sum majorizes d
/// (exhaustive search). Throws NotGraphic, or SizeLimit above kMajorizeOracleBound.
bool is_majorization_maximal(const DegreeSequence& d);

struct UpwardClosureReport {
    std::size_t n = 0;
    long sum = 0;
    std::size_t graphic_sequences = 0;
    std::size_t pairs_checked = 0;
    /// (d, e) with d weakly threshold, e ⪰ d graphic, e not weakly threshold. Sorted.
    std::vector<std::pair<DegreeSequence, DegreeSequence>> counterexamples;

    bool ok() const noexcept { return counterexamples.empty(); }
};

/// Checks that weakly threshold sequences of length n and the given sum are upward
/// closed under majorization. Throws SizeLimit above kMajorizeOracleBound.
UpwardClosureReport verify_upward_closure(std::size_t n, long sum);

}  // namespace wt
