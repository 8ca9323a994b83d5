#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wt {

using Degree = std::int64_t;

/// A degree sequence: a nonempty list of nonnegative integers kept in nonincreasing
/// order. Non-graphic sequences are ordinary values.
class DegreeSequence {
public:
    /// Sorts `raw` into nonincreasing order. Throws EmptySequence or NegativeTerm.
    static DegreeSequence normalize(std::vector<Degree> raw);

    /// Parses the comma-separated text form, e.g. "3,3,2,1,1". Throws ParseError.
    static DegreeSequence parse(std::string_view text);

    DegreeSequence(std::initializer_list<Degree> raw);

    std::size_t size() const noexcept { return terms_.size(); }
    Degree operator[](std::size_t i) const { return terms_[i]; }
    std::span<const Degree> terms() const noexcept { return terms_; }
    Degree sum() const noexcept;
    Degree max() const noexcept { return terms_.front(); }
    Degree min() const noexcept { return terms_.back(); }

    std::string to_string() const;

    auto operator<=>(const DegreeSequence&) const = default;

private:
    explicit DegreeSequence(std::vector<Degree> sorted) : terms_(std::move(sorted)) {}

    std::vector<Degree> terms_;
};

/// Corrected Durfee number m(d) and the Erdős–Gallai differences Δ_1..Δ_m.
struct EgProfile {
    std::size_t m = 0;
    std::vector<Degree> deltas;

    bool operator==(const EgProfile&) const = default;
};

/// Membership flags. Always satisfies threshold ⇒ weakly_threshold ⇒ split ⇒ graphic.
struct SequenceClass {
    bool graphic = false;
    bool split = false;
    bool weakly_threshold = false;
    bool threshold = false;

    bool operator==(const SequenceClass&) const = default;
};

/// m(d) = max{ i : d_i >= i - 1 } with 1-based i. Always at least 1.
std::size_t corrected_durfee(const DegreeSequence& d);

/// Δ_k(d) = k(k-1) + Σ_{i>k} min(k, d_i) - Σ_{i<=k} d_i for 1 <= k <= m(d).
/// Negative values are returned as-is. Throws IndexOutOfRange for k outside [1, m(d)].
Degree eg_difference(const DegreeSequence& d, std::size_t k);

EgProfile eg_profile(const DegreeSequence& d);

/// Even sum, d_1 <= n-1 and every Δ_k >= 0.
bool is_graphic(const DegreeSequence& d);

SequenceClass classify(const DegreeSequence& d);

enum class Cell : char { zero = '0', one = '1', star = '*' };

/// Corrected Ferrers diagram: stars on the diagonal, row i holds d_i left-justified
/// ones that skip the diagonal.
class FerrersDiagram {
public:
    FerrersDiagram(std::size_t n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {}

    std::size_t size() const noexcept { return n_; }
    Cell at(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }

    /// B_k: ones strictly below the diagonal within the first k columns.
    std::int64_t ones_below(std::size_t k) const;
    /// R_k: ones strictly right of the diagonal within the first k rows.
    std::int64_t ones_right(std::size_t k) const;

    bool operator==(const FerrersDiagram&) const = default;

private:
    std::size_t n_;
    std::vector<Cell> cells_;
};

/// Throws RowOverflow when some term exceeds n-1.
FerrersDiagram ferrers(const DegreeSequence& d);

/// Rows of '*', '1', '0' separated by single spaces, each row newline-terminated.
std::string render_ferrers(const FerrersDiagram& diagram);

/// Calls `fn` on every nonincreasing sequence of length n with terms in [0, max_term],
/// in colex order (last term varies slowest).
void for_each_nonincreasing(std::size_t n, Degree max_term,
                            const std::function<void(const DegreeSequence&)>& fn);

/// All graphic sequences of length n (terms bounded by n-1), colex order.
std::vector<DegreeSequence> graphic_sequences(std::size_t n);

}  // namespace wt
