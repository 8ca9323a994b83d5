#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wt/series.hpp"

namespace wt {

/// Generating functions of the counted families.
RationalSeries wt_sequences_series();           ///< (x - x^2 - x^3) / (1 - 3x + x^2 + x^3)
RationalSeries wt_graphs_series();              ///< (x - 2x^2 - x^3 - x^5) / (1 - 4x + 3x^2 + x^3 + x^5)
RationalSeries indecomposable_graphs_series();   ///< 2x + (x^4 - x^5 + x^6) / (1 - 3x + x^2)
RationalSeries indecomposable_sequences_series();  ///< (2x - 4x^2 + x^4) / (1 - 2x)

/// (F - x) / (1 - F): the series of all sequences/graphs assembled from indecomposable
/// pieces counted by F.
RationalSeries assemble(const RationalSeries& indecomposable);

/// 2^(n-4). Throws OutOfDomain for n < 4.
BigInt count_indecomposable_sequences(std::size_t n);
/// h_4, h_5, h_6 = 1, 2, 6 and h_n = 3h_(n-1) - h_(n-2). Throws OutOfDomain for n < 4.
BigInt count_indecomposable_graphs(std::size_t n);
/// s_n = 3s_(n-1) - s_(n-2) - s_(n-3), s_1..s_3 = 1, 2, 4. Throws OutOfDomain for n < 1.
BigInt count_wt_sequences(std::size_t n);
/// w_n = 4w_(n-1) - 3w_(n-2) - w_(n-3) - w_(n-5), w_1..w_5 = 1, 2, 4, 9, 21.
/// Throws OutOfDomain for n < 1.
BigInt count_wt_graphs(std::size_t n);
/// 2^(n-1). Throws OutOfDomain for n < 1.
BigInt count_threshold(std::size_t n);
/// t_1 = 2, t_2 = 6, t_n = 2t_(n-1) + t_(n-2); 4s_n - 2 = t_n.
BigInt pell_companion(std::size_t n);

/// Floating-point evaluation of (2 + (1+√2)^n + (1-√2)^n) / 4.
double wt_sequences_closed_form(std::size_t n);
/// Floating-point evaluation of w_n from the roots of the denominator of W(x).
/// Diagnostic only; valid for n >= 1.
double wt_graphs_closed_form(std::size_t n);

/// Root of p (coefficients by ascending power) in [lo, hi] by bisection; p(lo) and p(hi)
/// must differ in sign.
double bisect_root(const std::vector<double>& p, double lo, double hi);
/// Dominant root of y^3 - 3y^2 + y - 1, the growth rate of w_n.
double wt_graphs_growth_constant();

enum class CountName { g, h, s, w, threshold };
std::string_view to_string(CountName name);

struct CountTable {
    CountName name = CountName::s;
    std::map<std::size_t, BigInt> values;
};

/// Exact counts for n = first..upto, where first is 4 for g and h, 1 otherwise.
CountTable make_table(CountName name, std::size_t upto);

/// values[n] / values[n-1] for every n with both entries present, n <= upto.
/// Throws OutOfDomain for upto < 3.
std::map<std::size_t, BigRational> growth_ratios(const CountTable& table, std::size_t upto);

inline constexpr std::size_t kOracleGraphBound = 7;

struct OracleReport {
    std::size_t n = 0;
    // Exhaustive counts.
    std::size_t wt_sequences = 0;
    std::size_t wt_graphs = 0;
    std::size_t indecomposable_sequences = 0;
    std::size_t indecomposable_graphs = 0;
    std::size_t threshold_graphs = 0;
    // Formula counts; the indecomposable ones are only compared for n >= 4.
    BigInt expected_sequences;
    BigInt expected_graphs;
    BigInt expected_indecomposable_sequences;
    BigInt expected_indecomposable_graphs;
    BigInt expected_threshold;

    bool ok() const;
};

/// Exhaustive generation against the formulas. Throws SizeLimit above kOracleGraphBound.
OracleReport oracle_crosscheck(std::size_t n);

}  // namespace wt
