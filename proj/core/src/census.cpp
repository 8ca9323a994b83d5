#include "wt/census.hpp"

#include <array>
#include <cmath>

#include "wt/buildkit.hpp"
#include "wt/decomp.hpp"
#include "wt/errors.hpp"

namespace wt {

RationalSeries wt_sequences_series() { return {{0, 1, -1, -1}, {1, -3, 1, 1}}; }

RationalSeries wt_graphs_series() { return {{0, 1, -2, -1, 0, -1}, {1, -4, 3, 1, 0, 1}}; }

RationalSeries indecomposable_graphs_series() {
    return RationalSeries{{0, 2}, {1}} + RationalSeries{{0, 0, 0, 0, 1, -1, 1}, {1, -3, 1}};
}

RationalSeries indecomposable_sequences_series() { return {{0, 2, -4, 0, 1}, {1, -2}}; }

RationalSeries assemble(const RationalSeries& f) {
    const RationalSeries x{{0, 1}, {1}};
    const RationalSeries one{{1}, {1}};
    return (f - x) / (one - f);
}

namespace {

void require_at_least(std::size_t n, std::size_t low, const char* what) {
    if (n < low) {
        throw OutOfDomain(std::string(what) + " is defined for n >= " + std::to_string(low));
    }
}

// Iterates a linear recurrence with integer coefficients from the given initial values
// (index 1 onward).
BigInt iterate(std::size_t n, const std::vector<BigInt>& initial, const std::vector<long>& coeffs) {
    if (n <= initial.size()) {
        return initial[n - 1];
    }
    std::vector<BigInt> v = initial;
    while (v.size() < n) {
        BigInt next = 0;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next += coeffs[j] * v[v.size() - 1 - j];
        }
        v.push_back(std::move(next));
    }
    return v.back();
}

}  // namespace

BigInt count_indecomposable_sequences(std::size_t n) {
    require_at_least(n, 4, "g_n");
    return BigInt(1) << (n - 4);
}

BigInt count_indecomposable_graphs(std::size_t n) {
    require_at_least(n, 4, "h_n");
    // Shift so that index 1 is h_4.
    return iterate(n - 3, {1, 2, 6}, {3, -1});
}

BigInt count_wt_sequences(std::size_t n) {
    require_at_least(n, 1, "s_n");
    return iterate(n, {1, 2, 4}, {3, -1, -1});
}

BigInt count_wt_graphs(std::size_t n) {
    require_at_least(n, 1, "w_n");
    return iterate(n, {1, 2, 4, 9, 21}, {4, -3, -1, 0, -1});
}

BigInt count_threshold(std::size_t n) {
    require_at_least(n, 1, "threshold count");
    return BigInt(1) << (n - 1);
}

BigInt pell_companion(std::size_t n) {
    require_at_least(n, 1, "t_n");
    return iterate(n, {2, 6}, {2, 1});
}

double wt_sequences_closed_form(std::size_t n) {
    const double r = std::sqrt(2.0);
    const auto k = static_cast<double>(n);
    return (2.0 + std::pow(1.0 + r, k) + std::pow(1.0 - r, k)) / 4.0;
}

namespace {

using Complex = std::complex<double>;

Complex evaluate(const std::vector<double>& p, Complex x) {
    Complex acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
    }
    return acc;
}

// Roots of 1 - 4x + 3x^2 + x^3 + x^5 = (1 - x - x^2)(1 - 3x + x^2 - x^3), as reciprocals
// of the roots of y^2 - y - 1 and y^3 - 3y^2 + y - 1.
std::array<Complex, 5> w_denominator_roots() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double r = wt_graphs_growth_constant();
    // Deflate y^3 - 3y^2 + y - 1 by (y - r): y^2 + (r - 3)y + (r^2 - 3r + 1).
    const double b = r - 3.0;
    const double c = r * r - 3.0 * r + 1.0;
    const Complex disc = std::sqrt(Complex(b * b - 4.0 * c, 0.0));
    const Complex y1 = (-b + disc) / 2.0;
    const Complex y2 = (-b - disc) / 2.0;
    return {Complex(1.0 / phi), Complex(-phi), Complex(1.0 / r), 1.0 / y1, 1.0 / y2};
}

}  // namespace

double wt_graphs_closed_form(std::size_t n) {
    const std::vector<double> num{0, 1, -2, -1, 0, -1};
    const std::vector<double> den{1, -4, 3, 1, 0, 1};
    std::vector<double> dden;
    for (std::size_t i = 1; i < den.size(); ++i) {
        dden.push_back(static_cast<double>(i) * den[i]);
    }
    // Numerator and denominator share the degree, so W = -1 + proper part and the
    // constant only affects x^0.
    std::vector<double> proper = num;
    for (std::size_t i = 0; i < den.size(); ++i) {
        proper[i] += den[i];
    }
    Complex total = 0;
    for (const Complex& rho : w_denominator_roots()) {
        total -= evaluate(proper, rho) / (evaluate(dden, rho) * std::pow(rho, static_cast<double>(n + 1)));
    }
    return total.real();
}

double bisect_root(const std::vector<double>& p, double lo, double hi) {
    auto f = [&](double x) { return evaluate(p, Complex(x)).real(); };
    double flo = f(lo);
    if ((flo < 0) == (f(hi) < 0)) {
        throw std::domain_error("bisection interval does not bracket a root");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = (lo + hi) / 2.0;
        const double fmid = f(mid);
        if ((fmid < 0) == (flo < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2.0;
}

double wt_graphs_growth_constant() {
    static const double root = bisect_root({-1.0, 1.0, -3.0, 1.0}, 2.0, 3.0);
    return root;
}

std::string_view to_string(CountName name) {
    switch (name) {
        case CountName::g: return "g";
        case CountName::h: return "h";
        case CountName::s: return "s";
        case CountName::w: return "w";
        case CountName::threshold: return "threshold";
    }
    return "?";
}

CountTable make_table(CountName name, std::size_t upto) {
    CountTable table{name, {}};
    const std::size_t first = (name == CountName::g || name == CountName::h) ? 4 : 1;
    for (std::size_t n = first; n <= upto; ++n) {
        switch (name) {
            case CountName::g: table.values[n] = count_indecomposable_sequences(n); break;
            case CountName::h: table.values[n] = count_indecomposable_graphs(n); break;
            case CountName::s: table.values[n] = count_wt_sequences(n); break;
            case CountName::w: table.values[n] = count_wt_graphs(n); break;
            case CountName::threshold: table.values[n] = count_threshold(n); break;
        }
    }
    return table;
}

std::map<std::size_t, BigRational> growth_ratios(const CountTable& table, std::size_t upto) {
    if (upto < 3) {
        throw OutOfDomain("growth ratios need upto >= 3");
    }
    std::map<std::size_t, BigRational> out;
    for (const auto& [n, value] : table.values) {
        if (n > upto) {
            break;
        }
        auto prev = table.values.find(n - 1);
        if (prev != table.values.end() && prev->second != 0) {
            out[n] = BigRational(value, prev->second);
        }
    }
    return out;
}

bool OracleReport::ok() const {
    bool good = expected_sequences == wt_sequences && expected_graphs == wt_graphs &&
                expected_threshold == threshold_graphs;
    if (n >= 4) {
        good = good && expected_indecomposable_sequences == indecomposable_sequences &&
               expected_indecomposable_graphs == indecomposable_graphs;
    }
    return good;
}

OracleReport oracle_crosscheck(std::size_t n) {
    if (n == 0 || n > kOracleGraphBound) {
        throw SizeLimit("oracle cross-check on " + std::to_string(n) + " vertices", kOracleGraphBound);
    }
    OracleReport report;
    report.n = n;
    for (const auto& d : enumerate_wt_sequences(n)) {
        ++report.wt_sequences;
        report.indecomposable_sequences += decompose_sequence(d).heads.empty();
    }
    for (const auto& form : enumerate_wt_graphs(n)) {
        const SimpleGraph g = graph_from_canonical(form);
        ++report.wt_graphs;
        report.indecomposable_graphs += is_indecomposable_graph(g);
        report.threshold_graphs += classify(degree_sequence(g)).threshold;
    }
    report.expected_sequences = count_wt_sequences(n);
    report.expected_graphs = count_wt_graphs(n);
    report.expected_threshold = count_threshold(n);
    if (n >= 4) {
        report.expected_indecomposable_sequences = count_indecomposable_sequences(n);
        report.expected_indecomposable_graphs = count_indecomposable_graphs(n);
    }
    return report;
}

}  // namespace wt
