#include "wt/majorize.hpp"

#include <algorithm>

#include "wt/errors.hpp"

namespace wt {

bool majorizes(const DegreeSequence& p, const DegreeSequence& q) {
    if (p.sum() != q.sum()) {
        return false;
    }
    const std::size_t len = std::max(p.size(), q.size());
    Degree sp = 0;
    Degree sq = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sp += i < p.size() ? p[i] : 0;
        sq += i < q.size() ? q[i] : 0;
        if (sp < sq) {
            return false;
        }
    }
    return true;
}

bool is_applicable(const DegreeSequence& a, const UnitTransformation& t) {
    return t.from < a.size() && t.to < a.size() && a[t.from] >= a[t.to] + 2;
}

DegreeSequence apply_unit_transformation(const DegreeSequence& a, const UnitTransformation& t) {
    if (!is_applicable(a, t)) {
        throw InvalidTransformation("unit transformation (" + std::to_string(t.from) + " -> " +
                                    std::to_string(t.to) + ") not applicable to " + a.to_string());
    }
    std::vector<Degree> terms(a.terms().begin(), a.terms().end());
    --terms[t.from];
    ++terms[t.to];
    return DegreeSequence::normalize(std::move(terms));
}

std::set<DegreeSequence> downward_neighbors(const DegreeSequence& a) {
    std::set<DegreeSequence> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            const UnitTransformation t{i, j};
            if (is_applicable(a, t)) {
                out.insert(apply_unit_transformation(a, t));
            }
        }
    }
    return out;
}

std::set<DegreeSequence> upward_neighbors(const DegreeSequence& a) {
    // e -> a moves a unit from e_i down to e_j with e_i >= e_j + 2, so a has a_i + 1 and
    // a_j - 1 with a_i + 1 >= a_j - 1 + 2, i.e. a_i >= a_j.
    std::set<DegreeSequence> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i == j || a[j] == 0 || a[i] < a[j]) {
                continue;
            }
            std::vector<Degree> terms(a.terms().begin(), a.terms().end());
            ++terms[i];
            --terms[j];
            out.insert(DegreeSequence::normalize(std::move(terms)));
        }
    }
    return out;
}

namespace {

void check_bound(std::size_t n) {
    if (n > kMajorizeOracleBound) {
        throw SizeLimit("exhaustive majorization search over sequences of length " +
                            std::to_string(n),
                        kMajorizeOracleBound);
    }
}

std::vector<DegreeSequence> graphic_with_sum(std::size_t n, Degree sum) {
    std::vector<DegreeSequence> out;
    for (auto& d : graphic_sequences(n)) {
        if (d.sum() == sum) {
            out.push_back(std::move(d));
        }
    }
    return out;
}

}  // namespace

bool is_majorization_maximal(const DegreeSequence& d) {
    if (!is_graphic(d)) {
        throw NotGraphic(d.to_string() + " is not graphic");
    }
    check_bound(d.size());
    for (const auto& e : graphic_with_sum(d.size(), d.sum())) {
        if (e != d && majorizes(e, d)) {
            return false;
        }
    }
    return true;
}

UpwardClosureReport verify_upward_closure(std::size_t n, long sum) {
    check_bound(n);
    UpwardClosureReport report;
    report.n = n;
    report.sum = sum;
    const auto pool = graphic_with_sum(n, sum);
    report.graphic_sequences = pool.size();
    for (const auto& d : pool) {
        if (!classify(d).weakly_threshold) {
            continue;
        }
        for (const auto& e : pool) {
            if (!majorizes(e, d)) {
                continue;
            }
            ++report.pairs_checked;
            if (!classify(e).weakly_threshold) {
                report.counterexamples.emplace_back(d, e);
            }
        }
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    return report;
}

}  // namespace wt
