#include "wt/decomp.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "wt/errors.hpp"

namespace wt {

SplittedGraph SplittedGraph::make(SimpleGraph graph, VertexSet independent, VertexSet clique) {
    if (!is_valid_split_partition(graph, SplitPartition{independent, clique})) {
        throw std::invalid_argument("not a split partition of the graph");
    }
    return SplittedGraph{std::move(graph), independent, clique};
}

CanonicalForm SplittedGraph::canonical() const {
    std::vector<int> colors(graph.order(), 0);
    for (Vertex v : clique) {
        colors[v] = 1;
    }
    return canonical_form(graph, colors);
}

namespace {

std::vector<Degree> parse_side(std::string_view text) {
    std::vector<Degree> out;
    if (text.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        Degree value = 0;
        const auto* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), last, value);
        if (token.empty() || ec != std::errc() || ptr != last || value < 0) {
            throw ParseError("bad splitted sequence term '" + std::string(token) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string join(const std::vector<Degree>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(terms[i]);
    }
    return out;
}

}  // namespace

SplittedSequence SplittedSequence::parse(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
        throw ParseError("splitted sequence needs exactly one ';'");
    }
    SplittedSequence s{parse_side(text.substr(0, semi)), parse_side(text.substr(semi + 1))};
    if (s.size() == 0) {
        throw ParseError("splitted sequence has no terms");
    }
    return s;
}

std::string SplittedSequence::to_string() const {
    return join(clique) + ';' + join(independent);
}

DegreeSequence SplittedSequence::terms() const {
    std::vector<Degree> all = clique;
    all.insert(all.end(), independent.begin(), independent.end());
    return DegreeSequence::normalize(std::move(all));
}

std::optional<SplittedGraph> realize_splitted(const SplittedSequence& s) {
    const std::size_t k = s.clique.size();
    const std::size_t r = s.independent.size();
    if (k + r == 0 || k + r > kMaxVertices) {
        return std::nullopt;
    }
    SimpleGraph g(k + r);
    std::vector<Degree> need(k);
    for (std::size_t i = 0; i < k; ++i) {
        need[i] = s.clique[i] - static_cast<Degree>(k - 1);
        if (need[i] < 0 || need[i] > static_cast<Degree>(r)) {
            return std::nullopt;
        }
        for (std::size_t j = i + 1; j < k; ++j) {
            g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    // Each independent vertex, largest demand first, takes the clique vertices with the
    // largest residual demand.
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return s.independent[a] > s.independent[b]; });
    for (std::size_t j : order) {
        const Degree want = s.independent[j];
        if (want > static_cast<Degree>(k)) {
            return std::nullopt;
        }
        std::vector<std::size_t> by_need(k);
        std::iota(by_need.begin(), by_need.end(), 0);
        std::stable_sort(by_need.begin(), by_need.end(),
                         [&](std::size_t a, std::size_t b) { return need[a] > need[b]; });
        for (Degree t = 0; t < want; ++t) {
            const std::size_t i = by_need[static_cast<std::size_t>(t)];
            if (need[i] == 0) {
                return std::nullopt;
            }
            --need[i];
            g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(k + j));
        }
    }
    if (std::any_of(need.begin(), need.end(), [](Degree x) { return x != 0; })) {
        return std::nullopt;
    }
    VertexSet clique = VertexSet::range(k);
    return SplittedGraph{std::move(g), VertexSet::range(k + r) - clique, clique};
}

bool is_valid_splitted(const SplittedSequence& s) {
    return realize_splitted(s).has_value();
}

SimpleGraph compose_graph(const SplittedGraph& head, const SimpleGraph& h) {
    const std::size_t offset = head.graph.order();
    SimpleGraph out(offset + h.order());
    for (const auto& [u, v] : head.graph.edges()) {
        out.add_edge(u, v);
    }
    for (const auto& [u, v] : h.edges()) {
        out.add_edge(static_cast<Vertex>(offset) + u, static_cast<Vertex>(offset) + v);
    }
    for (Vertex b : head.clique) {
        for (Vertex w = 0; w < static_cast<Vertex>(h.order()); ++w) {
            out.add_edge(b, static_cast<Vertex>(offset) + w);
        }
    }
    return out;
}

SplittedGraph compose_splitted(const SplittedGraph& head, const SplittedGraph& rest) {
    const auto shift = static_cast<unsigned>(head.graph.order());
    return SplittedGraph{compose_graph(head, rest.graph),
                         head.independent | VertexSet(rest.independent.bits() << shift),
                         head.clique | VertexSet(rest.clique.bits() << shift)};
}

DegreeSequence compose_sequence(const SplittedSequence& head, const DegreeSequence& e) {
    const auto k = static_cast<Degree>(head.clique.size());
    const auto m = static_cast<Degree>(e.size());
    std::vector<Degree> out;
    out.reserve(head.size() + e.size());
    for (Degree c : head.clique) {
        out.push_back(c + m);
    }
    for (Degree t : e.terms()) {
        out.push_back(t + k);
    }
    out.insert(out.end(), head.independent.begin(), head.independent.end());
    return DegreeSequence::normalize(std::move(out));
}

SplittedSequence compose_splitted(const SplittedSequence& head, const SplittedSequence& rest) {
    const auto k = static_cast<Degree>(head.clique.size());
    const auto m = static_cast<Degree>(rest.size());
    SplittedSequence out;
    for (Degree c : head.clique) {
        out.clique.push_back(c + m);
    }
    for (Degree c : rest.clique) {
        out.clique.push_back(c + k);
    }
    for (Degree a : rest.independent) {
        out.independent.push_back(a + k);
    }
    out.independent.insert(out.independent.end(), head.independent.begin(), head.independent.end());
    std::sort(out.clique.begin(), out.clique.end(), std::greater<>());
    std::sort(out.independent.begin(), out.independent.end(), std::greater<>());
    return out;
}

namespace {

bool is_head(const SimpleGraph& g, VertexSet independent, VertexSet clique) {
    const VertexSet rest = g.vertices() - (independent | clique);
    if (rest.empty() || !(independent & clique).empty() || (independent | clique).empty()) {
        return false;
    }
    if (!is_clique(g, clique) || !is_independent(g, independent)) {
        return false;
    }
    for (Vertex b : clique) {
        if (!rest.subset_of(g.neighbors(b))) {
            return false;
        }
    }
    for (Vertex a : independent) {
        if (!(g.neighbors(a) & rest).empty()) {
            return false;
        }
    }
    return true;
}

// k-combinations of `items` (lexicographic), each passed as a VertexSet; stops when fn
// returns true.
template <typename Fn>
bool any_combination(const std::vector<Vertex>& items, std::size_t k, Fn&& fn) {
    if (k > items.size()) {
        return false;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VertexSet chosen;
        for (auto i : idx) {
            chosen.insert(items[i]);
        }
        if (fn(chosen)) {
            return true;
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == items.size() - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return false;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

// Vertices forced into the top (or bottom) `count` positions by degree, plus the tied
// group at the cut from which the remainder must be chosen.
struct DegreeCut {
    VertexSet forced;
    std::vector<Vertex> tied;
    std::size_t choose = 0;
};

DegreeCut cut_top(const SimpleGraph& g, const std::vector<Vertex>& by_degree, std::size_t count) {
    DegreeCut cut;
    if (count == 0) {
        return cut;
    }
    const std::size_t boundary = g.degree(by_degree[count - 1]);
    for (Vertex v : by_degree) {
        if (g.degree(v) > boundary) {
            cut.forced.insert(v);
        } else if (g.degree(v) == boundary) {
            cut.tied.push_back(v);
        }
    }
    std::sort(cut.tied.begin(), cut.tied.end());
    cut.choose = count - cut.forced.size();
    return cut;
}

DegreeCut cut_bottom(const SimpleGraph& g, const std::vector<Vertex>& by_degree, std::size_t count) {
    DegreeCut cut;
    if (count == 0) {
        return cut;
    }
    const std::size_t boundary = g.degree(by_degree[by_degree.size() - count]);
    for (Vertex v : by_degree) {
        if (g.degree(v) < boundary) {
            cut.forced.insert(v);
        } else if (g.degree(v) == boundary) {
            cut.tied.push_back(v);
        }
    }
    std::sort(cut.tied.begin(), cut.tied.end());
    cut.choose = count - cut.forced.size();
    return cut;
}

}  // namespace

std::optional<HeadCandidate> find_head(const SimpleGraph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    for (std::size_t size = 1; size < n; ++size) {
        for (std::size_t p = size + 1; p-- > 0;) {
            const std::size_t q = size - p;
            const DegreeCut top = cut_top(g, by_degree, p);
            const DegreeCut bottom = cut_bottom(g, by_degree, q);
            std::optional<HeadCandidate> found;
            any_combination(top.tied, top.choose, [&](VertexSet b_extra) {
                const VertexSet clique = top.forced | b_extra;
                return any_combination(bottom.tied, bottom.choose, [&](VertexSet a_extra) {
                    const VertexSet independent = bottom.forced | a_extra;
                    if (is_head(g, independent, clique)) {
                        found = HeadCandidate{independent, clique};
                        return true;
                    }
                    return false;
                });
            });
            if (found) {
                return found;
            }
        }
    }
    return std::nullopt;
}

std::optional<HeadCandidate> find_head_exhaustive(const SimpleGraph& g) {
    const std::size_t n = g.order();
    if (n > 12) {
        throw SizeLimit("exhaustive head search", 12);
    }
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t size = 1; size < n; ++size) {
        for (std::size_t p = size + 1; p-- > 0;) {
            std::optional<HeadCandidate> found;
            any_combination(all, size, [&](VertexSet s) {
                const auto members = s.to_vector();
                return any_combination(members, p, [&](VertexSet clique) {
                    if (is_head(g, s - clique, clique)) {
                        found = HeadCandidate{s - clique, clique};
                        return true;
                    }
                    return false;
                });
            });
            if (found) {
                return found;
            }
        }
    }
    return std::nullopt;
}

namespace {

VertexSet to_local(VertexSet s, const std::vector<Vertex>& members) {
    VertexSet out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (s.contains(members[i])) {
            out.insert(static_cast<Vertex>(i));
        }
    }
    return out;
}

}  // namespace

GraphDecomposition decompose_graph(const SimpleGraph& g) {
    if (g.order() > kCanonicalMaxVertices) {
        throw SizeLimit("decomposition of a graph with " + std::to_string(g.order()) + " vertices",
                        kCanonicalMaxVertices);
    }
    GraphDecomposition dec{{}, g, {}};
    std::vector<Vertex> remaining(g.order());
    std::iota(remaining.begin(), remaining.end(), 0);
    while (true) {
        const SimpleGraph cur = g.induced(remaining);
        auto head = find_head(cur);
        if (!head && cur.order() < 12) {
            head = find_head_exhaustive(cur);
        }
        if (!head) {
            dec.tail = cur;
            dec.vertex_order.insert(dec.vertex_order.end(), remaining.begin(), remaining.end());
            return dec;
        }
        const VertexSet local = head->independent | head->clique;
        std::vector<Vertex> members;
        std::vector<Vertex> rest;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            (local.contains(static_cast<Vertex>(i)) ? members : rest).push_back(remaining[i]);
        }
        const auto local_members = local.to_vector();
        dec.heads.push_back(SplittedGraph{cur.induced(local_members),
                                          to_local(head->independent, local_members),
                                          to_local(head->clique, local_members)});
        dec.vertex_order.insert(dec.vertex_order.end(), members.begin(), members.end());
        remaining = std::move(rest);
    }
}

SimpleGraph recompose(const GraphDecomposition& dec) {
    SimpleGraph out = dec.tail;
    for (auto it = dec.heads.rbegin(); it != dec.heads.rend(); ++it) {
        out = compose_graph(*it, out);
    }
    return out;
}

SequenceDecomposition decompose_sequence(const DegreeSequence& d) {
    if (!is_graphic(d)) {
        throw NotGraphic(d.to_string() + " is not graphic");
    }
    SequenceDecomposition dec{{}, d};
    std::vector<Degree> cur(d.terms().begin(), d.terms().end());
    while (true) {
        const std::size_t n = cur.size();
        bool extracted = false;
        for (std::size_t size = 1; size < n && !extracted; ++size) {
            const auto r = static_cast<Degree>(n - size);
            for (std::size_t p = size + 1; p-- > 0 && !extracted;) {
                const std::size_t q = size - p;
                SplittedSequence head;
                for (std::size_t i = 0; i < p; ++i) {
                    head.clique.push_back(cur[i] - r);
                }
                head.independent.assign(cur.end() - static_cast<std::ptrdiff_t>(q), cur.end());
                std::vector<Degree> middle;
                bool nonnegative = true;
                for (std::size_t i = p; i < n - q; ++i) {
                    middle.push_back(cur[i] - static_cast<Degree>(p));
                    nonnegative = nonnegative && middle.back() >= 0;
                }
                if (!nonnegative ||
                    std::any_of(head.clique.begin(), head.clique.end(), [](Degree c) { return c < 0; })) {
                    continue;
                }
                const auto rest = DegreeSequence::normalize(middle);
                if (!is_graphic(rest) || !is_valid_splitted(head)) {
                    continue;
                }
                dec.heads.push_back(std::move(head));
                cur = std::move(middle);
                extracted = true;
            }
        }
        if (!extracted) {
            dec.tail = DegreeSequence::normalize(cur);
            return dec;
        }
    }
}

DegreeSequence recompose(const SequenceDecomposition& dec) {
    DegreeSequence out = dec.tail;
    for (auto it = dec.heads.rbegin(); it != dec.heads.rend(); ++it) {
        out = compose_sequence(*it, out);
    }
    return out;
}

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
};

}  // namespace

bool is_indecomposable_graph(const SimpleGraph& g) {
    const std::size_t n = g.order();
    if (n == 1) {
        return true;
    }
    DisjointSets sets(n);
    VertexSet covered;
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    any_combination(all, 4, [&](VertexSet quad) {
        std::size_t edges = 0;
        std::size_t ones = 0;
        for (Vertex v : quad) {
            const auto deg = (g.neighbors(v) & quad).size();
            edges += deg;
            ones += deg == 1;
        }
        edges /= 2;
        // 2K2: two edges, all degree 1. C4: four edges, all degree 2. P4: three edges, two ends.
        const bool hit = (edges == 2 && ones == 4) || (edges == 4 && ones == 0 &&
                                                       [&] {
                                                           for (Vertex v : quad) {
                                                               if ((g.neighbors(v) & quad).size() != 2) {
                                                                   return false;
                                                               }
                                                           }
                                                           return true;
                                                       }()) ||
                         (edges == 3 && ones == 2 && [&] {
                             for (Vertex v : quad) {
                                 if ((g.neighbors(v) & quad).size() == 0) {
                                     return false;
                                 }
                             }
                             return true;
                         }());
        if (hit) {
            const Vertex first = quad.first();
            for (Vertex v : quad) {
                sets.unite(static_cast<std::size_t>(first), static_cast<std::size_t>(v));
            }
            covered = covered | quad;
        }
        return false;
    });
    if (covered != g.vertices()) {
        return false;
    }
    const auto root = sets.find(0);
    for (std::size_t v = 1; v < n; ++v) {
        if (sets.find(v) != root) {
            return false;
        }
    }
    return true;
}

std::vector<Degree> head_differences(const SplittedSequence& s) {
    if (s.clique.empty()) {
        return {};
    }
    const EgProfile profile = eg_profile(s.terms());
    const std::size_t take = std::min(s.clique.size(), profile.m);
    return {profile.deltas.begin(), profile.deltas.begin() + static_cast<std::ptrdiff_t>(take)};
}

EgConcatenationReport check_eg_concatenation(const DegreeSequence& d) {
    EgConcatenationReport report{decompose_sequence(d), {}, eg_profile(d).deltas};
    for (const auto& head : report.decomposition.heads) {
        const auto part = head_differences(head);
        report.concatenated.insert(report.concatenated.end(), part.begin(), part.end());
    }
    const auto tail = eg_profile(report.decomposition.tail).deltas;
    report.concatenated.insert(report.concatenated.end(), tail.begin(), tail.end());
    return report;
}

}  // namespace wt
