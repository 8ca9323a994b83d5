#include "wt/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wt/errors.hpp"

namespace wt {

bool is_valid_split_partition(const SimpleGraph& g, const SplitPartition& p) {
    return (p.independent & p.clique).empty() && (p.independent | p.clique) == g.vertices() &&
           is_clique(g, p.clique) && is_independent(g, p.independent);
}

namespace {

// Visits every k-combination of `items` in lexicographic order until fn returns true.
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

constexpr std::size_t kMaxTieCombinations = 1U << 16;

}  // namespace

std::optional<SplitPartition> split_partition(const SimpleGraph& g) {
    const std::size_t n = g.order();
    const std::size_t m = corrected_durfee(degree_sequence(g));
    std::vector<Vertex> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    const std::size_t boundary = g.degree(by_degree[m - 1]);
    VertexSet must;
    std::vector<Vertex> tied;
    for (Vertex v : by_degree) {
        if (g.degree(v) > boundary) {
            must.insert(v);
        } else if (g.degree(v) == boundary) {
            tied.push_back(v);
        }
    }
    std::sort(tied.begin(), tied.end());
    const std::size_t need = m - must.size();

    std::optional<SplitPartition> found;
    std::size_t tries = 0;
    any_combination(tied, need, [&](VertexSet chosen) {
        const SplitPartition p{g.vertices() - (must | chosen), must | chosen};
        if (is_valid_split_partition(g, p)) {
            found = p;
            return true;
        }
        return ++tries >= kMaxTieCombinations;
    });
    return found;
}

std::optional<SplitPartition> split_partition_exhaustive(const SimpleGraph& g) {
    const std::size_t n = g.order();
    if (n > 20) {
        throw SizeLimit("exhaustive split partition search", 20);
    }
    std::optional<SplitPartition> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const SplitPartition p{g.vertices() - VertexSet(mask), VertexSet(mask)};
        if (!is_valid_split_partition(g, p)) {
            continue;
        }
        if (!best || p.clique.size() > best->clique.size() ||
            (p.clique.size() == best->clique.size() &&
             p.clique.to_vector() < best->clique.to_vector())) {
            best = p;
        }
    }
    return best;
}

namespace {

bool embeds(const SimpleGraph& g, const std::vector<Vertex>& subset, const SimpleGraph& f,
            std::vector<Vertex>& image, VertexSet used, std::size_t next) {
    if (next == f.order()) {
        return true;
    }
    const auto fv = static_cast<Vertex>(next);
    for (Vertex target : subset) {
        if (used.contains(target)) {
            continue;
        }
        bool ok = true;
        for (Vertex prev = 0; prev < fv && ok; ++prev) {
            ok = f.adjacent(prev, fv) == g.adjacent(image[prev], target);
        }
        if (!ok) {
            continue;
        }
        image[fv] = target;
        VertexSet now = used;
        now.insert(target);
        if (embeds(g, subset, f, image, now, next + 1)) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> contains_induced(const SimpleGraph& g, const SimpleGraph& f) {
    const std::size_t k = f.order();
    const std::size_t n = g.order();
    if (k > n) {
        return std::nullopt;
    }
    std::vector<std::size_t> f_degrees(k);
    for (Vertex v = 0; v < static_cast<Vertex>(k); ++v) {
        f_degrees[v] = f.degree(v);
    }
    std::sort(f_degrees.begin(), f_degrees.end());
    const std::size_t f_edges = f.edge_count();

    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::optional<std::vector<Vertex>> result;
    std::vector<std::size_t> degrees(k);
    std::vector<Vertex> image(k);
    any_combination(all, k, [&](VertexSet subset) {
        std::size_t i = 0;
        std::size_t twice_edges = 0;
        for (Vertex v : subset) {
            degrees[i] = (g.neighbors(v) & subset).size();
            twice_edges += degrees[i++];
        }
        if (twice_edges != 2 * f_edges) {
            return false;
        }
        std::sort(degrees.begin(), degrees.end());
        if (degrees != f_degrees) {
            return false;
        }
        auto list = subset.to_vector();
        if (embeds(g, list, f, image, VertexSet{}, 0)) {
            result = std::move(list);
            return true;
        }
        return false;
    });
    return result;
}

std::string_view to_string(ForbiddenGraph which) {
    switch (which) {
        case ForbiddenGraph::two_k2: return "2K2";
        case ForbiddenGraph::c4: return "C4";
        case ForbiddenGraph::c5: return "C5";
        case ForbiddenGraph::h: return "H";
        case ForbiddenGraph::h_complement: return "co-H";
        case ForbiddenGraph::s3: return "S3";
        case ForbiddenGraph::s3_complement: return "co-S3";
    }
    return "?";
}

const std::array<ForbiddenMember, 7>& forbidden_family() {
    static const std::array<ForbiddenMember, 7> family = [] {
        const SimpleGraph two_k2(4, {{0, 1}, {2, 3}});
        const SimpleGraph h(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
        const SimpleGraph s3(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
        return std::array<ForbiddenMember, 7>{{
            {ForbiddenGraph::two_k2, two_k2},
            {ForbiddenGraph::c4, named::cycle(4)},
            {ForbiddenGraph::c5, named::cycle(5)},
            {ForbiddenGraph::h, h},
            {ForbiddenGraph::h_complement, complement(h)},
            {ForbiddenGraph::s3, s3},
            {ForbiddenGraph::s3_complement, complement(s3)},
        }};
    }();
    return family;
}

ForbiddenCheck is_wt_by_forbidden(const SimpleGraph& g) {
    for (const auto& member : forbidden_family()) {
        if (auto hit = contains_induced(g, member.graph)) {
            return {false, ForbiddenWitness{member.which, std::move(*hit)}};
        }
    }
    return {true, std::nullopt};
}

bool is_module(const SimpleGraph& g, VertexSet m) {
    for (Vertex v : g.vertices() - m) {
        const auto seen = g.neighbors(v) & m;
        if (!seen.empty() && seen != m) {
            return false;
        }
    }
    return true;
}

VertexSet module_closure(const SimpleGraph& g, VertexSet seed) {
    VertexSet m = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        for (Vertex v : g.vertices() - m) {
            const auto seen = g.neighbors(v) & m;
            if (!seen.empty() && seen != m) {
                m.insert(v);
                grew = true;
            }
        }
    }
    return m;
}

std::vector<VertexSet> maximal_proper_modules(const SimpleGraph& g) {
    if (!is_connected(g) || !is_connected(complement(g))) {
        throw NotPrime("maximal proper modules need a graph and complement that are both connected");
    }
    const std::size_t n = g.order();
    std::vector<VertexSet> out;
    if (n == 1) {
        return out;
    }
    VertexSet assigned;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
        if (assigned.contains(v)) {
            continue;
        }
        VertexSet cls{v};
        for (Vertex u = v + 1; u < static_cast<Vertex>(n); ++u) {
            if (!assigned.contains(u) && module_closure(g, VertexSet{u, v}) != g.vertices()) {
                cls.insert(u);
            }
        }
        assigned = assigned | cls;
        out.push_back(cls);
    }
    return out;
}

std::vector<VertexSet> twins_and_clones(const SimpleGraph& g) {
    const std::size_t n = g.order();
    std::vector<VertexSet> out;
    VertexSet assigned;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
        if (assigned.contains(v)) {
            continue;
        }
        VertexSet cls{v};
        for (Vertex u = v + 1; u < static_cast<Vertex>(n); ++u) {
            if (g.neighbors(u) == g.neighbors(v) || g.closed_neighbors(u) == g.closed_neighbors(v)) {
                cls.insert(u);
            }
        }
        assigned = assigned | cls;
        out.push_back(cls);
    }
    return out;
}

std::vector<SimpleGraph> enumerate_graphs(std::size_t n) {
    if (n == 0 || n > 9) {
        throw SizeLimit("graph enumeration up to isomorphism", 9);
    }
    std::vector<SimpleGraph> level{SimpleGraph(1)};
    for (std::size_t k = 2; k <= n; ++k) {
        std::map<CanonicalForm, SimpleGraph> next;
        for (const auto& base : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                SimpleGraph g = base;
                g.add_vertex(VertexSet(mask));
                next.try_emplace(canonical_form(g), g);
            }
        }
        level.clear();
        for (auto& [form, g] : next) {
            level.push_back(std::move(g));
        }
    }
    return level;
}

}  // namespace wt
