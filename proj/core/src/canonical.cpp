#include "wt/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "wt/errors.hpp"
#include "wt/graph_io.hpp"

namespace wt {

namespace {

// Equitable-style refinement: a vertex's new color is the rank of
// (old color, sorted neighbor colors). Ranks come from sorting the signatures, so the
// result depends only on the isomorphism class of (g, initial colors).
std::vector<int> refine(const SimpleGraph& g, std::vector<int> colors) {
    const std::size_t n = g.order();
    std::size_t classes = 0;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
            auto& s = sig[v];
            s.push_back(colors[v]);
            for (Vertex u : g.neighbors(v)) {
                s.push_back(colors[u]);
            }
            std::sort(s.begin() + 1, s.end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sig) {
            rank.emplace(s, 0);
        }
        int next = 0;
        for (auto& [key, value] : rank) {
            value = next++;
        }
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
            colors[v] = rank[sig[v]];
        }
        if (rank.size() == classes) {
            return colors;
        }
        classes = rank.size();
    }
}

class Canonizer {
public:
    Canonizer(const SimpleGraph& g, std::vector<int> cells) : g_(g), n_(g.order()) {
        cell_of_position_.reserve(n_);
        std::vector<int> sorted = cells;
        std::sort(sorted.begin(), sorted.end());
        cell_of_position_ = sorted;
        cell_ = std::move(cells);

        twin_rep_.resize(n_);
        for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) {
            twin_rep_[v] = v;
            for (Vertex u = 0; u < v; ++u) {
                if (cell_[u] != cell_[v]) {
                    continue;
                }
                const auto nu = g_.neighbors(u) - VertexSet{v};
                const auto nv = g_.neighbors(v) - VertexSet{u};
                if (nu == nv) {
                    twin_rep_[v] = twin_rep_[u];
                    break;
                }
            }
        }
        order_.assign(n_, -1);
        cols_.assign(n_, 0);
    }

    std::vector<Vertex> run() {
        search(0, VertexSet{});
        return best_order_;
    }

private:
    int compare_prefix(std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i) {
            if (cols_[i] != best_cols_[i]) {
                return cols_[i] < best_cols_[i] ? -1 : 1;
            }
        }
        return 0;
    }

    void search(std::size_t pos, VertexSet used) {
        int cmp = -1;
        if (have_best_) {
            cmp = compare_prefix(pos);
            if (cmp > 0) {
                return;
            }
        }
        if (pos == n_) {
            if (cmp < 0) {
                best_cols_ = cols_;
                best_order_ = order_;
                have_best_ = true;
            }
            return;
        }
        const int cell = cell_of_position_[pos];
        std::uint64_t min_col = ~std::uint64_t{0};
        std::vector<std::pair<Vertex, std::uint64_t>> candidates;
        for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) {
            if (cell_[v] != cell || used.contains(v)) {
                continue;
            }
            std::uint64_t col = 0;
            for (std::size_t i = 0; i < pos; ++i) {
                col = (col << 1) | (g_.adjacent(order_[i], v) ? 1U : 0U);
            }
            candidates.emplace_back(v, col);
            min_col = std::min(min_col, col);
        }
        VertexSet tried_reps;
        for (const auto& [v, col] : candidates) {
            if (col != min_col || tried_reps.contains(twin_rep_[v])) {
                continue;
            }
            tried_reps.insert(twin_rep_[v]);
            order_[pos] = v;
            cols_[pos] = col;
            VertexSet next = used;
            next.insert(v);
            search(pos + 1, next);
        }
    }

    const SimpleGraph& g_;
    std::size_t n_;
    std::vector<int> cell_;
    std::vector<int> cell_of_position_;
    std::vector<Vertex> twin_rep_;
    std::vector<Vertex> order_;
    std::vector<std::uint64_t> cols_;
    std::vector<Vertex> best_order_;
    std::vector<std::uint64_t> best_cols_;
    bool have_best_ = false;
};

void check_size(const SimpleGraph& g) {
    if (g.order() > kCanonicalMaxVertices) {
        throw SizeLimit("canonical form of a graph with " + std::to_string(g.order()) + " vertices",
                        kCanonicalMaxVertices);
    }
}

}  // namespace

std::string CanonicalForm::hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 2);
    for (unsigned char c : code) {
        out += kDigits[c >> 4];
        out += kDigits[c & 0xF];
    }
    return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ParseError(std::string("bad hex digit '") + c + "'");
    };
    if (hex.size() % 2 != 0) {
        throw ParseError("hex string has odd length");
    }
    CanonicalForm form;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        form.code += static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1]));
    }
    return form;
}

std::vector<Vertex> canonical_order(const SimpleGraph& g, std::span<const int> colors) {
    check_size(g);
    if (!colors.empty() && colors.size() != g.order()) {
        throw std::invalid_argument("coloring must assign one color per vertex");
    }
    std::vector<int> initial(g.order(), 0);
    std::copy(colors.begin(), colors.end(), initial.begin());
    Canonizer canonizer(g, refine(g, std::move(initial)));
    return canonizer.run();
}

CanonicalForm canonical_form(const SimpleGraph& g) {
    const auto order = canonical_order(g);
    return CanonicalForm{to_graph6(g.relabeled(order))};
}

CanonicalForm canonical_form(const SimpleGraph& g, std::span<const int> colors) {
    const auto order = canonical_order(g, colors);
    CanonicalForm form{to_graph6(g.relabeled(order))};
    form.code += ':';
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i != 0) {
            form.code += ',';
        }
        form.code += std::to_string(colors[order[i]]);
    }
    return form;
}

SimpleGraph graph_from_canonical(const CanonicalForm& form) {
    const auto colon = form.code.find(':');
    return from_graph6(std::string_view(form.code).substr(0, colon));
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
        return false;
    }
    return canonical_form(a) == canonical_form(b);
}

}  // namespace wt
