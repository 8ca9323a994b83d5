#include "wt/buildkit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wt/errors.hpp"

namespace wt {

int op_type(OpKind kind) {
    switch (kind) {
        case OpKind::add_dominating:
        case OpKind::add_isolated: return 1;
        case OpKind::add_weakly_dominating:
        case OpKind::add_weakly_isolated: return 2;
        case OpKind::add_semijoined_p4: return 3;
    }
    return 0;
}

namespace {

bool has_target(OpKind kind) { return op_type(kind) == 2; }

}  // namespace

std::string BuildOp::to_string() const {
    switch (kind) {
        case OpKind::add_dominating: return "D";
        case OpKind::add_isolated: return "I";
        case OpKind::add_weakly_dominating: return "WD(" + std::to_string(target) + ")";
        case OpKind::add_weakly_isolated: return "WI(" + std::to_string(target) + ")";
        case OpKind::add_semijoined_p4: return "SP4";
    }
    return "?";
}

bool BuildOp::operator==(const BuildOp& o) const {
    return kind == o.kind && (!has_target(kind) || target == o.target);
}

namespace {

BuildOp parse_op(std::string_view token) {
    if (token == "D") {
        return BuildOp::dominating();
    }
    if (token == "I") {
        return BuildOp::isolated();
    }
    if (token == "SP4") {
        return BuildOp::semijoined_p4();
    }
    const bool wd = token.starts_with("WD(");
    const bool wi = token.starts_with("WI(");
    if ((wd || wi) && token.ends_with(")")) {
        const auto inner = token.substr(3, token.size() - 4);
        Vertex v = 0;
        const auto* last = inner.data() + inner.size();
        const auto [ptr, ec] = std::from_chars(inner.data(), last, v);
        if (!inner.empty() && ec == std::errc() && ptr == last && v >= 0) {
            return wd ? BuildOp::weakly_dominating(v) : BuildOp::weakly_isolated(v);
        }
    }
    throw ParseError("bad build op '" + std::string(token) + "'");
}

}  // namespace

BuildScript BuildScript::parse(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw ParseError("build script needs 'seed=...;ops=...'");
    }
    const auto seed = text.substr(0, semi);
    const auto ops = text.substr(semi + 1);
    BuildScript script;
    if (seed == "seed=K1") {
        script.seed = Seed::k1;
    } else if (seed == "seed=P4") {
        script.seed = Seed::p4;
    } else {
        throw ParseError("bad seed '" + std::string(seed) + "'");
    }
    if (!ops.starts_with("ops=")) {
        throw ParseError("build script needs 'ops='");
    }
    auto rest = ops.substr(4);
    // Commas inside WD(..) / WI(..) never occur, so a plain split is enough.
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        script.ops.push_back(parse_op(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
        if (rest.empty()) {
            throw ParseError("trailing ',' in build script");
        }
    }
    return script;
}

std::string BuildScript::to_string() const {
    std::string out = seed == Seed::k1 ? "seed=K1;ops=" : "seed=P4;ops=";
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += ops[i].to_string();
    }
    return out;
}

SimpleGraph seed_graph(Seed seed) {
    return seed == Seed::k1 ? SimpleGraph(1) : named::path(4);
}

namespace {

std::size_t max_degree(const SimpleGraph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

std::size_t min_degree(const SimpleGraph& g) {
    std::size_t best = g.order();
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        best = std::min(best, g.degree(v));
    }
    return best;
}

bool in_range(const SimpleGraph& g, Vertex v) {
    return v >= 0 && v < static_cast<Vertex>(g.order());
}

}  // namespace

bool is_valid_op(const SimpleGraph& g, const BuildOp& op) {
    switch (op.kind) {
        case OpKind::add_weakly_dominating:
            return in_range(g, op.target) && g.degree(op.target) == min_degree(g);
        case OpKind::add_weakly_isolated:
            return in_range(g, op.target) && g.degree(op.target) == max_degree(g);
        default: return true;
    }
}

SimpleGraph apply_op(const SimpleGraph& g, const BuildOp& op) {
    if (!is_valid_op(g, op)) {
        throw InvalidOperation(op.to_string() + " is not valid on a graph with " +
                               std::to_string(g.order()) + " vertices");
    }
    SimpleGraph out = g;
    const VertexSet old = g.vertices();
    switch (op.kind) {
        case OpKind::add_dominating: out.add_vertex(old); break;
        case OpKind::add_isolated: out.add_vertex(VertexSet{}); break;
        case OpKind::add_weakly_dominating: {
            VertexSet nbrs = old;
            nbrs.erase(op.target);
            out.add_vertex(nbrs);
            break;
        }
        case OpKind::add_weakly_isolated: out.add_vertex(VertexSet{op.target}); break;
        case OpKind::add_semijoined_p4: {
            const Vertex a = out.add_vertex(VertexSet{});
            const Vertex b = out.add_vertex(old | VertexSet{a});
            const Vertex c = out.add_vertex(old | VertexSet{b});
            out.add_vertex(VertexSet{c});
            break;
        }
    }
    return out;
}

SimpleGraph run_script(const BuildScript& script) {
    SimpleGraph g = seed_graph(script.seed);
    for (std::size_t i = 0; i < script.ops.size(); ++i) {
        if (!is_valid_op(g, script.ops[i])) {
            throw InvalidOperation(script.ops[i].to_string() + " is not valid here",
                                   static_cast<std::ptrdiff_t>(i));
        }
        g = apply_op(g, script.ops[i]);
    }
    return g;
}

std::string_view to_string(PeelCase c) {
    switch (c) {
        case PeelCase::isolated: return "isolated";
        case PeelCase::dominating: return "dominating";
        case PeelCase::weakly_isolated: return "weakly-isolated";
        case PeelCase::weakly_dominating: return "weakly-dominating";
        case PeelCase::semijoined_p4: return "semi-joined-P4";
    }
    return "?";
}

namespace {

std::optional<PeelCase> degree_case(const DegreeSequence& d) {
    const auto n = static_cast<Degree>(d.size());
    const auto last = d.size() - 1;
    if (d[last] == 0) {
        return PeelCase::isolated;
    }
    if (d[0] == n - 1) {
        return PeelCase::dominating;
    }
    if (n < 3) {
        return std::nullopt;
    }
    const bool two_ones = d[last - 1] == 1 && d[last] == 1;
    if (d[1] < d[0] && d[0] == n - 2 && two_ones) {
        return PeelCase::weakly_isolated;
    }
    if (d[0] == n - 2 && d[1] == n - 2 && d[last - 1] > 1 && d[last] == 1) {
        return PeelCase::weakly_dominating;
    }
    if (d[0] == n - 2 && d[1] == n - 2 && two_ones && corrected_durfee(d) >= 2 &&
        eg_difference(d, 2) == 0) {
        return PeelCase::semijoined_p4;
    }
    return std::nullopt;
}

void require_wt(const DegreeSequence& d) {
    if (!classify(d).weakly_threshold) {
        throw NotWeaklyThreshold(d.to_string() + " is not weakly threshold");
    }
}

}  // namespace

PeelCase peel_case(const DegreeSequence& d) {
    if (d.size() < 2) {
        throw OutOfDomain("peeling needs at least two vertices");
    }
    require_wt(d);
    if (auto c = degree_case(d)) {
        return *c;
    }
    throw std::logic_error("no reduction case applies to " + d.to_string());
}

namespace {

// Removable structures of g, lowest index first. Each returns the vertex (or path) to
// delete so that re-adding it is a valid op on what remains.

std::optional<Vertex> find_isolated(const SimpleGraph& g) {
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        if (g.degree(v) == 0) {
            return v;
        }
    }
    return std::nullopt;
}

std::optional<Vertex> find_dominating(const SimpleGraph& g) {
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        if (g.degree(v) + 1 == g.order()) {
            return v;
        }
    }
    return std::nullopt;
}

// v of degree 1 whose neighbor has maximum degree once v is gone.
std::optional<Vertex> find_weakly_isolated(const SimpleGraph& g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 1) {
            continue;
        }
        const Vertex u = g.neighbors(v).first();
        bool ok = true;
        for (Vertex x = 0; x < n && ok; ++x) {
            ok = x == u || x == v || g.degree(x) + 1 <= g.degree(u);
        }
        if (ok) {
            return v;
        }
    }
    return std::nullopt;
}

// w missing exactly one other vertex, which has minimum degree once w is gone.
std::optional<Vertex> find_weakly_dominating(const SimpleGraph& g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex w = 0; w < n; ++w) {
        if (g.degree(w) + 2 != g.order()) {
            continue;
        }
        VertexSet missing = g.vertices() - g.closed_neighbors(w);
        const Vertex s = missing.first();
        bool ok = true;
        for (Vertex x = 0; x < n && ok; ++x) {
            ok = x == s || x == w || g.degree(s) + 1 <= g.degree(x);
        }
        if (ok) {
            return w;
        }
    }
    return std::nullopt;
}

// Path a-b-c-d with midpoints complete and endpoints anticomplete to a nonempty rest.
std::optional<std::array<Vertex, 4>> find_semijoined_p4(const SimpleGraph& g) {
    const auto n = static_cast<Vertex>(g.order());
    if (n < 5) {
        return std::nullopt;
    }
    for (Vertex b = 0; b < n; ++b) {
        for (Vertex c : g.neighbors(b)) {
            for (Vertex a : g.neighbors(b)) {
                if (a == c || g.neighbors(a) != VertexSet{b}) {
                    continue;
                }
                for (Vertex d : g.neighbors(c)) {
                    if (d == b || g.neighbors(d) != VertexSet{c}) {
                        continue;
                    }
                    const VertexSet path{a, b, c, d};
                    const VertexSet rest = g.vertices() - path;
                    if (rest.subset_of(g.neighbors(b)) && rest.subset_of(g.neighbors(c))) {
                        return std::array<Vertex, 4>{a, b, c, d};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<Vertex, 4>> as_path(const SimpleGraph& g) {
    if (g.order() != 4 || g.edge_count() != 3) {
        return std::nullopt;
    }
    for (Vertex a = 0; a < 4; ++a) {
        if (g.degree(a) != 1) {
            continue;
        }
        const Vertex b = g.neighbors(a).first();
        const VertexSet next = g.neighbors(b) - VertexSet{a};
        if (next.size() != 1) {
            return std::nullopt;
        }
        const Vertex c = next.first();
        const VertexSet last = g.neighbors(c) - VertexSet{b};
        if (last.size() != 1) {
            return std::nullopt;
        }
        return std::array<Vertex, 4>{a, b, c, last.first()};
    }
    return std::nullopt;
}

}  // namespace

PeelStep peel(const SimpleGraph& g) {
    const PeelCase which = peel_case(degree_sequence(g));
    std::optional<Vertex> v;
    switch (which) {
        case PeelCase::isolated: v = find_isolated(g); break;
        case PeelCase::dominating: v = find_dominating(g); break;
        case PeelCase::weakly_isolated: v = find_weakly_isolated(g); break;
        case PeelCase::weakly_dominating: v = find_weakly_dominating(g); break;
        case PeelCase::semijoined_p4: {
            auto path = g.order() == 4 ? as_path(g) : find_semijoined_p4(g);
            if (path) {
                return PeelStep{which, VertexSet{(*path)[0], (*path)[1], (*path)[2], (*path)[3]}};
            }
            break;
        }
    }
    if (!v) {
        throw NotWeaklyThreshold("no removable " + std::string(to_string(which)) +
                                 " structure although the degrees call for one");
    }
    return PeelStep{which, VertexSet{*v}};
}

Recognition recognize(const SimpleGraph& g) {
    struct Removal {
        OpKind kind;
        std::vector<Vertex> added;  // original labels, in creation order
        Vertex target = -1;         // original label of skip/attach
    };
    std::vector<Removal> removals;
    std::vector<Vertex> alive(g.order());
    std::iota(alive.begin(), alive.end(), 0);

    Recognition result;
    std::optional<Seed> seed;
    std::vector<Vertex> seed_vertices;
    while (!seed) {
        const SimpleGraph cur = g.induced(alive);
        if (cur.order() == 1) {
            seed = Seed::k1;
            seed_vertices = alive;
            break;
        }
        if (auto path = as_path(cur)) {
            seed = Seed::p4;
            for (Vertex v : *path) {
                seed_vertices.push_back(alive[v]);
            }
            break;
        }
        Removal step{};
        if (auto v = find_isolated(cur)) {
            step = {OpKind::add_isolated, {alive[*v]}};
        } else if (auto v = find_dominating(cur)) {
            step = {OpKind::add_dominating, {alive[*v]}};
        } else if (auto v = find_weakly_isolated(cur)) {
            step = {OpKind::add_weakly_isolated, {alive[*v]}, alive[cur.neighbors(*v).first()]};
        } else if (auto v = find_weakly_dominating(cur)) {
            const Vertex s = (cur.vertices() - cur.closed_neighbors(*v)).first();
            step = {OpKind::add_weakly_dominating, {alive[*v]}, alive[s]};
        } else if (auto path = find_semijoined_p4(cur)) {
            step = {OpKind::add_semijoined_p4, {}};
            for (Vertex v : *path) {
                step.added.push_back(alive[v]);
            }
        } else {
            auto check = is_wt_by_forbidden(g);
            if (!check.witness) {
                throw std::logic_error("peeling stuck on a weakly threshold graph");
            }
            result.witness = std::move(check.witness);
            return result;
        }
        std::vector<Vertex> next;
        for (Vertex v : alive) {
            if (std::find(step.added.begin(), step.added.end(), v) == step.added.end()) {
                next.push_back(v);
            }
        }
        alive = std::move(next);
        removals.push_back(std::move(step));
    }

    BuildScript script{*seed, {}};
    std::vector<Vertex> order = seed_vertices;
    for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
        BuildOp op{it->kind, 0};
        if (has_target(it->kind)) {
            op.target = static_cast<Vertex>(std::find(order.begin(), order.end(), it->target) - order.begin());
        }
        script.ops.push_back(op);
        order.insert(order.end(), it->added.begin(), it->added.end());
    }
    result.script = std::move(script);
    result.vertex_order = std::move(order);
    return result;
}

namespace {

DegreeSequence reduce(const DegreeSequence& d, PeelCase which) {
    const auto t = d.terms();
    const std::size_t n = t.size();
    std::vector<Degree> out;
    switch (which) {
        case PeelCase::isolated: out.assign(t.begin(), t.end() - 1); break;
        case PeelCase::dominating:
            for (std::size_t i = 1; i < n; ++i) {
                out.push_back(t[i] - 1);
            }
            break;
        case PeelCase::weakly_isolated:
            out.assign(t.begin(), t.end() - 1);
            --out[0];
            break;
        case PeelCase::weakly_dominating:
            for (std::size_t i = 1; i + 1 < n; ++i) {
                out.push_back(t[i] - 1);
            }
            out.push_back(t[n - 1]);
            break;
        case PeelCase::semijoined_p4:
            for (std::size_t i = 2; i + 2 < n; ++i) {
                out.push_back(t[i] - 2);
            }
            break;
    }
    return DegreeSequence::normalize(std::move(out));
}

Vertex lowest_with_degree(const SimpleGraph& g, std::size_t degree) {
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        if (g.degree(v) == degree) {
            return v;
        }
    }
    throw std::logic_error("no vertex of the requested degree");
}

}  // namespace

BuildScript realize_script(const DegreeSequence& d) {
    require_wt(d);
    const DegreeSequence p4{2, 2, 1, 1};
    std::vector<PeelCase> chain;
    DegreeSequence cur = d;
    BuildScript script;
    while (true) {
        if (cur.size() == 1) {
            script.seed = Seed::k1;
            break;
        }
        if (cur == p4) {
            script.seed = Seed::p4;
            break;
        }
        const auto which = degree_case(cur);
        if (!which || !classify(cur).weakly_threshold) {
            throw std::logic_error("sequence reduction left the class at " + cur.to_string());
        }
        chain.push_back(*which);
        cur = reduce(cur, *which);
    }
    SimpleGraph g = seed_graph(script.seed);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        BuildOp op;
        switch (*it) {
            case PeelCase::isolated: op = BuildOp::isolated(); break;
            case PeelCase::dominating: op = BuildOp::dominating(); break;
            case PeelCase::weakly_isolated:
                op = BuildOp::weakly_isolated(lowest_with_degree(g, max_degree(g)));
                break;
            case PeelCase::weakly_dominating:
                op = BuildOp::weakly_dominating(lowest_with_degree(g, min_degree(g)));
                break;
            case PeelCase::semijoined_p4: op = BuildOp::semijoined_p4(); break;
        }
        g = apply_op(g, op);
        script.ops.push_back(op);
    }
    return script;
}

SimpleGraph realize(const DegreeSequence& d) {
    return run_script(realize_script(d));
}

std::set<CanonicalForm> enumerate_wt_graphs(std::size_t n, const EnumerationOptions& options) {
    if (n == 0 || n > kEnumerateGraphsBound) {
        throw SizeLimit("weakly threshold graph enumeration on " + std::to_string(n) + " vertices",
                        kEnumerateGraphsBound);
    }
    std::vector<std::map<CanonicalForm, SimpleGraph>> levels(n + 1);
    auto add = [&](SimpleGraph g) {
        auto form = canonical_form(g);
        levels[g.order()].try_emplace(std::move(form), std::move(g));
    };
    if (options.seed_k1) {
        add(seed_graph(Seed::k1));
    }
    if (options.seed_p4 && n >= 4) {
        add(seed_graph(Seed::p4));
    }
    for (std::size_t k = 1; k < n; ++k) {
        for (const auto& [form, g] : levels[k]) {
            if (options.type1) {
                add(apply_op(g, BuildOp::dominating()));
                add(apply_op(g, BuildOp::isolated()));
            }
            if (options.type2) {
                const auto lo = min_degree(g);
                const auto hi = max_degree(g);
                for (Vertex v = 0; v < static_cast<Vertex>(k); ++v) {
                    if (g.degree(v) == lo) {
                        add(apply_op(g, BuildOp::weakly_dominating(v)));
                    }
                    if (g.degree(v) == hi) {
                        add(apply_op(g, BuildOp::weakly_isolated(v)));
                    }
                }
            }
            if (options.type3 && k + 4 <= n) {
                add(apply_op(g, BuildOp::semijoined_p4()));
            }
        }
        levels[k].clear();
    }
    std::set<CanonicalForm> out;
    for (auto& [form, g] : levels[n]) {
        out.insert(form);
    }
    return out;
}

std::set<DegreeSequence> enumerate_wt_sequences(std::size_t n) {
    if (n == 0 || n > kEnumerateSequencesBound) {
        throw SizeLimit("weakly threshold sequence enumeration of length " + std::to_string(n),
                        kEnumerateSequencesBound);
    }
    std::set<DegreeSequence> out;
    for_each_nonincreasing(n, static_cast<Degree>(n) - 1, [&](const DegreeSequence& d) {
        if (classify(d).weakly_threshold) {
            out.insert(d);
        }
    });
    return out;
}

namespace {

// Relabels the skip/attach targets of ops[from..] by sigma (identity outside its domain).
void relabel_targets(std::vector<BuildOp>& ops, std::size_t from, const std::map<Vertex, Vertex>& sigma) {
    for (std::size_t i = from; i < ops.size(); ++i) {
        if (!has_target(ops[i].kind)) {
            continue;
        }
        if (auto it = sigma.find(ops[i].target); it != sigma.end()) {
            ops[i].target = it->second;
        }
    }
}

}  // namespace

BuildScript normalize_script(const BuildScript& s) {
    BuildScript out = s;
    auto& ops = out.ops;
    bool changed = true;
    while (changed) {
        changed = false;
        SimpleGraph g = seed_graph(out.seed);
        for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
            const BuildOp first = ops[i];
            const BuildOp second = ops[i + 1];
            if (op_type(first.kind) != 1 || op_type(second.kind) != 2) {
                g = apply_op(g, first);
                continue;
            }
            // g is the graph before the pair; x is the Type 1 vertex, v the Type 2 vertex.
            const auto big_n = static_cast<Vertex>(g.order());
            const Vertex x = big_n;
            const Vertex v = big_n + 1;
            const Vertex t = second.target;
            std::map<Vertex, Vertex> sigma;
            const bool same_side = (first.kind == OpKind::add_isolated) ==
                                   (second.kind == OpKind::add_weakly_isolated);
            if (same_side) {
                // I then WI(t), or D then WD(t): the Type 2 op moves first.
                if (t == x) {
                    ops[i] = BuildOp{second.kind, 0};
                    sigma = {{x, 0}, {v, big_n}, {0, big_n + 1}};
                } else {
                    ops[i] = second;
                    sigma = {{x, big_n + 1}, {v, big_n}};
                }
                ops[i + 1] = first;
            } else {
                // I then WD(t) becomes D then I; D then WI(t) becomes I then D.
                ops[i] = BuildOp{first.kind == OpKind::add_isolated ? OpKind::add_dominating
                                                                    : OpKind::add_isolated,
                                 0};
                ops[i + 1] = first;
                if (t == x) {
                    sigma = {{x, big_n + 1}, {v, big_n}};
                } else {
                    sigma = {{t, big_n + 1}, {x, t}, {v, big_n}};
                }
            }
            relabel_targets(ops, i + 2, sigma);
            changed = true;
            break;
        }
    }
    return out;
}

bool has_placement_property(const BuildScript& s) {
    bool type1_pending = false;
    for (const auto& op : s.ops) {
        switch (op_type(op.kind)) {
            case 1: type1_pending = true; break;
            case 2:
                if (type1_pending) {
                    return false;
                }
                break;
            case 3: type1_pending = false; break;
        }
    }
    return true;
}

}  // namespace wt
