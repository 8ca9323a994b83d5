#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracles.hpp"
#include "wt/canonical.hpp"
#include "wt/decomp.hpp"
#include "wt/errors.hpp"
#include "wt/graph.hpp"
#include "wt/graph_io.hpp"
#include "wt/structure.hpp"

using wt::SimpleGraph;
using wt::VertexSet;

namespace {

// 2^(n(n-1)/2) labeled graphs, n <= 6.
template <typename Fn>
void for_each_graph(std::size_t n, Fn&& fn) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        fn(oracle::from_mask(n, mask));
    }
}

}  // namespace

TEST(Graph, DegreeSequences) {
    EXPECT_EQ(wt::degree_sequence(wt::named::path(4)), wt::DegreeSequence({2, 2, 1, 1}));
    EXPECT_EQ(wt::degree_sequence(wt::named::complete(4)), wt::DegreeSequence({3, 3, 3, 3}));
    EXPECT_EQ(wt::degree_sequence(wt::named::chair()), wt::DegreeSequence({3, 2, 1, 1, 1}));
    EXPECT_EQ(wt::degree_sequence(wt::named::kite()), wt::DegreeSequence({3, 3, 3, 2, 1}));
}

TEST(Graph, SizeAndEdgeErrors) {
    EXPECT_THROW(SimpleGraph(0), wt::SizeLimit);
    EXPECT_THROW(SimpleGraph(65), wt::SizeLimit);
    SimpleGraph g(3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
}

TEST(Graph, Complement) {
    EXPECT_TRUE(wt::isomorphic(wt::complement(wt::named::path(4)), wt::named::path(4)));
    EXPECT_EQ(wt::complement(wt::named::complete(4)), wt::named::empty(4));
    for_each_graph(5, [](const SimpleGraph& g) { ASSERT_EQ(wt::complement(wt::complement(g)), g); });
}

TEST(Graph, InducedAndRelabeled) {
    const auto chair = wt::named::chair();
    const std::vector<wt::Vertex> keep{1, 2, 3};
    EXPECT_EQ(chair.induced(keep), wt::named::path(3));
    const std::vector<wt::Vertex> order{4, 1, 2, 3, 0};
    const auto r = chair.relabeled(order);
    EXPECT_TRUE(r.adjacent(0, 1));
    EXPECT_TRUE(r.adjacent(4, 1));
    EXPECT_FALSE(r.adjacent(0, 4));
}

TEST(GraphIo, EdgeListRoundTrip) {
    const auto p4 = wt::parse_edge_list("n=4;edges=0-1,1-2,2-3");
    EXPECT_EQ(p4, wt::named::path(4));
    EXPECT_EQ(wt::format_edge_list(p4), "n=4;edges=0-1,1-2,2-3");
    EXPECT_EQ(wt::parse_edge_list("n=3;edges="), SimpleGraph(3));
    EXPECT_THROW(wt::parse_edge_list("n=4;edges=0-4"), wt::ParseError);
    EXPECT_THROW(wt::parse_edge_list("n=4;edges=1-1"), wt::ParseError);
    EXPECT_THROW(wt::parse_edge_list("n=4;edges=0-"), wt::ParseError);
    EXPECT_THROW(wt::parse_edge_list("edges=0-1"), wt::ParseError);
}

// Reference strings produced by an external graph6 encoder.
TEST(GraphIo, Graph6Reference) {
    EXPECT_EQ(wt::to_graph6(wt::named::path(4)), "Ch");
    EXPECT_EQ(wt::to_graph6(SimpleGraph(1)), "@");
    EXPECT_EQ(wt::to_graph6(wt::named::cycle(5)), "Dhc");
    EXPECT_EQ(wt::to_graph6(wt::named::complete(4)), "C~");
    const auto long_path = wt::to_graph6(wt::named::path(64));
    EXPECT_EQ(long_path.substr(0, 14), "~?@?hCGGC@?G?_");
    EXPECT_EQ(wt::from_graph6(long_path), wt::named::path(64));
}

TEST(GraphIo, Graph6RoundTripAndErrors) {
    for_each_graph(5, [](const SimpleGraph& g) { ASSERT_EQ(wt::from_graph6(wt::to_graph6(g)), g); });
    EXPECT_THROW(wt::from_graph6("C"), wt::ParseError);
    EXPECT_THROW(wt::from_graph6(""), wt::ParseError);
}

TEST(Canonical, Examples) {
    EXPECT_EQ(wt::canonical_form(wt::named::path(4)), wt::canonical_form(wt::complement(wt::named::path(4))));
    const SimpleGraph c4a(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const SimpleGraph c4b(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    EXPECT_EQ(wt::canonical_form(c4a), wt::canonical_form(c4b));
    EXPECT_NE(wt::canonical_form(wt::named::chair()), wt::canonical_form(wt::named::kite()));
    EXPECT_THROW(wt::canonical_form(SimpleGraph(17)), wt::SizeLimit);
}

TEST(Canonical, HexRoundTripAndRepresentative) {
    const auto form = wt::canonical_form(wt::named::kite());
    EXPECT_EQ(wt::CanonicalForm::from_hex(form.hex()), form);
    EXPECT_TRUE(oracle::brute_isomorphic(wt::graph_from_canonical(form), wt::named::kite()));
}

// Equal forms exactly when the brute-force minimal code agrees.
TEST(Property, CanonicalFormAgreesWithBruteForce) {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::map<wt::CanonicalForm, std::string> seen;
        std::map<std::string, wt::CanonicalForm> back;
        for_each_graph(n, [&](const SimpleGraph& g) {
            const auto form = wt::canonical_form(g);
            const auto code = oracle::brute_code(g);
            auto [it, fresh] = seen.try_emplace(form, code);
            ASSERT_EQ(it->second, code);
            auto [jt, fresh2] = back.try_emplace(code, form);
            ASSERT_EQ(jt->second, form);
        });
    }
}

TEST(Property, CanonicalFormInvariantUnderRandomRelabeling) {
    std::mt19937_64 rng(20240611);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& g : wt::enumerate_graphs(n)) {
            const auto form = wt::canonical_form(g);
            for (int rep = 0; rep < 100; ++rep) {
                const auto perm = oracle::random_permutation(n, rng);
                ASSERT_EQ(wt::canonical_form(g.relabeled(perm)), form);
            }
        }
    }
}

TEST(Canonical, ColoredForms) {
    const auto p4 = wt::named::path(4);
    const std::vector<int> mids{0, 1, 1, 0};
    const std::vector<int> ends{1, 0, 0, 1};
    EXPECT_NE(wt::canonical_form(p4, mids), wt::canonical_form(p4, ends));
    const std::vector<wt::Vertex> flip{3, 2, 1, 0};
    EXPECT_EQ(wt::canonical_form(p4.relabeled(flip), mids), wt::canonical_form(p4, mids));
}

TEST(Enumeration, IsomorphismClassCounts) {
    // Graphs on n unlabeled vertices: 1, 2, 4, 11, 34, 156, 1044.
    const std::vector<std::size_t> known{1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 1; n <= known.size(); ++n) {
        EXPECT_EQ(wt::enumerate_graphs(n).size(), known[n - 1]) << "n=" << n;
    }
}

TEST(SplitPartition, Examples) {
    const auto paw = wt::named::paw();
    const auto p = wt::split_partition(paw);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->clique, (VertexSet{0, 1, 2}));
    EXPECT_EQ(p->independent, (VertexSet{3}));
    EXPECT_FALSE(wt::split_partition(wt::named::cycle(4)));
    const auto k1 = wt::split_partition(SimpleGraph(1));
    ASSERT_TRUE(k1);
    EXPECT_EQ(k1->clique, (VertexSet{0}));
    EXPECT_TRUE(k1->independent.empty());
}

TEST(Property, SplitPartitionMatchesCriterionAndOracle) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_graph(n, [](const SimpleGraph& g) {
            const auto d = wt::degree_sequence(g);
            const bool by_degrees = wt::eg_profile(d).deltas.back() == 0;
            const auto p = wt::split_partition(g);
            ASSERT_EQ(p.has_value(), by_degrees) << wt::format_edge_list(g);
            ASSERT_EQ(by_degrees, oracle::brute_split(g));
            ASSERT_EQ(wt::split_partition_exhaustive(g).has_value(), by_degrees);
            if (p) {
                ASSERT_TRUE(wt::is_valid_split_partition(g, *p));
            }
        });
    }
    for (const auto& g : wt::enumerate_graphs(7)) {
        const bool by_degrees = wt::eg_profile(wt::degree_sequence(g)).deltas.back() == 0;
        ASSERT_EQ(wt::split_partition(g).has_value(), by_degrees);
    }
}

TEST(Property, WeaklyThresholdGraphsAreSplit) {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& g : wt::enumerate_graphs(n)) {
            if (wt::classify(wt::degree_sequence(g)).weakly_threshold) {
                ASSERT_TRUE(wt::split_partition(g)) << wt::format_edge_list(g);
            }
        }
    }
}

TEST(ContainsInduced, Examples) {
    const auto c5 = wt::named::cycle(5);
    const auto hit = wt::contains_induced(c5, wt::named::path(4));
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->size(), 4u);
    EXPECT_TRUE(wt::isomorphic(c5.induced(*hit), wt::named::path(4)));

    const SimpleGraph two_k2(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(wt::contains_induced(wt::named::complete(4), two_k2));

    const auto& h = wt::forbidden_family()[3].graph;
    EXPECT_EQ(wt::contains_induced(h, two_k2).has_value(), oracle::brute_contains(h, two_k2));
    EXPECT_FALSE(oracle::brute_contains(h, two_k2));
}

TEST(Property, ContainsInducedAgreesWithBruteForce) {
    const std::vector<SimpleGraph> patterns{wt::named::path(4), SimpleGraph(4, {{0, 1}, {2, 3}}),
                                            wt::named::cycle(4), wt::named::paw(), wt::named::cycle(5)};
    for (const auto& g : wt::enumerate_graphs(6)) {
        for (const auto& f : patterns) {
            const auto hit = wt::contains_induced(g, f);
            ASSERT_EQ(hit.has_value(), oracle::brute_contains(g, f));
            if (hit) {
                ASSERT_TRUE(oracle::brute_isomorphic(g.induced(*hit), f));
            }
        }
    }
}

TEST(Forbidden, FamilyMatchesHandBuiltGraphs) {
    const auto& family = wt::forbidden_family();
    const auto by_hand = oracle::forbidden_by_hand();
    ASSERT_EQ(family.size(), by_hand.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        EXPECT_EQ(wt::to_string(family[i].which), by_hand[i].first);
        EXPECT_TRUE(oracle::brute_isomorphic(family[i].graph, by_hand[i].second)) << by_hand[i].first;
    }
    EXPECT_EQ(wt::degree_sequence(family[3].graph), wt::DegreeSequence({3, 3, 1, 1, 1, 1}));
    EXPECT_EQ(wt::degree_sequence(family[5].graph), wt::DegreeSequence({3, 3, 3, 1, 1, 1}));
    EXPECT_TRUE(wt::isomorphic(wt::complement(family[0].graph), wt::named::cycle(4)));
}

TEST(Forbidden, Examples) {
    EXPECT_TRUE(wt::is_wt_by_forbidden(wt::named::path(4)).weakly_threshold);
    const auto c5 = wt::is_wt_by_forbidden(wt::named::cycle(5));
    EXPECT_FALSE(c5.weakly_threshold);
    ASSERT_TRUE(c5.witness);
    EXPECT_EQ(c5.witness->member, wt::ForbiddenGraph::c5);
    EXPECT_EQ(c5.witness->vertices, (std::vector<wt::Vertex>{0, 1, 2, 3, 4}));
    EXPECT_TRUE(wt::is_wt_by_forbidden(wt::named::chair()).weakly_threshold);
}

TEST(Property, ForbiddenAgreesWithDegreesAndComplement) {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& g : wt::enumerate_graphs(n)) {
            const auto check = wt::is_wt_by_forbidden(g);
            ASSERT_EQ(check.weakly_threshold, wt::classify(wt::degree_sequence(g)).weakly_threshold)
                << wt::format_edge_list(g);
            ASSERT_EQ(check.weakly_threshold, wt::is_wt_by_forbidden(wt::complement(g)).weakly_threshold);
            if (check.witness) {
                const auto& member = wt::forbidden_family()[static_cast<std::size_t>(check.witness->member)];
                ASSERT_TRUE(wt::isomorphic(g.induced(check.witness->vertices), member.graph));
            }
        }
    }
}

TEST(Property, ForbiddenAgreesWithBruteForceOracle) {
    for (const auto& g : wt::enumerate_graphs(6)) {
        ASSERT_EQ(wt::is_wt_by_forbidden(g).weakly_threshold, oracle::brute_wt(g));
    }
}

TEST(Modules, Examples) {
    const auto chair = wt::named::chair();
    const auto mods = wt::maximal_proper_modules(chair);
    EXPECT_NE(std::find(mods.begin(), mods.end(), VertexSet{0, 4}), mods.end());

    const auto p4 = wt::maximal_proper_modules(wt::named::path(4));
    EXPECT_EQ(p4, (std::vector<VertexSet>{{0}, {1}, {2}, {3}}));

    const auto kite = wt::maximal_proper_modules(wt::named::kite());
    std::vector<std::uint64_t> bits;
    for (auto m : kite) {
        bits.push_back(m.bits());
    }
    EXPECT_EQ(bits, oracle::brute_maximal_modules(wt::named::kite()));

    EXPECT_THROW(wt::maximal_proper_modules(wt::named::paw()), wt::NotPrime);
}

TEST(Property, MaximalModulesAgreeWithBruteForce) {
    for (std::size_t n = 2; n <= 7; ++n) {
        for (const auto& g : wt::enumerate_graphs(n)) {
            if (!wt::is_connected(g) || !wt::is_connected(wt::complement(g))) {
                continue;
            }
            std::vector<std::uint64_t> bits;
            for (auto m : wt::maximal_proper_modules(g)) {
                ASSERT_TRUE(wt::is_module(g, m));
                bits.push_back(m.bits());
            }
            ASSERT_EQ(bits, oracle::brute_maximal_modules(g)) << wt::format_edge_list(g);
        }
    }
}

TEST(TwinsAndClones, Examples) {
    const auto chair = wt::twins_and_clones(wt::named::chair());
    EXPECT_EQ(chair, (std::vector<VertexSet>{{0, 4}, {1}, {2}, {3}}));
    EXPECT_EQ(wt::twins_and_clones(wt::named::complete(3)), (std::vector<VertexSet>{{0, 1, 2}}));
    EXPECT_EQ(wt::twins_and_clones(wt::named::path(4)), (std::vector<VertexSet>{{0}, {1}, {2}, {3}}));
}

// In an indecomposable split graph, each maximal proper module sits on one side of the
// split partition. Checked for every partition built from a maximum clique or a maximum
// independent set.
TEST(Property, ModulesOfIndecomposableSplitGraphsStayOnOneSide) {
    std::size_t checked = 0;
    for (std::size_t n = 4; n <= 7; ++n) {
        for (const auto& g : wt::enumerate_graphs(n)) {
            if (!wt::split_partition(g) || !wt::decompose_graph(g).heads.empty()) {
                continue;
            }
            const std::uint64_t all = g.vertices().bits();
            std::vector<std::uint64_t> sides;
            for (auto k : oracle::maximum_cliques(g)) {
                if (wt::is_independent(g, VertexSet(all & ~k))) {
                    sides.push_back(k);
                }
            }
            for (auto s : oracle::maximum_independent_sets(g)) {
                if (wt::is_clique(g, VertexSet(all & ~s))) {
                    sides.push_back(all & ~s);
                }
            }
            ASSERT_FALSE(sides.empty());
            for (auto m : wt::maximal_proper_modules(g)) {
                const auto bits = m.bits();
                for (auto k : sides) {
                    ASSERT_TRUE((bits & ~k) == 0 || (bits & k) == 0) << wt::format_edge_list(g);
                }
            }
            ++checked;
        }
    }
    EXPECT_GT(checked, 0u);
}
