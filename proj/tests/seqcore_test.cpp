#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "wt/errors.hpp"
#include "wt/sequence.hpp"

using wt::DegreeSequence;

namespace {

std::vector<long> as_longs(const DegreeSequence& d) {
    return {d.terms().begin(), d.terms().end()};
}

}  // namespace

TEST(Normalize, SortsNonincreasing) {
    EXPECT_EQ(DegreeSequence::normalize({1, 2, 2, 3}), DegreeSequence({3, 2, 2, 1}));
    EXPECT_EQ(DegreeSequence::normalize({0}).size(), 1u);
    EXPECT_EQ(DegreeSequence::normalize({1, 1, 1, 1, 0}).to_string(), "1,1,1,1,0");
}

TEST(Normalize, RejectsBadInput) {
    EXPECT_THROW(DegreeSequence::normalize({}), wt::EmptySequence);
    EXPECT_THROW(DegreeSequence::normalize({2, -1}), wt::NegativeTerm);
    EXPECT_THROW(DegreeSequence::parse("x,y"), wt::ParseError);
    EXPECT_THROW(DegreeSequence::parse("1,,2"), wt::ParseError);
    EXPECT_EQ(DegreeSequence::parse("1,3,2").to_string(), "3,2,1");
}

TEST(Durfee, Examples) {
    EXPECT_EQ(wt::corrected_durfee({1, 1, 1, 1, 0}), 2u);
    EXPECT_EQ(wt::corrected_durfee({2, 2, 1, 1}), 2u);
    EXPECT_EQ(wt::corrected_durfee({7, 7, 3, 3, 3, 3, 2, 1, 1}), 4u);
    EXPECT_EQ(wt::corrected_durfee({0}), 1u);
}

TEST(EgDifference, Examples) {
    EXPECT_EQ(wt::eg_difference({2, 2, 1, 1}, 1), 1);
    EXPECT_EQ(wt::eg_difference({2, 2, 1, 1}, 2), 0);
    EXPECT_EQ(wt::eg_difference({1, 1, 1, 1, 0}, 1), 2);
    EXPECT_EQ(wt::eg_difference({3, 3, 1, 1}, 2), -2);
}

TEST(EgDifference, IndexOutOfRange) {
    EXPECT_THROW(wt::eg_difference({2, 2, 1, 1}, 0), wt::IndexOutOfRange);
    EXPECT_THROW(wt::eg_difference({2, 2, 1, 1}, 3), wt::IndexOutOfRange);
}

TEST(EgProfile, Examples) {
    EXPECT_EQ(wt::eg_profile({2, 2, 1, 1}), (wt::EgProfile{2, {1, 0}}));
    EXPECT_EQ(wt::eg_profile({3, 2, 2, 1}), (wt::EgProfile{3, {0, 0, 0}}));
    EXPECT_EQ(wt::eg_profile({7, 7, 3, 3, 3, 3, 2, 1, 1}), (wt::EgProfile{4, {1, 0, 2, 2}}));
    EXPECT_EQ(wt::eg_profile({0}), (wt::EgProfile{1, {0}}));
}

TEST(IsGraphic, Examples) {
    EXPECT_TRUE(wt::is_graphic({3, 2, 2, 1}));
    EXPECT_FALSE(wt::is_graphic({3, 3, 1, 1}));
    EXPECT_FALSE(wt::is_graphic({1, 1, 1}));
    EXPECT_FALSE(wt::is_graphic({5, 1, 1, 1, 1, 0}));
    EXPECT_TRUE(wt::is_graphic({4, 1, 1, 1, 1, 0}));
}

TEST(Classify, Examples) {
    using C = wt::SequenceClass;
    EXPECT_EQ(wt::classify({2, 2, 1, 1}), (C{true, true, true, false}));
    EXPECT_EQ(wt::classify({3, 3, 2, 1, 1}), (C{true, true, true, false}));
    EXPECT_EQ(wt::classify({2, 2, 2, 2}), (C{true, false, false, false}));
    EXPECT_EQ(wt::classify({3, 1, 1, 1}), (C{true, true, true, true}));
    EXPECT_EQ(wt::classify({1, 1, 1}), (C{}));
}

TEST(Ferrers, PathDiagramAndCounts) {
    const auto f = wt::ferrers({2, 2, 1, 1});
    EXPECT_EQ(wt::render_ferrers(f), "* 1 1 0\n1 * 1 0\n1 0 * 0\n1 0 0 *\n");
    EXPECT_EQ(f.ones_below(1), 3);
    EXPECT_EQ(f.ones_right(1), 2);
}

TEST(Ferrers, SmallRenders) {
    EXPECT_EQ(wt::render_ferrers(wt::ferrers({0})), "*\n");
    EXPECT_EQ(wt::render_ferrers(wt::ferrers({1, 0})), "* 1\n0 *\n");
    EXPECT_THROW(wt::ferrers({3, 1, 0}), wt::RowOverflow);
}

TEST(Ferrers, CompositionBlocks) {
    const auto f = wt::ferrers({7, 7, 3, 3, 3, 3, 2, 1, 1});
    EXPECT_EQ(wt::render_ferrers(f),
              "* 1 1 1 1 1 1 1 0\n"
              "1 * 1 1 1 1 1 1 0\n"
              "1 1 * 1 0 0 0 0 0\n"
              "1 1 1 * 0 0 0 0 0\n"
              "1 1 1 0 * 0 0 0 0\n"
              "1 1 1 0 0 * 0 0 0\n"
              "1 1 0 0 0 0 * 0 0\n"
              "1 0 0 0 0 0 0 * 0\n"
              "1 0 0 0 0 0 0 0 *\n");
}

// Row i holds d_i ones, left-justified, skipping the diagonal.
TEST(Ferrers, RowsFollowDefinition) {
    for (std::size_t n = 1; n <= 6; ++n) {
        wt::for_each_nonincreasing(n, static_cast<wt::Degree>(n) - 1, [&](const DegreeSequence& d) {
            const auto f = wt::ferrers(d);
            for (std::size_t i = 0; i < n; ++i) {
                wt::Degree left = d[i];
                for (std::size_t j = 0; j < n; ++j) {
                    wt::Cell want = wt::Cell::zero;
                    if (i == j) {
                        want = wt::Cell::star;
                    } else if (left > 0) {
                        want = wt::Cell::one;
                        --left;
                    }
                    ASSERT_EQ(f.at(i, j), want) << d.to_string() << " at " << i << "," << j;
                }
            }
        });
    }
}

TEST(Property, DifferenceEqualsBelowMinusRight) {
    for (std::size_t n = 1; n <= 7; ++n) {
        wt::for_each_nonincreasing(n, static_cast<wt::Degree>(n) - 1, [&](const DegreeSequence& d) {
            const auto f = wt::ferrers(d);
            const auto m = wt::corrected_durfee(d);
            for (std::size_t k = 1; k <= m; ++k) {
                ASSERT_EQ(wt::eg_difference(d, k), f.ones_below(k) - f.ones_right(k)) << d.to_string();
            }
        });
    }
}

TEST(Property, DifferencesMatchDefinitionOracle) {
    for (std::size_t n = 1; n <= 7; ++n) {
        wt::for_each_nonincreasing(n, static_cast<wt::Degree>(n) + 1, [&](const DegreeSequence& d) {
            const auto terms = as_longs(d);
            const auto m = wt::corrected_durfee(d);
            ASSERT_EQ(m, oracle::durfee(terms));
            for (std::size_t k = 1; k <= m; ++k) {
                ASSERT_EQ(wt::eg_difference(d, k), oracle::eg_delta(terms, k));
            }
        });
    }
}

TEST(Property, LastDifferenceEvenForGraphic) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& d : wt::graphic_sequences(n)) {
            const auto p = wt::eg_profile(d);
            ASSERT_EQ(p.deltas.back() % 2, 0) << d.to_string();
        }
    }
}

TEST(Property, GraphicAgreesWithHavelHakimiAndRealizationSearch) {
    for (std::size_t n = 1; n <= 7; ++n) {
        wt::for_each_nonincreasing(n, static_cast<wt::Degree>(n), [&](const DegreeSequence& d) {
            ASSERT_EQ(wt::is_graphic(d), oracle::havel_hakimi(as_longs(d))) << d.to_string();
        });
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        wt::for_each_nonincreasing(n, static_cast<wt::Degree>(n) - 1, [&](const DegreeSequence& d) {
            ASSERT_EQ(wt::is_graphic(d), oracle::has_realization(as_longs(d))) << d.to_string();
        });
    }
}

TEST(Property, ClassFlagChain) {
    for (std::size_t n = 1; n <= 7; ++n) {
        wt::for_each_nonincreasing(n, static_cast<wt::Degree>(n), [&](const DegreeSequence& d) {
            const auto c = wt::classify(d);
            ASSERT_TRUE(!c.threshold || c.weakly_threshold);
            ASSERT_TRUE(!c.weakly_threshold || c.split);
            ASSERT_TRUE(!c.split || c.graphic);
        });
    }
}

TEST(Property, ThresholdSequencesNumberPowerOfTwo) {
    for (std::size_t n = 1; n <= 8; ++n) {
        std::size_t count = 0;
        for (const auto& d : wt::graphic_sequences(n)) {
            count += wt::classify(d).threshold;
        }
        EXPECT_EQ(count, std::size_t{1} << (n - 1)) << "n=" << n;
    }
}

TEST(Enumeration, GraphicSequenceCounts) {
    // Graphic sequences of length n including zeros: 1, 2, 4, 11, 31, 102, 342, 1213.
    const std::vector<std::size_t> known{1, 2, 4, 11, 31, 102, 342, 1213};
    for (std::size_t n = 1; n <= known.size(); ++n) {
        EXPECT_EQ(wt::graphic_sequences(n).size(), known[n - 1]) << "n=" << n;
    }
}
