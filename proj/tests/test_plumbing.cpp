#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "cqs/chains.hpp"
#include "cqs/plumbing.hpp"
#include "cqs/quotient.hpp"
#include "oracles.hpp"

namespace cqs {
namespace {

std::vector<Weight> weights_along_path(const PlumbingGraph& g) {
    std::vector<Weight> w;
    for (VertexId v : g.path_order()) w.push_back(g.weight(v));
    return w;
}

PlumbingGraph chain_with_arrows(std::vector<Weight> w, std::vector<std::int64_t> arrows) {
    return linear_chain_with_arrows(w, arrows);
}

RecognitionResult lens(std::int64_t n, std::int64_t q) { return LensSpace(n, q); }

PlumbingGraph random_order_reduce(PlumbingGraph g, std::mt19937& rng) {
    for (;;) {
        auto moves = eligible_moves(g);
        if (moves.empty()) return g;
        g = apply_move(g, moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
    }
}

TEST(PlumbingGraph, ConstructionValidates) {
    EXPECT_THROW(PlumbingGraph({{1, 0}, {1, 2}}, {}), std::invalid_argument);
    EXPECT_THROW(PlumbingGraph({{1, 0}}, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(PlumbingGraph({{1, 0}}, {{1, 2}}), std::invalid_argument);
    EXPECT_THROW(PlumbingGraph({{1, 0}, {2, 0}}, {{1, 2}, {2, 1}}), std::invalid_argument);
    EXPECT_THROW(PlumbingGraph({{1, 0}}, {}, {{1, "a"}, {1, "a"}}), std::invalid_argument);
    EXPECT_THROW(PlumbingGraph({{1, 0}}, {}, {{3, "a"}}), std::invalid_argument);
}

TEST(PlumbingGraph, TreeAndPathQueries) {
    const PlumbingGraph star({{1, 2}, {2, 2}, {3, 2}, {4, 2}}, {{1, 2}, {1, 3}, {1, 4}});
    EXPECT_TRUE(star.is_tree());
    EXPECT_FALSE(star.is_path());
    EXPECT_THROW(star.path_order(), std::invalid_argument);

    const PlumbingGraph cycle({{1, 2}, {2, 2}, {3, 2}}, {{1, 2}, {2, 3}, {1, 3}});
    EXPECT_FALSE(cycle.is_tree());

    const PlumbingGraph path({{5, 1}, {2, 2}, {9, 3}}, {{9, 5}, {5, 2}});
    EXPECT_EQ(path.path_order(), (std::vector<VertexId>{2, 5, 9}));
    EXPECT_EQ(path.degree(5), 2u);
}

TEST(LinearChain, Examples) {
    const auto g = linear_chain({2, 2, 2});
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edges().size(), 2u);
    EXPECT_EQ(weights_along_path(g), (std::vector<Weight>{2, 2, 2}));
    EXPECT_EQ(weights_along_path(linear_chain({4})), (std::vector<Weight>{4}));
    EXPECT_EQ(weights_along_path(linear_chain({-2, -2})), (std::vector<Weight>{-2, -2}));
    EXPECT_EQ(linear_chain({7}).arrow_count(), 0u);
    EXPECT_THROW(linear_chain(std::vector<Weight>{}), std::invalid_argument);
}

TEST(Negate, Examples) {
    EXPECT_EQ(negate(linear_chain({2, 2, 2})), linear_chain({-2, -2, -2}));
    EXPECT_EQ(negate(linear_chain({0})), linear_chain({0}));
    EXPECT_EQ(negate(linear_chain({4})), linear_chain({-4}));
    const auto g = chain_with_arrows({1, 2, 1}, {1, 0, 1});
    EXPECT_EQ(negate(g).arrows(), g.arrows());
    EXPECT_THROW(negate(PlumbingGraph({{1, 2}, {2, 2}, {3, 2}}, {{1, 2}, {2, 3}, {1, 3}})),
                 std::invalid_argument);
}

TEST(StripArrows, Examples) {
    const auto g = chain_with_arrows({1, 2, 1}, {1, 0, 1});
    EXPECT_EQ(strip_arrows(g, StripMode::Delete), linear_chain({1, 2, 1}));
    EXPECT_EQ(strip_arrows(g, StripMode::Absorb), linear_chain({2, 2, 2}));
    const auto bare = linear_chain({3, 5});
    EXPECT_EQ(strip_arrows(bare, StripMode::Delete), bare);
    EXPECT_EQ(strip_arrows(bare, StripMode::Absorb), bare);
}

TEST(BlowDown, Examples) {
    EXPECT_EQ(weights_along_path(blow_down_once(linear_chain({1, 2, 1}), 1)), (std::vector<Weight>{1, 1}));
    EXPECT_EQ(weights_along_path(blow_down_once(linear_chain({2, 1, 2}), 2)), (std::vector<Weight>{1, 1}));
    EXPECT_EQ(weights_along_path(blow_down_once(linear_chain({-1, -3}), 1)), (std::vector<Weight>{-2}));
    // Interior vertex: its neighbours become adjacent.
    const auto g = blow_down_once(linear_chain({3, -1, 4}), 2);
    EXPECT_EQ(g.edges(), (std::vector<std::pair<VertexId, VertexId>>{{1, 3}}));
    EXPECT_EQ(weights_along_path(g), (std::vector<Weight>{4, 5}));
}

TEST(BlowDown, Preconditions) {
    EXPECT_THROW(blow_down_once(linear_chain({2, 2}), 1), MoveError);
    EXPECT_THROW(blow_down_once(chain_with_arrows({1, 2}, {1, 0}), 1), MoveError);
    EXPECT_THROW(blow_down_once(linear_chain({1}), 1), MoveError);
    EXPECT_THROW(blow_down_once(linear_chain({1, 2}), 7), MoveError);
    const PlumbingGraph star({{1, 1}, {2, 2}, {3, 2}, {4, 2}}, {{1, 2}, {1, 3}, {1, 4}});
    try {
        blow_down_once(star, 1);
        FAIL() << "expected MoveError";
    } catch (const MoveError& e) {
        EXPECT_NE(std::string(e.what()).find("degree 3"), std::string::npos);
    }
}

TEST(BlowDown, KeepsArrowsOnNeighbours) {
    const auto g = blow_down_once(chain_with_arrows({2, 1, 2}, {1, 0, 2}), 2);
    EXPECT_EQ(g.arrow_count(), 3u);
    EXPECT_EQ(g.arrows_at(1), 1u);
    EXPECT_EQ(g.arrows_at(3), 2u);
}

TEST(AbsorbZero, Examples) {
    EXPECT_EQ(weights_along_path(absorb_zero_once(linear_chain({3, 0, 5}), 2)), (std::vector<Weight>{8}));
    for (Weight a = -3; a <= 3; ++a) {
        for (Weight b = -3; b <= 3; ++b) {
            EXPECT_EQ(weights_along_path(absorb_zero_once(linear_chain({a, 0, b}), 2)),
                      (std::vector<Weight>{a + b}));
        }
    }
    EXPECT_THROW(absorb_zero_once(linear_chain({0}), 1), MoveError);
    EXPECT_THROW(absorb_zero_once(linear_chain({0, 3}), 1), MoveError);
    EXPECT_THROW(absorb_zero_once(linear_chain({1, 2, 3}), 2), MoveError);
}

TEST(AbsorbZero, MergedVertexInheritsEdgesAndArrows) {
    const auto g = absorb_zero_once(chain_with_arrows({2, 3, 0, 4, 5}, {0, 1, 0, 2, 0}), 3);
    EXPECT_EQ(weights_along_path(g), (std::vector<Weight>{2, 7, 5}));
    EXPECT_EQ(g.arrows_at(2), 3u);
    EXPECT_TRUE(g.is_path());
}

TEST(Reduce, Examples) {
    EXPECT_EQ(weights_along_path(reduce(linear_chain({1, 2, 1}))), (std::vector<Weight>{0}));
    const auto r = reduce(linear_chain({2, 1, 2}));
    EXPECT_EQ(weights_along_path(r), (std::vector<Weight>{0}));
    EXPECT_EQ(reduce(linear_chain({2, 3})), linear_chain({2, 3}));
    EXPECT_THROW(reduce(chain_with_arrows({1, 2}, {0, 1})), std::invalid_argument);
}

TEST(Reduce, TerminatesWithinVertexCountSteps) {
    oracle::for_each_box(5, -2, 2, [](const std::vector<long long>& w) {
        PlumbingGraph g = linear_chain(std::vector<Weight>(w.begin(), w.end()));
        std::size_t steps = 0;
        for (auto m = eligible_moves(g); !m.empty(); m = eligible_moves(g)) {
            g = apply_move(g, m.front());
            ++steps;
        }
        ASSERT_LE(steps, w.size());
        ASSERT_EQ(g, reduce(linear_chain(std::vector<Weight>(w.begin(), w.end()))));
    });
}

TEST(BlowsDownToZero, Examples) {
    EXPECT_TRUE(blows_down_to_zero(linear_chain({1, 2, 1})));
    EXPECT_FALSE(blows_down_to_zero(linear_chain({2, 2, 2})));
    EXPECT_TRUE(blows_down_to_zero(linear_chain({0})));
}

TEST(BlowsDownToZero, OnlyPlusOneVerticesAreBlownDown) {
    // The full move set collapses [2,1,1,1,1,2] to 0; +1 blow-downs do not.
    EXPECT_EQ(weights_along_path(reduce(linear_chain({2, 1, 1, 1, 1, 2}))), (std::vector<Weight>{0}));
    EXPECT_FALSE(blows_down_to_zero(linear_chain({2, 1, 1, 1, 1, 2})));
    EXPECT_FALSE(represents_zero(CFChain{2, 1, 1, 1, 1, 2}));
}

TEST(BlowsDownToZero, AgreesWithContinuedFractionOnAllSmallChains) {
    for (std::size_t len = 2; len <= 6; ++len) {
        oracle::for_each_box(len, 1, static_cast<long long>(len), [](const std::vector<long long>& k) {
            ASSERT_EQ(blows_down_to_zero(linear_chain(std::vector<Weight>(k.begin(), k.end()))),
                      oracle::is_zero_chain(k))
                << CFChain::from_ints(k);
        });
    }
}

TEST(RecognizeLens, Examples) {
    EXPECT_EQ(recognize_lens(linear_chain({2, 2, 2})), lens(4, 1));
    EXPECT_EQ(recognize_lens(linear_chain({-2, -2, -2})), lens(4, 3));
    EXPECT_EQ(recognize_lens(linear_chain({4})), lens(4, 3));
    EXPECT_EQ(recognize_lens(linear_chain({0})), RecognitionResult(SOneTimesSTwo{}));
    EXPECT_EQ(recognize_lens(linear_chain({1})), lens(1, 0));
    EXPECT_EQ(recognize_lens(linear_chain({-1})), lens(1, 0));
    EXPECT_EQ(recognize_lens(linear_chain({2, 3})), lens(5, 2));
    EXPECT_EQ(recognize_lens(linear_chain({3, 2})), lens(5, 3));
}

TEST(RecognizeLens, ReducesFirst) {
    // [1,3] -> [2]; [2,1,2] -> [1,1] -> [0].
    EXPECT_EQ(recognize_lens(linear_chain({1, 3})), lens(2, 1));
    EXPECT_EQ(recognize_lens(linear_chain({2, 1, 2})), RecognitionResult(SOneTimesSTwo{}));
    EXPECT_EQ(recognize_lens(linear_chain({3, 0, 5})), lens(8, 7));
}

TEST(RecognizeLens, NotRecognized) {
    auto is_not = [](const RecognitionResult& r) { return std::holds_alternative<NotRecognized>(r); };
    EXPECT_TRUE(is_not(recognize_lens(linear_chain({2, -2}))));
    EXPECT_TRUE(is_not(recognize_lens(chain_with_arrows({2, 2}, {1, 0}))));
    EXPECT_TRUE(is_not(recognize_lens(PlumbingGraph({{1, 2}, {2, 2}, {3, 2}, {4, 2}},
                                                    {{1, 2}, {1, 3}, {1, 4}}))));
    EXPECT_TRUE(is_not(recognize_lens(PlumbingGraph({{1, 2}, {2, 2}, {3, 2}},
                                                    {{1, 2}, {2, 3}, {1, 3}}))));
}

TEST(RecognizeLens, HjChainAndNegation) {
    for (std::int64_t n = 2; n <= 30; ++n) {
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            const auto a = hj_data({n, q}).to_ints();
            const auto g = linear_chain(std::vector<Weight>(a.begin(), a.end()));
            ASSERT_EQ(recognize_lens(g), lens(n, q));
            ASSERT_EQ(recognize_lens(negate(g)), lens(n, n - q));
        }
    }
}

TEST(RecognizeLens, AllAtLeastTwoChainsAreDistinct) {
    std::map<std::pair<std::int64_t, std::int64_t>, int> seen;
    for (std::size_t len = 1; len <= 6; ++len) {
        oracle::for_each_box(len, 2, 6, [&](const std::vector<long long>& w) {
            const auto r = recognize_lens(linear_chain(std::vector<Weight>(w.begin(), w.end())));
            const auto& l = std::get<LensSpace>(r);
            const int count = ++seen[std::make_pair(l.n(), l.q())];
            ASSERT_EQ(count, 1) << CFChain::from_ints(w);
        });
    }
}

TEST(LensSpace, Validation) {
    EXPECT_NO_THROW(LensSpace(1, 0));
    EXPECT_THROW(LensSpace(4, 2), std::invalid_argument);
    EXPECT_THROW(LensSpace(4, 4), std::invalid_argument);
    EXPECT_THROW(LensSpace(0, 0), std::invalid_argument);
    EXPECT_EQ(LensSpace(5, 2).reversed(), LensSpace(5, 3));
    EXPECT_TRUE(oriented_homeomorphic(LensSpace(5, 2), LensSpace(5, 3)));
    EXPECT_FALSE(oriented_homeomorphic(LensSpace(5, 1), LensSpace(5, 2)));
}

TEST(Moves, PreserveRecognizedLensSpace) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> len_dist(1, 6);
    std::uniform_int_distribution<int> w_dist(-3, 3);
    int compared = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<Weight> w(static_cast<std::size_t>(len_dist(rng)));
        for (auto& x : w) x = w_dist(rng);
        const auto g = linear_chain(w);
        const auto before = recognize_lens(g);
        if (std::holds_alternative<NotRecognized>(before)) continue;
        for (const auto& m : eligible_moves(g)) {
            const auto after = recognize_lens(apply_move(g, m));
            if (std::holds_alternative<NotRecognized>(after)) continue;
            ASSERT_EQ(before, after) << g;
            ++compared;
        }
    }
    EXPECT_GT(compared, 500);
}

// The move set (+-1 blow-downs, 0-absorption) is not confluent: the fixed point
// depends on the order in which moves are applied.
TEST(Reduce, FixedPointDependsOnMoveOrder) {
    const auto g = linear_chain({1, 1, 1});
    EXPECT_EQ(weights_along_path(reduce(g)), (std::vector<Weight>{-1}));
    const auto middle_first = blow_down_once(g, 2);
    EXPECT_EQ(weights_along_path(middle_first), (std::vector<Weight>{0, 0}));
    EXPECT_TRUE(eligible_moves(middle_first).empty());

    const auto h = linear_chain({-1, 1});
    EXPECT_EQ(weights_along_path(reduce(h)), (std::vector<Weight>{2}));
    EXPECT_EQ(weights_along_path(blow_down_once(h, 2)), (std::vector<Weight>{-2}));
    // Both are RP^3, which is amphichiral.
    EXPECT_EQ(recognize_lens(linear_chain({2})), recognize_lens(linear_chain({-2})));
}

TEST(Reduce, RandomOrdersOnZeroChainsAllReachZero) {
    std::mt19937 rng(11);
    for (int s = 2; s <= 7; ++s) {
        for (const auto& k : list_zero_chains(s)) {
            const auto ints = k.to_ints();
            const auto g = linear_chain(std::vector<Weight>(ints.begin(), ints.end()));
            for (int r = 0; r < 20; ++r) {
                ASSERT_TRUE(graphs_equal(random_order_reduce(g, rng), linear_chain({0}))) << k;
            }
        }
    }
}

TEST(GraphsEqual, Examples) {
    EXPECT_TRUE(graphs_equal(linear_chain({2, 3}), linear_chain({3, 2})));
    EXPECT_FALSE(graphs_equal(chain_with_arrows({2, 3}, {1, 0}), linear_chain({2, 3})));
    EXPECT_TRUE(graphs_equal(linear_chain({1, 2, 1}), linear_chain({1, 2, 1})));
    EXPECT_TRUE(graphs_equal(chain_with_arrows({2, 3}, {1, 0}), chain_with_arrows({3, 2}, {0, 1})));
    EXPECT_FALSE(graphs_equal(linear_chain({2, 3, 4}), linear_chain({2, 4, 3})));
    EXPECT_THROW(graphs_equal(PlumbingGraph({{1, 2}, {2, 2}, {3, 2}, {4, 2}}, {{1, 2}, {1, 3}, {1, 4}}),
                              linear_chain({2})),
                 std::invalid_argument);
}

}  // namespace
}  // namespace cqs
