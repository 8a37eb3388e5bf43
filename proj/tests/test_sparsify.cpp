#include "doctest.h"

#include <algorithm>
#include <set>

#include "myopia/sparsify.hpp"
#include "test_util.hpp"

using namespace myopia;

namespace {

std::set<int> top_set(const ScoredEdges& scored, int b) {
    const auto v = select_top(scored, b);
    return {v.begin(), v.end()};
}

// Rankings agree iff the selected set agrees at every budget.
bool same_ranking(const ScoredEdges& a, const ScoredEdges& b) {
    const int m = static_cast<int>(a.scores.size());
    for (int budget = 1; budget <= m; ++budget) {
        if (top_set(a, budget) != top_set(b, budget)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("strategy names round-trip") {
    for (StrategyTag tag : {StrategyTag::Random, StrategyTag::Standard, StrategyTag::Weighted,
                            StrategyTag::Oracle}) {
        CHECK(strategy_from_name(strategy_name(tag)) == tag);
    }
    CHECK(!strategy_from_name("frequency").has_value());
}

TEST_CASE("score_edges per strategy") {
    auto inst = gen_barbell(8, 0.95, 0.05);
    auto rmap = weight_map(inst.graph, 2.0);
    const int bridge = inst.bridge_edges[0];

    SplitMix64 rng(1);
    auto standard = score_edges(Strategy::standard(), inst, rmap, rng);
    CHECK(standard.scores[static_cast<size_t>(bridge)] == 0.05);
    for (int e = 0; e < inst.graph.edge_count(); ++e) {
        if (e != bridge) CHECK(standard.scores[static_cast<size_t>(e)] == 0.95);
    }

    SplitMix64 rng2(1);
    auto weighted = score_edges(Strategy::weighted(2.0), inst, rmap, rng2);
    CHECK(weighted.scores[static_cast<size_t>(bridge)] ==
          doctest::Approx(2.05).epsilon(1e-9));

    SplitMix64 rng3(1);
    auto oracle = score_edges(Strategy::oracle(), inst, rmap, rng3);
    CHECK(oracle.scores == rmap.r);  // bitwise

    SplitMix64 rng4(1);
    auto random = score_edges(Strategy::random(), inst, rmap, rng4);
    for (double s : random.scores) {
        CHECK(s >= 0.0);
        CHECK(s < 1.0);
    }
    SplitMix64 rng5(1);
    CHECK(score_edges(Strategy::random(), inst, rmap, rng5).scores == random.scores);

    // fresh tiebreak keys per call
    SplitMix64 shared(9);
    auto first = score_edges(Strategy::standard(), inst, rmap, shared);
    auto second = score_edges(Strategy::standard(), inst, rmap, shared);
    CHECK(first.tiebreak != second.tiebreak);

    SplitMix64 rng6(1);
    CHECK_THROWS_AS(score_edges(Strategy::weighted(-1.0), inst, rmap, rng6),
                    std::invalid_argument);
    auto other = gen_barbell(4, 0.9, 0.1);
    SplitMix64 rng7(1);
    CHECK_THROWS_AS(score_edges(Strategy::standard(), other, rmap, rng7), std::invalid_argument);
}

TEST_CASE("budget rounding") {
    CHECK(budget(0.50, 57) == 29);  // round-half-up of 28.5
    CHECK(budget(1.0, 10) == 10);
    CHECK(budget(0.60, 342) == 205);  // round(205.2)
    CHECK(budget(0.01, 3) == 1);      // clamped up to 1
    CHECK_THROWS_AS(budget(0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(budget(1.1, 10), std::invalid_argument);
    CHECK_THROWS_AS(budget(-0.5, 10), std::invalid_argument);
    CHECK_THROWS_AS(budget(0.5, 0), std::invalid_argument);
}

TEST_CASE("select_top") {
    auto inst = gen_barbell(8, 0.95, 0.05);
    auto rmap = weight_map(inst.graph, 2.0);
    const int m = inst.graph.edge_count();
    const int bridge = inst.bridge_edges[0];

    SplitMix64 rng(42);
    auto standard = score_edges(Strategy::standard(), inst, rmap, rng);
    auto all = select_top(standard, m);
    CHECK(static_cast<int>(all.size()) == m);

    // Standard at b = 29 never keeps the 0.05 bridge
    auto kept = top_set(standard, 29);
    CHECK(kept.size() == 29);
    CHECK_FALSE(kept.count(bridge));

    // Weighted at lambda = 2: bridge scores 2.05 > 0.95 + 2 * 0.25
    SplitMix64 rng2(42);
    auto weighted = score_edges(Strategy::weighted(2.0), inst, rmap, rng2);
    CHECK(top_set(weighted, 29).count(bridge));

    CHECK_THROWS_AS(select_top(standard, 0), std::invalid_argument);
    CHECK_THROWS_AS(select_top(standard, m + 1), std::invalid_argument);
}

TEST_CASE("ranking equivalences") {
    auto inst = gen_barbell(8, 0.95, 0.05);
    auto rmap = weight_map(inst.graph, 2.0);

    // Weighted(0) == Standard under a shared tie-break stream
    SplitMix64 a(7);
    SplitMix64 b(7);
    CHECK(same_ranking(score_edges(Strategy::weighted(0.0), inst, rmap, a),
                       score_edges(Strategy::standard(), inst, rmap, b)));

    // Weighted(1e6) == Oracle on a graph with well-separated resistances
    SplitMix64 gen(14);
    const Graph g = myopia::testing::random_connected_graph(7, 6, gen);
    auto distinct_rmap = weight_map(g, 2.0);
    std::vector<double> sorted_r = distinct_rmap.r;
    std::sort(sorted_r.begin(), sorted_r.end());
    for (size_t i = 1; i < sorted_r.size(); ++i) {
        REQUIRE(sorted_r[i] - sorted_r[i - 1] > 1e-4);  // precondition: distinct
    }
    GeneratedInstance distinct_inst{g, FrequencyModel(g, std::vector<double>(
                                            static_cast<size_t>(g.edge_count()), 0.5)),
                                    {}};
    SplitMix64 c(7);
    SplitMix64 d(7);
    CHECK(same_ranking(score_edges(Strategy::weighted(1e6), distinct_inst, distinct_rmap, c),
                       score_edges(Strategy::oracle(), distinct_inst, distinct_rmap, d)));
}

TEST_CASE("Standard ranking ignores resistances entirely") {
    auto inst = gen_barbell(6, 0.95, 0.05);
    auto rmap = weight_map(inst.graph, 2.0);
    auto shuffled = rmap;
    std::reverse(shuffled.r.begin(), shuffled.r.end());
    std::reverse(shuffled.w.begin(), shuffled.w.end());

    SplitMix64 a(11);
    SplitMix64 b(11);
    CHECK(same_ranking(score_edges(Strategy::standard(), inst, rmap, a),
                       score_edges(Strategy::standard(), inst, shuffled, b)));
}

TEST_CASE("rare bridges always lost by Standard under budget pressure") {
    for (const auto& inst : {gen_barbell(8, 0.95, 0.05), gen_chain_sbm({10, 15, 20}, 0.95, 0.05),
                             gen_chain_sbm({4, 5, 6}, 0.9, 0.2)}) {
        auto rmap = weight_map(inst.graph, 2.0);
        const int m = inst.graph.edge_count();
        const int b = budget(0.5, m);
        REQUIRE(b < m - static_cast<int>(inst.bridge_edges.size()));
        for (uint64_t seed = 0; seed < 50; ++seed) {
            SplitMix64 rng(mix_seed(999, seed));
            const Graph h = sparsify(inst, rmap, Strategy::standard(), 0.5, rng);
            CHECK_FALSE(is_connected(h));
        }
    }
}

TEST_CASE("sparsify output shape and determinism") {
    auto inst = gen_chain_sbm({10, 15, 20}, 0.95, 0.05);
    auto rmap = weight_map(inst.graph, 2.0);

    SplitMix64 rng(3);
    const Graph full = sparsify(inst, rmap, Strategy::oracle(), 1.0, rng);
    CHECK(full.edges() == inst.graph.edges());

    SplitMix64 r1(1234);
    SplitMix64 r2(1234);
    const Graph h1 = sparsify(inst, rmap, Strategy::weighted(2.0), 0.6, r1);
    const Graph h2 = sparsify(inst, rmap, Strategy::weighted(2.0), 0.6, r2);
    CHECK(h1.edges() == h2.edges());
    CHECK(h1.edge_count() == budget(0.6, inst.graph.edge_count()));
    for (const Edge& e : h1.edges()) CHECK(inst.graph.edge_index(e.u, e.v).has_value());

    // Oracle keeps both maximal-resistance bridges at rho = 0.6
    SplitMix64 r3(5);
    const Graph oracle_h = sparsify(inst, rmap, Strategy::oracle(), 0.6, r3);
    for (int bridge : inst.bridge_edges) {
        const Edge e = inst.graph.edge(bridge);
        CHECK(oracle_h.edge_index(e.u, e.v).has_value());
    }
}
