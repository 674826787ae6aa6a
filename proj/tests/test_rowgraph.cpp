#include <gtest/gtest.h>

#include "support.hpp"
#include "trg/rowgraph.hpp"

namespace trg {
namespace {

using testing::edge_set;
using testing::error_code_of;
using testing::oracle_row_graph;
using testing::to_edge_set;

const oracle::EdgeSet kSixOneThreeTwoFive =
    edge_set({{1, 4}, {1, 6}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 6}});

TEST(RowGraph, SixOneThreeTwoFiveAllEngines) {
    const auto s = parse_spec(6, {1, 3}, {2, 5});
    EXPECT_EQ(to_edge_set(rowgraph_oracle(build_matrix(s))), kSixOneThreeTwoFive);
    EXPECT_EQ(to_edge_set(rowgraph_closed_form(s)), kSixOneThreeTwoFive);
    EXPECT_EQ(oracle_row_graph(s), kSixOneThreeTwoFive);
}

TEST(RowGraph, OracleExamples) {
    EXPECT_EQ(rowgraph(parse_spec(3, {1}, {})).edge_count(), 0u);
    EXPECT_EQ(to_edge_set(rowgraph(parse_spec(6, {1, 2}, {4}))),
              edge_set({{1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}));
}

TEST(RowGraph, ClosedFormExamples) {
    EXPECT_EQ(rowgraph_closed_form(parse_spec(5, {1}, {})).edge_count(), 0u);
    EXPECT_EQ(to_edge_set(rowgraph_closed_form(parse_spec(5, {1, 3}, {2, 4}))),
              edge_set({{1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5}}));
}

TEST(RowGraph, BoundedExamples) {
    EXPECT_EQ(to_edge_set(rowgraph_bounded(parse_spec(8, {1, 3}, {5}))),
              edge_set({{2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 8}, {1, 7}, {2, 8}}));
    EXPECT_EQ(to_edge_set(rowgraph_bounded(parse_spec(6, {1, 2}, {4, 5}))),
              edge_set({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}}));
    EXPECT_EQ(error_code_of([] { rowgraph_bounded(parse_spec(7, {1, 3}, {2, 5})); }),
              ErrorCode::PreconditionViolated);
}

TEST(RowGraph, EnginesMatchDefinitionExhaustively) {
    for (int n = 2; n <= 9; ++n) {
        for (const auto& [a, b] : oracle::all_pairs(n)) {
            const auto s = parse_spec(n, a, b);
            const auto expected = oracle::row_graph(n, a, b);
            ASSERT_EQ(to_edge_set(rowgraph(s)), expected) << s.to_string();
            ASSERT_EQ(to_edge_set(rowgraph_closed_form(s)), expected) << s.to_string();
            if (is_row_sum_le2(s)) ASSERT_EQ(to_edge_set(rowgraph_bounded(s)), expected) << s.to_string();
        }
    }
}

TEST(Classify, EightOneThreeFive) {
    const auto summary = components_classify(rowgraph(parse_spec(8, {1, 3}, {5})));
    ASSERT_EQ(summary.components.size(), 2u);
    EXPECT_EQ(summary.components[0].kind, ComponentKind::Path);
    EXPECT_EQ(summary.components[0].vertices, (std::vector<Vertex>{1, 3, 5, 7}));
    EXPECT_EQ(summary.components[1].kind, ComponentKind::Cycle);
    EXPECT_EQ(summary.components[1].vertices, (std::vector<Vertex>{2, 4, 6, 8}));
    EXPECT_EQ(summary.encoding(), "Cycle:4+Path:4");
    EXPECT_EQ(summary.cycle_lengths, (std::vector<int>{4}));
    EXPECT_EQ(summary.path_orders, (std::vector<int>{4}));
    EXPECT_TRUE(summary.triangle_free);
}

TEST(Classify, EdgelessGraph) {
    const auto summary = components_classify(Graph(5));
    EXPECT_EQ(summary.components.size(), 5u);
    EXPECT_EQ(summary.count(ComponentKind::Isolated), 5u);
    EXPECT_TRUE(summary.path_orders.empty());
    EXPECT_EQ(summary.encoding(), "Isolated:1+Isolated:1+Isolated:1+Isolated:1+Isolated:1");
}

TEST(Classify, FiveCycleWithIsolatedVertex) {
    const auto summary = components_classify(rowgraph(parse_spec(6, {1, 4}, {3, 5})));
    EXPECT_EQ(summary.encoding(), "Cycle:5+Isolated:1");
    ASSERT_EQ(summary.components.size(), 2u);
    EXPECT_EQ(summary.components[0].vertices, (std::vector<Vertex>{1, 2, 3, 5, 6}));
    EXPECT_EQ(summary.components[1].vertices, (std::vector<Vertex>{4}));
}

TEST(Classify, SixOneThreeTwoFiveIsOneOtherComponent) {
    const auto summary = components_classify(rowgraph(parse_spec(6, {1, 3}, {2, 5})));
    EXPECT_EQ(summary.encoding(), "Other:6");
    EXPECT_FALSE(summary.triangle_free);
}

TEST(Classify, AgreesWithUnionFindOracle) {
    for (int n = 2; n <= 9; ++n) {
        for (const auto& [a, b] : oracle::all_pairs(n)) {
            const auto expected = oracle::row_graph(n, a, b);
            const auto summary = components_classify(rowgraph(parse_spec(n, a, b)));
            ASSERT_EQ(summary.encoding(), oracle::encoding(n, expected));
            ASSERT_EQ(summary.triangle_free, !oracle::has_triangle(n, expected));
        }
    }
}

TEST(Classify, RowSumTwoGivesPathsAndCycles) {
    for (int n = 2; n <= 11; ++n) {
        for (const auto& [a, b] : oracle::all_pairs(n)) {
            const auto s = parse_spec(n, a, b);
            const auto summary = components_classify(rowgraph(s));
            if (is_row_sum_le2(s)) ASSERT_EQ(summary.count(ComponentKind::Other), 0u) << s.to_string();
            if (summary.triangle_free) ASSERT_LE(max_row_sum(s), 2) << s.to_string();
        }
    }
}

TEST(HasTriangle, Examples) {
    const auto t = has_triangle(rowgraph(parse_spec(9, {1, 7}, {2, 8})));
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(*t, (std::array<Vertex, 3>{1, 4, 7}));
    EXPECT_EQ(has_triangle(rowgraph(parse_spec(6, {1, 3}, {2, 5}))), (std::array<Vertex, 3>{1, 4, 6}));
    EXPECT_FALSE(has_triangle(Graph(2, {{1, 2}})).has_value());
}

TEST(SymmetricGraph, Examples) {
    EXPECT_EQ(to_edge_set(symmetric_toeplitz_graph(6, {2, 3, 5})),
              edge_set({{1, 3}, {2, 4}, {3, 5}, {4, 6}, {1, 4}, {2, 5}, {3, 6}, {1, 6}}));
    EXPECT_EQ(to_edge_set(symmetric_toeplitz_graph(5, {4})), edge_set({{1, 5}}));
    const auto g = symmetric_toeplitz_graph(10, {4, 6});
    for (auto [u, v] : {std::pair{1, 5}, {5, 9}, {3, 9}, {3, 7}, {1, 7}}) EXPECT_TRUE(g.has_edge(u, v));
    EXPECT_EQ(error_code_of([] { symmetric_toeplitz_graph(5, {5}); }), ErrorCode::OutOfRange);
    EXPECT_EQ(symmetric_toeplitz_graph(5, {}).edge_count(), 0u);
}

TEST(SymmetricGraph, MatchesDifferenceOracle) {
    for (int n = 2; n <= 8; ++n) {
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> gamma;
            for (int x = 1; x < n; ++x)
                if (mask >> (x - 1) & 1) gamma.push_back(x);
            const auto g = symmetric_toeplitz_graph(n, gamma);
            ASSERT_EQ(to_edge_set(g), oracle::symmetric_graph(n, gamma));
            ASSERT_EQ(symmetric_ones_count(n, gamma), 2 * static_cast<long long>(g.edge_count()));
        }
    }
}

TEST(GammaEnvelope, Examples) {
    EXPECT_EQ(gamma_envelope(parse_spec(6, {1, 3}, {2, 5})), (std::vector<int>{2, 3, 5}));
    EXPECT_TRUE(gamma_envelope(parse_spec(5, {1}, {})).empty());
    EXPECT_EQ(gamma_envelope(parse_spec(10, {1, 7}, {3, 9})), (std::vector<int>{4, 6}));
}

TEST(GammaEnvelope, ContainsRowGraph) {
    for (int n = 2; n <= 9; ++n) {
        for (const auto& [a, b] : oracle::all_pairs(n)) {
            const auto s = parse_spec(n, a, b);
            const auto gamma = gamma_envelope(s);
            ASSERT_EQ(gamma, oracle::envelope(n, a, b));
            const auto st = oracle::symmetric_graph(n, gamma);
            for (const auto& e : oracle::row_graph(n, a, b)) ASSERT_TRUE(st.count(e)) << s.to_string();
        }
    }
}

TEST(SymmetricOnesCount, Examples) {
    EXPECT_EQ(symmetric_ones_count(6, {2, 3, 5}, 3), 16);
    EXPECT_EQ(symmetric_ones_count(5, {4}, 1), 2);
    EXPECT_EQ(symmetric_ones_count(10, {4, 6}, 2), 20);
    EXPECT_EQ(error_code_of([] { symmetric_ones_count(10, {4, 6}, 3); }), ErrorCode::PreconditionViolated);
    EXPECT_EQ(error_code_of([] { symmetric_ones_count(10, {10}, 1); }), ErrorCode::OutOfRange);
}

}  // namespace
}  // namespace trg
