#pragma once

#include <gtest/gtest.h>

#include <utility>

#include "oracles.hpp"
#include "trg/core.hpp"
#include "trg/graph.hpp"

namespace trg::testing {

inline oracle::EdgeSet to_edge_set(const Graph& g) {
    oracle::EdgeSet out;
    for (const Edge& e : g.edges()) out.insert({e.u, e.v});
    return out;
}

inline oracle::EdgeSet edge_set(std::initializer_list<std::pair<int, int>> pairs) {
    return oracle::EdgeSet(pairs.begin(), pairs.end());
}

inline oracle::EdgeSet oracle_row_graph(const ToeplitzSpec& s) {
    return oracle::row_graph(s.n(), s.alpha(), s.beta());
}

/// Runs f and reports the Error code it threw (or fails the test).
template <class F>
ErrorCode error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected trg::Error";
    return ErrorCode::ParseError;
}

}  // namespace trg::testing
