#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgc/compiler.hpp"
#include "qgc/executor.hpp"
#include "qgc/graph.hpp"

using namespace qgc;

namespace {

bool pipeline_ok(const Graph& g, LayoutMode mode, std::uint64_t seed) {
    MeasurementPattern pat = compile_graph(g, mode);
    auto src = OutcomeSource::seeded(seed);
    ExecutionTrace tr = execute(pat, src);
    return verify_graph_state(tr.output, compacted(g));
}

}  // namespace

TEST_CASE("template shapes") {
    for (const auto* tpl : {&crossing_template(), &connection_template()}) {
        int dots = 0;
        for (char ch : *tpl) {
            CHECK((ch == 'Y' || ch == 'Z' || ch == '.'));
            dots += ch == '.';
        }
        CHECK(dots == 4);
        // terminals at (1,3), (3,1), (3,5), (5,3), row-major 5x5
        CHECK((*tpl)[2] == '.');
        CHECK((*tpl)[10] == '.');
        CHECK((*tpl)[14] == '.');
        CHECK((*tpl)[22] == '.');
    }
    CHECK(crossing_template() != connection_template());
}

TEST_CASE("crossing gadget yields two disjoint chains") {
    // terminals in row-major order: 0=top, 1=left, 2=right, 3=bottom;
    // the crossing links top-bottom and left-right without touching
    Graph want(4);
    want.set_edge(0, 3, true);
    want.set_edge(1, 2, true);
    MeasurementPattern pat = crossing_gadget();
    CHECK(pat.rows == 5);
    CHECK(pat.cols == 5);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto src = OutcomeSource::seeded(seed);
        ExecutionTrace tr = execute(pat, src);
        CHECK(verify_graph_state(tr.output, want));
    }
}

TEST_CASE("connection gadget also links left to bottom") {
    Graph want(4);
    want.set_edge(0, 3, true);
    want.set_edge(1, 2, true);
    want.set_edge(1, 3, true);
    MeasurementPattern pat = connection_gadget();
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto src = OutcomeSource::seeded(seed);
        ExecutionTrace tr = execute(pat, src);
        CHECK(verify_graph_state(tr.output, want));
    }
}

TEST_CASE("single vertex compiles to a bare output") {
    Graph g(1);
    for (LayoutMode mode : {LayoutMode::Standard, LayoutMode::Compact}) {
        MeasurementPattern pat = compile_graph(g, mode);
        CHECK(metrics(pat).measurements == 0);
        CHECK(pipeline_ok(g, mode, 0));
    }
}

TEST_CASE("named small graphs compile and verify in both modes") {
    std::vector<Graph> gs;
    gs.push_back(Graph::path(2));
    gs.push_back(Graph::path(4));
    gs.push_back(Graph::complete(3));
    gs.push_back(Graph::complete(4));
    Graph star(4);
    for (int i = 1; i < 4; ++i) star.set_edge(0, i, true);
    gs.push_back(star);
    Graph empty(3);
    gs.push_back(empty);
    Graph mixed(4);  // an isolated vertex next to a triangle
    mixed.set_edge(1, 2, true);
    mixed.set_edge(2, 3, true);
    mixed.set_edge(1, 3, true);
    gs.push_back(mixed);

    for (const auto& g : gs)
        for (LayoutMode mode : {LayoutMode::Standard, LayoutMode::Compact})
            for (std::uint64_t seed = 1; seed <= 3; ++seed)
                CHECK(pipeline_ok(g, mode, seed));
}

TEST_CASE("deleted-vertex inputs are compacted") {
    Graph g(4);
    g.set_edge(1, 3, true);
    g.remove_vertex(0);
    CHECK(pipeline_ok(g, LayoutMode::Standard, 7));
}

TEST_CASE("round count is a constant") {
    std::mt19937_64 rng(41);
    std::size_t rounds_std = 0, rounds_cpt = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        Graph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() & 1) g.set_edge(i, j, true);
        if (g.n_edges() == 0) g.set_edge(0, 1, true);
        std::size_t rs = metrics(compile_graph(g, LayoutMode::Standard)).rounds;
        std::size_t rc = metrics(compile_graph(g, LayoutMode::Compact)).rounds;
        if (rounds_std == 0) rounds_std = rs;
        if (rounds_cpt == 0) rounds_cpt = rc;
        CHECK(rs == rounds_std);
        CHECK(rc == rounds_cpt);
    }
}

TEST_CASE("patterns validate and measure every non-output site") {
    Graph g = Graph::complete(4);
    for (LayoutMode mode : {LayoutMode::Standard, LayoutMode::Compact}) {
        MeasurementPattern pat = compile_graph(g, mode);
        pat.validate();  // throws on any inconsistency
        PatternMetrics m = metrics(pat);
        CHECK(m.measurements == m.area - 4);
        CHECK(pat.outputs().size() == 4);
    }
}
