#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qgc/graph.hpp"

using namespace qgc;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("edges, degrees and stable labels") {
    Graph g(4);
    g.set_edge(0, 1, true);
    g.set_edge(1, 2, true);
    g.toggle_edge(2, 3);
    g.toggle_edge(2, 3);
    CHECK(g.n_edges() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK_THROWS(g.set_edge(2, 2, true));

    g.remove_vertex(1);
    CHECK_FALSE(g.has(1));
    CHECK(g.n_present() == 3);
    CHECK(g.degree(0) == 0);  // incident edges went with the vertex
    CHECK(g.vertices() == std::vector<std::size_t>{0, 2, 3});
    CHECK_THROWS(g.set_edge(0, 1, true));

    Graph c = compacted(g);
    CHECK(c.capacity() == 3);
    CHECK(c.n_edges() == 0);
}

TEST_CASE("builders") {
    Graph p = Graph::path(4);
    CHECK(p.n_edges() == 3);
    CHECK(p.has_edge(1, 2));
    CHECK_FALSE(p.has_edge(0, 3));

    Graph k = Graph::complete(5);
    CHECK(k.n_edges() == 10);

    Graph gr = Graph::grid(2, 3);  // label = r*cols + c
    CHECK(gr.n_edges() == 7);
    CHECK(gr.has_edge(0, 3));
    CHECK(gr.has_edge(1, 2));
    CHECK_FALSE(gr.has_edge(2, 3));  // row wrap is not an edge
}

TEST_CASE("local complementation") {
    // triangle: complementing at 0 removes edge {1,2}
    Graph t = Graph::complete(3);
    t.local_complement(0);
    CHECK(t.has_edge(0, 1));
    CHECK(t.has_edge(0, 2));
    CHECK_FALSE(t.has_edge(1, 2));
    t.local_complement(0);
    CHECK(t == Graph::complete(3));

    // path 0-1-2: complementing at the middle adds {0,2}
    Graph p = Graph::path(3);
    p.local_complement(1);
    CHECK(p.has_edge(0, 2));
    CHECK(p.n_edges() == 3);
}

TEST_CASE("neighbors bit set") {
    Graph p = Graph::path(3);
    const BitVec& nb = p.neighbors(1);
    CHECK(nb.get(0));
    CHECK(nb.get(2));
    CHECK(nb.count() == 2);
}

TEST_CASE("parse and serialize") {
    std::string text = "3 2\n1 2\n2 3\n";
    Graph g = parse_graph(text);
    CHECK(g.capacity() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(serialize_graph(g) == text);
    CHECK(parse_graph("# chain\n\n3 2\n1 2\n2 3\n") == g);

    CHECK_THROWS(parse_graph("3 1\n2 2\n"));   // self loop
    CHECK_THROWS(parse_graph("3 1\n1 4\n"));   // label out of range
    CHECK_THROWS(parse_graph("3 2\n1 2\n"));   // edge count short

    g.remove_vertex(0);
    CHECK_THROWS(serialize_graph(g));  // deleted vertices not representable
}

TEST_CASE("fixtures round trip byte-exactly") {
    for (const char* name : {"/graph_6q.txt", "/graph_chain5.txt"}) {
        std::string text = slurp(std::string(QGC_FIXTURES_DIR) + name);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("dot output") {
    std::string dot = graph_to_dot(Graph::path(2));
    CHECK(dot.find("graph g {") == 0);
    CHECK(dot.find("v1 -- v2") != std::string::npos);
}
