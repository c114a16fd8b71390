#include "qgc/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace qgc {

Graph::Graph(std::size_t cap) : cap_(cap), present_(cap), adj_(cap, BitVec(cap)) {
    for (std::size_t v = 0; v < cap; ++v) present_.set(v, true);
}

void Graph::check(std::size_t v) const {
    if (v >= cap_ || !present_.get(v))
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " not present");
}

std::vector<std::size_t> Graph::vertices() const {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < cap_; ++v)
        if (present_.get(v)) vs.push_back(v);
    return vs;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    check(u);
    check(v);
    return adj_[u].get(v);
}

void Graph::set_edge(std::size_t u, std::size_t v, bool on) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("Graph: self loop");
    adj_[u].set(v, on);
    adj_[v].set(u, on);
}

void Graph::toggle_edge(std::size_t u, std::size_t v) { set_edge(u, v, !adj_[u].get(v)); }

const BitVec& Graph::neighbors(std::size_t v) const {
    check(v);
    return adj_[v];
}

std::size_t Graph::n_edges() const {
    std::size_t s = 0;
    for (std::size_t v = 0; v < cap_; ++v) s += adj_[v].count();
    return s / 2;
}

void Graph::remove_vertex(std::size_t v) {
    check(v);
    for (std::size_t u = 0; u < cap_; ++u) adj_[u].set(v, false);
    adj_[v].clear();
    present_.set(v, false);
}

void Graph::local_complement(std::size_t v) {
    check(v);
    BitVec nb = adj_[v];
    for (std::size_t u = 0; u < cap_; ++u) {
        if (!nb.get(u)) continue;
        BitVec t = nb;
        t.set(u, false);
        adj_[u] ^= t;
    }
}

Graph Graph::path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1, true);
    return g;
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j, true);
    return g;
}

Graph Graph::grid(std::size_t rows, std::size_t cols) {
    Graph g(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.set_edge(r * cols + c, r * cols + c + 1, true);
            if (r + 1 < rows) g.set_edge(r * cols + c, (r + 1) * cols + c, true);
        }
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) lines.push_back(line);
    }
    if (lines.empty()) throw std::runtime_error("graph: missing header line");
    std::istringstream hs(lines[0]);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw std::runtime_error("graph: bad header");
    if (lines.size() != std::size_t(m) + 1) throw std::runtime_error("graph: edge count mismatch");
    Graph g{std::size_t(n)};
    for (long long e = 0; e < m; ++e) {
        std::istringstream es(lines[std::size_t(e) + 1]);
        long long i = 0, j = 0;
        if (!(es >> i >> j) || i < 1 || j < 1 || i > n || j > n || i >= j)
            throw std::runtime_error("graph: bad edge line '" + lines[std::size_t(e) + 1] + "'");
        g.set_edge(std::size_t(i - 1), std::size_t(j - 1), true);
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    if (g.n_present() != g.capacity())
        throw std::invalid_argument("serialize_graph: graph has deleted vertices");
    std::ostringstream out;
    out << g.capacity() << ' ' << g.n_edges() << '\n';
    for (std::size_t i = 0; i < g.capacity(); ++i)
        for (std::size_t j = i + 1; j < g.capacity(); ++j)
            if (g.has_edge(i, j)) out << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (auto v : g.vertices()) out << "  v" << v + 1 << ";\n";
    for (auto v : g.vertices())
        for (auto u : g.vertices())
            if (u > v && g.has_edge(v, u)) out << "  v" << v + 1 << " -- v" << u + 1 << ";\n";
    out << "}\n";
    return out.str();
}

Graph compacted(const Graph& g) {
    auto vs = g.vertices();
    Graph out(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) out.set_edge(i, j, true);
    return out;
}

}  // namespace qgc
