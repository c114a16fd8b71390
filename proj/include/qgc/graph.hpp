#pragma once

#include <string>
#include <vector>

#include "qgc/bits.hpp"

namespace qgc {

// Simple undirected graph with stable integer labels 0..cap-1. Deleting a
// vertex keeps the labels of the others unchanged.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t cap);

    std::size_t capacity() const { return cap_; }
    bool has(std::size_t v) const { return present_.get(v); }
    std::size_t n_present() const { return present_.count(); }
    const BitVec& present() const { return present_; }
    std::vector<std::size_t> vertices() const;  // present labels, ascending

    bool has_edge(std::size_t u, std::size_t v) const;
    void set_edge(std::size_t u, std::size_t v, bool on);
    void toggle_edge(std::size_t u, std::size_t v);
    const BitVec& neighbors(std::size_t v) const;  // as a bit set
    std::size_t degree(std::size_t v) const { return adj_[v].count(); }
    std::size_t n_edges() const;

    void remove_vertex(std::size_t v);

    // Complement the edge set inside the neighborhood of v.
    void local_complement(std::size_t v);

    bool operator==(const Graph&) const = default;

    static Graph path(std::size_t n);
    static Graph complete(std::size_t n);
    static Graph grid(std::size_t rows, std::size_t cols);  // label = r*cols + c

private:
    void check(std::size_t v) const;
    std::size_t cap_ = 0;
    BitVec present_;
    std::vector<BitVec> adj_;
};

// Text format: first line "n m", then m lines "i j" with 1-based labels, i < j.
// '#' comments and blank lines allowed. Deleted vertices are not representable;
// serialization requires all labels present (use compact() first if needed).
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);
std::string graph_to_dot(const Graph& g);

// Relabel present vertices to 0..k-1 preserving order.
Graph compacted(const Graph& g);

}  // namespace qgc
