#pragma once

#include <array>

#include "qgc/graph.hpp"
#include "qgc/pattern.hpp"

namespace qgc {

enum class LayoutMode {
    Standard,  // O(n) x O(n) lattice, one gadget block per lower-triangle cell
    Compact,   // O(d) x O(n): one cell-row per vertex with a higher neighbor
};

// Compile a target graph into a measurement pattern on a cluster lattice:
// round 1 prunes with Z, rounds 2-3 fire the gadget Y measurements, round 4
// contracts the wires with X walks, and the final layer carries all
// outcome-conditioned Pauli corrections. Output sites are the target vertices
// in row-major order.
MeasurementPattern compile_graph(const Graph& g, LayoutMode mode = LayoutMode::Standard);

// Frozen 5x5 measurement templates: 'Z'/'Y' per site (row-major), '.' at the
// four chain terminals (1,3), (3,1), (3,5), (5,3). The crossing template
// leaves the two disjoint chains left-right and top-bottom; the connection
// template additionally links left to bottom.
const std::array<char, 25>& crossing_template();
const std::array<char, 25>& connection_template();

// Standalone 5x5 patterns for the templates, corrections included: executing
// one yields exactly the graph state of its terminal chains (terminals in
// row-major order: top, left, right, bottom).
MeasurementPattern crossing_gadget();
MeasurementPattern connection_gadget();

}  // namespace qgc
