#pragma once

#include <cstdint>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/local_frame.hpp"
#include "qgc/outcome_source.hpp"
#include "qgc/tableau.hpp"

namespace qgc {

// Graph-level effect of measuring a single-qubit Pauli `letter` at vertex a of
// a plain (frame-free) graph state. The post-measurement state on the
// surviving qubits is U|after>, where U is `corr` for outcome 0 and
// corr followed by `flip` (a Pauli) for outcome 1. `pick` selects the helper
// neighbor for X measurements (SIZE_MAX = smallest label).
struct MeasureRule {
    Graph after;
    std::vector<std::pair<std::size_t, LocalFrame>> corr;
    std::vector<std::pair<std::size_t, LocalFrame>> flip;
};

MeasureRule measurement_rule(const Graph& g, std::size_t a, char letter,
                             std::size_t pick = SIZE_MAX);

// Same rule, applied to g in place (no graph copy); returns corr and flip.
struct RuleEffects {
    std::vector<std::pair<std::size_t, LocalFrame>> corr;
    std::vector<std::pair<std::size_t, LocalFrame>> flip;
};
RuleEffects apply_measurement_rule(Graph& g, std::size_t a, char letter,
                                   std::size_t pick = SIZE_MAX);

struct MeasureRecord {
    std::size_t vertex;
    char basis;
    int outcome;
};

// A graph plus a local Clifford frame per vertex: the represented state is
// (tensor of frames) |graph>. Pauli measurements rewrite the graph and fold
// the outcome-dependent byproduct Cliffords into the frames.
class FramedGraphState {
public:
    FramedGraphState() = default;
    explicit FramedGraphState(Graph g);

    const Graph& graph() const { return graph_; }
    const LocalFrame& frame(std::size_t v) const { return frames_.at(v); }
    const std::vector<MeasureRecord>& record() const { return record_; }

    // Compose an extra Clifford on top of v's frame (applied after it).
    void push_frame(std::size_t v, const LocalFrame& f);

    // Measure physical basis X/Y/Z at vertex a; the outcome is the physical
    // one (frame signs folded in). `pick` as in measurement_rule.
    MeasureResult measure(std::size_t a, char basis, OutcomeSource& src,
                          std::size_t pick = SIZE_MAX);

    // Forced-outcome conveniences (throw on a contradicted deterministic case).
    void measure_z(std::size_t a, int outcome);
    void measure_y(std::size_t a, int outcome);
    void measure_x(std::size_t a, int outcome, std::size_t pick = SIZE_MAX);

    // Lemma-2 chain contraction: a has exactly the edges (a,v) and (a,b);
    // x, y are the X-measurement outcomes on a and b. Deletes a and b, wires v
    // to b's other neighbors R, and adds corrections Z_v^y Z_R^x (adjusted by
    // any Pauli frames already sitting on a and b).
    void contract_chain(std::size_t v, std::size_t a, std::size_t b, int x, int y);

    // Simulator state: prepare the graph state on the present vertices
    // (ascending label order) and apply each frame.
    Tableau realize() const;

private:
    Graph graph_;
    std::vector<LocalFrame> frames_;
    std::vector<MeasureRecord> record_;
};

}  // namespace qgc
