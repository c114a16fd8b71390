#pragma once

#include <string>
#include <vector>

#include "qgc/check_matrix.hpp"
#include "qgc/graph.hpp"
#include "qgc/outcome_source.hpp"
#include "qgc/pattern.hpp"
#include "qgc/tableau.hpp"

namespace qgc {

struct ExecutionTrace {
    std::vector<std::vector<int>> outcomes;  // [round][index], as recorded
    std::vector<std::pair<std::size_t, std::size_t>> output_sites;  // row-major
    Tableau output;                          // restricted to output sites
    std::vector<Correction> applied;         // corrections whose signal fired
};

// XOR of the referenced outcomes plus the constant.
int evaluate_signal(const Signal& s, const std::vector<std::vector<int>>& outcomes);

// Prepare the lattice cluster state, run the rounds in order resolving flip
// and sign signals, apply the firing corrections, and restrict to the output
// sites.
ExecutionTrace execute(const MeasurementPattern& p, OutcomeSource& src);

// True iff every generator X_v Z_{N(v)} of g is in t's stabilizer group with
// a + sign. Qubit i of t corresponds to vertex i of g.
bool verify_graph_state(const Tableau& t, const Graph& g);

// Teleport the k-qubit `input` state into `code`: build the augmented graph
// state, Bell-measure each input qubit against its input node (CNOT, H, two
// Z measurements), apply the outcome-conditioned logical corrections, and map
// the result back through the standard-form circuit to the original qubits.
Tableau encode_state(const CheckMatrix& code, const Tableau& input, OutcomeSource& src);

// `outcome m<r>.<i> = b` lines followed by the output check matrix.
std::string trace_dump(const ExecutionTrace& t);

}  // namespace qgc
