#pragma once

#include <string>
#include <vector>

#include "qgc/check_matrix.hpp"
#include "qgc/graph.hpp"
#include "qgc/statevector.hpp"
#include "qgc/tableau.hpp"

namespace qgc {

// Stabilizer code in graph-code block form: generators [I, R | A + R C^T, C]
// over qubits relabeled so the d pivot qubits come first. `perm[i]` is the
// original index of relabeled qubit i (identity whenever the input's X block
// already has pivots in the leading columns).
struct GraphCode {
    std::size_t n = 0, d = 0, k = 0;
    BitMatrix R;  // d x k
    BitMatrix A;  // d x d, symmetric, zero diagonal
    BitMatrix C;  // d x k
    std::vector<std::size_t> perm;

    CheckMatrix check_matrix() const;  // in the relabeled qubit order
};

// Single-qubit gates only, applied in list order (original qubit indices).
struct LocalCliffordCircuit {
    std::vector<std::pair<Gate, std::size_t>> gates;
};

struct StandardForm {
    GraphCode code;
    LocalCliffordCircuit circuit;
};

// Symplectic Gaussian elimination: H where the X block is rank-deficient,
// S to clear the Z-block diagonal, Z to restore + signs. Conjugating the
// input generators through the circuit and permuting columns by `perm`
// yields a generator set spanning code.check_matrix().
StandardForm standard_form(const CheckMatrix& cm);

// n-vertex graph with adjacency [[A, C], [C^T, 0]].
Graph graph_of(const GraphCode& gc);

struct LogicalOps {
    std::vector<PauliOp> x_l, z_l;  // k symplectic pairs on n qubits
};

// Z-type logical X representatives (minimum weight, greedy) and paired
// logical Z operators, all in the relabeled qubit order.
LogicalOps logical_operators(const GraphCode& gc);

// Base graph plus k input vertices labeled n..n+k-1; input l is adjacent to
// the z-support of X_L[l].
struct AugmentedGraph {
    Graph graph;
    std::size_t n = 0;  // code vertices 0..n-1
    std::size_t k = 0;  // inputs n..n+k-1
};

AugmentedGraph augment(const GraphCode& gc, const LogicalOps& logicals);

// Oracle codeword |x_L> = Z^{supp(sum_l x_l X_L[l])} |graph_of(gc)>.
StateVector codeword(const GraphCode& gc, const std::vector<int>& x);

std::string serialize_graph_code(const GraphCode& gc);
std::string serialize_circuit(const LocalCliffordCircuit& c);

}  // namespace qgc
