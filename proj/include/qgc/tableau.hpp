#pragma once

#include <vector>

#include "qgc/check_matrix.hpp"
#include "qgc/graph.hpp"
#include "qgc/local_frame.hpp"
#include "qgc/outcome_source.hpp"
#include "qgc/pauli.hpp"
#include "qgc/statevector.hpp"

namespace qgc {

enum class Gate { H, S, Sdg, X, Y, Z, CNOT, CZ };

struct MeasureResult {
    int outcome = 0;
    bool deterministic = false;
};

// Stabilizer tableau with destabilizer rows (CHP style). Row k of `stab`
// stabilizes the state; `destab[k]` anticommutes with `stab[k]` and commutes
// with every other row.
class Tableau {
public:
    Tableau() = default;
    // |0...0>
    explicit Tableau(std::size_t n);

    std::size_t n_qubits() const { return n_; }
    const std::vector<PauliOp>& stabilizers() const { return stab_; }
    const std::vector<PauliOp>& destabilizers() const { return destab_; }

    void apply_h(std::size_t q);
    void apply_s(std::size_t q);
    void apply_sdg(std::size_t q);
    void apply_x(std::size_t q);
    void apply_y(std::size_t q);
    void apply_z(std::size_t q);
    void apply_cnot(std::size_t c, std::size_t t);
    void apply_cz(std::size_t a, std::size_t b);
    void apply_gate(Gate g, std::size_t a, std::size_t b = SIZE_MAX);
    // Conjugate the state by a Pauli (sign updates only).
    void apply_pauli(const PauliOp& p);
    // Conjugate qubit q by a single-qubit Clifford frame.
    void apply_frame(std::size_t q, const LocalFrame& f);

    // Measure single-qubit Pauli `letter` (X/Y/Z) at site q.
    MeasureResult measure_pauli(char letter, std::size_t q, OutcomeSource& src);
    // Measure an arbitrary Hermitian Pauli.
    MeasureResult measure_pauli(const PauliOp& basis, OutcomeSource& src);

    CheckMatrix stabilizer_check_matrix() const;

    // Tableau on the kept qubits; all other qubits must be unentangled with
    // them (e.g. already measured out).
    Tableau restricted(const std::vector<std::size_t>& keep) const;

    bool operator==(const Tableau&) const = default;

private:
    Tableau(std::size_t n, std::vector<PauliOp> stab, std::vector<PauliOp> destab)
        : n_(n), stab_(std::move(stab)), destab_(std::move(destab)) {}

    friend Tableau tableau_from_stabilizers(const CheckMatrix& cm);
    friend Tableau tensor(const Tableau& a, const Tableau& b);
    friend Tableau prepare_graph_state(const Graph& g);

    std::size_t n_ = 0;
    std::vector<PauliOp> stab_, destab_;
};

// |G> for a graph whose vertices are all present; qubit order = label order.
Tableau prepare_graph_state(const Graph& g);

// Build a tableau from a full set of n independent commuting generators
// (signs honored); destabilizers are completed internally.
Tableau tableau_from_stabilizers(const CheckMatrix& cm);

// Tensor product; `a` occupies the low qubit indices.
Tableau tensor(const Tableau& a, const Tableau& b);

// Same state: stabilizer groups equal including signs.
bool tableau_equiv(const Tableau& a, const Tableau& b);

// Dense amplitudes, global phase fixed (first nonzero amplitude positive real).
StateVector to_statevector(const Tableau& t);

}  // namespace qgc
