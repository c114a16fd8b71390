#pragma once

#include <complex>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/pauli.hpp"

namespace qgc {

// Dense statevector, used as the brute-force oracle for small registers.
// Qubit q corresponds to bit q of the amplitude index.
class StateVector {
public:
    using cplx = std::complex<double>;

    StateVector() = default;
    // |0...0>
    explicit StateVector(std::size_t n);

    std::size_t n_qubits() const { return n_; }
    std::vector<cplx>& amps() { return a_; }
    const std::vector<cplx>& amps() const { return a_; }

    void apply_h(std::size_t q);
    void apply_s(std::size_t q);
    void apply_sdg(std::size_t q);
    void apply_x(std::size_t q);
    void apply_y(std::size_t q);
    void apply_z(std::size_t q);
    void apply_cnot(std::size_t c, std::size_t t);
    void apply_cz(std::size_t a, std::size_t b);
    void apply_pauli(const PauliOp& p);

    double norm() const;
    void normalize();

    // Probability of observing `outcome` for Hermitian Pauli `basis`.
    double outcome_probability(const PauliOp& basis, int outcome) const;
    // Project onto the (-1)^outcome eigenspace of basis and renormalize.
    // Throws if the outcome has (near-)zero probability.
    void project(const PauliOp& basis, int outcome);

    // Drop qubit q by contracting with the single-qubit bra (b0, b1);
    // renormalizes. Used to peel off measured qubits in known product states.
    void contract_qubit(std::size_t q, cplx b0, cplx b1);

    // Multiply by a phase making the first nonzero amplitude positive real.
    void fix_global_phase();

private:
    void apply_1q(std::size_t q, cplx m00, cplx m01, cplx m10, cplx m11);
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

// sum over edges {u,v} of x_u x_v, mod 2 (graph must have all vertices present)
int quadratic_form(const Graph& g, const BitVec& x);

// Graph state: amplitudes 2^{-n/2} (-1)^{q(x)}.
StateVector statevector_graph(const Graph& g);

// Equality up to a global phase.
bool ray_equal(const StateVector& a, const StateVector& b, double tol);

}  // namespace qgc
