#pragma once

#include <string>

#include "qgc/bits.hpp"

namespace qgc {

// n-qubit Pauli operator in binary symplectic form.
//
// The operator represented is i^phase * prod_j X_j^{x_j} Z_j^{z_j}
// (per qubit, X written to the left of Z). Y = i X Z, so a Y on qubit j
// corresponds to x_j = z_j = 1 with a +1 contribution to phase.
struct PauliOp {
    std::size_t n = 0;
    BitVec x, z;
    int phase = 0;  // exponent of i, mod 4

    PauliOp() = default;
    explicit PauliOp(std::size_t nq) : n(nq), x(nq), z(nq) {}

    bool operator==(const PauliOp&) const = default;

    bool is_identity_bits() const { return !x.any() && !z.any(); }
    std::size_t weight() const { return (x | z).count(); }

    // Hermitian operators have phase == |x & z| (mod 2); their sign is then
    // +1 when (phase - |x & z|) mod 4 == 0 and -1 when it is 2.
    bool is_hermitian() const;
    int sign() const;        // 0 => +, 1 => -; throws if not Hermitian
    void set_sign(int s);    // keep bits, force sign

    void mul_phase(int k) { phase = ((phase + k) % 4 + 4) % 4; }
};

// Parse a single Pauli letter (I, X, Y, Z) into (x, z) bits.
void encode_pauli(char letter, bool& x, bool& z);
char decode_pauli(bool x, bool z);

// Single-qubit Pauli letter at `site` on an n-qubit register, positive sign.
PauliOp pauli_at(std::size_t n, std::size_t site, char letter);

// Parse e.g. "+XIZ" / "-YY" / "XZ"; sign prefix optional.
PauliOp parse_pauli(const std::string& s);
std::string to_string(const PauliOp& p);  // sign + letters (requires Hermitian)

PauliOp multiply(const PauliOp& a, const PauliOp& b);
// a = multiply(a, b) without the temporary.
void multiply_into(PauliOp& a, const PauliOp& b);

// 0 if a and b commute, 1 if they anticommute.
int symplectic_product(const PauliOp& a, const PauliOp& b);

}  // namespace qgc
