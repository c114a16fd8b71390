#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgc/pauli.hpp"

namespace qgc {

// d generator rows over n qubits. Rows carry signs via PauliOp::phase.
struct CheckMatrix {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<PauliOp> rows;

    CheckMatrix() = default;
    CheckMatrix(std::size_t nq, std::size_t dg) : n(nq), d(dg), rows(dg, PauliOp(nq)) {}

    bool operator==(const CheckMatrix&) const = default;

    BitMatrix x_block() const;
    BitMatrix z_block() const;
};

// Rows independent over GF(2) and pairwise commuting (Hermitian rows assumed).
bool is_valid_stabilizer(const CheckMatrix& cm);

// If `p`'s bits lie in the row space, return the sign s such that
// (-1)^s * (Hermitian canonical form of p's bits) equals the row product;
// i.e. the product of generators matching p's bits, compared against p.
// Returns 0 if p is in the group exactly, 1 if -p is, nullopt if neither.
std::optional<int> group_sign_of(const CheckMatrix& cm, const PauliOp& p);

// Same group, including signs.
bool group_equal(const CheckMatrix& a, const CheckMatrix& b);

// Text format:
//   line 1: "n d"
//   then d rows "xxxxxx|zzzzzz [+|-]" with 0/1 characters.
// '#' starts a comment; blank lines and extra whitespace are ignored.
CheckMatrix parse_check_matrix(const std::string& text);
std::string serialize_check_matrix(const CheckMatrix& cm);

}  // namespace qgc
