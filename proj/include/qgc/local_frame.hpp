#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qgc {

// Conjugation result for a single-qubit Pauli: i^phase * X^x Z^z.
struct SqPauli {
    bool x = false, z = false;
    int phase = 0;  // exponent of i, mod 4
    bool operator==(const SqPauli&) const = default;
};

SqPauli sq_multiply(const SqPauli& a, const SqPauli& b);

// Single-qubit Clifford (mod global phase), represented by its conjugation
// action on X and Z. There are exactly 24 such frames.
struct LocalFrame {
    SqPauli img_x{true, false, 0};   // U X U†
    SqPauli img_z{false, true, 0};   // U Z U†

    bool operator==(const LocalFrame&) const = default;

    bool is_identity() const { return *this == LocalFrame{}; }
    // Pauli frames act on X and Z without changing their bits.
    bool is_pauli() const;
    // For a Pauli frame, the (x, z) bits of the underlying Pauli operator.
    std::pair<bool, bool> pauli_bits() const;

    // U (X^x Z^z) U† = i^phase_add * X^{x'} Z^{z'}
    SqPauli conj(bool x, bool z) const;

    std::string str() const;
};

// Frame of the unitary product f·g (g applied to the state first).
LocalFrame compose(const LocalFrame& f, const LocalFrame& g);
LocalFrame inverse(const LocalFrame& f);

LocalFrame frame_identity();
LocalFrame frame_h();
LocalFrame frame_s();    // S = diag(1, i):  X -> Y, Z -> Z
LocalFrame frame_sdg();
LocalFrame frame_x();
LocalFrame frame_y();
LocalFrame frame_z();
LocalFrame frame_sqrt_iy();    // (I + iY)/sqrt(2):  X -> Z, Z -> -X
LocalFrame frame_sqrt_miy();   // (I - iY)/sqrt(2):  X -> -Z, Z -> X
LocalFrame frame_pauli(bool x, bool z);

// All 24 frames (deterministic order).
const std::vector<LocalFrame>& all_frames();

}  // namespace qgc
