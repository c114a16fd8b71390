#include "qgc/pauli.hpp"

#include <stdexcept>

namespace qgc {

bool PauliOp::is_hermitian() const {
    return ((phase - int((x & z).count())) % 2 + 2) % 2 == 0;
}

int PauliOp::sign() const {
    int w = int((x & z).count());
    int d = ((phase - w) % 4 + 4) % 4;
    if (d == 0) return 0;
    if (d == 2) return 1;
    throw std::logic_error("PauliOp::sign on non-Hermitian operator");
}

void PauliOp::set_sign(int s) {
    int w = int((x & z).count());
    phase = (w + 2 * (s & 1)) % 4;
}

void encode_pauli(char letter, bool& x, bool& z) {
    switch (letter) {
        case 'I': x = false; z = false; return;
        case 'X': x = true;  z = false; return;
        case 'Y': x = true;  z = true;  return;
        case 'Z': x = false; z = true;  return;
        default: throw std::invalid_argument(std::string("bad Pauli letter: ") + letter);
    }
}

char decode_pauli(bool x, bool z) {
    if (x) return z ? 'Y' : 'X';
    return z ? 'Z' : 'I';
}

PauliOp pauli_at(std::size_t n, std::size_t site, char letter) {
    if (site >= n) throw std::out_of_range("pauli_at: site out of range");
    PauliOp p(n);
    bool x, z;
    encode_pauli(letter, x, z);
    p.x.set(site, x);
    p.z.set(site, z);
    if (x && z) p.phase = 1;  // Y = i X Z
    return p;
}

PauliOp parse_pauli(const std::string& s) {
    std::size_t i = 0;
    int sign = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-';
        ++i;
    }
    PauliOp p(s.size() - i);
    for (std::size_t q = 0; i < s.size(); ++i, ++q) {
        bool x, z;
        encode_pauli(s[i], x, z);
        p.x.set(q, x);
        p.z.set(q, z);
    }
    p.set_sign(sign);
    return p;
}

std::string to_string(const PauliOp& p) {
    std::string s(1, p.sign() ? '-' : '+');
    for (std::size_t q = 0; q < p.n; ++q) s += decode_pauli(p.x.get(q), p.z.get(q));
    return s;
}

PauliOp multiply(const PauliOp& a, const PauliOp& b) {
    if (a.n != b.n) throw std::invalid_argument("multiply: size mismatch");
    PauliOp r(a.n);
    r.x = a.x ^ b.x;
    r.z = a.z ^ b.z;
    // Reordering X^{xb} past Z^{za} costs (-1)^{za.xb}.
    int swap = BitVec::dot(a.z, b.x) ? 2 : 0;
    r.phase = (a.phase + b.phase + swap) % 4;
    return r;
}

void multiply_into(PauliOp& a, const PauliOp& b) {
    if (a.n != b.n) throw std::invalid_argument("multiply: size mismatch");
    int swap = BitVec::dot(a.z, b.x) ? 2 : 0;
    a.phase = (a.phase + b.phase + swap) % 4;
    a.x ^= b.x;
    a.z ^= b.z;
}

int symplectic_product(const PauliOp& a, const PauliOp& b) {
    return int(BitVec::dot(a.x, b.z)) ^ int(BitVec::dot(a.z, b.x));
}

}  // namespace qgc
