#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qgc {

// GF(2) vector packed into 64-bit words. All bulk operations are word-parallel.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_(words_for(n), 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    BitVec& operator&=(const BitVec& o);
    BitVec& operator|=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    friend BitVec operator&(BitVec a, const BitVec& b) { a &= b; return a; }
    friend BitVec operator|(BitVec a, const BitVec& b) { a |= b; return a; }

    bool any() const;
    std::size_t count() const;
    void clear();
    // index of lowest set bit, or nullopt
    std::optional<std::size_t> first() const;

    bool operator==(const BitVec&) const = default;

    // parity of the overlap <a,b>
    static bool dot(const BitVec& a, const BitVec& b);

    std::string str() const;                       // e.g. "01101"
    static BitVec parse(const std::string& s);     // from '0'/'1' chars

private:
    static std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct RowOp {
    enum Kind { Swap, Xor } kind;  // Xor: row[to] ^= row[from]
    std::size_t to;
    std::size_t from;
};

// Dense GF(2) matrix, rows packed.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : r_(rows), c_(cols), rows_(rows, BitVec(cols)) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    BitVec& row(std::size_t i) { return rows_[i]; }
    const BitVec& row(std::size_t i) const { return rows_[i]; }
    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }

    bool operator==(const BitMatrix&) const = default;

    BitMatrix transposed() const;
    static BitMatrix identity(std::size_t n);
    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend BitMatrix operator+(BitMatrix a, const BitMatrix& b);

    void apply(const RowOp& op);

    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BitMatrix m;                 // reduced matrix
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::vector<RowOp> ops;      // row operations that carry input to m
};

// Reduced row echelon form over GF(2); the op record replayed on the input
// reproduces the output exactly.
RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// One solution x of A x = b, or nullopt if inconsistent.
std::optional<BitVec> solve(const BitMatrix& a, const BitVec& b);

// Basis of the null space of A (as rows).
std::vector<BitVec> null_space(const BitMatrix& a);

}  // namespace qgc
