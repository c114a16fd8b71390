#include "qgc/bits.hpp"

#include <bit>
#include <stdexcept>

namespace qgc {

static void check_same(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("BitVec size mismatch");
}

BitVec& BitVec::operator^=(const BitVec& o) {
    check_same(n_, o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
    check_same(n_, o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
    check_same(n_, o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

bool BitVec::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

void BitVec::clear() {
    for (auto& w : w_) w = 0;
}

std::optional<std::size_t> BitVec::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return (i << 6) + std::countr_zero(w_[i]);
    return std::nullopt;
}

bool BitVec::dot(const BitVec& a, const BitVec& b) {
    check_same(a.n_, b.n_);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
    return std::popcount(acc) & 1;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVec BitVec::parse(const std::string& s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("BitVec::parse: bad character");
    }
    return v;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("BitMatrix product shape mismatch");
    BitMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k)) p.row(i) ^= b.row(k);
    return p;
}

BitMatrix operator+(BitMatrix a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("BitMatrix sum shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i) a.row(i) ^= b.row(i);
    return a;
}

void BitMatrix::apply(const RowOp& op) {
    if (op.kind == RowOp::Swap)
        std::swap(rows_[op.to], rows_[op.from]);
    else
        rows_[op.to] ^= rows_[op.from];
}

std::string BitMatrix::str() const {
    std::string s;
    for (std::size_t i = 0; i < r_; ++i) {
        s += rows_[i].str();
        s += '\n';
    }
    return s;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res{m, {}, {}};
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && !res.m.get(piv, col)) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            RowOp op{RowOp::Swap, r, piv};
            res.m.apply(op);
            res.ops.push_back(op);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && res.m.get(i, col)) {
                RowOp op{RowOp::Xor, i, r};
                res.m.apply(op);
                res.ops.push_back(op);
            }
        }
        res.pivots.push_back(col);
        ++r;
    }
    return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

std::optional<BitVec> solve(const BitMatrix& a, const BitVec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    // Augment with b as an extra column.
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, a.cols(), b.get(i));
    }
    auto rr = rref(aug);
    BitVec x(a.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == a.cols()) return std::nullopt;  // 0 = 1 row
        x.set(rr.pivots[i], rr.m.get(i, a.cols()));
    }
    return x;
}

std::vector<BitVec> null_space(const BitMatrix& a) {
    auto rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<BitVec> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVec v(a.cols());
        v.set(free_col, true);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            if (rr.m.get(i, free_col)) v.set(rr.pivots[i], true);
        basis.push_back(v);
    }
    return basis;
}

}  // namespace qgc
