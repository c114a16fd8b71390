#include "qgc/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qgc {

static constexpr std::size_t kMaxQubits = 24;

StateVector::StateVector(std::size_t n) : n_(n) {
    if (n > kMaxQubits) throw std::invalid_argument("StateVector: register too large");
    a_.assign(std::size_t(1) << n, 0.0);
    a_[0] = 1.0;
}

void StateVector::apply_1q(std::size_t q, cplx m00, cplx m01, cplx m10, cplx m11) {
    std::size_t bit = std::size_t(1) << q;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i & bit) continue;
        cplx a0 = a_[i], a1 = a_[i | bit];
        a_[i] = m00 * a0 + m01 * a1;
        a_[i | bit] = m10 * a0 + m11 * a1;
    }
}

void StateVector::apply_h(std::size_t q) {
    double s = 1.0 / std::sqrt(2.0);
    apply_1q(q, s, s, s, -s);
}

void StateVector::apply_s(std::size_t q) { apply_1q(q, 1, 0, 0, cplx(0, 1)); }
void StateVector::apply_sdg(std::size_t q) { apply_1q(q, 1, 0, 0, cplx(0, -1)); }
void StateVector::apply_x(std::size_t q) { apply_1q(q, 0, 1, 1, 0); }
void StateVector::apply_y(std::size_t q) { apply_1q(q, 0, cplx(0, -1), cplx(0, 1), 0); }
void StateVector::apply_z(std::size_t q) { apply_1q(q, 1, 0, 0, -1); }

void StateVector::apply_cnot(std::size_t c, std::size_t t) {
    std::size_t cb = std::size_t(1) << c, tb = std::size_t(1) << t;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if ((i & cb) && !(i & tb)) std::swap(a_[i], a_[i | tb]);
}

void StateVector::apply_cz(std::size_t a, std::size_t b) {
    std::size_t ab = std::size_t(1) << a, bb = std::size_t(1) << b;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if ((i & ab) && (i & bb)) a_[i] = -a_[i];
}

void StateVector::apply_pauli(const PauliOp& p) {
    if (p.n != n_) throw std::invalid_argument("apply_pauli: size mismatch");
    std::size_t xm = 0, zm = 0;
    for (std::size_t q = 0; q < n_; ++q) {
        if (p.x.get(q)) xm |= std::size_t(1) << q;
        if (p.z.get(q)) zm |= std::size_t(1) << q;
    }
    static const cplx ipow[4] = {1.0, {0, 1}, -1.0, {0, -1}};
    std::vector<cplx> out(a_.size());
    for (std::size_t f = 0; f < a_.size(); ++f) {
        std::size_t src = f ^ xm;
        int par = std::popcount(zm & src) & 1;
        out[f] = ipow[p.phase] * (par ? -a_[src] : a_[src]);
    }
    a_ = std::move(out);
}

double StateVector::norm() const {
    double s = 0;
    for (const auto& c : a_) s += std::norm(c);
    return std::sqrt(s);
}

void StateVector::normalize() {
    double nn = norm();
    if (nn < 1e-12) throw std::runtime_error("StateVector: normalizing zero vector");
    for (auto& c : a_) c /= nn;
}

double StateVector::outcome_probability(const PauliOp& basis, int outcome) const {
    StateVector t = *this;
    t.apply_pauli(basis);
    double sign = outcome ? -1.0 : 1.0;
    double s = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) s += std::norm(0.5 * (a_[i] + sign * t.a_[i]));
    return s;
}

void StateVector::project(const PauliOp& basis, int outcome) {
    StateVector t = *this;
    t.apply_pauli(basis);
    double sign = outcome ? -1.0 : 1.0;
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = 0.5 * (a_[i] + sign * t.a_[i]);
    if (norm() < 1e-9) throw std::runtime_error("StateVector::project: zero-probability outcome");
    normalize();
}

void StateVector::contract_qubit(std::size_t q, cplx b0, cplx b1) {
    std::size_t bit = std::size_t(1) << q;
    std::size_t low = bit - 1;
    std::vector<cplx> out(a_.size() >> 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::size_t base = ((i & ~low) << 1) | (i & low);
        out[i] = std::conj(b0) * a_[base] + std::conj(b1) * a_[base | bit];
    }
    a_ = std::move(out);
    --n_;
    normalize();
}

void StateVector::fix_global_phase() {
    for (const auto& c : a_) {
        if (std::abs(c) > 1e-9) {
            cplx ph = c / std::abs(c);
            for (auto& d : a_) d /= ph;
            return;
        }
    }
}

int quadratic_form(const Graph& g, const BitVec& x) {
    int s = 0;
    for (std::size_t u = 0; u < g.capacity(); ++u) {
        if (!g.has(u) || !x.get(u)) continue;
        for (std::size_t v = u + 1; v < g.capacity(); ++v)
            if (g.has(v) && x.get(v) && g.has_edge(u, v)) s ^= 1;
    }
    return s;
}

StateVector statevector_graph(const Graph& g) {
    if (g.n_present() != g.capacity())
        throw std::invalid_argument("statevector_graph: graph has deleted vertices");
    std::size_t n = g.capacity();
    StateVector sv(n);
    double amp = std::pow(2.0, -double(n) / 2.0);
    BitVec bits(n);
    for (std::size_t idx = 0; idx < (std::size_t(1) << n); ++idx) {
        for (std::size_t q = 0; q < n; ++q) bits.set(q, (idx >> q) & 1);
        sv.amps()[idx] = quadratic_form(g, bits) ? -amp : amp;
    }
    return sv;
}

bool ray_equal(const StateVector& a, const StateVector& b, double tol) {
    if (a.n_qubits() != b.n_qubits()) return false;
    StateVector x = a, y = b;
    x.fix_global_phase();
    y.fix_global_phase();
    for (std::size_t i = 0; i < x.amps().size(); ++i)
        if (std::abs(x.amps()[i] - y.amps()[i]) > tol) return false;
    return true;
}

}  // namespace qgc
