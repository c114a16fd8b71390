#include "qgc/graph_code.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgc {

namespace {

void conj_rows(std::vector<PauliOp>& rows, Gate g, std::size_t q) {
    for (auto& r : rows) {
        bool x = r.x.get(q), z = r.z.get(q);
        switch (g) {
            case Gate::H:
                if (x && z) r.mul_phase(2);
                r.x.set(q, z);
                r.z.set(q, x);
                break;
            case Gate::S:
                if (x) {
                    r.mul_phase(1);
                    r.z.set(q, !z);
                }
                break;
            case Gate::Z:
                if (x) r.mul_phase(2);
                break;
            case Gate::X:
                if (z) r.mul_phase(2);
                break;
            default:
                throw std::logic_error("conj_rows: unsupported gate");
        }
    }
}

// Full Gaussian elimination of the X block over the given column order;
// returns the pivot column per row (rows get reordered pivot-first).
std::vector<std::size_t> x_rref(std::vector<PauliOp>& rows, std::size_t n) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t p = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i].x.get(c)) { p = i; break; }
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].x.get(c)) rows[i] = multiply(rows[i], rows[r]);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

CheckMatrix GraphCode::check_matrix() const {
    BitMatrix zb = A + R * C.transposed();
    CheckMatrix cm(n, d);
    for (std::size_t i = 0; i < d; ++i) {
        cm.rows[i].x.set(i, true);
        for (std::size_t l = 0; l < k; ++l) cm.rows[i].x.set(d + l, R.get(i, l));
        for (std::size_t j = 0; j < d; ++j) cm.rows[i].z.set(j, zb.get(i, j));
        for (std::size_t l = 0; l < k; ++l) cm.rows[i].z.set(d + l, C.get(i, l));
        cm.rows[i].phase = int((cm.rows[i].x & cm.rows[i].z).count() % 4);  // + sign
    }
    return cm;
}

StandardForm standard_form(const CheckMatrix& cm) {
    if (!is_valid_stabilizer(cm)) throw std::invalid_argument("standard_form: invalid stabilizer");
    std::size_t n = cm.n, d = cm.d;
    std::vector<PauliOp> rows = cm.rows;
    LocalCliffordCircuit circ;

    // Pass 1: rank the X block.
    auto piv1 = x_rref(rows, n);
    std::vector<bool> in_piv1(n, false);
    for (auto c : piv1) in_piv1[c] = true;

    // Residual rows are pure-Z; give each a Z pivot outside the X pivots and
    // turn it into an X pivot with H.
    std::size_t r = piv1.size();
    for (std::size_t c = 0; c < n && r < d; ++c) {
        if (in_piv1[c]) continue;
        std::size_t p = d;
        for (std::size_t i = r; i < d; ++i)
            if (rows[i].z.get(c)) { p = i; break; }
        if (p == d) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = r + 1; i < d; ++i)
            if (rows[i].z.get(c)) rows[i] = multiply(rows[i], rows[r]);
        conj_rows(rows, Gate::H, c);
        circ.gates.emplace_back(Gate::H, c);
        ++r;
    }
    if (r < d) throw std::logic_error("standard_form: X rank completion failed");

    // Pass 2: full X rref gives [I | R] on the pivot-ordered columns.
    auto pivots = x_rref(rows, n);
    if (pivots.size() != d) throw std::logic_error("standard_form: X block rank deficient");

    std::vector<std::size_t> perm = pivots;
    std::vector<bool> is_piv(n, false);
    for (auto c : pivots) is_piv[c] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_piv[c]) perm.push_back(c);

    // Z-block diagonal (in pivot coordinates) cleared with S.
    for (std::size_t i = 0; i < d; ++i) {
        // The graph adjacency diagonal entry is Zp_ii + (R C^T)_ii; the S gate
        // only flips Zp_ii, so clear the whole sum.
        bool rct = false;
        for (std::size_t c = 0; c < n; ++c) {
            if (is_piv[c]) continue;
            // (R C^T)_ii = sum over non-pivot columns of x_i * z_i there... but
            // C is row i's z on non-pivot columns and R is row i's x there.
            if (rows[i].x.get(c) && rows[i].z.get(c)) rct = !rct;
        }
        if (rows[i].z.get(pivots[i]) == rct) continue;  // A_ii already 0
        conj_rows(rows, Gate::S, pivots[i]);
        circ.gates.emplace_back(Gate::S, pivots[i]);
    }

    // Restore + signs row by row (Z on the pivot flips only that row).
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].sign() == 0) continue;
        conj_rows(rows, Gate::Z, pivots[i]);
        circ.gates.emplace_back(Gate::Z, pivots[i]);
    }

    GraphCode gc;
    gc.n = n;
    gc.d = d;
    gc.k = n - d;
    gc.perm = perm;
    gc.R = BitMatrix(d, gc.k);
    gc.C = BitMatrix(d, gc.k);
    gc.A = BitMatrix(d, d);
    BitMatrix zp(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t l = 0; l < gc.k; ++l) {
            gc.R.set(i, l, rows[i].x.get(perm[d + l]));
            gc.C.set(i, l, rows[i].z.get(perm[d + l]));
        }
        for (std::size_t j = 0; j < d; ++j) zp.set(i, j, rows[i].z.get(perm[j]));
    }
    gc.A = zp + gc.R * gc.C.transposed();
    for (std::size_t i = 0; i < d; ++i) {
        if (gc.A.get(i, i)) throw std::logic_error("standard_form: nonzero adjacency diagonal");
        for (std::size_t j = 0; j < d; ++j)
            if (gc.A.get(i, j) != gc.A.get(j, i))
                throw std::logic_error("standard_form: asymmetric adjacency");
    }
    return {std::move(gc), std::move(circ)};
}

Graph graph_of(const GraphCode& gc) {
    Graph g(gc.n);
    for (std::size_t i = 0; i < gc.d; ++i)
        for (std::size_t j = i + 1; j < gc.d; ++j)
            if (gc.A.get(i, j)) g.set_edge(i, j, true);
    for (std::size_t i = 0; i < gc.d; ++i)
        for (std::size_t l = 0; l < gc.k; ++l)
            if (gc.C.get(i, l)) g.set_edge(i, gc.d + l, true);
    return g;
}

LogicalOps logical_operators(const GraphCode& gc) {
    std::size_t n = gc.n, d = gc.d, k = gc.k;
    // Z-type centralizer elements: z = (R w | w), w in GF(2)^k; none lie in
    // the stabilizer, so any independent k of them form the logical X basis.
    auto z_of = [&](const BitVec& w) {
        PauliOp p(n);
        for (std::size_t i = 0; i < d; ++i) {
            bool bit = false;
            for (std::size_t l = 0; l < k; ++l)
                if (gc.R.get(i, l) && w.get(l)) bit = !bit;
            p.z.set(i, bit);
        }
        for (std::size_t l = 0; l < k; ++l) p.z.set(d + l, w.get(l));
        return p;
    };

    LogicalOps ops;
    if (k == 0) return ops;
    if (k <= 20) {
        // Greedy minimum-weight independent picks over all 2^k - 1 candidates.
        std::vector<BitVec> ws;
        for (std::size_t m = 1; m < (std::size_t(1) << k); ++m) {
            BitVec w(k);
            for (std::size_t l = 0; l < k; ++l) w.set(l, (m >> l) & 1);
            ws.push_back(w);
        }
        std::stable_sort(ws.begin(), ws.end(), [&](const BitVec& a, const BitVec& b) {
            return z_of(a).weight() < z_of(b).weight();
        });
        std::vector<BitVec> basis;
        for (const auto& w : ws) {
            BitMatrix trial(basis.size() + 1, k);
            for (std::size_t i = 0; i < basis.size(); ++i) trial.row(i) = basis[i];
            trial.row(basis.size()) = w;
            if (rank(trial) == basis.size() + 1) {
                basis.push_back(w);
                ops.x_l.push_back(z_of(w));
                if (basis.size() == k) break;
            }
        }
    } else {
        for (std::size_t l = 0; l < k; ++l) {
            BitVec w(k);
            w.set(l, true);
            ops.x_l.push_back(z_of(w));
        }
    }

    // Paired logical Z operators by sequential GF(2) solves over (x|z) bits.
    CheckMatrix stab = gc.check_matrix();
    for (std::size_t l = 0; l < k; ++l) {
        std::vector<PauliOp> constraints;
        std::vector<int> rhs;
        for (const auto& s : stab.rows) { constraints.push_back(s); rhs.push_back(0); }
        for (std::size_t j = 0; j < k; ++j) {
            constraints.push_back(ops.x_l[j]);
            rhs.push_back(j == l ? 1 : 0);
        }
        for (std::size_t j = 0; j < ops.z_l.size(); ++j) {
            constraints.push_back(ops.z_l[j]);
            rhs.push_back(0);
        }
        BitMatrix a(constraints.size(), 2 * n);
        BitVec b(constraints.size());
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            for (std::size_t q = 0; q < n; ++q) {
                a.set(i, q, constraints[i].z.get(q));
                a.set(i, n + q, constraints[i].x.get(q));
            }
            b.set(i, rhs[i]);
        }
        auto sol = solve(a, b);
        if (!sol) throw std::logic_error("logical_operators: no symplectic partner");
        PauliOp p(n);
        for (std::size_t q = 0; q < n; ++q) {
            p.x.set(q, sol->get(q));
            p.z.set(q, sol->get(n + q));
        }
        p.set_sign(0);
        ops.z_l.push_back(p);
    }
    return ops;
}

AugmentedGraph augment(const GraphCode& gc, const LogicalOps& logicals) {
    AugmentedGraph ag;
    ag.n = gc.n;
    ag.k = gc.k;
    ag.graph = Graph(gc.n + gc.k);
    Graph base = graph_of(gc);
    for (std::size_t u = 0; u < gc.n; ++u)
        for (std::size_t v = u + 1; v < gc.n; ++v)
            if (base.has_edge(u, v)) ag.graph.set_edge(u, v, true);
    for (std::size_t l = 0; l < gc.k; ++l) {
        const PauliOp& xl = logicals.x_l.at(l);
        if (xl.x.any()) throw std::invalid_argument("augment: logical X is not Z-type");
        if (!xl.z.any()) throw std::invalid_argument("augment: empty logical X support");
        for (std::size_t q = 0; q < gc.n; ++q)
            if (xl.z.get(q)) ag.graph.set_edge(q, gc.n + l, true);
    }
    return ag;
}

StateVector codeword(const GraphCode& gc, const std::vector<int>& x) {
    if (x.size() != gc.k) throw std::invalid_argument("codeword: bit count != k");
    auto logicals = logical_operators(gc);
    StateVector sv = statevector_graph(graph_of(gc));
    PauliOp zmask(gc.n);
    for (std::size_t l = 0; l < gc.k; ++l)
        if (x[l]) zmask.z ^= logicals.x_l[l].z;
    sv.apply_pauli(zmask);
    sv.fix_global_phase();
    return sv;
}

std::string serialize_graph_code(const GraphCode& gc) {
    std::ostringstream os;
    os << gc.n << ' ' << gc.d << ' ' << gc.k << '\n';
    auto block = [&](const char* name, const BitMatrix& m) {
        os << name << '\n';
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m.cols() == 0) { os << "-\n"; continue; }
            os << m.row(i).str() << '\n';
        }
        if (m.rows() == 0) os << "-\n";
    };
    block("R", gc.R);
    block("A", gc.A);
    block("C", gc.C);
    os << "perm";
    for (auto q : gc.perm) os << ' ' << (q + 1);
    os << '\n';
    return os.str();
}

std::string serialize_circuit(const LocalCliffordCircuit& c) {
    std::ostringstream os;
    for (const auto& [g, q] : c.gates) {
        const char* name = g == Gate::H ? "H" : g == Gate::S ? "S" : g == Gate::Z ? "Z" : "X";
        os << name << ' ' << (q + 1) << '\n';
    }
    return os.str();
}

}  // namespace qgc
