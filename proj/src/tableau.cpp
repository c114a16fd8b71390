#include "qgc/tableau.hpp"

#include <stdexcept>

namespace qgc {

Tableau::Tableau(std::size_t n) : n_(n), stab_(n, PauliOp(n)), destab_(n, PauliOp(n)) {
    for (std::size_t i = 0; i < n; ++i) {
        stab_[i].z.set(i, true);
        destab_[i].x.set(i, true);
    }
}

void Tableau::apply_h(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows) {
            bool x = r.x.get(q), z = r.z.get(q);
            if (x && z) r.mul_phase(2);
            r.x.set(q, z);
            r.z.set(q, x);
        }
}

void Tableau::apply_s(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows) {
            bool x = r.x.get(q), z = r.z.get(q);
            if (x) {
                r.mul_phase(1);
                r.z.set(q, !z);
            }
        }
}

void Tableau::apply_sdg(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows) {
            bool x = r.x.get(q), z = r.z.get(q);
            if (x) {
                r.mul_phase(3);
                r.z.set(q, !z);
            }
        }
}

void Tableau::apply_x(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows)
            if (r.z.get(q)) r.mul_phase(2);
}

void Tableau::apply_y(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows)
            if (r.x.get(q) != r.z.get(q)) r.mul_phase(2);
}

void Tableau::apply_z(std::size_t q) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows)
            if (r.x.get(q)) r.mul_phase(2);
}

void Tableau::apply_cnot(std::size_t c, std::size_t t) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows) {
            r.x.set(t, r.x.get(t) ^ r.x.get(c));
            r.z.set(c, r.z.get(c) ^ r.z.get(t));
        }
}

void Tableau::apply_cz(std::size_t a, std::size_t b) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows) {
            bool xa = r.x.get(a), xb = r.x.get(b);
            if (xa && xb) r.mul_phase(2);
            r.z.set(a, r.z.get(a) ^ xb);
            r.z.set(b, r.z.get(b) ^ xa);
        }
}

void Tableau::apply_gate(Gate g, std::size_t a, std::size_t b) {
    switch (g) {
        case Gate::H: apply_h(a); return;
        case Gate::S: apply_s(a); return;
        case Gate::Sdg: apply_sdg(a); return;
        case Gate::X: apply_x(a); return;
        case Gate::Y: apply_y(a); return;
        case Gate::Z: apply_z(a); return;
        case Gate::CNOT: apply_cnot(a, b); return;
        case Gate::CZ: apply_cz(a, b); return;
    }
    throw std::logic_error("apply_gate: bad gate");
}

void Tableau::apply_pauli(const PauliOp& p) {
    if (p.n != n_) throw std::invalid_argument("apply_pauli: size mismatch");
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows)
            if (symplectic_product(p, r)) r.mul_phase(2);
}

void Tableau::apply_frame(std::size_t q, const LocalFrame& f) {
    for (auto* rows : {&stab_, &destab_})
        for (auto& r : *rows) {
            SqPauli img = f.conj(r.x.get(q), r.z.get(q));
            // remove the old per-qubit contribution, insert the image
            r.x.set(q, img.x);
            r.z.set(q, img.z);
            r.mul_phase(img.phase);
        }
}

MeasureResult Tableau::measure_pauli(char letter, std::size_t q, OutcomeSource& src) {
    if (q >= n_) throw std::invalid_argument("measure_pauli: site out of range");
    bool bx, bz;
    encode_pauli(letter, bx, bz);
    if (!bx && !bz) throw std::invalid_argument("measure_pauli: identity basis");
    // Single-qubit fast path: anticommutation is a two-bit test per row.
    auto anti = [&](const PauliOp& r) {
        return (bx && r.z.get(q)) != (bz && r.x.get(q));
    };
    std::size_t p = n_;
    for (std::size_t i = 0; i < n_; ++i)
        if (anti(stab_[i])) { p = i; break; }
    PauliOp basis = pauli_at(n_, q, letter);
    if (p == n_) {
        PauliOp acc(n_);
        for (std::size_t i = 0; i < n_; ++i)
            if (anti(destab_[i])) multiply_into(acc, stab_[i]);
        int diff = ((acc.phase - basis.phase) % 4 + 4) % 4;
        if (acc.x != basis.x || acc.z != basis.z || (diff != 0 && diff != 2))
            throw std::logic_error("measure_pauli: inconsistent deterministic combination");
        int outcome = diff == 2;
        src.confirm(outcome);
        return {outcome, true};
    }
    int outcome = src.draw();
    PauliOp h = stab_[p];
    for (std::size_t i = 0; i < n_; ++i) {
        if (i != p && anti(stab_[i])) stab_[i] = multiply(stab_[i], h);
        if (anti(destab_[i])) destab_[i] = multiply(destab_[i], h);
    }
    destab_[p] = h;
    stab_[p] = basis;
    if (outcome) stab_[p].mul_phase(2);
    return {outcome, false};
}

MeasureResult Tableau::measure_pauli(const PauliOp& basis, OutcomeSource& src) {
    if (basis.n != n_) throw std::invalid_argument("measure_pauli: size mismatch");
    if (!basis.is_hermitian()) throw std::invalid_argument("measure_pauli: non-Hermitian basis");
    std::size_t p = n_;
    for (std::size_t i = 0; i < n_; ++i)
        if (symplectic_product(stab_[i], basis)) { p = i; break; }

    if (p == n_) {
        // Deterministic: combine the stabilizer rows flagged by anticommuting
        // destabilizers.
        PauliOp acc(n_);
        for (std::size_t i = 0; i < n_; ++i)
            if (symplectic_product(destab_[i], basis)) acc = multiply(acc, stab_[i]);
        int diff = ((acc.phase - basis.phase) % 4 + 4) % 4;
        if (acc.x != basis.x || acc.z != basis.z || (diff != 0 && diff != 2))
            throw std::logic_error("measure_pauli: inconsistent deterministic combination");
        int outcome = diff == 2;
        src.confirm(outcome);
        return {outcome, true};
    }

    int outcome = src.draw();
    PauliOp h = stab_[p];
    for (std::size_t i = 0; i < n_; ++i) {
        if (i != p && symplectic_product(stab_[i], basis)) stab_[i] = multiply(stab_[i], h);
        if (symplectic_product(destab_[i], basis)) destab_[i] = multiply(destab_[i], h);
    }
    destab_[p] = h;
    stab_[p] = basis;
    if (outcome) stab_[p].mul_phase(2);
    return {outcome, false};
}

CheckMatrix Tableau::stabilizer_check_matrix() const {
    CheckMatrix cm(n_, n_);
    cm.rows = stab_;
    return cm;
}

Tableau prepare_graph_state(const Graph& g) {
    auto vs = g.vertices();
    // Built directly: stabilizer X_i Z_{N(i)}, destabilizer Z_i (equivalent
    // to H on every qubit of |0..0> followed by CZ per edge).
    Tableau t(vs.size());
    std::vector<std::size_t> rank(g.capacity(), SIZE_MAX);
    for (std::size_t i = 0; i < vs.size(); ++i) rank[vs[i]] = i;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        t.stab_[i].x.set(i, true);
        t.stab_[i].z.set(i, false);
        t.destab_[i].x.set(i, false);
        t.destab_[i].z.set(i, true);
        BitVec nb = g.neighbors(vs[i]);
        for (std::size_t v = 0; v < nb.size(); ++v)
            if (nb.get(v) && rank[v] != SIZE_MAX) t.stab_[i].z.set(rank[v], true);
    }
    return t;
}

Tableau tableau_from_stabilizers(const CheckMatrix& cm) {
    if (cm.d != cm.n) throw std::invalid_argument("tableau_from_stabilizers: need n generators");
    if (!is_valid_stabilizer(cm)) throw std::invalid_argument("tableau_from_stabilizers: invalid set");
    std::size_t n = cm.n;
    // Solve for destabilizers: sympl(u, stab_j) = delta_ij.
    BitMatrix a(n, 2 * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < n; ++q) {
            // sympl(u, s) = u_x . s_z + u_z . s_x
            a.set(j, q, cm.rows[j].z.get(q));
            a.set(j, n + q, cm.rows[j].x.get(q));
        }
    std::vector<PauliOp> destab(n, PauliOp(n));
    for (std::size_t i = 0; i < n; ++i) {
        BitVec b(n);
        b.set(i, true);
        auto u = solve(a, b);
        if (!u) throw std::logic_error("tableau_from_stabilizers: completion failed");
        PauliOp d(n);
        for (std::size_t q = 0; q < n; ++q) {
            d.x.set(q, u->get(q));
            d.z.set(q, u->get(n + q));
        }
        d.set_sign(0);
        // enforce mutual commutation with earlier destabilizers
        for (std::size_t j = 0; j < i; ++j)
            if (symplectic_product(d, destab[j])) d = multiply(d, cm.rows[j]);
        d.set_sign(0);
        destab[i] = d;
    }
    return Tableau(n, cm.rows, std::move(destab));
}

Tableau tensor(const Tableau& a, const Tableau& b) {
    std::size_t n = a.n_qubits() + b.n_qubits();
    auto embed = [&](const PauliOp& p, std::size_t off) {
        PauliOp q(n);
        for (std::size_t i = 0; i < p.n; ++i) {
            q.x.set(i + off, p.x.get(i));
            q.z.set(i + off, p.z.get(i));
        }
        q.phase = p.phase;
        return q;
    };
    CheckMatrix cm(n, n);
    std::vector<PauliOp> destab;
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.n_qubits(); ++i, ++k) {
        cm.rows[k] = embed(a.stabilizers()[i], 0);
        destab.push_back(embed(a.destabilizers()[i], 0));
    }
    for (std::size_t i = 0; i < b.n_qubits(); ++i, ++k) {
        cm.rows[k] = embed(b.stabilizers()[i], a.n_qubits());
        destab.push_back(embed(b.destabilizers()[i], a.n_qubits()));
    }
    return Tableau(n, std::move(cm.rows), std::move(destab));
}

Tableau Tableau::restricted(const std::vector<std::size_t>& keep) const {
    std::vector<bool> kept(n_, false);
    for (auto q : keep) kept.at(q) = true;

    std::vector<PauliOp> rows = stab_;
    std::vector<bool> dropped(rows.size(), false);
    // Index rows by their support on dropped qubits so the reduction below
    // touches only candidate rows instead of rescanning the whole tableau.
    std::vector<std::vector<std::size_t>> by_qubit(n_);
    auto index_row = [&](std::size_t i) {
        BitVec s = rows[i].x | rows[i].z;
        while (auto q = s.first()) {
            if (!kept[*q]) by_qubit[*q].push_back(i);
            s.set(*q, false);
        }
    };
    for (std::size_t i = 0; i < rows.size(); ++i) index_row(i);
    for (std::size_t q = 0; q < n_; ++q) {
        if (kept[q]) continue;
        // Reduce so at most one surviving row acts on q, then drop it. For a
        // qubit unentangled with the kept set, all q-components within the
        // group are powers of a single Pauli.
        std::size_t pivot = rows.size();
        for (auto i : by_qubit[q]) {
            if (dropped[i] || i == pivot) continue;
            if (!rows[i].x.get(q) && !rows[i].z.get(q)) continue;  // stale entry
            if (pivot == rows.size()) { pivot = i; continue; }
            if (rows[i].x.get(q) != rows[pivot].x.get(q) ||
                rows[i].z.get(q) != rows[pivot].z.get(q))
                throw std::runtime_error("restricted: qubit still entangled");
            multiply_into(rows[i], rows[pivot]);
            index_row(i);
        }
        if (pivot != rows.size()) dropped[pivot] = true;
    }

    CheckMatrix cm(keep.size(), 0);
    cm.n = keep.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (dropped[i]) continue;
        // must be supported on kept qubits only
        PauliOp p(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) {
            p.x.set(k, rows[i].x.get(keep[k]));
            p.z.set(k, rows[i].z.get(keep[k]));
        }
        for (std::size_t q = 0; q < n_; ++q)
            if (!kept[q] && (rows[i].x.get(q) || rows[i].z.get(q)))
                throw std::runtime_error("restricted: leftover support on dropped qubit");
        p.phase = rows[i].phase;
        if (!p.is_hermitian()) throw std::logic_error("restricted: phase bookkeeping error");
        cm.rows.push_back(p);
        ++cm.d;
    }
    if (cm.d != keep.size()) throw std::runtime_error("restricted: generator count mismatch");
    return tableau_from_stabilizers(cm);
}

bool tableau_equiv(const Tableau& a, const Tableau& b) {
    if (a.n_qubits() != b.n_qubits()) return false;
    return group_equal(a.stabilizer_check_matrix(), b.stabilizer_check_matrix());
}

StateVector to_statevector(const Tableau& t) {
    std::size_t n = t.n_qubits();
    if (n > 16) throw std::invalid_argument("to_statevector: register too large");
    for (std::size_t seed = 0; seed < (std::size_t(1) << n); ++seed) {
        StateVector sv(n);
        for (std::size_t q = 0; q < n; ++q)
            if ((seed >> q) & 1) sv.apply_x(q);
        bool dead = false;
        for (const auto& g : t.stabilizers()) {
            StateVector gs = sv;
            gs.apply_pauli(g);
            for (std::size_t i = 0; i < sv.amps().size(); ++i)
                sv.amps()[i] = 0.5 * (sv.amps()[i] + gs.amps()[i]);
            if (sv.norm() < 1e-9) { dead = true; break; }
        }
        if (dead) continue;
        sv.normalize();
        sv.fix_global_phase();
        return sv;
    }
    throw std::logic_error("to_statevector: no supporting basis state found");
}

}  // namespace qgc
