#include "qgc/executor.hpp"

#include <sstream>
#include <stdexcept>

#include "qgc/graph_code.hpp"

namespace qgc {

int evaluate_signal(const Signal& s, const std::vector<std::vector<int>>& outcomes) {
    int v = s.constant ? 1 : 0;
    for (const auto& [rd, idx] : s.terms) {
        if (rd < 1 || rd > outcomes.size() || idx >= outcomes[rd - 1].size())
            throw std::runtime_error("unresolvable signal reference");
        v ^= outcomes[rd - 1][idx];
    }
    return v;
}

ExecutionTrace execute(const MeasurementPattern& p, OutcomeSource& src) {
    p.validate();
    ExecutionTrace tr;
    Graph lattice = Graph::grid(p.rows, p.cols);
    Tableau t = prepare_graph_state(lattice);
    auto site_q = [&](std::size_t r, std::size_t c) { return (r - 1) * p.cols + (c - 1); };

    for (const auto& rd : p.rounds) {
        tr.outcomes.emplace_back();
        for (const auto& m : rd) {
            char basis = m.basis;
            if (evaluate_signal(m.flip, tr.outcomes)) {
                if (basis == 'X') basis = 'Y';
                else if (basis == 'Y') basis = 'X';
                else throw std::runtime_error("execute: basis flip on a Z measurement");
            }
            int raw = t.measure_pauli(basis, site_q(m.r, m.c), src).outcome;
            tr.outcomes.back().push_back(raw ^ evaluate_signal(m.sign, tr.outcomes));
        }
    }

    for (const auto& c : p.corrections) {
        if (!evaluate_signal(c.signal, tr.outcomes)) continue;
        std::size_t q = site_q(c.r, c.c);
        if (c.pauli == 'X') t.apply_x(q);
        else if (c.pauli == 'Y') t.apply_y(q);
        else t.apply_z(q);
        tr.applied.push_back(c);
    }

    tr.output_sites = p.outputs();
    std::vector<std::size_t> keep;
    for (const auto& [r, c] : tr.output_sites) keep.push_back(site_q(r, c));
    tr.output = t.restricted(keep);
    return tr;
}

bool verify_graph_state(const Tableau& t, const Graph& g) {
    auto vs = g.vertices();
    if (t.n_qubits() != vs.size())
        throw std::invalid_argument("verify_graph_state: size mismatch");
    CheckMatrix have = t.stabilizer_check_matrix();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        PauliOp row(vs.size());
        row.x.set(i, true);
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) row.z.set(j, true);
        if (group_sign_of(have, row) != 0) return false;
    }
    return true;
}

Tableau encode_state(const CheckMatrix& code, const Tableau& input, OutcomeSource& src) {
    StandardForm sf = standard_form(code);
    const GraphCode& gc = sf.code;
    if (input.n_qubits() != gc.k)
        throw std::invalid_argument("encode_state: input qubit count != k");
    LogicalOps logicals = logical_operators(gc);
    AugmentedGraph ag = augment(gc, logicals);

    std::size_t n = gc.n, k = gc.k;
    // Qubits: 0..k-1 input state, k..k+n-1 code vertices, k+n.. input nodes.
    Tableau big = tensor(input, prepare_graph_state(ag.graph));
    auto embed = [&](const PauliOp& p) {
        PauliOp q(big.n_qubits());
        for (std::size_t i = 0; i < n; ++i) {
            q.x.set(k + i, p.x.get(i));
            q.z.set(k + i, p.z.get(i));
        }
        q.phase = p.phase;
        return q;
    };
    for (std::size_t l = 0; l < k; ++l) {
        std::size_t psi = l, node = k + n + l;
        big.apply_cnot(psi, node);
        big.apply_h(psi);
        int m1 = big.measure_pauli('Z', psi, src).outcome;
        int m2 = big.measure_pauli('Z', node, src).outcome;
        if (m1 ^ m2) big.apply_pauli(embed(logicals.x_l[l]));
        if (m1) big.apply_pauli(embed(logicals.z_l[l]));
    }

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) keep.push_back(k + i);
    Tableau enc = big.restricted(keep);

    // Back to the original qubit order and frame.
    CheckMatrix cm(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const PauliOp& row = enc.stabilizers()[i];
        for (std::size_t q = 0; q < n; ++q) {
            cm.rows[i].x.set(gc.perm[q], row.x.get(q));
            cm.rows[i].z.set(gc.perm[q], row.z.get(q));
        }
        cm.rows[i].phase = row.phase;
    }
    Tableau out = tableau_from_stabilizers(cm);
    for (auto it = sf.circuit.gates.rbegin(); it != sf.circuit.gates.rend(); ++it) {
        Gate g = it->first == Gate::S ? Gate::Sdg : it->first;
        out.apply_gate(g, it->second);
    }
    return out;
}

std::string trace_dump(const ExecutionTrace& t) {
    std::ostringstream os;
    for (std::size_t r = 0; r < t.outcomes.size(); ++r)
        for (std::size_t i = 0; i < t.outcomes[r].size(); ++i)
            os << "outcome m" << (r + 1) << '.' << i << " = " << t.outcomes[r][i] << '\n';
    os << serialize_check_matrix(t.output.stabilizer_check_matrix());
    return os.str();
}

}  // namespace qgc
