#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "qgc/framed_graph.hpp"
#include "qgc/statevector.hpp"
#include "qgc/tableau.hpp"

using namespace qgc;
using cplx = std::complex<double>;

namespace {

PauliOp basis_op(std::size_t n, char b, std::size_t a) {
    PauliOp p(n);
    bool x, z;
    encode_pauli(b, x, z);
    p.x.set(a, x);
    p.z.set(a, z);
    if (b == 'Y') p.phase = 1;
    return p;
}

// post-measurement single-qubit eigenstate ket of basis b with outcome m
std::pair<cplx, cplx> ket_of(char b, int m) {
    double r = 1.0 / std::sqrt(2.0);
    if (b == 'Z') return {m ? 0.0 : 1.0, m ? 1.0 : 0.0};
    if (b == 'X') return {r, m ? -r : r};
    return {r, cplx(0, m ? -1.0 : 1.0) * r};
}

// brute-force oracle: project the dense state, then peel the measured qubit
StateVector oracle(const StateVector& psi, std::size_t a, char b, int m) {
    StateVector proj = psi;
    proj.project(basis_op(psi.n_qubits(), b, a), m);
    auto [k0, k1] = ket_of(b, m);
    proj.contract_qubit(a, k0, k1);
    return proj;
}

void force(FramedGraphState& st, std::size_t a, char b, int m) {
    if (b == 'Z') st.measure_z(a, m);
    else if (b == 'Y') st.measure_y(a, m);
    else st.measure_x(a, m);
}

}  // namespace

TEST_CASE("single measurements on bare graph states match the oracle") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 4;
        Graph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() & 1) g.set_edge(i, j, true);
        for (std::size_t a = 0; a < n; ++a)
            for (char b : {'X', 'Y', 'Z'})
                for (int m = 0; m < 2; ++m) {
                    FramedGraphState st(g);
                    StateVector psi = to_statevector(st.realize());
                    double p = psi.outcome_probability(basis_op(n, b, a), m);
                    if (p < 1e-12) {
                        CHECK_THROWS(force(st, a, b, m));
                        continue;
                    }
                    force(st, a, b, m);
                    CHECK(ray_equal(to_statevector(st.realize()), oracle(psi, a, b, m), 1e-9));
                    ++checked;
                }
    }
    CHECK(checked > 500);
}

TEST_CASE("measurements with arbitrary frames in place match the oracle") {
    const auto& frames = all_frames();
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 2 + trial % 4;
        Graph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() & 1) g.set_edge(i, j, true);
        std::size_t a = rng() % n;
        char b = "XYZ"[rng() % 3];
        int m = int(rng() & 1);
        FramedGraphState st(g);
        for (std::size_t v = 0; v < n; ++v) st.push_frame(v, frames[rng() % 24]);
        StateVector psi = to_statevector(st.realize());
        if (psi.outcome_probability(basis_op(n, b, a), m) < 1e-12) {
            CHECK_THROWS(force(st, a, b, m));
            continue;
        }
        force(st, a, b, m);
        CHECK(ray_equal(to_statevector(st.realize()), oracle(psi, a, b, m), 1e-9));
    }
}

TEST_CASE("measurement_rule mirrors the in-place variant") {
    Graph g = Graph::path(4);
    for (char b : {'X', 'Y', 'Z'}) {
        MeasureRule rule = measurement_rule(g, 1, b);
        Graph h = g;
        RuleEffects eff = apply_measurement_rule(h, 1, b);
        CHECK(h == rule.after);
        CHECK(eff.corr == rule.corr);
        CHECK(eff.flip == rule.flip);
    }
    // isolated-vertex X measurement is a plain deletion
    Graph iso(2);
    MeasureRule rule = measurement_rule(iso, 0, 'X');
    CHECK_FALSE(rule.after.has(0));
    CHECK(rule.corr.empty());
    CHECK(rule.flip.empty());
}

TEST_CASE("random outcomes are drawn from the source") {
    Graph g = Graph::path(2);
    FramedGraphState st(g);
    auto src = OutcomeSource::scripted({1});
    auto r = st.measure(0, 'Z', src);
    CHECK_FALSE(r.deterministic);
    CHECK(r.outcome == 1);
    CHECK(st.record().size() == 1);
    CHECK(st.record()[0].basis == 'Z');
    CHECK(st.record()[0].outcome == 1);
}

TEST_CASE("chain contraction against the oracle, all outcomes and frames") {
    // 5-chain 0-1-2-3-4: contract away 2 and 3 with X measurements (outcomes
    // x at 2, y at 3), wiring 1 to 4 with byproducts Z_1^y Z_4^x. Checked
    // exhaustively over the 4 outcome pairs and all 32 pre-existing Pauli
    // corrections on the chain.
    for (int mask = 0; mask < 32; ++mask)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                Graph g = Graph::path(5);
                FramedGraphState st(g);
                for (int v = 0; v < 5; ++v)
                    if ((mask >> v) & 1) st.push_frame(v, frame_z());
                StateVector psi = to_statevector(st.realize());

                // oracle: measure X at 2 then X at 3 with forced outcomes
                StateVector ref = oracle(psi, 2, 'X', x);
                ref = oracle(ref, 2, 'X', y);  // vertex 3 is qubit 2 after the peel

                FramedGraphState ct = st;
                ct.contract_chain(1, 2, 3, x, y);
                CHECK(ray_equal(to_statevector(ct.realize()), ref, 1e-9));
            }
}
