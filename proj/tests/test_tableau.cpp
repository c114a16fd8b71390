#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgc/graph.hpp"
#include "qgc/statevector.hpp"
#include "qgc/tableau.hpp"

using namespace qgc;

TEST_CASE("graph state preparation") {
    Graph g = Graph::path(3);
    Tableau t = prepare_graph_state(g);
    CheckMatrix cm = t.stabilizer_check_matrix();
    // generators X_v Z_N(v), + signs
    CHECK(group_sign_of(cm, parse_pauli("XZI")) == 0);
    CHECK(group_sign_of(cm, parse_pauli("ZXZ")) == 0);
    CHECK(group_sign_of(cm, parse_pauli("IZX")) == 0);
    CHECK(ray_equal(to_statevector(t), statevector_graph(g), 1e-9));
}

TEST_CASE("deterministic and random measurements") {
    auto src = OutcomeSource::seeded(1);
    Tableau t(1);
    auto r = t.measure_pauli('Z', 0, src);
    CHECK(r.deterministic);
    CHECK(r.outcome == 0);

    t.apply_h(0);
    r = t.measure_pauli('Z', 0, src);
    CHECK_FALSE(r.deterministic);
    // measuring again repeats the outcome
    auto r2 = t.measure_pauli('Z', 0, src);
    CHECK(r2.deterministic);
    CHECK(r2.outcome == r.outcome);

    // scripted source forces the random branch and checks deterministic ones
    auto forced = OutcomeSource::scripted({0, 1});
    Tableau u(1);
    u.apply_h(0);
    CHECK(u.measure_pauli('X', 0, forced).outcome == 0);  // det.; script must agree
    CHECK(u.measure_pauli('Z', 0, forced).outcome == 1);  // random; script decides
    auto contradict = OutcomeSource::scripted({1});
    Tableau v(1);
    CHECK_THROWS(v.measure_pauli('Z', 0, contradict));  // deterministic 0, script says 1
}

TEST_CASE("bell pair correlations") {
    for (int seed = 0; seed < 8; ++seed) {
        auto src = OutcomeSource::seeded(seed);
        Tableau t(2);
        t.apply_h(0);
        t.apply_cnot(0, 1);
        auto a = t.measure_pauli('Z', 0, src);
        auto b = t.measure_pauli('Z', 1, src);
        CHECK_FALSE(a.deterministic);
        CHECK(b.deterministic);
        CHECK(a.outcome == b.outcome);
    }
}

TEST_CASE("multi-qubit pauli measurement") {
    auto src = OutcomeSource::seeded(3);
    Tableau t(2);
    t.apply_h(0);
    t.apply_cnot(0, 1);
    auto r = t.measure_pauli(parse_pauli("ZZ"), src);
    CHECK(r.deterministic);
    CHECK(r.outcome == 0);
    r = t.measure_pauli(parse_pauli("-XX"), src);
    CHECK(r.deterministic);
    CHECK(r.outcome == 1);  // state is the +1 eigenstate of +XX
}

TEST_CASE("random circuits agree with the statevector") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + trial % 3;
        Tableau t(n);
        StateVector s(n);
        for (int step = 0; step < 12; ++step) {
            int k = int(rng() % 5);
            std::size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
            switch (k) {
                case 0: t.apply_h(a); s.apply_h(a); break;
                case 1: t.apply_s(a); s.apply_s(a); break;
                case 2: t.apply_cnot(a, b); s.apply_cnot(a, b); break;
                case 3: t.apply_cz(a, b); s.apply_cz(a, b); break;
                case 4: t.apply_x(a); s.apply_x(a); break;
            }
        }
        s.fix_global_phase();
        CHECK(ray_equal(to_statevector(t), s, 1e-9));
    }
}

TEST_CASE("frames, tensor and restriction") {
    Tableau t(1);
    t.apply_frame(0, frame_h());
    CheckMatrix cm = t.stabilizer_check_matrix();
    CHECK(group_sign_of(cm, parse_pauli("X")) == 0);  // H|0> = |+>

    Tableau a(1), b(1);
    b.apply_h(0);
    Tableau ab = tensor(a, b);
    CHECK(ab.n_qubits() == 2);
    CHECK(group_sign_of(ab.stabilizer_check_matrix(), parse_pauli("ZI")) == 0);
    CHECK(group_sign_of(ab.stabilizer_check_matrix(), parse_pauli("IX")) == 0);

    // measure out the middle of a chain, then restrict to the ends
    Graph g = Graph::path(3);
    Tableau c = prepare_graph_state(g);
    auto src = OutcomeSource::seeded(5);
    c.measure_pauli('Z', 1, src);
    Tableau r = c.restricted({0, 2});
    CHECK(r.n_qubits() == 2);
    // ends decouple into X eigenstates (possibly signed)
    auto s0 = group_sign_of(r.stabilizer_check_matrix(), parse_pauli("XI"));
    auto s2 = group_sign_of(r.stabilizer_check_matrix(), parse_pauli("IX"));
    CHECK(s0.has_value());
    CHECK(s2.has_value());

    // restricting while still entangled must throw
    Tableau bell(2);
    bell.apply_h(0);
    bell.apply_cnot(0, 1);
    CHECK_THROWS(bell.restricted({0}));
}

TEST_CASE("tableau_from_stabilizers honours signs") {
    CheckMatrix cm = parse_check_matrix("2 2\n11|00 -\n00|11 +\n");
    Tableau t = tableau_from_stabilizers(cm);
    CHECK(group_equal(t.stabilizer_check_matrix(), cm));
    auto src = OutcomeSource::seeded(0);
    auto r = t.measure_pauli(parse_pauli("XX"), src);
    CHECK(r.deterministic);
    CHECK(r.outcome == 1);
}

TEST_CASE("tableau equivalence") {
    Graph g = Graph::path(2);
    Tableau a = prepare_graph_state(g);
    Tableau b(2);
    b.apply_h(0);
    b.apply_h(1);
    b.apply_cz(0, 1);
    CHECK(tableau_equiv(a, b));
    b.apply_z(0);
    CHECK_FALSE(tableau_equiv(a, b));
}
