#include "qgc/compiler.hpp"

#include <stdexcept>

#include "qgc/bits.hpp"
#include "qgc/check_matrix.hpp"
#include "qgc/framed_graph.hpp"
#include "qgc/local_frame.hpp"
#include "qgc/pauli.hpp"
#include "qgc/tableau.hpp"

namespace qgc {

namespace {

// Frozen 5x5 gadget templates (found by exhaustive search over the {Y,Z}
// interior assignments; see tools/gadget_search.cpp). '.' marks the four
// unmeasured chain terminals.
constexpr std::array<char, 25> kCrossing = {
    'Z', 'Y', '.', 'Y', 'Z',
    'Y', 'Z', 'Y', 'Y', 'Z',
    '.', 'Y', 'Y', 'Y', '.',
    'Y', 'Y', 'Y', 'Y', 'Z',
    'Y', 'Y', '.', 'Z', 'Z',
};
constexpr std::array<char, 25> kConnection = {
    'Z', 'Y', '.', 'Y', 'Y',
    'Y', 'Z', 'Y', 'Z', 'Y',
    '.', 'Y', 'Y', 'Y', '.',
    'Y', 'Y', 'Y', 'Y', 'Y',
    'Y', 'Z', '.', 'Y', 'Z',
};

struct PlannedOp {
    std::size_t site;            // lattice vertex id
    char axis;                   // planned effective basis
    std::size_t pick = SIZE_MAX; // helper neighbor for X
};

struct Plan {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<PlannedOp>> rounds;
    std::vector<std::size_t> outputs;  // lattice ids, target vertex order
    Graph target;                      // on 0..outputs.size()-1
};

// GF(2) linear form over the pattern's measurement outcomes plus a constant.
struct LinForm {
    BitVec v;
    bool c = false;
    LinForm() = default;
    explicit LinForm(std::size_t m) : v(m) {}
    void operator^=(const LinForm& o) { v ^= o.v; c ^= o.c; }
    bool zero() const { return !v.any() && !c; }
};

Signal to_signal(const LinForm& f, const std::vector<std::pair<std::size_t, std::size_t>>& ids) {
    Signal s;
    for (std::size_t k = 0; k < f.v.size(); ++k)
        if (f.v.get(k)) s.terms.push_back(ids[k]);
    s.constant = f.c;
    s.normalize();
    return s;
}

// Symbolic execution of the plan: the lattice state is tracked as
// (static frame) * (Pauli with linear-form exponents) per site applied to a
// graph state, which stays exact because every outcome-dependent byproduct of
// a Pauli measurement is itself a Pauli. The emitted measurement bases are
// therefore static, and all adaptivity lands in the final correction layer.
MeasurementPattern emit(const Plan& plan) {
    MeasurementPattern pat;
    pat.rows = plan.rows;
    pat.cols = plan.cols;
    std::size_t total = 0;
    for (const auto& rd : plan.rounds) total += rd.size();

    std::size_t nsites = plan.rows * plan.cols;
    Graph g = Graph::grid(plan.rows, plan.cols);
    std::vector<LocalFrame> statics(nsites);
    std::vector<LinForm> px(nsites, LinForm(total)), pz(nsites, LinForm(total));
    std::vector<std::pair<std::size_t, std::size_t>> ids(total);

    std::size_t k = 0;  // global op index == outcome variable slot
    for (const auto& rd : plan.rounds) {
        if (rd.empty()) continue;
        pat.rounds.emplace_back();
        std::size_t round_no = pat.rounds.size();
        for (const auto& op : rd) {
            std::size_t a = op.site;
            bool ex, ez;
            encode_pauli(op.axis, ex, ez);
            SqPauli img = statics[a].conj(ex, ez);
            char declared = decode_pauli(img.x, img.z);

            // Sign of the effective basis through the full frame.
            bool bx, bz;
            encode_pauli(declared, bx, bz);
            SqPauli e = inverse(statics[a]).conj(bx, bz);
            if (e.x != ex || e.z != ez) throw std::logic_error("emit: axis bookkeeping error");
            int ph = ((e.phase + (declared == 'Y' ? 1 : 0)) % 4 + 4) % 4;
            int xz = (ex && ez) ? 1 : 0;
            if ((ph - xz) % 2) throw std::logic_error("emit: non-Hermitian effective basis");
            LinForm s0(total);
            s0.c = (((ph - xz) % 4 + 4) % 4) / 2;
            if (ez) s0 ^= px[a];
            if (ex) s0 ^= pz[a];

            bool det = (op.axis == 'X' && g.degree(a) == 0);
            LinForm m = s0;  // effective outcome = recorded xor s0
            if (!det) m.v.set(k, true);

            RuleEffects rule = [&] {
                try {
                    return apply_measurement_rule(g, a, op.axis, op.pick);
                } catch (const std::exception& e) {
                    throw std::logic_error("emit: op at site (" + std::to_string(a / plan.cols + 1) +
                                           "," + std::to_string(a % plan.cols + 1) + ") axis " +
                                           std::string(1, op.axis) + ": " + e.what());
                }
            }();
            for (const auto& [v, f] : rule.corr) {
                LocalFrame finv = inverse(f);
                SqPauli ix = finv.conj(true, false), iz = finv.conj(false, true);
                LinForm nx(total), nz(total);
                if (ix.x) nx ^= px[v];
                if (iz.x) nx ^= pz[v];
                if (ix.z) nz ^= px[v];
                if (iz.z) nz ^= pz[v];
                px[v] = nx;
                pz[v] = nz;
                statics[v] = compose(statics[v], f);
            }
            for (const auto& [v, f] : rule.flip) {
                auto [fx, fz] = f.pauli_bits();
                if (fx) px[v] ^= m;
                if (fz) pz[v] ^= m;
            }
            statics[a] = LocalFrame{};
            px[a] = LinForm(total);
            pz[a] = LinForm(total);

            MeasurementOp mo;
            mo.r = a / plan.cols + 1;
            mo.c = a % plan.cols + 1;
            mo.basis = declared;
            ids[k] = {round_no, pat.rounds.back().size()};
            pat.rounds.back().push_back(mo);
            ++k;
        }
    }

    // The surviving graph must be the target, vertex i at outputs[i].
    std::size_t n = plan.outputs.size();
    if (g.n_present() != n) throw std::logic_error("emit: leftover unmeasured sites");
    std::vector<std::size_t> rank(nsites, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.has(plan.outputs[i])) throw std::logic_error("emit: output site was consumed");
        rank[plan.outputs[i]] = i;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.has_edge(plan.outputs[i], plan.outputs[j]) != plan.target.has_edge(i, j))
                throw std::logic_error("emit: compiled graph does not match the target");

    // Residual state = Phat(omega) * S |target>; find the static Pauli Q with
    // Q S |target> = |target> exactly, then emit Q * Phat as corrections.
    Graph tgt(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (plan.target.has_edge(i, j)) tgt.set_edge(i, j, true);
    Tableau t0 = prepare_graph_state(tgt);
    for (std::size_t i = 0; i < n; ++i) t0.apply_frame(i, statics[plan.outputs[i]]);
    CheckMatrix have = t0.stabilizer_check_matrix();

    BitMatrix sys(n, 2 * n);
    BitVec rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        PauliOp row(n);
        row.x.set(i, true);
        for (std::size_t j = 0; j < n; ++j)
            if (tgt.has_edge(i, j)) row.z.set(j, true);
        auto sigma = group_sign_of(have, row);
        if (!sigma) throw std::logic_error("emit: residual frame is not Pauli-correctable");
        for (std::size_t q = 0; q < n; ++q) {
            sys.set(i, q, row.z.get(q));      // Q.x coefficients
            sys.set(i, n + q, row.x.get(q));  // Q.z coefficients
        }
        rhs.set(i, *sigma);
    }
    auto qsol = solve(sys, rhs);
    if (!qsol) throw std::logic_error("emit: sign correction unsolvable");

    for (std::size_t i = 0; i < n; ++i) {
        std::size_t out = plan.outputs[i];
        const LocalFrame& s = statics[out];
        SqPauli sx = s.conj(true, false), sz = s.conj(false, true);
        LinForm cx(total), cz(total);
        if (sx.x) cx ^= px[out];
        if (sz.x) cx ^= pz[out];
        if (sx.z) cz ^= px[out];
        if (sz.z) cz ^= pz[out];
        cx.c ^= qsol->get(i);
        cz.c ^= qsol->get(n + i);
        std::size_t r = out / plan.cols + 1, c = out % plan.cols + 1;
        if (!cx.zero()) pat.corrections.push_back({r, c, 'X', to_signal(cx, ids)});
        if (!cz.zero()) pat.corrections.push_back({r, c, 'Z', to_signal(cz, ids)});
    }
    pat.validate();
    return pat;
}

constexpr std::size_t kCenter = 12;  // (3,3) of the 5x5 block

struct Block {
    std::size_t ar, ac;  // anchor (center) lattice coordinates
    const std::array<char, 25>* tpl;
};

// Shared scaffolding: classify every lattice site into prune / gadget Y /
// wire, given the block placements, wire walks and outputs.
Plan assemble(std::size_t rows, std::size_t cols, const std::vector<Block>& blocks,
              const std::vector<std::pair<std::vector<std::size_t>, std::size_t>>& walks,
              std::vector<std::size_t> outputs, Graph target) {
    Plan plan;
    plan.rows = rows;
    plan.cols = cols;
    plan.outputs = std::move(outputs);
    plan.target = std::move(target);
    plan.rounds.assign(4, {});

    std::vector<char> role(rows * cols, 'Z');  // default: pruned
    auto site = [&](std::size_t r, std::size_t c) { return (r - 1) * cols + (c - 1); };
    for (auto out : plan.outputs) role[out] = 'D';
    for (const auto& [sites, hub] : walks)
        for (auto s : sites) role[s] = 'W';
    for (const auto& b : blocks)
        for (std::size_t br = 1; br <= 5; ++br)
            for (std::size_t bc = 1; bc <= 5; ++bc) {
                char t = (*b.tpl)[(br - 1) * 5 + (bc - 1)];
                std::size_t s = site(b.ar + br - 3, b.ac + bc - 3);
                if (t == '.') {
                    if (role[s] != 'W')
                        throw std::logic_error("assemble: terminal not on a wire");
                    continue;
                }
                role[s] = t;
            }

    for (std::size_t s = 0; s < rows * cols; ++s)
        if (role[s] == 'Z') plan.rounds[0].push_back({s, 'Z'});
    for (const auto& b : blocks) {
        for (std::size_t br = 1; br <= 5; ++br)
            for (std::size_t bc = 1; bc <= 5; ++bc) {
                std::size_t idx = (br - 1) * 5 + (bc - 1);
                if ((*b.tpl)[idx] != 'Y' || idx == kCenter) continue;
                plan.rounds[1].push_back({site(b.ar + br - 3, b.ac + bc - 3), 'Y'});
            }
        if ((*b.tpl)[kCenter] == 'Y') plan.rounds[2].push_back({site(b.ar, b.ac), 'Y'});
    }
    for (const auto& [sites, hub] : walks)
        for (auto s : sites) plan.rounds[3].push_back({s, 'X', hub});
    return plan;
}

Plan plan_standard(const Graph& g) {
    std::size_t n = g.n_present();
    std::size_t side = 7 * n - 4;
    auto row_anchor = [](std::size_t i) { return 7 * i - 6; };  // vertex i, 1-based
    auto col_anchor = [](std::size_t j) { return 7 * j - 4; };
    auto site = [&](std::size_t r, std::size_t c) { return (r - 1) * side + (c - 1); };

    std::vector<Block> blocks;
    for (std::size_t i = 2; i <= n; ++i)
        for (std::size_t j = 1; j < i; ++j)
            blocks.push_back({row_anchor(i), col_anchor(j),
                              g.has_edge(i - 1, j - 1) ? &kConnection : &kCrossing});

    auto interior_col = [&](std::size_t c, std::size_t i) {
        for (std::size_t j = 1; j < i; ++j)
            if (c + 1 >= col_anchor(j) && c <= col_anchor(j) + 1) return true;
        return false;
    };
    auto interior_row = [&](std::size_t r, std::size_t j) {
        for (std::size_t i = j + 1; i <= n; ++i) {
            std::size_t a = row_anchor(i);
            if (r + 1 >= a && r <= a + 1) return true;
        }
        return false;
    };

    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> walks;
    for (std::size_t i = 2; i <= n; ++i) {  // row walks, hub D_i, leftward
        std::vector<std::size_t> w;
        std::size_t r = row_anchor(i);
        for (std::size_t c = col_anchor(i) - 1; c >= col_anchor(1) - 2; --c)
            if (!interior_col(c, i)) w.push_back(site(r, c));
        walks.emplace_back(std::move(w), site(r, col_anchor(i)));
    }
    for (std::size_t j = n - 1; j >= 1; --j) {  // column walks, hub D_j, downward
        std::vector<std::size_t> w;
        std::size_t c = col_anchor(j);
        for (std::size_t r = row_anchor(j) + 1; r <= row_anchor(n) + 2; ++r)
            if (!interior_row(r, j)) w.push_back(site(r, c));
        walks.emplace_back(std::move(w), site(row_anchor(j), c));
        if (j == 1) break;
    }

    std::vector<std::size_t> outputs;
    for (std::size_t i = 1; i <= n; ++i) outputs.push_back(site(row_anchor(i), col_anchor(i)));
    return assemble(side, side, blocks, walks, std::move(outputs), g);
}

Plan plan_compact(const Graph& g) {
    std::size_t n = g.n_present();
    std::vector<std::size_t> rowof(n, 0);  // 1-based cell row for owners
    std::size_t r_cells = 0;
    for (std::size_t v = 0; v < n; ++v) {
        bool owner = false;
        for (std::size_t u = v + 1; u < n; ++u)
            if (g.has_edge(v, u)) { owner = true; break; }
        if (owner) rowof[v] = ++r_cells;
    }

    std::size_t rows = r_cells ? 7 * r_cells - 1 : 1;
    std::size_t cols = r_cells ? 7 * n - 1 : 7 * n - 4;
    auto cell_row = [](std::size_t rho) { return 7 * rho - 3; };
    auto col_anchor = [](std::size_t v) { return 7 * v - 4; };  // vertex v, 1-based
    auto site = [&](std::size_t r, std::size_t c) { return (r - 1) * cols + (c - 1); };

    std::vector<Block> blocks;
    for (std::size_t u = 1; u <= n; ++u) {
        if (!rowof[u - 1]) continue;
        for (std::size_t v = u + 1; v <= n; ++v)
            blocks.push_back({cell_row(rowof[u - 1]), col_anchor(v),
                              g.has_edge(u - 1, v - 1) ? &kConnection : &kCrossing});
    }

    // Blocks in vertex v's column sit at the cell rows of earlier owners;
    // blocks in owner u's row sit at the column anchors of later vertices.
    auto interior_row = [&](std::size_t r, std::size_t owners_before) {
        for (std::size_t rho = 1; rho <= owners_before; ++rho)
            if (r + 1 >= cell_row(rho) && r <= cell_row(rho) + 1) return true;
        return false;
    };
    auto interior_col = [&](std::size_t c, std::size_t u) {
        for (std::size_t v = u + 1; v <= n; ++v)
            if (c + 1 >= col_anchor(v) && c <= col_anchor(v) + 1) return true;
        return false;
    };

    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> walks;
    for (std::size_t v = 1; v <= n; ++v) {
        std::vector<std::size_t> w;
        std::size_t cv = col_anchor(v);
        std::size_t owners_before = 0;
        for (std::size_t u = 1; u < v; ++u)
            if (rowof[u - 1]) ++owners_before;
        if (rowof[v - 1]) {
            std::size_t rho = rowof[v - 1];
            for (std::size_t r = 2; r < cell_row(rho); ++r)
                if (!interior_row(r, owners_before)) w.push_back(site(r, cv));
            std::size_t rr = cell_row(rho);
            w.push_back(site(rr, cv));  // corner
            for (std::size_t c = cv + 1; c <= col_anchor(n) + 2; ++c)
                if (!interior_col(c, v)) w.push_back(site(rr, c));
            w.push_back(site(rr, cols));  // trailing parity site
        } else if (owners_before) {
            std::size_t last = cell_row(owners_before) + 2;
            for (std::size_t r = 2; r <= last; ++r)
                if (!interior_row(r, owners_before)) w.push_back(site(r, cv));
        }
        walks.emplace_back(std::move(w), site(1, cv));
    }

    std::vector<std::size_t> outputs;
    for (std::size_t v = 1; v <= n; ++v) outputs.push_back(site(1, col_anchor(v)));
    return assemble(rows, cols, blocks, walks, std::move(outputs), g);
}

Plan plan_gadget(const std::array<char, 25>& tpl, bool link) {
    Plan plan;
    Graph target(4);          // terminals row-major: T, L, R, B
    target.set_edge(0, 3, true);
    target.set_edge(1, 2, true);
    if (link) target.set_edge(1, 3, true);
    std::vector<Block> blocks{{3, 3, &tpl}};
    std::vector<std::size_t> term{2, 10, 14, 22};
    // The terminals are plan outputs here, not wire sites; mark them directly.
    plan.rows = plan.cols = 5;
    plan.outputs = term;
    plan.target = std::move(target);
    plan.rounds.assign(4, {});
    auto site = [](std::size_t br, std::size_t bc) { return (br - 1) * 5 + (bc - 1); };
    for (std::size_t br = 1; br <= 5; ++br)
        for (std::size_t bc = 1; bc <= 5; ++bc)
            if (tpl[site(br, bc)] == 'Z') plan.rounds[0].push_back({site(br, bc), 'Z'});
    for (std::size_t br = 1; br <= 5; ++br)
        for (std::size_t bc = 1; bc <= 5; ++bc) {
            std::size_t idx = site(br, bc);
            if (tpl[idx] == 'Y' && idx != kCenter) plan.rounds[1].push_back({idx, 'Y'});
        }
    if (tpl[kCenter] == 'Y') plan.rounds[2].push_back({kCenter, 'Y'});
    return plan;
}

}  // namespace

const std::array<char, 25>& crossing_template() { return kCrossing; }
const std::array<char, 25>& connection_template() { return kConnection; }

MeasurementPattern crossing_gadget() { return emit(plan_gadget(kCrossing, false)); }
MeasurementPattern connection_gadget() { return emit(plan_gadget(kConnection, true)); }

MeasurementPattern compile_graph(const Graph& g, LayoutMode mode) {
    Graph target = compacted(g);
    std::size_t n = target.n_present();
    if (n == 0) throw std::invalid_argument("compile_graph: empty graph");
    if (n == 1) {
        MeasurementPattern pat;
        pat.rows = pat.cols = 1;
        return pat;
    }
    Plan plan = mode == LayoutMode::Standard ? plan_standard(target) : plan_compact(target);
    return emit(plan);
}

}  // namespace qgc
