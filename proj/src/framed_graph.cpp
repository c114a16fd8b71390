#include "qgc/framed_graph.hpp"

#include <stdexcept>

#include "qgc/pauli.hpp"

namespace qgc {

namespace {

std::vector<std::size_t> bits_of(const BitVec& b) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b.get(i)) out.push_back(i);
    return out;
}

}  // namespace

RuleEffects apply_measurement_rule(Graph& g, std::size_t a, char letter, std::size_t pick) {
    if (!g.has(a)) throw std::invalid_argument("measurement_rule: vertex absent");
    RuleEffects r;
    BitVec na = g.neighbors(a);
    switch (letter) {
        case 'Z': {
            g.remove_vertex(a);
            for (auto v : bits_of(na)) r.flip.emplace_back(v, frame_z());
            return r;
        }
        case 'Y': {
            g.local_complement(a);
            g.remove_vertex(a);
            for (auto v : bits_of(na)) {
                r.corr.emplace_back(v, frame_s());
                r.flip.emplace_back(v, frame_z());
            }
            return r;
        }
        case 'X': {
            if (!na.any()) {  // isolated |+>: plain deletion, outcome forced
                g.remove_vertex(a);
                return r;
            }
            std::size_t b = pick;
            if (b == SIZE_MAX) b = *na.first();
            if (b >= na.size() || !na.get(b))
                throw std::invalid_argument("measurement_rule: pick is not a neighbor");
            BitVec nb = g.neighbors(b);
            g.local_complement(b);
            g.local_complement(a);
            g.remove_vertex(a);
            g.local_complement(b);
            // set differences in the original graph
            BitVec sa = na, sb = nb;
            sa.set(a, false);
            sb.set(a, false);
            BitVec only_a = sa, only_b = sb;
            for (std::size_t i = 0; i < sa.size(); ++i) {
                if (sb.get(i)) only_a.set(i, false);
                if (sa.get(i)) only_b.set(i, false);
            }
            only_a.set(b, false);
            r.corr.emplace_back(b, frame_sqrt_iy());
            for (auto v : bits_of(only_a)) r.corr.emplace_back(v, frame_z());
            r.flip.emplace_back(b, frame_y());
            for (auto v : bits_of(only_a)) r.flip.emplace_back(v, frame_z());
            for (auto v : bits_of(only_b)) r.flip.emplace_back(v, frame_z());
            return r;
        }
        default:
            throw std::invalid_argument("measurement_rule: basis must be X, Y or Z");
    }
}

MeasureRule measurement_rule(const Graph& g, std::size_t a, char letter, std::size_t pick) {
    MeasureRule r;
    r.after = g;
    RuleEffects e = apply_measurement_rule(r.after, a, letter, pick);
    r.corr = std::move(e.corr);
    r.flip = std::move(e.flip);
    return r;
}

FramedGraphState::FramedGraphState(Graph g)
    : graph_(std::move(g)), frames_(graph_.capacity()) {}

void FramedGraphState::push_frame(std::size_t v, const LocalFrame& f) {
    if (!graph_.has(v)) throw std::invalid_argument("push_frame: vertex absent");
    frames_.at(v) = compose(f, frames_.at(v));
}

MeasureResult FramedGraphState::measure(std::size_t a, char basis, OutcomeSource& src,
                                        std::size_t pick) {
    if (!graph_.has(a)) throw std::invalid_argument("measure: vertex absent");
    bool bx, bz;
    encode_pauli(basis, bx, bz);
    if (!bx && !bz) throw std::invalid_argument("measure: basis must be X, Y or Z");

    // Measuring B on F|G> is measuring F†BF on |G>.
    SqPauli e = inverse(frames_.at(a)).conj(bx, bz);
    int ph = ((e.phase + (basis == 'Y' ? 1 : 0)) % 4 + 4) % 4;
    int xz = (e.x && e.z) ? 1 : 0;
    if ((ph - xz) % 2 != 0) throw std::logic_error("measure: non-Hermitian effective basis");
    int s0 = (((ph - xz) % 4 + 4) % 4) / 2;
    char eff = decode_pauli(e.x, e.z);

    bool det = (eff == 'X' && graph_.degree(a) == 0);
    int phys;
    if (det) {
        phys = s0;
        src.confirm(phys);
    } else {
        phys = src.draw();
    }
    int m = phys ^ s0;  // outcome of the effective basis on |G>

    MeasureRule rule = measurement_rule(graph_, a, eff, pick);
    graph_ = rule.after;
    for (const auto& [v, f] : rule.corr) frames_[v] = compose(frames_[v], f);
    if (m)
        for (const auto& [v, f] : rule.flip) frames_[v] = compose(frames_[v], f);
    frames_[a] = LocalFrame{};
    record_.push_back({a, basis, phys});
    return {phys, det};
}

void FramedGraphState::measure_z(std::size_t a, int outcome) {
    auto src = OutcomeSource::scripted({outcome});
    measure(a, 'Z', src);
}

void FramedGraphState::measure_y(std::size_t a, int outcome) {
    auto src = OutcomeSource::scripted({outcome});
    measure(a, 'Y', src);
}

void FramedGraphState::measure_x(std::size_t a, int outcome, std::size_t pick) {
    auto src = OutcomeSource::scripted({outcome});
    measure(a, 'X', src, pick);
}

void FramedGraphState::contract_chain(std::size_t v, std::size_t a, std::size_t b,
                                      int x, int y) {
    if (!graph_.has(v) || !graph_.has(a) || !graph_.has(b))
        throw std::invalid_argument("contract_chain: vertex absent");
    if (graph_.degree(a) != 2 || !graph_.has_edge(a, v) || !graph_.has_edge(a, b))
        throw std::invalid_argument("contract_chain: a must link exactly v and b");
    if (graph_.has_edge(v, b))
        throw std::invalid_argument("contract_chain: v and b must not be adjacent");
    if (!frames_.at(a).is_pauli() || !frames_.at(b).is_pauli())
        throw std::invalid_argument("contract_chain: non-Pauli frame on a measured vertex");

    // Z components of Pauli frames flip the effective X outcomes.
    int xe = x ^ (frames_.at(a).pauli_bits().second ? 1 : 0);
    int ye = y ^ (frames_.at(b).pauli_bits().second ? 1 : 0);

    BitVec r = graph_.neighbors(b);
    r.set(a, false);
    for (auto u : bits_of(r)) {
        if (u == v || graph_.has_edge(v, u))
            throw std::invalid_argument("contract_chain: v and b share neighborhood");
    }
    graph_.remove_vertex(a);
    graph_.remove_vertex(b);
    for (auto u : bits_of(r)) graph_.set_edge(v, u, true);

    if (ye) frames_[v] = compose(frames_[v], frame_z());
    if (xe)
        for (auto u : bits_of(r)) frames_[u] = compose(frames_[u], frame_z());
    frames_[a] = LocalFrame{};
    frames_[b] = LocalFrame{};
    record_.push_back({a, 'X', x});
    record_.push_back({b, 'X', y});
}

Tableau FramedGraphState::realize() const {
    Tableau t = prepare_graph_state(graph_);
    auto vs = graph_.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) t.apply_frame(i, frames_[vs[i]]);
    return t;
}

}  // namespace qgc
