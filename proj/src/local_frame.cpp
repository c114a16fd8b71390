#include "qgc/local_frame.hpp"

#include <stdexcept>

namespace qgc {

SqPauli sq_multiply(const SqPauli& a, const SqPauli& b) {
    SqPauli r;
    r.x = a.x ^ b.x;
    r.z = a.z ^ b.z;
    r.phase = (a.phase + b.phase + (a.z && b.x ? 2 : 0)) % 4;
    return r;
}

bool LocalFrame::is_pauli() const {
    return img_x.x && !img_x.z && !img_z.x && img_z.z;
}

std::pair<bool, bool> LocalFrame::pauli_bits() const {
    if (!is_pauli()) throw std::logic_error("LocalFrame::pauli_bits on non-Pauli frame");
    // X^a Z^b flips Z iff a = 1 and flips X iff b = 1.
    bool b = img_x.phase == 2;
    bool a = img_z.phase == 2;
    return {a, b};
}

SqPauli LocalFrame::conj(bool x, bool z) const {
    // U (X^x Z^z) U† = (U X U†)^x (U Z U†)^z
    SqPauli r;  // identity
    if (x) r = img_x;
    if (z) r = sq_multiply(r, img_z);
    return r;
}

LocalFrame compose(const LocalFrame& f, const LocalFrame& g) {
    LocalFrame r;
    {
        SqPauli t = f.conj(g.img_x.x, g.img_x.z);
        t.phase = (t.phase + g.img_x.phase) % 4;
        r.img_x = t;
    }
    {
        SqPauli t = f.conj(g.img_z.x, g.img_z.z);
        t.phase = (t.phase + g.img_z.phase) % 4;
        r.img_z = t;
    }
    return r;
}

LocalFrame inverse(const LocalFrame& f) {
    for (const auto& g : all_frames())
        if (compose(f, g).is_identity()) return g;
    throw std::logic_error("LocalFrame::inverse: not found");
}

LocalFrame frame_identity() { return {}; }

LocalFrame frame_h() { return {{false, true, 0}, {true, false, 0}}; }
LocalFrame frame_s() { return {{true, true, 1}, {false, true, 0}}; }
LocalFrame frame_sdg() { return {{true, true, 3}, {false, true, 0}}; }
LocalFrame frame_x() { return {{true, false, 0}, {false, true, 2}}; }
LocalFrame frame_y() { return {{true, false, 2}, {false, true, 2}}; }
LocalFrame frame_z() { return {{true, false, 2}, {false, true, 0}}; }
LocalFrame frame_sqrt_iy() { return {{false, true, 0}, {true, false, 2}}; }
LocalFrame frame_sqrt_miy() { return {{false, true, 2}, {true, false, 0}}; }

LocalFrame frame_pauli(bool x, bool z) {
    LocalFrame f;
    if (z) f.img_x.phase = 2;
    if (x) f.img_z.phase = 2;
    return f;
}

const std::vector<LocalFrame>& all_frames() {
    static const std::vector<LocalFrame> frames = [] {
        std::vector<LocalFrame> out{frame_identity()};
        std::vector<LocalFrame> gens{frame_h(), frame_s()};
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (const auto& g : gens) {
                LocalFrame nf = compose(g, out[i]);
                bool seen = false;
                for (const auto& f : out)
                    if (f == nf) { seen = true; break; }
                if (!seen) out.push_back(nf);
            }
        }
        return out;
    }();
    return frames;
}

static char sq_letter(const SqPauli& p) {
    if (p.x) return p.z ? 'Y' : 'X';
    return p.z ? 'Z' : 'I';
}

std::string LocalFrame::str() const {
    auto one = [](const SqPauli& p) {
        int herm = (p.x && p.z) ? 1 : 0;
        int s = ((p.phase - herm) % 4 + 4) % 4;
        std::string out(1, s == 2 ? '-' : '+');
        out += sq_letter(p);
        return out;
    };
    return "X->" + one(img_x) + ",Z->" + one(img_z);
}

}  // namespace qgc
