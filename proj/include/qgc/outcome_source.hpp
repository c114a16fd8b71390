#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace qgc {

// Supplies measurement outcomes: either seeded-random or a forced script.
class OutcomeSource {
public:
    static OutcomeSource seeded(std::uint64_t seed) {
        OutcomeSource s;
        s.mode_ = Mode::Random;
        s.rng_.seed(seed);
        return s;
    }

    static OutcomeSource scripted(std::vector<int> bits) {
        OutcomeSource s;
        s.mode_ = Mode::Script;
        s.bits_ = std::move(bits);
        return s;
    }

    bool scripted_mode() const { return mode_ == Mode::Script; }

    // Outcome for a non-deterministic measurement.
    int draw() {
        if (mode_ == Mode::Random) return int(rng_() & 1);
        return next_bit();
    }

    // A deterministic measurement produced `value`; in script mode the script
    // must agree.
    void confirm(int value) {
        if (mode_ != Mode::Script) return;
        int b = next_bit();
        if (b != value)
            throw std::runtime_error("outcome script contradicts a deterministic measurement");
    }

private:
    enum class Mode { Random, Script };

    int next_bit() {
        if (pos_ >= bits_.size()) throw std::runtime_error("outcome script exhausted");
        return bits_[pos_++] & 1;
    }

    Mode mode_ = Mode::Random;
    std::mt19937_64 rng_;
    std::vector<int> bits_;
    std::size_t pos_ = 0;
};

}  // namespace qgc
