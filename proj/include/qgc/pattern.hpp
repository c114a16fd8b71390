#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qgc {

// GF(2) linear expression over measurement outcomes: XOR of the listed
// outcome ids plus an optional constant 1. Ids are (round, index), 1-based
// round, 0-based index within the round.
struct Signal {
    std::vector<std::pair<std::size_t, std::size_t>> terms;
    bool constant = false;

    bool trivial() const { return terms.empty() && !constant; }
    void add_term(std::size_t round, std::size_t index);
    void normalize();  // sort terms, cancel duplicates mod 2

    bool operator==(const Signal&) const = default;
};

// Single-qubit measurement at lattice site (r, c), 1-based. `flip` toggles the
// basis between X and Y when it evaluates to 1; `sign` is XORed into the
// recorded outcome.
struct MeasurementOp {
    std::size_t r = 0, c = 0;
    char basis = 'Z';
    Signal flip, sign;

    bool operator==(const MeasurementOp&) const = default;
};

// Conditional Pauli on an output site, applied when `signal` evaluates to 1.
struct Correction {
    std::size_t r = 0, c = 0;
    char pauli = 'Z';
    Signal signal;

    bool operator==(const Correction&) const = default;
};

struct MeasurementPattern {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<MeasurementOp>> rounds;
    std::vector<Correction> corrections;

    bool operator==(const MeasurementPattern&) const = default;

    // Unmeasured sites in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> outputs() const;

    // Throws std::runtime_error on: out-of-range site, site measured twice,
    // a signal referencing the current or a later round, or a correction on
    // a measured site.
    void validate() const;
};

struct PatternMetrics {
    std::size_t measurements = 0;
    std::size_t rounds = 0;  // non-empty rounds
    std::size_t area = 0;

    bool operator==(const PatternMetrics&) const = default;
};

PatternMetrics metrics(const MeasurementPattern& p);

// Text form:
//   lattice R C
//   round 1
//   M r c BASIS [flip:<ids>] [sign:<ids>]
//   ...
//   C r c PAULI <ids>
// where <ids> is a comma-separated list of m<round>.<index> tokens and/or the
// constant 1. parse reports line and column on malformed input and rejects
// patterns failing validate(). serialize(parse(s)) == s for serialized forms.
std::string serialize_pattern(const MeasurementPattern& p);
MeasurementPattern parse_pattern(const std::string& text);

}  // namespace qgc
