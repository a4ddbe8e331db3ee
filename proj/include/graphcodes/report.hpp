#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace graphcodes {

enum class Metric { Hamming, Graph, DirectedGraph };

/// Certified distance information. Exact mode carries the exhaustive minimum
/// plus a minimizing witness; sampled mode carries an upper bound only and
/// never claims a lower bound.
struct DistanceReport {
    enum class Mode { Exact, Sampled };

    Mode mode = Mode::Exact;
    Metric metric = Metric::Graph;

    /// Exact mode: the certified distance. Sampled mode: the best (smallest)
    /// distance observed, an upper bound on the true distance.
    int value = 0;

    /// Message coefficients (over the code's scalar field) of the minimizing
    /// codeword.
    std::vector<uint32_t> witness_message;

    /// Cover witness: deleting rows S and columns T zeroes the minimizing
    /// word. S == T for the undirected metric; both padded to size `value`.
    std::vector<int> witness_rows;
    std::vector<int> witness_cols;

    uint64_t samples = 0;
    std::optional<uint64_t> seed;

    bool exact() const { return mode == Mode::Exact; }
};

}  // namespace graphcodes
