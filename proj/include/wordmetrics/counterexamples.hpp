#pragma once

#include <vector>

#include "wordmetrics/metrics.hpp"

namespace wordmetrics {

/// One overridden pair. Overrides are symmetric: (u, v) and (v, u) denote
/// the same entry, and a diagonal entry must carry the value 0.
struct OverrideEntry {
    Word u;
    Word v;
    DistanceValue value;
};

/// A distance equal to `base` except on a finite table of pairs.
///
/// The symmetry closure of the table is applied automatically; conflicting
/// duplicate entries, negative values, or a nonzero diagonal entry raise
/// InvalidParameterError. The length window widens to cover the overridden
/// pairs, so sphere enumeration stays exact.
DistanceFunction make_override_metric(std::string name, bool claimed_metric,
                                      bool claimed_hamming_compatible, DistanceFunction base,
                                      std::vector<OverrideEntry> overrides);

/// A Hamming compatible metric that is not weakly uniform and dips below d2:
/// distances to the empty word are rerouted through the word 000, and the
/// single pair (000, empty) is pinned to 1. Requires the alphabet "01".
DistanceFunction metric_example_411(const Alphabet& alphabet);

/// A Hamming compatible metric that is weakly uniform but not uniform:
/// distances to the one-letter word 0 are rerouted through 11, with the
/// pairs (empty, 0) and (11, 0) pinned to 1. Requires the alphabet "01".
DistanceFunction metric_example_412(const Alphabet& alphabet);

} // namespace wordmetrics
