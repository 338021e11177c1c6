#pragma once

#include <string>
#include <vector>

#include "wordmetrics/metrics.hpp"

namespace wordmetrics {

/// One row of `list-metrics`.
struct RegistryEntry {
    std::string name;
    bool claimed_metric;
    bool claimed_hamming_compatible;
    std::string note; // empty unless the entry needs qualification
};

/// The fixed registry: hamming, truncated-hamming, T, d2, dn:<n>,
/// example411, example412.
std::vector<RegistryEntry> registry_entries();

/// True when the name matches a registry entry (including dn:<n>).
bool is_registry_name(const std::string& name);

/// Builds the named registry metric over the given alphabet.
/// Throws InvalidParameterError for unknown names and InvalidAlphabetError
/// when the metric constrains the alphabet (example411/example412).
DistanceFunction metric_by_name(const std::string& name, const Alphabet& alphabet);

/// Loads a user override metric from a JSON file of the form
///   {"base": <registry name>, "overrides": [[u, v, value], ...],
///    "name"?: str, "claimed_metric"?: bool, "claimed_hamming_compatible"?: bool}
/// where u and v are literal words over the alphabet.
DistanceFunction load_override_metric(const std::string& path, const Alphabet& alphabet);

/// Resolves a --metric argument: a registry name, or a path to an override
/// metric file.
DistanceFunction resolve_metric(const std::string& name_or_path, const Alphabet& alphabet);

} // namespace wordmetrics
