#pragma once

#include <json.hpp>

#include "wordmetrics/axioms.hpp"
#include "wordmetrics/spheres.hpp"
#include "wordmetrics/uniformity.hpp"

namespace wordmetrics {

/// Reports serialize with a fixed key order so identical invocations
/// produce byte-identical output.
using Json = nlohmann::ordered_json;

Json report_json(const AxiomReport& report, const Alphabet& alphabet);
Json report_json(const UniformityReport& report, const Alphabet& alphabet);
Json report_json(const EmptyWordBoundReport& report, const Alphabet& alphabet);
Json report_json(const MinimalityReport& report, const Alphabet& alphabet);
Json report_json(const OppositeStats& stats, const Alphabet& alphabet);
Json report_json(const SphereCount& sphere, const Alphabet& alphabet);

} // namespace wordmetrics
