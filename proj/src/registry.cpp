#include "wordmetrics/registry.hpp"

#include <charconv>
#include <fstream>

#include <json.hpp>

#include "wordmetrics/counterexamples.hpp"

namespace wordmetrics {

namespace {

bool parse_dn(const std::string& name, unsigned& n)
{
    if (!name.starts_with("dn:"))
        return false;
    const char* first = name.data() + 3;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    return ec == std::errc{} && ptr == last && n >= 1;
}

} // namespace

std::vector<RegistryEntry> registry_entries()
{
    return {
        {"hamming", true, true, "equal-length words only"},
        {"truncated-hamming", false, true, ""},
        {"T", true, true, ""},
        {"d2", true, true, ""},
        {"dn:<n>", false, true, "claimed_metric true iff n <= 2"},
        {"example411", true, true, "alphabet 01 only"},
        {"example412", true, true, "alphabet 01 only"},
    };
}

bool is_registry_name(const std::string& name)
{
    unsigned n = 0;
    return name == "hamming" || name == "truncated-hamming" || name == "T" || name == "d2" ||
           name == "example411" || name == "example412" || parse_dn(name, n);
}

DistanceFunction metric_by_name(const std::string& name, const Alphabet& alphabet)
{
    if (name == "hamming")
        return make_hamming();
    if (name == "truncated-hamming")
        return make_truncated_hamming();
    if (name == "T")
        return make_T();
    if (name == "d2")
        return make_d2();
    if (name == "example411")
        return metric_example_411(alphabet);
    if (name == "example412")
        return metric_example_412(alphabet);
    unsigned n = 0;
    if (parse_dn(name, n))
        return make_dn(n);
    throw InvalidParameterError("unknown metric \"" + name + "\"");
}

DistanceFunction load_override_metric(const std::string& path, const Alphabet& alphabet)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidParameterError("cannot open override metric file \"" + path + "\"");

    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameterError("invalid override metric file: " + std::string(e.what()));
    }

    if (!doc.is_object() || !doc.contains("base") || !doc.contains("overrides"))
        throw InvalidParameterError("override metric file needs \"base\" and \"overrides\" fields");

    const auto base_name = doc["base"].get<std::string>();
    if (!is_registry_name(base_name))
        throw InvalidParameterError("override base must be a registry metric name");
    DistanceFunction base = metric_by_name(base_name, alphabet);

    std::vector<OverrideEntry> entries;
    for (const auto& row : doc["overrides"]) {
        if (!row.is_array() || row.size() != 3)
            throw InvalidParameterError("each override must be [u, v, value]");
        const auto u = row[0].get<std::string>();
        const auto v = row[1].get<std::string>();
        if (!row[2].is_number_integer() || row[2].get<std::int64_t>() < 0)
            throw InvalidParameterError("override values must be non-negative integers");
        entries.push_back({parse_word(u, alphabet), parse_word(v, alphabet),
                           row[2].get<DistanceValue>()});
    }

    std::string name = doc.value("name", base_name + "+overrides");
    bool claimed_metric = doc.value("claimed_metric", false);
    bool claimed_compatible = doc.value("claimed_hamming_compatible", false);
    return make_override_metric(std::move(name), claimed_metric, claimed_compatible,
                                std::move(base), std::move(entries));
}

DistanceFunction resolve_metric(const std::string& name_or_path, const Alphabet& alphabet)
{
    if (is_registry_name(name_or_path))
        return metric_by_name(name_or_path, alphabet);
    return load_override_metric(name_or_path, alphabet);
}

} // namespace wordmetrics
