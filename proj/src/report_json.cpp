#include "wordmetrics/report_json.hpp"

#include <numeric>

namespace wordmetrics {

namespace {

Json words_json(const std::vector<Word>& words, const Alphabet& alphabet)
{
    Json out = Json::array();
    for (const Word& w : words)
        out.push_back(w.to_string(alphabet));
    return out;
}

std::string fraction_string(std::uint64_t num, std::uint64_t den)
{
    const std::uint64_t g = std::gcd(num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

} // namespace

Json report_json(const AxiomReport& report, const Alphabet& alphabet)
{
    Json out;
    out["verdict"] = to_string(report.verdict);
    if (report.witness) {
        out["kind"] = to_string(report.witness->kind);
        out["witness"] = words_json(report.witness->words, alphabet);
        out["values"] = report.witness->values;
    } else {
        out["kind"] = nullptr;
        out["witness"] = Json::array();
        out["values"] = Json::array();
    }
    out["checked_pairs"] = report.checked_pairs;
    out["checked_triples"] = report.checked_triples;
    out["max_len"] = report.max_len;
    return out;
}

Json report_json(const UniformityReport& report, const Alphabet& alphabet)
{
    Json out;
    out["weakly_uniform"] = to_string(report.weakly_uniform);
    if (report.uniform)
        out["uniform"] = to_string(*report.uniform);
    else
        out["uniform"] = nullptr;
    out["bound"] = report.max_len;
    out["vacuous"] = report.vacuous;
    if (report.witness_weak) {
        const auto& w = *report.witness_weak;
        out["witness_weak"] = {{"u", w.u.to_string(alphabet)},
                               {"v", w.v.to_string(alphabet)},
                               {"values", {w.value_u, w.value_v}}};
    } else {
        out["witness_weak"] = nullptr;
    }
    if (report.witness_uniform) {
        const auto& w = *report.witness_uniform;
        out["witness_uniform"] = {{"u", w.u.to_string(alphabet)},
                                  {"v", w.v.to_string(alphabet)},
                                  {"w", w.w.to_string(alphabet)},
                                  {"values", {w.value_u, w.value_v}}};
    } else {
        out["witness_uniform"] = nullptr;
    }
    return out;
}

Json report_json(const EmptyWordBoundReport& report, const Alphabet& alphabet)
{
    Json out;
    out["bound_check"] = report_json(report.bound, alphabet);
    out["weak_uniformity"] = report_json(report.weak, alphabet);
    out["attained_lengths"] = report.attained;
    return out;
}

Json report_json(const MinimalityReport& report, const Alphabet& alphabet)
{
    Json out;
    out["verdict"] = to_string(report.verdict);
    out["bound"] = report.max_len;
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(Json::array(
            {v.u.to_string(alphabet), v.w.to_string(alphabet), v.delta_value, v.d2_value}));
    out["violations"] = violations;
    Json classes = Json::array();
    for (const auto& c : report.classes) {
        classes.push_back({{"len_u", c.len_u},
                           {"len_w", c.len_w},
                           {"satisfied", c.satisfied},
                           {"total", c.total},
                           {"fraction", fraction_string(c.satisfied, c.total)}});
    }
    out["fraction_satisfying"] = classes;
    return out;
}

Json report_json(const OppositeStats& stats, const Alphabet& alphabet)
{
    Json out;
    out["n"] = stats.n;
    out["w"] = stats.w.to_string(alphabet);
    out["examined"] = stats.examined;
    out["violating_u"] = stats.violating;
    out["opposite_rescues"] = stats.rescues;
    out["lemma_window_size"] = stats.window_size.str();
    out["probability_floor"] =
        stats.floor_denominator == 1 ? "1" : "1/" + stats.floor_denominator.str();
    Json violators = Json::array();
    for (const auto& v : stats.violators) {
        violators.push_back({{"u", v.u.to_string(alphabet)},
                             {"delta", v.delta_uw},
                             {"d2", v.d2_uw},
                             {"opposite", v.opposite.to_string(alphabet)},
                             {"opposite_delta", v.delta_vw},
                             {"opposite_d2", v.d2_vw},
                             {"rescued", v.rescued},
                             {"overlap", v.overlap},
                             {"equality_opposites", v.equality_opposites.str()}});
    }
    out["violators"] = violators;
    return out;
}

Json report_json(const SphereCount& sphere, const Alphabet& alphabet)
{
    Json out;
    out["center"] = sphere.center.to_string(alphabet);
    out["radius"] = sphere.radius;
    out["total"] = sphere.total.str();
    Json by_length = Json::object();
    for (const auto& [len, count] : sphere.by_length)
        by_length[std::to_string(len)] = count.str();
    out["by_length"] = by_length;
    return out;
}

} // namespace wordmetrics
