#include "wordmetrics/counterexamples.hpp"

#include <map>
#include <utility>

namespace wordmetrics {

namespace {

using OverrideKey = std::pair<Word, Word>;

OverrideKey normalized(const Word& u, const Word& v)
{
    return u <= v ? OverrideKey{u, v} : OverrideKey{v, u};
}

void require_binary(const Alphabet& alphabet, const char* which)
{
    if (alphabet.symbols() != "01")
        throw InvalidAlphabetError(std::string(which) + " is defined over the alphabet \"01\" only");
}

} // namespace

DistanceFunction make_override_metric(std::string name, bool claimed_metric,
                                      bool claimed_hamming_compatible, DistanceFunction base,
                                      std::vector<OverrideEntry> overrides)
{
    auto table = std::make_shared<std::map<OverrideKey, DistanceValue>>();
    std::size_t max_gap = 0;
    for (const auto& entry : overrides) {
        if (entry.value < 0)
            throw InvalidParameterError("override values must be non-negative");
        if (entry.u == entry.v && entry.value != 0)
            throw InvalidParameterError("a diagonal override must be 0");
        auto key = normalized(entry.u, entry.v);
        auto [it, inserted] = table->emplace(key, entry.value);
        if (!inserted && it->second != entry.value)
            throw InvalidParameterError("conflicting override for one pair");
        std::size_t a = entry.u.length(), b = entry.v.length();
        max_gap = std::max(max_gap, a > b ? a - b : b - a);
    }

    auto base_ptr = std::make_shared<DistanceFunction>(std::move(base));

    DistanceFunction::Eval eval = [table, base_ptr](const Word& u, const Word& v) {
        auto it = table->find(normalized(u, v));
        if (it != table->end())
            return it->second;
        return (*base_ptr)(u, v);
    };

    DistanceFunction::Window window = nullptr;
    if (base_ptr->length_window(0).has_value()) {
        window = [base_ptr, max_gap](DistanceValue r) {
            return std::max(*base_ptr->length_window(r), max_gap);
        };
    }

    return DistanceFunction(std::move(name), claimed_metric, claimed_hamming_compatible,
                            std::move(eval), std::move(window));
}

DistanceFunction metric_example_411(const Alphabet& alphabet)
{
    require_binary(alphabet, "example411");
    const Word zzz(std::vector<Symbol>{0, 0, 0});

    // d2 evaluated after substituting 000 for the empty word. This
    // reproduces the case table: pairs without the empty word are plain d2,
    // and distances to the empty word become d2(u, 000).
    DistanceFunction rerouted(
        "d2[empty->000]", true, true,
        [zzz](const Word& u, const Word& v) { return d2(u.empty() ? zzz : u, v.empty() ? zzz : v); },
        [](DistanceValue r) { return static_cast<std::size_t>(2 * r) + 3; });

    return make_override_metric("example411", true, true, std::move(rerouted),
                                {{zzz, Word{}, 1}});
}

DistanceFunction metric_example_412(const Alphabet& alphabet)
{
    require_binary(alphabet, "example412");
    const Word zero(std::vector<Symbol>{0});
    const Word oo(std::vector<Symbol>{1, 1});

    // T evaluated after substituting 11 for the one-letter word 0 (the
    // word, not the symbol), then two pairs pinned to 1.
    DistanceFunction rerouted(
        "T[0->11]", true, true,
        [zero, oo](const Word& u, const Word& v) {
            return metric_T(u == zero ? oo : u, v == zero ? oo : v);
        },
        [](DistanceValue r) { return static_cast<std::size_t>(r) + 1; });

    return make_override_metric("example412", true, true, std::move(rerouted),
                                {{Word{}, zero, 1}, {oo, zero, 1}});
}

} // namespace wordmetrics
