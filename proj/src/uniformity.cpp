#include "wordmetrics/uniformity.hpp"

#include <algorithm>

#include "scan.hpp"

namespace wordmetrics {

namespace {

using detail::ordered_search;

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap)
{
    if (base == 0)
        return exp == 0 ? 1 : 0;
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > cap / base)
            return cap + 1;
        result *= base;
    }
    return result;
}

// Opposites of u share its length and differ in every position; per
// position the candidates are the alphabet minus u's letter, in symbol
// order, so the odometer yields them in lexicographic order.
void visit_opposites(const Word& u, const Alphabet& alphabet,
                     const std::function<bool(const Word&)>& visit)
{
    const std::size_t n = u.length();
    const std::size_t choices = alphabet.size() - 1;
    if (choices == 0) {
        if (n == 0)
            visit(u);
        return;
    }

    std::vector<Symbol> digits(n, 0);
    std::vector<Symbol> letters(n);
    auto symbol_at = [&](std::size_t pos, Symbol digit) {
        return static_cast<Symbol>(digit < u[pos] ? digit : digit + 1);
    };
    while (true) {
        for (std::size_t p = 0; p < n; ++p)
            letters[p] = symbol_at(p, digits[p]);
        if (!visit(Word(letters)))
            return;
        std::size_t pos = n;
        while (pos > 0 && digits[pos - 1] == choices - 1)
            digits[--pos] = 0;
        if (pos == 0)
            break;
        ++digits[pos - 1];
    }
}

PairWitness value_ordered(Word a, Word b, DistanceValue va, DistanceValue vb)
{
    if (va <= vb)
        return PairWitness{std::move(a), std::move(b), va, vb};
    return PairWitness{std::move(b), std::move(a), vb, va};
}

// Total number of opposite pairs over all lengths 1..max_len, saturating.
std::uint64_t opposite_pair_budget(std::size_t alphabet_size, std::size_t max_len,
                                   std::uint64_t cap)
{
    std::uint64_t total = 0;
    for (std::size_t n = 1; n <= max_len; ++n) {
        const std::uint64_t words = saturating_pow(alphabet_size, n, cap);
        const std::uint64_t opposites = saturating_pow(alphabet_size - 1, n, cap);
        if (words > cap || opposites > cap || (opposites != 0 && words > cap / opposites))
            return cap + 1;
        const std::uint64_t pairs = words * opposites / 2;
        if (total > cap - pairs)
            return cap + 1;
        total += pairs;
    }
    return total;
}

} // namespace

std::vector<Word> hamming_opposites(const Word& u, const Alphabet& alphabet, std::uint64_t cap)
{
    const std::uint64_t count = saturating_pow(alphabet.size() - 1, u.length(), cap);
    if (count > cap)
        throw CapExceededError(cap);
    std::vector<Word> out;
    out.reserve(count);
    visit_opposites(u, alphabet, [&](const Word& v) {
        out.push_back(v);
        return true;
    });
    return out;
}

Word complementary_opposite(const Word& u, const Word& w, const Alphabet& alphabet)
{
    if (alphabet.size() < 2)
        throw InvalidParameterError("opposites need at least two symbols");
    if (u.length() < w.length())
        throw InvalidParameterError("the first word must be at least as long as the second");

    std::vector<Symbol> letters(u.length());
    auto smallest_other = [&](Symbol s) { return static_cast<Symbol>(s == 0 ? 1 : 0); };
    for (std::size_t i = 0; i < u.length(); ++i) {
        if (i < w.length() && w[i] != u[i])
            letters[i] = w[i];
        else
            letters[i] = smallest_other(u[i]);
    }
    return Word(std::move(letters));
}

UniformityReport is_weakly_uniform(const DistanceFunction& delta, const Alphabet& alphabet,
                                   std::size_t max_len, const ScanOptions& options)
{
    UniformityReport report;
    report.max_len = max_len;
    if (alphabet.size() == 1) {
        report.vacuous = true;
        return report;
    }
    if (opposite_pair_budget(alphabet.size(), max_len, options.cap) > options.cap)
        throw CapExceededError(options.cap);

    const auto words = enumerate_language(alphabet, max_len, options.cap);
    const Word empty;

    auto hit = ordered_search<PairWitness>(
        words.size(), options, [&](std::uint64_t i) -> std::optional<PairWitness> {
            const Word& u = words[i];
            const DistanceValue du = delta(u, empty);
            std::optional<PairWitness> found;
            visit_opposites(u, alphabet, [&](const Word& v) {
                if (!(u < v))
                    return true;
                const DistanceValue dv = delta(v, empty);
                if (du != dv) {
                    found = value_ordered(u, v, du, dv);
                    return false;
                }
                return true;
            });
            return found;
        });

    if (hit) {
        report.weakly_uniform = Verdict::Fail;
        report.witness_weak = std::move(hit->second);
    }
    return report;
}

UniformityReport is_uniform(const DistanceFunction& delta, const Alphabet& alphabet,
                            std::size_t max_len, const ScanOptions& options)
{
    UniformityReport report = is_weakly_uniform(delta, alphabet, max_len, options);
    report.uniform = Verdict::Pass;
    if (report.vacuous)
        return report;

    const auto words = enumerate_language(alphabet, max_len, options.cap);

    // Opposite pairs (u, v), u < v, in shortlex pair order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    {
        const auto offsets = detail::length_offsets(words, max_len);
        const std::size_t n_symbols = alphabet.size();
        for (std::size_t i = 0; i < words.size(); ++i) {
            const Word& u = words[i];
            const std::size_t n = u.length();
            if (n == 0)
                continue;
            visit_opposites(u, alphabet, [&](const Word& v) {
                if (u < v) {
                    std::uint64_t lex_rank = 0;
                    for (std::size_t p = 0; p < n; ++p)
                        lex_rank = lex_rank * n_symbols + v[p];
                    pairs.emplace_back(static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(offsets[n] + lex_rank));
                }
                return true;
            });
        }
    }

    auto hit = ordered_search<TripleWitness>(
        words.size(), options, [&](std::uint64_t wi) -> std::optional<TripleWitness> {
            const Word& w = words[wi];
            for (const auto& [ui, vi] : pairs) {
                const Word& u = words[ui];
                const Word& v = words[vi];
                const DistanceValue eu = delta(u, w) - truncated_hamming(u, w);
                const DistanceValue ev = delta(v, w) - truncated_hamming(v, w);
                if (eu != ev) {
                    PairWitness ordered = value_ordered(u, v, eu, ev);
                    return TripleWitness{std::move(ordered.u), std::move(ordered.v), w,
                                         ordered.value_u, ordered.value_v};
                }
            }
            return std::nullopt;
        });

    if (hit) {
        report.uniform = Verdict::Fail;
        report.witness_uniform = std::move(hit->second);
    }
    return report;
}

EmptyWordBoundReport check_empty_word_bound(const DistanceFunction& delta,
                                            const Alphabet& alphabet, std::size_t max_len,
                                            const ScanOptions& options)
{
    EmptyWordBoundReport report;
    report.weak = is_weakly_uniform(delta, alphabet, max_len, options);

    const auto words = enumerate_language(alphabet, max_len, options.cap);
    const Word empty;

    report.bound.max_len = max_len;
    auto hit = ordered_search<Witness>(
        words.size(), options, [&](std::uint64_t i) -> std::optional<Witness> {
            const DistanceValue d = delta(words[i], empty);
            const auto len = static_cast<DistanceValue>(words[i].length());
            if (2 * d < len)
                return Witness{WitnessKind::Bound, {words[i]}, {d, len}};
            return std::nullopt;
        });
    if (hit) {
        report.bound.verdict = Verdict::Fail;
        report.bound.witness = std::move(hit->second);
        report.bound.checked_pairs = hit->first + 1;
    } else {
        report.bound.checked_pairs = words.size();
    }

    // Sharpness: lengths where some word sits at exactly half its length.
    std::vector<char> attained(max_len + 1, 0);
    for (const Word& u : words) {
        const auto len = static_cast<DistanceValue>(u.length());
        if (2 * delta(u, empty) == len)
            attained[u.length()] = 1;
    }
    for (std::size_t n = 0; n <= max_len; ++n)
        if (attained[n])
            report.attained.push_back(n);
    return report;
}

MinimalityReport check_minimality(const DistanceFunction& delta, const Alphabet& alphabet,
                                  std::size_t max_len, const ScanOptions& options)
{
    const auto words = enumerate_language(alphabet, max_len, options.cap);
    const std::size_t w_count = words.size();
    const std::size_t stride = max_len + 1;

    MinimalityReport report;
    report.max_len = max_len;

    struct Entry {
        std::uint32_t i, j;
        DistanceValue dv, d2v;
    };
    std::vector<Entry> entries;
    std::vector<std::uint64_t> satisfied(stride * stride, 0);
    std::vector<std::uint64_t> total(stride * stride, 0);
    std::exception_ptr error;

#ifdef _OPENMP
    const int requested = options.threads > 0 ? options.threads : omp_get_max_threads();
#else
    [[maybe_unused]] const int requested = 1;
#endif

#pragma omp parallel num_threads(requested) if (!options.reference)
    {
        std::vector<Entry> local_entries;
        std::vector<std::uint64_t> local_sat(stride * stride, 0);
        std::vector<std::uint64_t> local_tot(stride * stride, 0);
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(w_count); ++i) {
            try {
                const Word& u = words[i];
                const std::size_t a = u.length();
                for (std::size_t j = 0; j <= static_cast<std::size_t>(i); ++j) {
                    const Word& w = words[j];
                    const std::size_t idx = a * stride + w.length();
                    ++local_tot[idx];
                    const DistanceValue dv = delta(u, w);
                    const DistanceValue reference = d2(u, w);
                    if (dv < reference)
                        local_entries.push_back({static_cast<std::uint32_t>(i),
                                                 static_cast<std::uint32_t>(j), dv, reference});
                    else
                        ++local_sat[idx];
                }
            } catch (...) {
#pragma omp critical(wordmetrics_minimality)
                {
                    if (!error)
                        error = std::current_exception();
                }
            }
        }
#pragma omp critical(wordmetrics_minimality)
        {
            entries.insert(entries.end(), local_entries.begin(), local_entries.end());
            for (std::size_t idx = 0; idx < stride * stride; ++idx) {
                satisfied[idx] += local_sat[idx];
                total[idx] += local_tot[idx];
            }
        }
    }
    if (error)
        std::rethrow_exception(error);

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (const Entry& e : entries)
        report.violations.push_back({words[e.i], words[e.j], e.dv, e.d2v});
    report.verdict = entries.empty() ? Verdict::Pass : Verdict::Fail;

    for (std::size_t a = 0; a <= max_len; ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            const std::size_t idx = a * stride + b;
            if (total[idx] != 0)
                report.classes.push_back({a, b, satisfied[idx], total[idx]});
        }
    }
    return report;
}

OppositeStats opposite_satisfaction_stats(const DistanceFunction& delta, const Alphabet& alphabet,
                                          std::size_t n, const Word& w,
                                          const ScanOptions& options)
{
    if (alphabet.size() < 2)
        throw InvalidParameterError("opposites need at least two symbols");
    if (n < w.length())
        throw InvalidParameterError("the scanned length must be at least l(w)");
    if (saturating_pow(alphabet.size() - 1, n, options.cap) > options.cap)
        throw CapExceededError(options.cap);

    OppositeStats stats;
    stats.n = n;
    stats.w = w;

    const auto layer = enumerate_words(alphabet, n, options.cap);
    const auto symbols = static_cast<long long>(alphabet.size());
    const auto target = static_cast<DistanceValue>(w.length());

    for (const Word& u : layer) {
        ++stats.examined;
        const DistanceValue dv = delta(u, w);
        const DistanceValue reference = d2(u, w);
        if (dv >= reference)
            continue;
        ++stats.violating;

        ViolatorDetail detail;
        detail.u = u;
        detail.delta_uw = dv;
        detail.d2_uw = reference;
        detail.opposite = complementary_opposite(u, w, alphabet);
        detail.delta_vw = delta(detail.opposite, w);
        detail.d2_vw = d2(detail.opposite, w);
        detail.rescued = detail.delta_vw >= detail.d2_vw;
        stats.rescues += detail.rescued;
        detail.overlap = static_cast<std::size_t>(truncated_hamming(u, w));

        BigInt equal_count = 0;
        visit_opposites(u, alphabet, [&](const Word& v) {
            if (truncated_hamming(u, w) + truncated_hamming(v, w) == target)
                ++equal_count;
            return true;
        });
        detail.equality_opposites = equal_count;
        if (equal_count != ipow(symbols - 1, static_cast<unsigned long>(n - detail.overlap)))
            throw std::logic_error("opposite equality count disagrees with (N-1)^(n-h)");

        stats.max_overlap = std::max(stats.max_overlap, detail.overlap);
        stats.violators.push_back(std::move(detail));
    }

    stats.window_size = ipow(symbols - 1, static_cast<unsigned long>(n - stats.max_overlap));
    stats.floor_denominator = ipow(symbols - 1, static_cast<unsigned long>(stats.max_overlap));
    return stats;
}

} // namespace wordmetrics
