#include "wordmetrics/axioms.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "scan.hpp"

namespace wordmetrics {

const char* to_string(Verdict v)
{
    return v == Verdict::Pass ? "pass" : "fail";
}

const char* to_string(WitnessKind k)
{
    switch (k) {
    case WitnessKind::Reflexivity: return "reflexivity";
    case WitnessKind::Identity: return "identity";
    case WitnessKind::Symmetry: return "symmetry";
    case WitnessKind::Triangle: return "triangle";
    case WitnessKind::Compatibility: return "compatibility";
    case WitnessKind::Additivity: return "additivity";
    case WitnessKind::Bound: return "bound";
    }
    return "?";
}

namespace {

using detail::DistanceKernel;
using detail::ordered_search;

// Ranks of unordered pairs (i, j), i < j, over W elements, in (i, j) order.
std::uint64_t pair_count(std::uint64_t w)
{
    return w * (w - 1) / 2;
}

std::uint64_t pair_rank_base(std::uint64_t i, std::uint64_t w)
{
    return i * (2 * w - i - 1) / 2;
}

std::uint64_t pair_rank(std::uint64_t i, std::uint64_t j, std::uint64_t w)
{
    return pair_rank_base(i, w) + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_from_rank(std::uint64_t rank, std::uint64_t w)
{
    std::uint64_t lo = 0, hi = w - 1; // i lies in [lo, hi)
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (pair_rank_base(mid, w) <= rank)
            lo = mid;
        else
            hi = mid;
    }
    return {static_cast<std::size_t>(lo),
            static_cast<std::size_t>(rank - pair_rank_base(lo, w) + lo + 1)};
}

std::uint64_t search_chunk(std::uint64_t slices, int threads)
{
#ifdef _OPENMP
    const int t = threads > 0 ? threads : omp_get_max_threads();
#else
    const int t = 1;
    (void)threads;
#endif
    const std::uint64_t target = slices / (static_cast<std::uint64_t>(t) * 256 + 1);
    return std::clamp<std::uint64_t>(target, 1, 8192);
}

struct PhaseHit {
    std::uint64_t rank; // position of the witness in the phase's scan order
    Witness witness;
};

// Symmetric-pair excess tables make the packed kernel a symmetric function
// of the pair, so a symmetry scan would compare each value with itself.
bool symmetric_by_construction(const DistanceKernel& kernel, std::size_t max_len)
{
    if (kernel.packed.empty() || !kernel.memo.empty())
        return false;
    for (std::size_t a = 0; a <= max_len; ++a)
        for (std::size_t b = a + 1; b <= max_len; ++b)
            if (kernel.length_bound(a, b) != kernel.length_bound(b, a))
                return false;
    return true;
}

struct RowCache {
    std::uint64_t generation = UINT64_MAX;
    std::size_t row_index = SIZE_MAX;
    std::vector<DistanceValue> row;
};

thread_local RowCache t_row_cache;
std::atomic<std::uint64_t> g_scan_generation{0};

const DistanceValue* cached_row(const DistanceKernel& kernel, std::uint64_t generation,
                                std::size_t i)
{
    RowCache& cache = t_row_cache;
    if (cache.generation != generation || cache.row_index != i) {
        const std::size_t w = kernel.size();
        cache.row.resize(w);
        for (std::size_t k = 0; k < w; ++k)
            cache.row[k] = kernel.eval(i, k);
        cache.generation = generation;
        cache.row_index = i;
    }
    return cache.row.data();
}

std::optional<PhaseHit> scan_reflexivity(const DistanceKernel& kernel, const ScanOptions& options)
{
    const auto& words = *kernel.words;
    auto hit = ordered_search<Witness>(
        words.size(), options, [&](std::uint64_t i) -> std::optional<Witness> {
            DistanceValue d = kernel(i, i);
            if (d != 0)
                return Witness{WitnessKind::Reflexivity, {words[i]}, {d}};
            return std::nullopt;
        });
    if (!hit)
        return std::nullopt;
    return PhaseHit{hit->first, std::move(hit->second)};
}

// Scans unordered pairs (i, j), i < j, sliced by i; fn(i, j) returns an
// optional witness. Returns the minimal hit in pair-rank order.
template <class Fn>
std::optional<PhaseHit> scan_pairs(const DistanceKernel& kernel, const ScanOptions& options,
                                   Fn&& fn)
{
    const std::uint64_t w = kernel.size();
    if (w < 2)
        return std::nullopt;
    struct SliceHit {
        std::size_t j;
        Witness witness;
    };
    auto hit = ordered_search<SliceHit>(
        w - 1, options, [&](std::uint64_t i) -> std::optional<SliceHit> {
            for (std::size_t j = i + 1; j < w; ++j) {
                if (auto witness = fn(static_cast<std::size_t>(i), j))
                    return SliceHit{j, std::move(*witness)};
            }
            return std::nullopt;
        });
    if (!hit)
        return std::nullopt;
    return PhaseHit{pair_rank(hit->first, hit->second.j, w), std::move(hit->second.witness)};
}

std::optional<PhaseHit> scan_identity(const DistanceKernel& kernel,
                                      const std::vector<std::size_t>& offsets,
                                      std::size_t max_len, const ScanOptions& options)
{
    const auto& words = *kernel.words;
    const std::uint64_t w = kernel.size();
    if (w < 2)
        return std::nullopt;
    struct SliceHit {
        std::size_t j;
        Witness witness;
    };
    auto hit = ordered_search<SliceHit>(
        w - 1, options, [&](std::uint64_t i) -> std::optional<SliceHit> {
            const std::size_t a = words[i].length();
            for (std::size_t c = a; c <= max_len; ++c) {
                // d >= excess(a, c) > 0 rules the whole length block out;
                // on the equal-length block of a structured metric,
                // d = hamming + excess(a, a) vanishes only at u = v.
                if (kernel.has_excess && (kernel.length_bound(a, c) > 0 || c == a))
                    continue;
                const std::size_t begin = std::max(offsets[c], static_cast<std::size_t>(i) + 1);
                for (std::size_t j = begin; j < offsets[c + 1]; ++j) {
                    DistanceValue d = kernel(i, j);
                    if (d <= 0)
                        return SliceHit{j, Witness{WitnessKind::Identity,
                                                   {words[i], words[j]},
                                                   {d}}};
                }
            }
            return std::nullopt;
        });
    if (!hit)
        return std::nullopt;
    return PhaseHit{pair_rank(hit->first, hit->second.j, w), std::move(hit->second.witness)};
}

std::optional<PhaseHit> scan_symmetry(const DistanceKernel& kernel, const ScanOptions& options)
{
    const auto& words = *kernel.words;
    return scan_pairs(kernel, options,
                      [&](std::size_t i, std::size_t j) -> std::optional<Witness> {
                          DistanceValue dij = kernel(i, j);
                          DistanceValue dji = kernel(j, i);
                          if (dij != dji)
                              return Witness{WitnessKind::Symmetry,
                                             {words[i], words[j]},
                                             {dij, dji}};
                          return std::nullopt;
                      });
}

// Triangle phase: slices are pair ranks of (i, j), i < j; each slice scans
// all w in shortlex order, skipping length blocks whose excess lower bound
// already meets d(u, v). Relies on symmetry, verified beforehand: any
// ordered violation (u, v, w) with u > v has the mirrored violation
// (v, u, w) at a smaller rank, so the minimum over i < j is the minimum
// over all ordered triples.
std::optional<PhaseHit> scan_triangle(const DistanceKernel& kernel,
                                      const std::vector<std::size_t>& offsets,
                                      std::size_t max_len, ScanOptions options)
{
    const auto& words = *kernel.words;
    const std::uint64_t w = kernel.size();
    if (w < 2)
        return std::nullopt;
    const std::uint64_t slices = pair_count(w);
    const std::uint64_t generation = g_scan_generation.fetch_add(1, std::memory_order_relaxed);
    const bool use_rows = kernel.memo.empty();
    const std::uint64_t chunk = search_chunk(slices, options.threads);

    struct SliceHit {
        std::size_t k;
        Witness witness;
    };
    auto hit = ordered_search<SliceHit>(
        slices, options, [&](std::uint64_t rank) -> std::optional<SliceHit> {
            auto [i, j] = pair_from_rank(rank, w);
            const DistanceValue duv = kernel(i, j);
            const std::size_t a = words[i].length();
            const std::size_t b = words[j].length();
            if (kernel.has_excess && kernel.min_cross[a * kernel.stride + b] >= duv)
                return std::nullopt;
            const DistanceValue* row = use_rows ? cached_row(kernel, generation, i) : nullptr;
            for (std::size_t c = 0; c <= max_len; ++c) {
                if (kernel.has_excess &&
                    kernel.length_bound(a, c) + kernel.length_bound(c, b) >= duv)
                    continue;
                for (std::size_t k = offsets[c]; k < offsets[c + 1]; ++k) {
                    const DistanceValue duw = row ? row[k] : kernel(i, k);
                    if (duw >= duv)
                        continue;
                    const DistanceValue dwv = kernel(k, j);
                    if (duw + dwv < duv)
                        return SliceHit{k, Witness{WitnessKind::Triangle,
                                                   {words[i], words[j], words[k]},
                                                   {duv, duw, dwv}}};
                }
            }
            return std::nullopt;
        },
        chunk);
    if (!hit)
        return std::nullopt;
    return PhaseHit{hit->first * w + hit->second.k + 1, std::move(hit->second.witness)};
}

AxiomReport fail_report(std::size_t max_len, Witness witness, std::uint64_t checked_pairs,
                        std::uint64_t checked_triples)
{
    AxiomReport report;
    report.verdict = Verdict::Fail;
    report.witness = std::move(witness);
    report.checked_pairs = checked_pairs;
    report.checked_triples = checked_triples;
    report.max_len = max_len;
    return report;
}

} // namespace

AxiomReport verify_metric_axioms(const DistanceFunction& delta, const Alphabet& alphabet,
                                 std::size_t max_len, const ScanOptions& options)
{
    const auto words = enumerate_language(alphabet, max_len, options.cap);
    const auto offsets = detail::length_offsets(words, max_len);
    const auto kernel = detail::make_kernel(delta, alphabet, words, max_len, options,
                                            /*equal_lengths_suffice=*/false);
    const std::uint64_t w = words.size();
    const std::uint64_t pairs = pair_count(w);

    if (auto hit = scan_reflexivity(kernel, options))
        return fail_report(max_len, std::move(hit->witness), 0, 0);

    if (auto hit = scan_identity(kernel, offsets, max_len, options))
        return fail_report(max_len, std::move(hit->witness), hit->rank + 1, 0);

    if (!symmetric_by_construction(kernel, max_len)) {
        if (auto hit = scan_symmetry(kernel, options))
            return fail_report(max_len, std::move(hit->witness), pairs + hit->rank + 1, 0);
    }

    if (auto hit = scan_triangle(kernel, offsets, max_len, options))
        return fail_report(max_len, std::move(hit->witness), 2 * pairs, hit->rank);

    AxiomReport report;
    report.checked_pairs = 2 * pairs;
    report.checked_triples = pairs * w;
    report.max_len = max_len;
    return report;
}

AxiomReport verify_hamming_compatible(const DistanceFunction& delta, const Alphabet& alphabet,
                                      std::size_t max_len, const ScanOptions& options)
{
    const auto words = enumerate_language(alphabet, max_len, options.cap);
    const auto offsets = detail::length_offsets(words, max_len);
    const auto kernel = detail::make_kernel(delta, alphabet, words, max_len, options,
                                            /*equal_lengths_suffice=*/true);

    // Pairs u <= v within each length block, blocks in ascending length.
    std::vector<std::uint64_t> block_rank(max_len + 2, 0);
    for (std::size_t n = 0; n <= max_len; ++n) {
        const std::uint64_t size = offsets[n + 1] - offsets[n];
        block_rank[n + 1] = block_rank[n] + size * (size + 1) / 2;
    }

    struct SliceHit {
        std::uint64_t rank;
        Witness witness;
    };
    auto hit = ordered_search<SliceHit>(
        max_len + 1, options, [&](std::uint64_t n) -> std::optional<SliceHit> {
            const std::size_t begin = offsets[n], end = offsets[n + 1];
            std::uint64_t local = 0;
            for (std::size_t i = begin; i < end; ++i) {
                for (std::size_t j = i; j < end; ++j, ++local) {
                    const DistanceValue d = kernel(i, j);
                    const DistanceValue h = hamming(words[i], words[j]);
                    if (d != h)
                        return SliceHit{block_rank[n] + local,
                                        Witness{WitnessKind::Compatibility,
                                                {words[i], words[j]},
                                                {d, h}}};
                }
            }
            return std::nullopt;
        });

    if (hit)
        return fail_report(max_len, std::move(hit->second.witness), hit->second.rank + 1, 0);

    AxiomReport report;
    report.checked_pairs = block_rank[max_len + 1];
    report.max_len = max_len;
    return report;
}

namespace {

Word subword(const Word& w, std::size_t from, std::size_t to)
{
    auto letters = w.letters();
    return Word(std::vector<Symbol>(letters.begin() + from, letters.begin() + to));
}

} // namespace

AxiomReport verify_hamming_characterization(const DistanceFunction& d, const Alphabet& alphabet,
                                            std::size_t max_len, const ScanOptions& options)
{
    const auto words = enumerate_language(alphabet, max_len, options.cap);
    const auto offsets = detail::length_offsets(words, max_len);
    const auto kernel = detail::make_kernel(d, alphabet, words, max_len, options,
                                            /*equal_lengths_suffice=*/true);

    // Per-length block sizes and phase totals.
    std::uint64_t equal_pairs = 0;  // pairs i < j of equal length
    std::uint64_t tri_total = 0;    // those pairs times the block size
    std::uint64_t add_total = 0;    // pairs i <= j of equal length times (n + 1) splits
    for (std::size_t n = 0; n <= max_len; ++n) {
        const std::uint64_t size = offsets[n + 1] - offsets[n];
        equal_pairs += pair_count(size);
        tri_total += pair_count(size) * size;
        add_total += size * (size + 1) / 2 * (n + 1);
    }

    std::uint64_t pairs_done = 0;
    std::uint64_t triples_done = 0;

    // Each phase scans length blocks in ascending order; the slice index is
    // the length, so the minimal hit is the shortlex-minimal witness.
    struct SliceHit {
        std::uint64_t rank;
        Witness witness;
    };

    auto block_phase = [&](auto per_block) -> std::optional<SliceHit> {
        auto hit = ordered_search<SliceHit>(
            max_len + 1, options,
            [&](std::uint64_t n) -> std::optional<SliceHit> { return per_block(n); });
        return hit ? std::optional<SliceHit>(std::move(hit->second)) : std::nullopt;
    };

    // Reflexivity over every word.
    if (auto hit = scan_reflexivity(kernel, options))
        return fail_report(max_len, std::move(hit->witness), 0, 0);

    // Identity and symmetry on equal-length pairs.
    {
        std::uint64_t prefix = 0;
        std::vector<std::uint64_t> block_base(max_len + 1);
        for (std::size_t n = 0; n <= max_len; ++n) {
            block_base[n] = prefix;
            prefix += pair_count(offsets[n + 1] - offsets[n]);
        }
        auto pair_phase = [&](WitnessKind kind) -> std::optional<SliceHit> {
            return block_phase([&](std::uint64_t n) -> std::optional<SliceHit> {
                const std::size_t begin = offsets[n], end = offsets[n + 1];
                std::uint64_t local = 0;
                for (std::size_t i = begin; i < end; ++i) {
                    for (std::size_t j = i + 1; j < end; ++j, ++local) {
                        const DistanceValue dij = kernel(i, j);
                        if (kind == WitnessKind::Identity && dij <= 0)
                            return SliceHit{block_base[n] + local,
                                            Witness{kind, {words[i], words[j]}, {dij}}};
                        if (kind == WitnessKind::Symmetry) {
                            const DistanceValue dji = kernel(j, i);
                            if (dij != dji)
                                return SliceHit{block_base[n] + local,
                                                Witness{kind, {words[i], words[j]}, {dij, dji}}};
                        }
                    }
                }
                return std::nullopt;
            });
        };
        if (auto hit = pair_phase(WitnessKind::Identity))
            return fail_report(max_len, std::move(hit->witness), hit->rank + 1, 0);
        pairs_done += equal_pairs;
        if (auto hit = pair_phase(WitnessKind::Symmetry))
            return fail_report(max_len, std::move(hit->witness), pairs_done + hit->rank + 1, 0);
        pairs_done += equal_pairs;
    }

    // Triangle inequality within each length block.
    {
        std::uint64_t prefix = 0;
        std::vector<std::uint64_t> block_base(max_len + 1);
        for (std::size_t n = 0; n <= max_len; ++n) {
            block_base[n] = prefix;
            const std::uint64_t size = offsets[n + 1] - offsets[n];
            prefix += pair_count(size) * size;
        }
        auto hit = block_phase([&](std::uint64_t n) -> std::optional<SliceHit> {
            const std::size_t begin = offsets[n], end = offsets[n + 1];
            std::uint64_t local = 0;
            for (std::size_t i = begin; i < end; ++i) {
                for (std::size_t j = i + 1; j < end; ++j) {
                    const DistanceValue duv = kernel(i, j);
                    for (std::size_t k = begin; k < end; ++k, ++local) {
                        const DistanceValue duw = kernel(i, k);
                        if (duw >= duv)
                            continue;
                        const DistanceValue dwv = kernel(k, j);
                        if (duw + dwv < duv)
                            return SliceHit{block_base[n] + local,
                                            Witness{WitnessKind::Triangle,
                                                    {words[i], words[j], words[k]},
                                                    {duv, duw, dwv}}};
                    }
                }
            }
            return std::nullopt;
        });
        if (hit)
            return fail_report(max_len, std::move(hit->witness), pairs_done, hit->rank + 1);
        triples_done = tri_total;
    }

    // Condition (1): d(u, v) <= n on every equal-length pair.
    {
        std::uint64_t prefix = 0;
        std::vector<std::uint64_t> block_base(max_len + 1);
        for (std::size_t n = 0; n <= max_len; ++n) {
            block_base[n] = prefix;
            prefix += pair_count(offsets[n + 1] - offsets[n]);
        }
        auto hit = block_phase([&](std::uint64_t n) -> std::optional<SliceHit> {
            const std::size_t begin = offsets[n], end = offsets[n + 1];
            std::uint64_t local = 0;
            for (std::size_t i = begin; i < end; ++i) {
                for (std::size_t j = i + 1; j < end; ++j, ++local) {
                    const DistanceValue dij = kernel(i, j);
                    if (dij > static_cast<DistanceValue>(n))
                        return SliceHit{block_base[n] + local,
                                        Witness{WitnessKind::Bound,
                                                {words[i], words[j]},
                                                {dij}}};
                }
            }
            return std::nullopt;
        });
        if (hit)
            return fail_report(max_len, std::move(hit->witness), pairs_done + hit->rank + 1,
                               triples_done);
        pairs_done += equal_pairs;
    }

    // Condition (2): additivity over every concatenation split.
    {
        std::uint64_t prefix = 0;
        std::vector<std::uint64_t> block_base(max_len + 1);
        for (std::size_t n = 0; n <= max_len; ++n) {
            block_base[n] = prefix;
            const std::uint64_t size = offsets[n + 1] - offsets[n];
            prefix += size * (size + 1) / 2 * (n + 1);
        }
        auto hit = block_phase([&](std::uint64_t n) -> std::optional<SliceHit> {
            const std::size_t begin = offsets[n], end = offsets[n + 1];
            std::uint64_t local = 0;
            for (std::size_t i = begin; i < end; ++i) {
                for (std::size_t j = i; j < end; ++j) {
                    const DistanceValue total = kernel(i, j);
                    for (std::size_t k = 0; k <= n; ++k, ++local) {
                        const DistanceValue left =
                            d(subword(words[i], 0, k), subword(words[j], 0, k));
                        const DistanceValue right =
                            d(subword(words[i], k, n), subword(words[j], k, n));
                        if (total != left + right)
                            return SliceHit{block_base[n] + local,
                                            Witness{WitnessKind::Additivity,
                                                    {words[i], words[j]},
                                                    {total, left, right,
                                                     static_cast<DistanceValue>(k)}}};
                    }
                }
            }
            return std::nullopt;
        });
        if (hit)
            return fail_report(max_len, std::move(hit->witness), pairs_done + hit->rank + 1,
                               triples_done);
        pairs_done += add_total;
    }

    // All conditions hold, so d must agree with the Hamming distance on
    // every equal-length pair; any discrepancy is an internal
    // inconsistency and is reported as a compatibility failure.
    {
        std::uint64_t prefix = 0;
        std::vector<std::uint64_t> block_base(max_len + 1);
        for (std::size_t n = 0; n <= max_len; ++n) {
            block_base[n] = prefix;
            prefix += pair_count(offsets[n + 1] - offsets[n]);
        }
        auto hit = block_phase([&](std::uint64_t n) -> std::optional<SliceHit> {
            const std::size_t begin = offsets[n], end = offsets[n + 1];
            std::uint64_t local = 0;
            for (std::size_t i = begin; i < end; ++i) {
                for (std::size_t j = i + 1; j < end; ++j, ++local) {
                    const DistanceValue dij = kernel(i, j);
                    const DistanceValue h = hamming(words[i], words[j]);
                    if (dij != h)
                        return SliceHit{block_base[n] + local,
                                        Witness{WitnessKind::Compatibility,
                                                {words[i], words[j]},
                                                {dij, h}}};
                }
            }
            return std::nullopt;
        });
        if (hit)
            return fail_report(max_len, std::move(hit->witness), pairs_done + hit->rank + 1,
                               triples_done);
        pairs_done += equal_pairs;
    }

    AxiomReport report;
    report.checked_pairs = pairs_done;
    report.checked_triples = triples_done;
    report.max_len = max_len;
    return report;
}

TriangleViolation find_dn_violation(unsigned n, const Alphabet& alphabet)
{
    if (n < 3)
        throw InvalidParameterError("d_n satisfies the triangle inequality for n <= 2");
    if (alphabet.size() < 2)
        throw InvalidParameterError("the violation triple needs two distinct symbols");

    std::vector<Symbol> letters(2 * n, 0);
    Word u(letters);

    letters.assign(3 * n, 0);
    std::fill(letters.begin() + n, letters.begin() + 2 * n, Symbol{1});
    Word v(letters);

    letters.assign(n, 0);
    Word w(letters);

    TriangleViolation out{u, v, w, d_n(u, v, n), d_n(u, w, n), d_n(w, v, n)};
    if (!(out.d_uv > out.d_uw + out.d_wv))
        throw std::logic_error("constructed triple does not violate the triangle inequality");
    return out;
}

} // namespace wordmetrics
