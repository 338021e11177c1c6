#pragma once

// Internal scan machinery shared by the exhaustive verifiers: packed word
// tables, dense distance memos, and the deterministic parallel search.

#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wordmetrics/axioms.hpp"

namespace wordmetrics::detail {

// Words packed as fixed-width letter lanes in one 64-bit value: one bit
// per letter for binary alphabets (lengths up to 64), four bits per letter
// otherwise (up to 16 symbols, lengths up to 16). Truncated Hamming
// distance then reduces to a few bit operations.
struct PackedWord {
    std::uint64_t bits;
    std::uint32_t len;
};

inline constexpr std::uint64_t kNibbleLow = 0x1111111111111111ull;

struct DistanceKernel {
    const DistanceFunction* delta = nullptr;
    const std::vector<Word>* words = nullptr;

    // Packed path (empty when unavailable).
    std::vector<PackedWord> packed;
    unsigned bits_per_letter = 1;

    // excess[a * (max_len + 1) + b]; also a lower bound on the distance of
    // any pair with lengths (a, b). Present iff the metric is length
    // structured.
    std::vector<DistanceValue> excess;
    // min_cross[a * (max_len + 1) + b] = min over c of
    // excess(a, c) + excess(c, b): a lower bound on d(u, w) + d(w, v) over
    // every w in the scan, for any pair with lengths (a, b).
    std::vector<DistanceValue> min_cross;
    std::size_t stride = 0;
    bool has_excess = false;

    // Dense memo over all pairs, built when W^2 fits the memo limit.
    std::vector<DistanceValue> memo;

    std::size_t size() const { return words->size(); }

    DistanceValue operator()(std::size_t i, std::size_t j) const
    {
        if (!memo.empty())
            return memo[i * words->size() + j];
        return eval(i, j);
    }

    DistanceValue eval(std::size_t i, std::size_t j) const
    {
        if (!packed.empty()) {
            const PackedWord a = packed[i], b = packed[j];
            const std::uint32_t m = a.len < b.len ? a.len : b.len;
            std::uint64_t x;
            if (bits_per_letter == 1) {
                const std::uint64_t mask = m >= 64 ? ~0ull : ((1ull << m) - 1);
                x = (a.bits ^ b.bits) & mask;
            } else {
                const std::uint64_t mask = m >= 16 ? ~0ull : ((1ull << (4 * m)) - 1);
                x = (a.bits ^ b.bits) & mask;
                x = (x | (x >> 1) | (x >> 2) | (x >> 3)) & kNibbleLow;
            }
            return static_cast<DistanceValue>(std::popcount(x)) + excess[a.len * stride + b.len];
        }
        return (*delta)((*words)[i], (*words)[j]);
    }

    // Lower bound on the distance of any pair with lengths (a, b).
    DistanceValue length_bound(std::size_t a, std::size_t b) const
    {
        return excess[a * stride + b];
    }
};

// Builds the kernel for a word list sorted in shortlex order.
// `equal_lengths_suffice` must be true only for scans that never evaluate
// pairs of different lengths (the plain Hamming distance is undefined
// there).
DistanceKernel make_kernel(const DistanceFunction& delta, const Alphabet& alphabet,
                           const std::vector<Word>& words, std::size_t max_len,
                           const ScanOptions& options, bool equal_lengths_suffice);

// First index of each length in a shortlex-sorted word list, plus a final
// end offset: words with length n occupy [offsets[n], offsets[n + 1]).
std::vector<std::size_t> length_offsets(const std::vector<Word>& words, std::size_t max_len);

// Runs fn over slices 0..n_slices in logical order and returns the hit
// with the smallest slice index, or nullopt. fn must be pure; within a
// slice it must return its own first hit in slice-local order.
//
// The parallel engine sweeps the slices in growing blocks. A block is
// partitioned dynamically across threads, with slices beyond the best hit
// so far pruned; once a block completes with a hit, every earlier slice
// has been fully scanned, so the minimal hit is final and the sweep stops
// without touching the remaining range. The result is identical to the
// serial loop. With fail_fast the first hit found wins instead.
template <class T, class Fn>
std::optional<std::pair<std::uint64_t, T>> ordered_search(std::uint64_t n_slices,
                                                          const ScanOptions& options, Fn&& fn,
                                                          std::uint64_t chunk = 4)
{
    if (options.reference) {
        for (std::uint64_t i = 0; i < n_slices; ++i) {
            if (std::optional<T> hit = fn(i))
                return std::make_pair(i, std::move(*hit));
        }
        return std::nullopt;
    }

    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::uint64_t error_slice = UINT64_MAX;
    std::exception_ptr error;
    std::optional<std::pair<std::uint64_t, T>> result;

#ifdef _OPENMP
    const int requested = options.threads > 0 ? options.threads : omp_get_max_threads();
#else
    const int requested = 1;
#endif

    std::uint64_t start = 0;
    std::uint64_t block = std::max<std::uint64_t>(65536, chunk * requested * 16);
    const auto grain = static_cast<std::int64_t>(chunk);

    while (start < n_slices) {
        const std::uint64_t end = std::min(n_slices, start + block);

#pragma omp parallel num_threads(requested)
        {
            std::optional<std::pair<std::uint64_t, T>> local;
#pragma omp for schedule(dynamic, grain) nowait
            for (std::int64_t si = static_cast<std::int64_t>(start);
                 si < static_cast<std::int64_t>(end); ++si) {
                const auto i = static_cast<std::uint64_t>(si);
                const std::uint64_t bound = best.load(std::memory_order_relaxed);
                if (options.fail_fast ? bound != UINT64_MAX : i > bound)
                    continue;
                std::optional<T> hit;
                try {
                    hit = fn(i);
                } catch (...) {
#pragma omp critical(wordmetrics_ordered_search)
                    {
                        if (i < error_slice) {
                            error_slice = i;
                            error = std::current_exception();
                        }
                    }
                    std::uint64_t prev = best.load(std::memory_order_relaxed);
                    while (i < prev && !best.compare_exchange_weak(prev, i)) {
                    }
                    continue;
                }
                if (hit) {
                    std::uint64_t prev = best.load(std::memory_order_relaxed);
                    while (i < prev && !best.compare_exchange_weak(prev, i)) {
                    }
                    if (!local || i < local->first)
                        local = std::make_pair(i, std::move(*hit));
                }
            }
#pragma omp critical(wordmetrics_ordered_search)
            {
                if (local && (!result || local->first < result->first))
                    result = std::move(local);
            }
        }

        // An exception ranks like a hit at its slice: rethrow it only when
        // no genuine hit precedes it, exactly as the serial loop would.
        if (error && (!result || error_slice < result->first))
            std::rethrow_exception(error);
        if (result)
            break;
        start = end;
        block = std::min<std::uint64_t>(block * 2, 1 << 24);
    }
    return result;
}

} // namespace wordmetrics::detail
