#include "scan.hpp"

namespace wordmetrics::detail {

std::vector<std::size_t> length_offsets(const std::vector<Word>& words, std::size_t max_len)
{
    std::vector<std::size_t> offsets(max_len + 2, 0);
    for (std::size_t i = 0; i < words.size(); ++i)
        ++offsets[words[i].length() + 1];
    for (std::size_t n = 1; n < offsets.size(); ++n)
        offsets[n] += offsets[n - 1];
    return offsets;
}

DistanceKernel make_kernel(const DistanceFunction& delta, const Alphabet& alphabet,
                           const std::vector<Word>& words, std::size_t max_len,
                           const ScanOptions& options, bool equal_lengths_suffice)
{
    DistanceKernel kernel;
    kernel.delta = &delta;
    kernel.words = &words;

    const LengthExcess* excess = delta.length_excess();
    const bool excess_usable =
        excess != nullptr && (equal_lengths_suffice || !excess->equal_lengths_only);

    if (excess_usable) {
        kernel.stride = max_len + 1;
        kernel.excess.resize(kernel.stride * kernel.stride);
        for (std::size_t a = 0; a <= max_len; ++a)
            for (std::size_t b = 0; b <= max_len; ++b)
                kernel.excess[a * kernel.stride + b] =
                    (excess->equal_lengths_only && a != b) ? 0 : excess->value(a, b);
        kernel.has_excess = true;

        kernel.min_cross.resize(kernel.stride * kernel.stride);
        for (std::size_t a = 0; a <= max_len; ++a) {
            for (std::size_t b = 0; b <= max_len; ++b) {
                DistanceValue low = kernel.excess[a * kernel.stride] + kernel.excess[b];
                for (std::size_t c = 1; c <= max_len; ++c)
                    low = std::min(low, kernel.excess[a * kernel.stride + c] +
                                            kernel.excess[c * kernel.stride + b]);
                kernel.min_cross[a * kernel.stride + b] = low;
            }
        }

        const bool narrow = alphabet.size() <= 2 && max_len <= 64;
        const bool wide = alphabet.size() <= 16 && max_len <= 16;
        if ((narrow || wide) && !options.reference) {
            kernel.bits_per_letter = narrow ? 1 : 4;
            kernel.packed.resize(words.size());
            for (std::size_t i = 0; i < words.size(); ++i) {
                std::uint64_t bits = 0;
                for (std::size_t p = 0; p < words[i].length(); ++p)
                    bits |= static_cast<std::uint64_t>(words[i][p]) << (kernel.bits_per_letter * p);
                kernel.packed[i] = {bits, static_cast<std::uint32_t>(words[i].length())};
            }
        }
    }

    // The dense memo may not be filled from a distance that can throw
    // (plain Hamming over mixed lengths); those run unmemoized.
    const bool eval_total =
        excess == nullptr || !excess->equal_lengths_only || equal_lengths_suffice;

    const std::uint64_t n = words.size();
    if (!options.reference && eval_total && n > 0 && n <= options.memo_limit / n) {
        std::exception_ptr error;
        kernel.memo.resize(n * n);
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            try {
                for (std::uint64_t j = 0; j < n; ++j)
                    kernel.memo[static_cast<std::uint64_t>(i) * n + j] =
                        kernel.eval(static_cast<std::size_t>(i), j);
            } catch (...) {
#pragma omp critical(wordmetrics_memo_fill)
                {
                    if (!error)
                        error = std::current_exception();
                }
            }
        }
        if (error)
            std::rethrow_exception(error);
    }

    return kernel;
}

} // namespace wordmetrics::detail
