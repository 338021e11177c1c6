#include "wordmetrics/spheres.hpp"

namespace wordmetrics {

BigInt sphere_size_fixed_length(const Word& u, std::size_t j, DistanceValue r,
                                const Alphabet& alphabet)
{
    const std::size_t k = u.length();
    const std::size_t gap = k > j ? k - j : j - k;
    const auto a = static_cast<DistanceValue>((gap + 1) / 2);
    const DistanceValue t = r - a;
    const auto n = static_cast<long long>(alphabet.size());

    if (t < 0)
        return 0;
    BigInt count = binomial(static_cast<long long>(std::min(j, k)), t) * ipow(n - 1, t);
    if (j > k)
        count *= ipow(n, static_cast<unsigned long>(j - k));
    return count;
}

SphereCount sphere_size(const Word& u, DistanceValue r, const Alphabet& alphabet)
{
    SphereCount sphere;
    sphere.center = u;
    sphere.radius = r;
    sphere.total = 0;
    if (r < 0)
        return sphere;

    const std::size_t k = u.length();
    const std::size_t window = static_cast<std::size_t>(2 * r);
    const std::size_t low = k > window ? k - window : 0;
    for (std::size_t j = low; j <= k + window; ++j) {
        BigInt count = sphere_size_fixed_length(u, j, r, alphabet);
        if (count != 0)
            sphere.by_length.emplace(j, count);
        sphere.total += count;
    }
    return sphere;
}

std::vector<Word> enumerate_sphere(const DistanceFunction& delta, const Word& u, DistanceValue r,
                                   const Alphabet& alphabet, std::uint64_t cap)
{
    if (r < 0)
        return {};
    const auto window = delta.length_window(r);
    if (!window)
        throw NoLengthBoundError("metric \"" + delta.name() +
                                 "\" admits no length window; cannot enumerate a sphere");

    const std::size_t k = u.length();
    const std::size_t low = k > *window ? k - *window : 0;
    const std::size_t high = k + *window;

    std::uint64_t candidates = 0;
    for (std::size_t j = low; j <= high; ++j) {
        const std::uint64_t layer = count_words(alphabet.size(), j, cap);
        if (layer > cap || candidates > cap - layer)
            throw CapExceededError(cap);
        candidates += layer;
    }

    std::vector<Word> sphere;
    for (std::size_t j = low; j <= high; ++j) {
        for (Word& v : enumerate_words(alphabet, j, cap)) {
            if (delta(u, v) == r)
                sphere.push_back(std::move(v));
        }
    }
    return sphere;
}

} // namespace wordmetrics
