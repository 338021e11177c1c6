#pragma once

#include <map>

#include "wordmetrics/bigint.hpp"
#include "wordmetrics/metrics.hpp"

namespace wordmetrics {

/// Cardinality of the set of words at d2-distance exactly r from a center,
/// with the per-length breakdown. Lengths with no words at that distance
/// are omitted from the breakdown.
struct SphereCount {
    Word center;
    DistanceValue radius = 0;
    BigInt total;
    std::map<std::size_t, BigInt> by_length;
};

/// Number of words of length j at d2-distance exactly r from u, by the
/// closed form: with k = l(u) and a = ceil(|k - j| / 2),
///   C(j, r-a) * (N-1)^(r-a)            for j <= k,
///   C(k, r-a) * (N-1)^(r-a) * N^(j-k)  for j >  k,
/// where C(n, t) = 0 outside 0 <= t <= n.
BigInt sphere_size_fixed_length(const Word& u, std::size_t j, DistanceValue r,
                                const Alphabet& alphabet);

/// Sphere cardinality around u at radius r: the fixed-length counts summed
/// over the admissible lengths max(0, k - 2r) .. k + 2r.
SphereCount sphere_size(const Word& u, DistanceValue r, const Alphabet& alphabet);

/// All words at delta-distance exactly r from u, in shortlex order.
/// Enumerates every candidate length the function's window admits.
/// Throws NoLengthBoundError when delta has no window, CapExceededError
/// when the candidates outgrow the cap.
std::vector<Word> enumerate_sphere(const DistanceFunction& delta, const Word& u, DistanceValue r,
                                   const Alphabet& alphabet,
                                   std::uint64_t cap = kDefaultEnumerationCap);

} // namespace wordmetrics
