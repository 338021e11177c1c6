#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wordmetrics/metrics.hpp"

namespace wordmetrics {

enum class Verdict { Pass, Fail };

enum class WitnessKind {
    Reflexivity,
    Identity,
    Symmetry,
    Triangle,
    Compatibility,
    Additivity,
    Bound,
};

const char* to_string(Verdict v);
const char* to_string(WitnessKind k);

/// A reproducible violation: re-evaluating the distances on the witness
/// words recreates the reported values.
struct Witness {
    WitnessKind kind;
    std::vector<Word> words;           // 1..3 words
    std::vector<DistanceValue> values; // involved distances (additivity also carries the split)
};

/// Result of one bounded exhaustive audit over all words up to max_len.
struct AxiomReport {
    Verdict verdict = Verdict::Pass;
    std::optional<Witness> witness;
    std::uint64_t checked_pairs = 0;
    std::uint64_t checked_triples = 0;
    std::size_t max_len = 0;
};

/// Execution controls for the exhaustive scans. The defaults give the
/// OpenMP engine with packed evaluation kernels; `reference` selects the
/// plain serial loops kept for testing. Both produce identical reports.
struct ScanOptions {
    bool reference = false;
    /// Stop at the first violation found in any order. The verdict is
    /// unchanged but the witness is no longer guaranteed minimal.
    bool fail_fast = false;
    int threads = 0; // 0 = OpenMP default
    std::uint64_t cap = kDefaultEnumerationCap;
    /// Distances are memoized in a dense table when W^2 stays within this.
    std::uint64_t memo_limit = kDefaultEnumerationCap;
};

/// Checks the metric axioms for delta over all words of length <= max_len:
/// reflexivity, positivity on distinct pairs, symmetry, and the triangle
/// inequality, in that order. The witness of the first failing category is
/// the shortlex-minimal violating tuple of that category.
AxiomReport verify_metric_axioms(const DistanceFunction& delta, const Alphabet& alphabet,
                                 std::size_t max_len, const ScanOptions& options = {});

/// Checks delta(u, v) == hamming(u, v) on every equal-length pair up to
/// max_len.
AxiomReport verify_hamming_compatible(const DistanceFunction& delta, const Alphabet& alphabet,
                                      std::size_t max_len, const ScanOptions& options = {});

/// Characterization audit for a candidate Hamming distance: per-length
/// metric axioms, the bound d(u, v) <= n on each equal-length pair, and
/// additivity over every concatenation split. When all hold, additionally
/// asserts d == hamming on every equal-length pair and reports any
/// discrepancy as a compatibility failure.
AxiomReport verify_hamming_characterization(const DistanceFunction& d, const Alphabet& alphabet,
                                            std::size_t max_len, const ScanOptions& options = {});

/// The standard triangle violation for d_n with n >= 3 over the first two
/// alphabet symbols: u = 0^2n, v = 0^n 1^n 0^n, w = 0^n.
struct TriangleViolation {
    Word u, v, w;
    DistanceValue d_uv, d_uw, d_wv;
};

/// Constructs the violation triple above and asserts
/// d_n(u, v) > d_n(u, w) + d_n(w, v). Throws InvalidParameterError for
/// n < 3 or an alphabet of fewer than two symbols.
TriangleViolation find_dn_violation(unsigned n, const Alphabet& alphabet);

} // namespace wordmetrics
