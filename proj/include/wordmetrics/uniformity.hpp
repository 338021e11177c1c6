#pragma once

#include <optional>
#include <vector>

#include "wordmetrics/axioms.hpp"
#include "wordmetrics/bigint.hpp"

namespace wordmetrics {

/// All words of length l(u) at Hamming distance l(u) from u, in shortlex
/// order. There are (N-1)^l(u) of them; the empty word is its own unique
/// opposite. Throws CapExceededError when the count outgrows the cap.
std::vector<Word> hamming_opposites(const Word& u, const Alphabet& alphabet,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// The opposite of u that exactly complements u's disagreement with w:
/// for i < l(w), v_i = w_i wherever w_i != u_i, and otherwise (and beyond
/// l(w)) the smallest symbol different from u_i. The result satisfies
///   truncated_hamming(u, w) + truncated_hamming(v, w) == l(w).
/// Requires l(u) >= l(w) and at least two symbols.
Word complementary_opposite(const Word& u, const Word& w, const Alphabet& alphabet);

/// An opposite pair whose distances to a reference word differ. The pair
/// is presented with the smaller value first.
struct PairWitness {
    Word u, v;
    DistanceValue value_u, value_v;
};

/// An opposite pair whose excesses against w differ, smaller value first.
struct TripleWitness {
    Word u, v, w;
    DistanceValue value_u, value_v;
};

struct UniformityReport {
    Verdict weakly_uniform = Verdict::Pass;
    /// Empty when only the weak check ran.
    std::optional<Verdict> uniform;
    std::size_t max_len = 0;
    /// True for unary alphabets: no opposite pairs exist, both predicates
    /// hold vacuously.
    bool vacuous = false;
    std::optional<PairWitness> witness_weak;
    std::optional<TripleWitness> witness_uniform;
};

/// Checks delta(u, empty) == delta(v, empty) for every Hamming-opposite
/// pair of every length up to max_len. A failure carries the
/// shortlex-minimal violating pair.
UniformityReport is_weakly_uniform(const DistanceFunction& delta, const Alphabet& alphabet,
                                   std::size_t max_len, const ScanOptions& options = {});

/// Checks the excess equality gamma(u, w) == gamma(v, w) for every
/// opposite pair and every w up to max_len. Candidate witnesses are
/// ordered by w first (shortlex), then by the pair; the weak check is the
/// w = empty slice and is reported alongside.
UniformityReport is_uniform(const DistanceFunction& delta, const Alphabet& alphabet,
                            std::size_t max_len, const ScanOptions& options = {});

struct EmptyWordBoundReport {
    /// The audit of 2 * delta(u, empty) >= l(u) over all u up to max_len.
    AxiomReport bound;
    /// Weak uniformity is the bound's precondition; its status is reported
    /// alongside rather than enforced.
    UniformityReport weak;
    /// Lengths at which some word attains the bound exactly.
    std::vector<std::size_t> attained;
};

EmptyWordBoundReport check_empty_word_bound(const DistanceFunction& delta,
                                            const Alphabet& alphabet, std::size_t max_len,
                                            const ScanOptions& options = {});

struct MinimalityViolation {
    Word u, w; // l(u) >= l(w); w <= u in shortlex order
    DistanceValue delta_value;
    DistanceValue d2_value;
};

struct LengthClassStats {
    std::size_t len_u, len_w; // len_u >= len_w
    std::uint64_t satisfied;
    std::uint64_t total;
};

struct MinimalityReport {
    Verdict verdict = Verdict::Pass;
    std::size_t max_len = 0;
    /// Every pair with delta(u, w) < d2(u, w), in shortlex pair order.
    std::vector<MinimalityViolation> violations;
    /// Satisfaction fractions per (l(u), l(w)) class, ascending.
    std::vector<LengthClassStats> classes;
};

/// Scans every unordered pair up to max_len for delta(u, w) < d2(u, w).
MinimalityReport check_minimality(const DistanceFunction& delta, const Alphabet& alphabet,
                                  std::size_t max_len, const ScanOptions& options = {});

struct ViolatorDetail {
    Word u;
    DistanceValue delta_uw, d2_uw;
    Word opposite; // the complementary opposite of u against w
    DistanceValue delta_vw, d2_vw;
    bool rescued; // delta(v, w) >= d2(v, w)
    std::size_t overlap; // h = truncated_hamming(u, w)
    BigInt equality_opposites; // count of opposites achieving the complement equality
};

/// Per-length statistics of how opposites rescue violations of the
/// minimality inequality delta >= d2 against a fixed w.
struct OppositeStats {
    std::size_t n = 0;
    Word w;
    std::uint64_t examined = 0;
    std::uint64_t violating = 0;
    std::uint64_t rescues = 0;
    /// Largest h over the violating words (0 when none violate).
    std::size_t max_overlap = 0;
    /// (N-1)^(n - max_overlap): opposites meeting the complement equality.
    BigInt window_size;
    /// The satisfaction probability floor is 1 / floor_denominator, with
    /// floor_denominator = (N-1)^max_overlap; this is 1 for binary
    /// alphabets, where the opposite is unique.
    BigInt floor_denominator;
    std::vector<ViolatorDetail> violators;
};

/// For every u in Sigma_n with delta(u, w) < d2(u, w), verifies that the
/// complementary opposite v satisfies delta(v, w) >= d2(v, w) and counts
/// the opposites meeting the complement equality. Requires n >= l(w) and
/// at least two symbols.
OppositeStats opposite_satisfaction_stats(const DistanceFunction& delta, const Alphabet& alphabet,
                                          std::size_t n, const Word& w,
                                          const ScanOptions& options = {});

} // namespace wordmetrics
