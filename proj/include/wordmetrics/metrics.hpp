#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "wordmetrics/words.hpp"

namespace wordmetrics {

/// Distances are exact integers throughout; no floating point.
/// Excess values (distance minus truncated Hamming part) may be negative
/// for pathological user-supplied functions, so the type is signed.
using DistanceValue = std::int64_t;

/// Structure descriptor for distances of the shape
///     d(u, v) = truncated_hamming(u, v) + excess(l(u), l(v)).
/// Verifier scans use it for packed evaluation kernels and for the lower
/// bound d(u, v) >= excess(l(u), l(v)).
struct LengthExcess {
    std::function<DistanceValue(std::size_t, std::size_t)> value;
    /// True for the plain Hamming distance, which is undefined when the
    /// lengths differ.
    bool equal_lengths_only = false;
};

/// A total non-negative integer distance on the words of one alphabet,
/// with metadata. Immutable and freely shareable across threads.
class DistanceFunction {
public:
    using Eval = std::function<DistanceValue(const Word&, const Word&)>;
    using Window = std::function<std::size_t(DistanceValue)>;

    DistanceFunction(std::string name, bool claimed_metric, bool claimed_hamming_compatible,
                     Eval eval, Window window = nullptr,
                     std::shared_ptr<const LengthExcess> excess = nullptr)
      : name_(std::move(name)),
        claimed_metric_(claimed_metric),
        claimed_hamming_compatible_(claimed_hamming_compatible),
        eval_(std::move(eval)),
        window_(std::move(window)),
        excess_(std::move(excess))
    {
    }

    const std::string& name() const noexcept { return name_; }
    bool claimed_metric() const noexcept { return claimed_metric_; }
    bool claimed_hamming_compatible() const noexcept { return claimed_hamming_compatible_; }

    DistanceValue operator()(const Word& u, const Word& v) const { return eval_(u, v); }

    /// Largest |l(u) - l(v)| possible among pairs at distance r, when the
    /// function admits such a bound; nullopt otherwise (e.g. the truncated
    /// Hamming function, which keeps arbitrarily long words at distance 0).
    std::optional<std::size_t> length_window(DistanceValue r) const
    {
        if (!window_)
            return std::nullopt;
        return window_(r);
    }

    /// Non-null when the function is truncated Hamming plus a pure
    /// length-pair excess.
    const LengthExcess* length_excess() const noexcept { return excess_.get(); }

private:
    std::string name_;
    bool claimed_metric_;
    bool claimed_hamming_compatible_;
    Eval eval_;
    Window window_;
    std::shared_ptr<const LengthExcess> excess_;
};

/// Hamming distance between words of equal length: the number of positions
/// where the letters differ. Throws LengthMismatchError otherwise.
DistanceValue hamming(const Word& u, const Word& v);

/// Hamming distance of the equal-length prefixes: the longer word is cut
/// to the length of the shorter one. Total, symmetric, and not a metric.
DistanceValue truncated_hamming(const Word& u, const Word& v);

/// Length-gap excess ceil(|l(u) - l(v)| / n). Requires n >= 1.
DistanceValue gamma_n(const Word& u, const Word& v, unsigned n);

/// truncated_hamming(u, v) + gamma_n(u, v, n). A metric only for n <= 2.
DistanceValue d_n(const Word& u, const Word& v, unsigned n);

/// truncated_hamming(u, v) + ceil(|l(u) - l(v)| / 2).
DistanceValue d2(const Word& u, const Word& v);

/// truncated_hamming(u, v) + |l(u) - l(v)|.
DistanceValue metric_T(const Word& u, const Word& v);

/// Excess of delta over the truncated Hamming part:
/// delta(u, v) - truncated_hamming(u, v). May be negative for pathological
/// inputs; reported as-is, never clamped.
DistanceValue excess_gamma(const DistanceFunction& delta, const Word& u, const Word& v);

/// The excess map of a fixed base distance, as a callable value.
class GammaExcess {
public:
    explicit GammaExcess(DistanceFunction base) : base_(std::move(base)) {}

    DistanceValue operator()(const Word& u, const Word& v) const
    {
        return excess_gamma(base_, u, v);
    }

    const DistanceFunction& base() const noexcept { return base_; }

private:
    DistanceFunction base_;
};

DistanceFunction make_hamming();
DistanceFunction make_truncated_hamming();
DistanceFunction make_T();
DistanceFunction make_d2();
DistanceFunction make_dn(unsigned n);

} // namespace wordmetrics
