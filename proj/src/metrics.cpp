#include "wordmetrics/metrics.hpp"

#include <algorithm>
#include <cstdlib>

namespace wordmetrics {

namespace {

std::size_t length_gap(const Word& u, const Word& v)
{
    std::size_t a = u.length(), b = v.length();
    return a > b ? a - b : b - a;
}

DistanceValue ceil_div(std::size_t gap, unsigned n)
{
    return static_cast<DistanceValue>((gap + n - 1) / n);
}

} // namespace

DistanceValue hamming(const Word& u, const Word& v)
{
    if (u.length() != v.length())
        throw LengthMismatchError(u.length(), v.length());
    DistanceValue count = 0;
    for (std::size_t i = 0; i < u.length(); ++i)
        count += u[i] != v[i];
    return count;
}

DistanceValue truncated_hamming(const Word& u, const Word& v)
{
    std::size_t m = std::min(u.length(), v.length());
    DistanceValue count = 0;
    for (std::size_t i = 0; i < m; ++i)
        count += u[i] != v[i];
    return count;
}

DistanceValue gamma_n(const Word& u, const Word& v, unsigned n)
{
    if (n == 0)
        throw InvalidParameterError("gamma_n requires n >= 1");
    return ceil_div(length_gap(u, v), n);
}

DistanceValue d_n(const Word& u, const Word& v, unsigned n)
{
    return truncated_hamming(u, v) + gamma_n(u, v, n);
}

DistanceValue d2(const Word& u, const Word& v)
{
    return truncated_hamming(u, v) + ceil_div(length_gap(u, v), 2);
}

DistanceValue metric_T(const Word& u, const Word& v)
{
    return truncated_hamming(u, v) + static_cast<DistanceValue>(length_gap(u, v));
}

DistanceValue excess_gamma(const DistanceFunction& delta, const Word& u, const Word& v)
{
    return delta(u, v) - truncated_hamming(u, v);
}

namespace {

std::shared_ptr<const LengthExcess> gap_excess(unsigned divisor)
{
    auto excess = std::make_shared<LengthExcess>();
    excess->value = [divisor](std::size_t a, std::size_t b) {
        std::size_t gap = a > b ? a - b : b - a;
        return ceil_div(gap, divisor);
    };
    return excess;
}

std::shared_ptr<const LengthExcess> zero_excess(bool equal_only)
{
    auto excess = std::make_shared<LengthExcess>();
    excess->value = [](std::size_t, std::size_t) { return DistanceValue{0}; };
    excess->equal_lengths_only = equal_only;
    return excess;
}

} // namespace

DistanceFunction make_hamming()
{
    return DistanceFunction(
        "hamming", /*metric=*/true, /*compatible=*/true,
        [](const Word& u, const Word& v) { return hamming(u, v); },
        [](DistanceValue) { return std::size_t{0}; }, zero_excess(true));
}

DistanceFunction make_truncated_hamming()
{
    return DistanceFunction(
        "truncated-hamming", /*metric=*/false, /*compatible=*/true,
        [](const Word& u, const Word& v) { return truncated_hamming(u, v); },
        nullptr, zero_excess(false));
}

DistanceFunction make_T()
{
    return DistanceFunction(
        "T", /*metric=*/true, /*compatible=*/true,
        [](const Word& u, const Word& v) { return metric_T(u, v); },
        [](DistanceValue r) { return static_cast<std::size_t>(r); }, gap_excess(1));
}

DistanceFunction make_d2()
{
    return DistanceFunction(
        "d2", /*metric=*/true, /*compatible=*/true,
        [](const Word& u, const Word& v) { return d2(u, v); },
        [](DistanceValue r) { return static_cast<std::size_t>(2 * r); }, gap_excess(2));
}

DistanceFunction make_dn(unsigned n)
{
    if (n == 0)
        throw InvalidParameterError("dn requires n >= 1");
    return DistanceFunction(
        "dn:" + std::to_string(n), /*metric=*/n <= 2, /*compatible=*/true,
        [n](const Word& u, const Word& v) { return d_n(u, v, n); },
        [n](DistanceValue r) { return static_cast<std::size_t>(r) * n; }, gap_excess(n));
}

} // namespace wordmetrics
