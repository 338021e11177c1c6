#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wordmetrics/metrics.hpp"

using namespace wordmetrics;

namespace {

Word zeros(std::size_t n)
{
    return Word(std::vector<Symbol>(n, 0));
}

} // namespace

TEST_CASE("hamming distance on words of equal length")
{
    Alphabet letters("abcmo");
    CHECK(hamming(parse_word("coma", letters), parse_word("comb", letters)) == 1);

    Alphabet more("bnrstuy");
    CHECK(hamming(parse_word("sunny", more), parse_word("burnt", more)) == 3);

    Alphabet binary("01");
    Word u = parse_word("0110", binary);
    CHECK(hamming(u, u) == 0);

    CHECK_THROWS_AS(hamming(parse_word("01", binary), parse_word("0", binary)),
                    LengthMismatchError);
}

TEST_CASE("truncated hamming")
{
    Alphabet binary("01");
    CHECK(truncated_hamming(parse_word("000000", binary), parse_word("000111000", binary)) == 3);
    CHECK(truncated_hamming(parse_word("0101", binary), Word{}) == 0);
    CHECK(truncated_hamming(parse_word("0101", binary), parse_word("01", binary)) == 0);

    // symmetry, exhaustively at small lengths
    auto words = enumerate_language(binary, 4);
    for (const Word& u : words)
        for (const Word& v : words)
            CHECK(truncated_hamming(u, v) == truncated_hamming(v, u));
}

TEST_CASE("gamma_n agrees with the two-branch form")
{
    for (unsigned n = 1; n <= 10; ++n) {
        for (std::size_t gap = 0; gap <= 100; ++gap) {
            CHECK(gamma_n(zeros(gap), Word{}, n) == testing::piecewise_gap_excess(gap, n));
        }
    }

    CHECK(gamma_n(zeros(3), Word{}, 3) == 1);
    CHECK(gamma_n(zeros(3), Word{}, 2) == 2);
    CHECK(gamma_n(zeros(5), zeros(5), 7) == 0);
    CHECK_THROWS_AS(gamma_n(Word{}, Word{}, 0), InvalidParameterError);
}

TEST_CASE("d_n values from the standard violation triple")
{
    Alphabet binary("01");
    Word u = parse_word("000000", binary);
    Word v = parse_word("000111000", binary);
    Word w = parse_word("000", binary);

    CHECK(d_n(u, v, 3) == 4);
    CHECK(d_n(v, w, 3) == 2);
    CHECK(d_n(u, w, 3) == 1);
}

TEST_CASE("d_1 equals T")
{
    Alphabet binary("01");
    auto words = enumerate_language(binary, 4);
    for (const Word& u : words)
        for (const Word& v : words)
            CHECK(d_n(u, v, 1) == metric_T(u, v));
}

TEST_CASE("d_n symmetry and identity of indiscernibles")
{
    Alphabet binary("01");
    auto words = enumerate_language(binary, 3);
    for (unsigned n = 1; n <= 5; ++n) {
        for (const Word& u : words) {
            CHECK(d_n(u, u, n) == 0);
            for (const Word& v : words) {
                CHECK(d_n(u, v, n) == d_n(v, u, n));
                if (!(u == v))
                    CHECK(d_n(u, v, n) > 0);
            }
        }
    }
}

TEST_CASE("d2 values")
{
    Alphabet binary("01");
    CHECK(d2(parse_word("000", binary), Word{}) == 2);
    CHECK(d2(parse_word("0101", binary), parse_word("01", binary)) == 1);

    for (const Word& u : enumerate_language(binary, 6))
        CHECK(d2(u, Word{}) == (u.length() + 1) / 2);
}

TEST_CASE("T values")
{
    Alphabet binary("01");
    CHECK(metric_T(parse_word("1", binary), parse_word("11", binary)) == 1);
    CHECK(metric_T(parse_word("0101", binary), parse_word("0101", binary)) == 0);
    CHECK(metric_T(parse_word("0101", binary), parse_word("01", binary)) == 2);
}

TEST_CASE("equal lengths collapse to hamming")
{
    for (const char* symbols : {"01", "abc"}) {
        Alphabet alphabet(symbols);
        for (std::size_t n = 0; n <= 4 - (alphabet.size() > 2); ++n) {
            for (const Word& u : enumerate_words(alphabet, n)) {
                for (const Word& v : enumerate_words(alphabet, n)) {
                    const DistanceValue h = hamming(u, v);
                    CHECK(d2(u, v) == h);
                    CHECK(metric_T(u, v) == h);
                    CHECK(d_n(u, v, 3) == h);
                }
            }
        }
    }
}

TEST_CASE("d2 never exceeds T, strictly below it for wide gaps")
{
    Alphabet binary("01");
    auto words = enumerate_language(binary, 4);
    bool strict_somewhere = false;
    for (const Word& u : words) {
        for (const Word& v : words) {
            CHECK(d2(u, v) <= metric_T(u, v));
            const std::size_t gap =
                u.length() > v.length() ? u.length() - v.length() : v.length() - u.length();
            if (gap >= 2 && d2(u, v) < metric_T(u, v))
                strict_somewhere = true;
        }
    }
    CHECK(strict_somewhere);
}

TEST_CASE("excess over the truncated part")
{
    Alphabet binary("01");
    DistanceFunction t = make_T();
    DistanceFunction half = make_d2();
    auto words = enumerate_language(binary, 4);
    for (const Word& u : words) {
        for (const Word& v : words) {
            const std::size_t gap =
                u.length() > v.length() ? u.length() - v.length() : v.length() - u.length();
            CHECK(excess_gamma(t, u, v) == static_cast<DistanceValue>(gap));
            CHECK(excess_gamma(half, u, v) == static_cast<DistanceValue>((gap + 1) / 2));
        }
    }

    GammaExcess excess(make_T());
    CHECK(excess(parse_word("0101", binary), parse_word("01", binary)) == 2);
}

TEST_CASE("registry factory metadata")
{
    CHECK(make_hamming().claimed_metric());
    CHECK_FALSE(make_truncated_hamming().claimed_metric());
    CHECK(make_truncated_hamming().claimed_hamming_compatible());
    CHECK(make_d2().claimed_metric());
    CHECK(make_dn(2).claimed_metric());
    CHECK_FALSE(make_dn(3).claimed_metric());
    CHECK(make_dn(3).claimed_hamming_compatible());
    CHECK(make_dn(3).name() == "dn:3");
    CHECK_THROWS_AS(make_dn(0), InvalidParameterError);

    CHECK(make_d2().length_window(2) == std::size_t{4});
    CHECK(make_T().length_window(2) == std::size_t{2});
    CHECK(make_dn(3).length_window(2) == std::size_t{6});
    CHECK_FALSE(make_truncated_hamming().length_window(1).has_value());
}
