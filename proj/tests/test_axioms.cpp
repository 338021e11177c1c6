#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wordmetrics/axioms.hpp"
#include "wordmetrics/counterexamples.hpp"

using namespace wordmetrics;

namespace {

const Alphabet kBinary("01");
const Alphabet kTernary("abc");

std::string str(const Word& w, const Alphabet& a)
{
    return w.to_string(a);
}

} // namespace

TEST_CASE("d2 satisfies the metric axioms at small bounds")
{
    DistanceFunction half = make_d2();
    for (std::size_t len = 0; len <= 5; ++len) {
        CHECK(verify_metric_axioms(half, kBinary, len).verdict == Verdict::Pass);
        CHECK(verify_metric_axioms(half, kTernary, len).verdict == Verdict::Pass);
    }
}

TEST_CASE("T satisfies the metric axioms at small bounds")
{
    CHECK(verify_metric_axioms(make_T(), kBinary, 4).verdict == Verdict::Pass);
    CHECK(verify_metric_axioms(make_T(), kTernary, 3).verdict == Verdict::Pass);
}

TEST_CASE("pass reports carry full logical counts")
{
    AxiomReport report = verify_metric_axioms(make_d2(), kBinary, 2);
    // 7 words: 21 pairs audited twice (positivity, symmetry), each pair
    // against all 7 third words.
    CHECK(report.checked_pairs == 42);
    CHECK(report.checked_triples == 21 * 7);
    CHECK(report.max_len == 2);
    CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("d_n with n >= 3 fails the triangle inequality")
{
    for (unsigned n = 3; n <= 4; ++n) {
        AxiomReport report = verify_metric_axioms(make_dn(n), kBinary, 3 * n);
        REQUIRE(report.verdict == Verdict::Fail);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->kind == WitnessKind::Triangle);

        // a witness must reproduce its violation
        const auto& words = report.witness->words;
        REQUIRE(words.size() == 3);
        CHECK(d_n(words[0], words[1], n) > d_n(words[0], words[2], n) + d_n(words[2], words[1], n));
    }
}

TEST_CASE("the minimal triangle witness for dn:3")
{
    // Smallest violation in (u, v, w) shortlex order, confirmed by the
    // brute oracle below: (00, 110, empty) with distances (3, 1, 1).
    AxiomReport report = verify_metric_axioms(make_dn(3), kBinary, 4);
    REQUIRE(report.verdict == Verdict::Fail);
    REQUIRE(report.witness.has_value());
    CHECK(str(report.witness->words[0], kBinary) == "00");
    CHECK(str(report.witness->words[1], kBinary) == "110");
    CHECK(str(report.witness->words[2], kBinary) == "");
    CHECK(report.witness->values == std::vector<DistanceValue>{3, 1, 1});

    auto brute = testing::brute_triangle_violation(make_dn(3), enumerate_language(kBinary, 4));
    REQUIRE(brute.has_value());
    CHECK(brute->u == report.witness->words[0]);
    CHECK(brute->v == report.witness->words[1]);
    CHECK(brute->w == report.witness->words[2]);
}

TEST_CASE("engine witness equals the brute oracle on assorted bounds")
{
    for (unsigned n : {3u, 4u}) {
        for (std::size_t len = 2; len <= 5; ++len) {
            DistanceFunction dn = make_dn(n);
            AxiomReport report = verify_metric_axioms(dn, kBinary, len);
            auto brute = testing::brute_triangle_violation(dn, enumerate_language(kBinary, len));
            if (brute) {
                REQUIRE(report.verdict == Verdict::Fail);
                CHECK(report.witness->words[0] == brute->u);
                CHECK(report.witness->words[1] == brute->v);
                CHECK(report.witness->words[2] == brute->w);
            } else {
                CHECK(report.verdict == Verdict::Pass);
            }
        }
    }
}

TEST_CASE("identity failures are caught")
{
    // truncated Hamming keeps every prefix pair at distance zero
    AxiomReport report = verify_metric_axioms(make_truncated_hamming(), kBinary, 2);
    REQUIRE(report.verdict == Verdict::Fail);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->kind == WitnessKind::Identity);
    CHECK(str(report.witness->words[0], kBinary) == "");
    CHECK(str(report.witness->words[1], kBinary) == "0");
}

TEST_CASE("hamming compatibility checks")
{
    CHECK(verify_hamming_compatible(make_d2(), kBinary, 5).verdict == Verdict::Pass);
    CHECK(verify_hamming_compatible(make_truncated_hamming(), kBinary, 3).verdict ==
          Verdict::Pass);
    CHECK(verify_hamming_compatible(make_dn(3), kBinary, 4).verdict == Verdict::Pass);
    CHECK(verify_hamming_compatible(make_T(), kTernary, 3).verdict == Verdict::Pass);

    DistanceFunction doubled(
        "2h", true, false,
        [](const Word& u, const Word& v) { return 2 * truncated_hamming(u, v); });
    AxiomReport report = verify_hamming_compatible(doubled, kBinary, 2);
    REQUIRE(report.verdict == Verdict::Fail);
    CHECK(report.witness->kind == WitnessKind::Compatibility);
    CHECK(str(report.witness->words[0], kBinary) == "0");
    CHECK(str(report.witness->words[1], kBinary) == "1");
    CHECK(report.witness->values == std::vector<DistanceValue>{2, 1});
}

TEST_CASE("characterization accepts the Hamming distance")
{
    for (std::size_t len = 1; len <= 5; ++len) {
        AxiomReport report = verify_hamming_characterization(make_hamming(), kBinary, len);
        CHECK(report.verdict == Verdict::Pass);
    }
    CHECK(verify_hamming_characterization(make_hamming(), kTernary, 3).verdict == Verdict::Pass);
}

TEST_CASE("characterization rejects the doubled Hamming distance")
{
    DistanceFunction doubled("2h", true, false, [](const Word& u, const Word& v) {
        return 2 * hamming(u, v);
    });
    AxiomReport report = verify_hamming_characterization(doubled, kBinary, 3);
    REQUIRE(report.verdict == Verdict::Fail);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->kind == WitnessKind::Bound);
    CHECK(str(report.witness->words[0], kBinary) == "0");
    CHECK(str(report.witness->words[1], kBinary) == "1");
    CHECK(report.witness->values[0] == 2);
}

TEST_CASE("characterization rejects a capped distance via additivity")
{
    DistanceFunction capped("min1", true, false, [](const Word& u, const Word& v) {
        return std::min<DistanceValue>(hamming(u, v), 1);
    });
    AxiomReport report = verify_hamming_characterization(capped, kBinary, 2);
    REQUIRE(report.verdict == Verdict::Fail);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->kind == WitnessKind::Additivity);
    CHECK(str(report.witness->words[0], kBinary) == "00");
    CHECK(str(report.witness->words[1], kBinary) == "11");
    // d(00,11) = 1 against split parts d(0,1) + d(0,1) = 2 at the cut 1
    CHECK(report.witness->values == std::vector<DistanceValue>{1, 1, 1, 1});
}

TEST_CASE("standard violation triple")
{
    TriangleViolation triple = find_dn_violation(3, kBinary);
    CHECK(str(triple.u, kBinary) == "000000");
    CHECK(str(triple.v, kBinary) == "000111000");
    CHECK(str(triple.w, kBinary) == "000");
    CHECK(triple.d_uv == 4);
    CHECK(triple.d_uw == 1);
    CHECK(triple.d_wv == 2);

    TriangleViolation wide = find_dn_violation(4, kBinary);
    CHECK(str(wide.u, kBinary) == "00000000");
    CHECK(str(wide.v, kBinary) == "000011110000");
    CHECK(str(wide.w, kBinary) == "0000");
    CHECK(wide.d_uv == 5);
    CHECK(wide.d_uw == 1);
    CHECK(wide.d_wv == 2);

    CHECK_THROWS_AS(find_dn_violation(2, kBinary), InvalidParameterError);
    CHECK_THROWS_AS(find_dn_violation(3, Alphabet("a")), InvalidParameterError);
}

TEST_CASE("violation triples stay inside the 3n bound")
{
    for (unsigned n = 3; n <= 6; ++n) {
        TriangleViolation triple = find_dn_violation(n, kBinary);
        CHECK(triple.u.length() == 2 * n);
        CHECK(triple.v.length() == 3 * n);
        CHECK(triple.w.length() == n);
        CHECK(triple.d_uv > triple.d_uw + triple.d_wv);
        CHECK(triple.d_uv == static_cast<DistanceValue>(n) + 1);
    }
}

TEST_CASE("counterexample metrics pass the axioms")
{
    CHECK(verify_metric_axioms(metric_example_411(kBinary), kBinary, 5).verdict == Verdict::Pass);
    CHECK(verify_metric_axioms(metric_example_412(kBinary), kBinary, 5).verdict == Verdict::Pass);
    CHECK(verify_hamming_compatible(metric_example_411(kBinary), kBinary, 5).verdict ==
          Verdict::Pass);
    CHECK(verify_hamming_compatible(metric_example_412(kBinary), kBinary, 5).verdict ==
          Verdict::Pass);
}

TEST_CASE("cap violations surface as errors")
{
    ScanOptions options;
    options.cap = 10;
    CHECK_THROWS_AS(verify_metric_axioms(make_d2(), kBinary, 6, options), CapExceededError);
}
