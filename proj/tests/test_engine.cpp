#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordmetrics/counterexamples.hpp"
#include "wordmetrics/registry.hpp"
#include "wordmetrics/report_json.hpp"
#include "wordmetrics/uniformity.hpp"

// The OpenMP scans must reproduce the serial reference bit for bit:
// verdicts, witnesses, and counts, across pass and fail cases, regardless
// of thread count or evaluation path (generic, packed, memoized).

using namespace wordmetrics;

namespace {

const Alphabet kBinary("01");
const Alphabet kTernary("abc");

std::vector<ScanOptions> engine_matrix()
{
    ScanOptions reference;
    reference.reference = true;

    ScanOptions one_thread;
    one_thread.threads = 1;

    ScanOptions four_threads;
    four_threads.threads = 4;

    ScanOptions no_memo;
    no_memo.threads = 4;
    no_memo.memo_limit = 0;

    return {reference, one_thread, four_threads, no_memo};
}

void check_same(const AxiomReport& a, const AxiomReport& b, const Alphabet& alphabet)
{
    CHECK(report_json(a, alphabet) == report_json(b, alphabet));
}

} // namespace

TEST_CASE("axiom reports are engine independent")
{
    struct Case {
        const char* metric;
        const Alphabet* alphabet;
        std::size_t max_len;
    };
    const Case cases[] = {
        {"d2", &kBinary, 4},          {"d2", &kTernary, 3},
        {"T", &kBinary, 4},           {"dn:3", &kBinary, 4},
        {"dn:4", &kBinary, 5},        {"truncated-hamming", &kBinary, 3},
        {"example411", &kBinary, 4},  {"example412", &kBinary, 4},
    };

    auto engines = engine_matrix();
    for (const Case& c : cases) {
        DistanceFunction delta = metric_by_name(c.metric, *c.alphabet);
        AxiomReport reference = verify_metric_axioms(delta, *c.alphabet, c.max_len, engines[0]);
        for (std::size_t e = 1; e < engines.size(); ++e) {
            AxiomReport report = verify_metric_axioms(delta, *c.alphabet, c.max_len, engines[e]);
            check_same(reference, report, *c.alphabet);
        }
    }
}

TEST_CASE("compatibility and characterization reports are engine independent")
{
    auto engines = engine_matrix();
    DistanceFunction half = make_d2();
    DistanceFunction plain = make_hamming();

    AxiomReport compat_ref = verify_hamming_compatible(half, kBinary, 5, engines[0]);
    AxiomReport characterization_ref =
        verify_hamming_characterization(plain, kBinary, 4, engines[0]);
    for (std::size_t e = 1; e < engines.size(); ++e) {
        check_same(compat_ref, verify_hamming_compatible(half, kBinary, 5, engines[e]), kBinary);
        check_same(characterization_ref,
                   verify_hamming_characterization(plain, kBinary, 4, engines[e]), kBinary);
    }
}

TEST_CASE("uniformity reports are engine independent")
{
    auto engines = engine_matrix();
    for (const char* name : {"d2", "T", "example411", "example412"}) {
        DistanceFunction delta = metric_by_name(name, kBinary);
        Json reference = report_json(is_uniform(delta, kBinary, 4, engines[0]), kBinary);
        for (std::size_t e = 1; e < engines.size(); ++e)
            CHECK(reference == report_json(is_uniform(delta, kBinary, 4, engines[e]), kBinary));
    }
}

TEST_CASE("minimality reports are engine independent")
{
    auto engines = engine_matrix();
    for (const char* name : {"d2", "T", "example411", "truncated-hamming"}) {
        DistanceFunction delta = metric_by_name(name, kBinary);
        Json reference = report_json(check_minimality(delta, kBinary, 4, engines[0]), kBinary);
        for (std::size_t e = 1; e < engines.size(); ++e)
            CHECK(reference ==
                  report_json(check_minimality(delta, kBinary, 4, engines[e]), kBinary));
    }
}

TEST_CASE("empty word bound reports are engine independent")
{
    auto engines = engine_matrix();
    for (const char* name : {"d2", "example411"}) {
        DistanceFunction delta = metric_by_name(name, kBinary);
        Json reference = report_json(check_empty_word_bound(delta, kBinary, 5, engines[0]),
                                     kBinary);
        for (std::size_t e = 1; e < engines.size(); ++e)
            CHECK(reference ==
                  report_json(check_empty_word_bound(delta, kBinary, 5, engines[e]), kBinary));
    }
}

TEST_CASE("fail-fast keeps the verdict")
{
    ScanOptions fast;
    fast.fail_fast = true;
    CHECK(verify_metric_axioms(make_dn(3), kBinary, 4, fast).verdict == Verdict::Fail);
    CHECK(verify_metric_axioms(make_d2(), kBinary, 4, fast).verdict == Verdict::Pass);
}

TEST_CASE("a throwing distance surfaces the same error in every engine")
{
    DistanceFunction plain = make_hamming();
    for (const ScanOptions& options : engine_matrix()) {
        CHECK_THROWS_AS(verify_metric_axioms(plain, kBinary, 2, options), LengthMismatchError);
        CHECK_THROWS_AS(check_minimality(plain, kBinary, 2, options), LengthMismatchError);
    }
}
