#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rnfree/bounds.hpp"
#include "rnfree/checkpoint.hpp"
#include "rnfree/sweep.hpp"

using namespace rnfree;
using namespace rnfree::sweep;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.is_open());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::filesystem::path tmp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "rnfree_sweep_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

// per-q recomputation that bypasses the segment sieve entirely
SweepSummary oracle_summary(u64 lo, u64 hi, unsigned coefficient) {
    SweepSummary s;
    for (u64 q = lo + 1; q <= hi; ++q) {
        const auto fq = arith::factorize(q);
        if (fq.omega() != 1) continue;
        s.census_pp += 1;
        if (q % 2 == 0) continue;
        s.total_pp += 1;
        const u64 w = arith::num_squarefree_divisors(q - 1);
        const u128 cu = static_cast<u128>(coefficient) * w * w;
        if (static_cast<u128>(q) <= cu * cu) {
            s.fail_cor42_upper += 1;
            s.max_fail_cor42_upper = std::max(s.max_fail_cor42_upper, q);
        }
        const bounds::ConditionInput inp{.q = q,
                                         .D = coefficient / 2,
                                         .n = 1,
                                         .N = 2,
                                         .r = q - 1,
                                         .R = (q - 1) / 2};
        if (q >= 5 && bounds::cor42_condition(inp)) continue;
        s.fail_cor42 += 1;
        s.max_fail_cor42 = std::max(s.max_fail_cor42, q);
        if (q < 5 || !bounds::choose_sieving_primes(inp).has_value()) {
            s.fail_sieve += 1;
            s.max_fail_sieve = std::max(s.max_fail_sieve, q);
        }
    }
    return s;
}

} // namespace

TEST_CASE("odd prime power enumeration") {
    std::vector<u64> got;
    for_each_odd_prime_power(3, 5, [&](u64 q, u64, unsigned) { got.push_back(q); });
    CHECK(got == std::vector<u64>{5});

    got.clear();
    for_each_odd_prime_power(3, 30, [&](u64 q, u64, unsigned) { got.push_back(q); });
    CHECK(got == std::vector<u64>{5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});

    const auto pps = enumerate_odd_prime_powers(3, 30);
    REQUIRE(pps.size() == 11);
    CHECK(pps[2].q == 9);
    CHECK(pps[2].p == 3);
    CHECK(pps[2].k == 2);
    CHECK(pps[8].q == 25);
    CHECK(pps[8].qm1_factors.factors ==
          std::vector<arith::FactorEntry>{{2, 3}, {3, 1}});
}

TEST_CASE("enumeration matches direct factorization scan") {
    std::vector<std::tuple<u64, u64, unsigned>> got;
    for_each_odd_prime_power(3, 40000,
                             [&](u64 q, u64 p, unsigned k) { got.push_back({q, p, k}); });
    std::vector<std::tuple<u64, u64, unsigned>> expect;
    for (u64 q = 5; q <= 40000; q += 2) {
        const auto f = arith::factorize(q);
        if (f.omega() == 1)
            expect.push_back({q, f.factors[0].prime, f.factors[0].exponent});
    }
    CHECK(got == expect);
}

TEST_CASE("record encoding is byte-exact") {
    SweepRecord rec;
    rec.q = 9241;
    rec.p = 9241;
    rec.k = 1;
    rec.omega = 5;
    rec.w_qm1 = 32;
    rec.w_half = 32;
    rec.cor42 = false;
    rec.sieve = true;
    rec.sieving_primes = {11, 11, 7};
    CHECK(record_jsonl(rec) ==
          "{\"q\":9241,\"p\":9241,\"k\":1,\"omega\":5,\"w_qm1\":32,\"w_half\":32,"
          "\"cor42\":false,\"sieve\":true,\"sieving_primes\":[11,11,7]}");
    const std::vector<u64> ex{3, 7};
    CHECK(record_jsonl(rec, &ex) ==
          "{\"q\":9241,\"p\":9241,\"k\":1,\"omega\":5,\"w_qm1\":32,\"w_half\":32,"
          "\"cor42\":false,\"sieve\":true,\"sieving_primes\":[11,11,7],\"a_exceptions\":[3,7]}");
}

TEST_CASE("summary json round trip") {
    SweepSummary s{.total_pp = 10, .fail_cor42 = 4, .max_fail_cor42 = 99, .fail_sieve = 2,
                   .max_fail_sieve = 55};
    CHECK(summary_from_json(summary_json(s)) == s);
}

TEST_CASE("sweep summary matches per-q oracle recomputation") {
    SweepConfig cfg;
    cfg.range_lo = 3;
    cfg.range_hi = 1000;
    cfg.coefficient = 6;
    cfg.segment_length = 128;
    cfg.parallelism = 1;
    const SweepSummary got = run_sweep(cfg);
    const SweepSummary expect = oracle_summary(3, 1000, 6);
    CHECK(got == expect);

    cfg.coefficient = 4;
    CHECK(run_sweep(cfg) == oracle_summary(3, 1000, 4));
}

TEST_CASE("records hold exactly the cor42 failures, in order") {
    SweepConfig cfg;
    cfg.range_lo = 3;
    cfg.range_hi = 5000;
    cfg.coefficient = 6;
    cfg.segment_length = 512;
    cfg.parallelism = 2;
    std::vector<SweepRecord> recs;
    const SweepSummary sum = run_sweep(cfg, [&](const SweepRecord& r) { recs.push_back(r); });
    CHECK(recs.size() == sum.fail_cor42);
    u64 prev = 0;
    u64 sieve_fails = 0;
    for (const auto& r : recs) {
        CHECK(r.q > prev);
        prev = r.q;
        CHECK_FALSE(r.cor42);
        if (!r.sieve) ++sieve_fails;
        if (r.sieve) CHECK_FALSE(r.sieving_primes.empty()); // empty sieve would mean cor42
        CHECK(r.w_half == (((r.q - 1) / 2) % 2 == 0 ? r.w_qm1 : r.w_qm1 / 2));
    }
    CHECK(sieve_fails == sum.fail_sieve);
}

TEST_CASE("lo_inclusive picks up q = 3") {
    SweepConfig cfg;
    cfg.range_lo = 3;
    cfg.range_hi = 100;
    cfg.coefficient = 4;
    cfg.parallelism = 1;
    const SweepSummary excl = run_sweep(cfg);
    cfg.lo_inclusive = true;
    std::vector<SweepRecord> recs;
    const SweepSummary incl = run_sweep(cfg, [&](const SweepRecord& r) { recs.push_back(r); });
    CHECK(incl.total_pp == excl.total_pp + 1);
    CHECK(incl.fail_sieve == excl.fail_sieve + 1);
    REQUIRE(!recs.empty());
    CHECK(recs.front().q == 3);
    CHECK_FALSE(recs.front().sieve);
}

TEST_CASE("parallel and single-threaded runs produce identical files") {
    const auto dir = tmp_dir();
    SweepConfig cfg;
    cfg.range_lo = 3;
    cfg.range_hi = 300000;
    cfg.coefficient = 6;
    cfg.segment_length = 1 << 14;
    cfg.records_path = (dir / "rec_seq.jsonl").string();
    cfg.checkpoint_path = (dir / "ck_seq.jsonl").string();
    cfg.parallelism = 1;
    const SweepSummary seq = run_sweep(cfg);

    cfg.records_path = (dir / "rec_par.jsonl").string();
    cfg.checkpoint_path = (dir / "ck_par.jsonl").string();
    cfg.parallelism = 2;
    const SweepSummary par = run_sweep(cfg);

    CHECK(seq == par);
    CHECK(slurp((dir / "rec_seq.jsonl").string()) == slurp((dir / "rec_par.jsonl").string()));
    CHECK(slurp((dir / "ck_seq.jsonl").string()) == slurp((dir / "ck_par.jsonl").string()));
}

TEST_CASE("checkpoint resume reproduces an uninterrupted run byte for byte") {
    const auto dir = tmp_dir();
    SweepConfig cfg;
    cfg.range_lo = 3;
    cfg.range_hi = 200000;
    cfg.coefficient = 4;
    cfg.segment_length = 1 << 14;
    cfg.parallelism = 2;

    cfg.records_path = (dir / "rec_full.jsonl").string();
    cfg.checkpoint_path = (dir / "ck_full.jsonl").string();
    const SweepSummary full = run_sweep(cfg);

    cfg.records_path = (dir / "rec_resume.jsonl").string();
    cfg.checkpoint_path = (dir / "ck_resume.jsonl").string();
    cfg.stop_after_segments = 5;
    run_sweep(cfg);
    cfg.stop_after_segments = 0;
    cfg.resume = true;
    const SweepSummary resumed = run_sweep(cfg);

    CHECK(resumed == full);
    CHECK(slurp((dir / "rec_full.jsonl").string()) == slurp((dir / "rec_resume.jsonl").string()));
    CHECK(slurp((dir / "ck_full.jsonl").string()) == slurp((dir / "ck_resume.jsonl").string()));
}

TEST_CASE("resume refuses a corrupted checkpoint and reports the offset") {
    const auto dir = tmp_dir();
    SweepConfig cfg;
    cfg.range_lo = 3;
    cfg.range_hi = 50000;
    cfg.coefficient = 6;
    cfg.segment_length = 1 << 13;
    cfg.parallelism = 1;
    cfg.records_path = (dir / "rec_bad.jsonl").string();
    cfg.checkpoint_path = (dir / "ck_bad.jsonl").string();
    cfg.stop_after_segments = 3;
    run_sweep(cfg);

    {
        std::ofstream out(cfg.checkpoint_path, std::ios::binary | std::ios::app);
        out << "{\"segment_lo\":broken\n";
    }
    cfg.stop_after_segments = 0;
    cfg.resume = true;
    CHECK_THROWS_WITH_AS(run_sweep(cfg), doctest::Contains("byte offset"), ckpt::CheckpointError);

    // layout mismatch is also refused
    SweepConfig other = cfg;
    other.checkpoint_path = (dir / "ck_bad2.jsonl").string();
    other.records_path = (dir / "rec_bad2.jsonl").string();
    other.resume = false;
    other.stop_after_segments = 2;
    run_sweep(other);
    other.segment_length = 1 << 12;
    other.resume = true;
    other.stop_after_segments = 0;
    CHECK_THROWS_AS(run_sweep(other), ckpt::CheckpointError);
}
