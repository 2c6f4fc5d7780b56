#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rnfree/gf.hpp"
#include "rnfree/ints.hpp"

namespace rnfree::sweep {

struct SweepConfig {
    u64 range_lo = 3; // exclusive bound unless lo_inclusive is set
    u64 range_hi = 0;
    bool lo_inclusive = false;
    unsigned coefficient = 6; // D*n*N of the target family: 6 generic cubic, 4 for x^3 - ax
    u64 segment_length = u64(1) << 22;
    std::string records_path;    // JSON-lines, one row per failing q; empty: skip
    std::string checkpoint_path; // empty: no checkpointing
    bool resume = false;
    unsigned parallelism = 0;    // 0: all hardware threads
    u64 stop_after_segments = 0; // test hook: stop early with valid files
    bool verbose = false;

    void check() const;
};

struct SweepRecord {
    u64 q = 0, p = 0;
    unsigned k = 1;
    unsigned omega = 0; // distinct primes of q-1
    u64 w_qm1 = 1, w_half = 1;
    bool cor42 = false, sieve = false;
    std::vector<u64> sieving_primes; // successful multiset, descending; empty on failure
};

struct SweepSummary {
    u64 total_pp = 0; // odd prime powers processed
    u64 fail_cor42 = 0;
    u64 max_fail_cor42 = 0;
    u64 fail_sieve = 0;
    u64 max_fail_sieve = 0;
    // census of all prime powers in range, powers of two included (the
    // convention behind the reference totals; see README)
    u64 census_pp = 0;
    // primary condition with W((q-1)/2) replaced by its upper bound W(q-1),
    // i.e. sqrt(q) > coeff * W(q-1)^2; again the reference-run convention
    u64 fail_cor42_upper = 0;
    u64 max_fail_cor42_upper = 0;

    void merge(const SweepSummary& o);
    bool operator==(const SweepSummary&) const = default;
};

std::string summary_json(const SweepSummary& s);
SweepSummary summary_from_json(const std::string& text);

// exact one-line record encoding; a_exceptions, when given, appends the
// curve-scan extension column
std::string record_jsonl(const SweepRecord& rec, const std::vector<u64>* a_exceptions = nullptr);

// ascending odd prime powers q with lo < q <= hi (segmented sieve, proper
// powers merged in); the light form skips the q-1 factorization
void for_each_odd_prime_power(u64 lo, u64 hi,
                              const std::function<void(u64 q, u64 p, unsigned k)>& fn);
std::vector<gf::PrimePower> enumerate_odd_prime_powers(u64 lo, u64 hi);

// primary-condition + sieve evaluation of one q for the family selected by the
// coefficient; qm1_primes are the distinct primes of q-1, ascending.
SweepRecord evaluate_prime_power(u64 q, u64 p, unsigned k, const std::vector<u64>& qm1_primes,
                                 unsigned coefficient);

// Runs the sweep, persisting failing records and per-segment checkpoints as
// configured. on_failure (optional) receives failing records in ascending q
// order during ordered commits.
SweepSummary run_sweep(const SweepConfig& cfg,
                       const std::function<void(const SweepRecord&)>& on_failure = nullptr);

} // namespace rnfree::sweep
