#include "rnfree/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "rnfree/bounds.hpp"
#include "rnfree/checkpoint.hpp"
#include "rnfree/parallel.hpp"

namespace rnfree::sweep {

void SweepConfig::check() const {
    if (range_lo < 3 || range_lo > range_hi)
        throw std::invalid_argument("SweepConfig: need 3 <= range_lo <= range_hi");
    if (segment_length < 2) throw std::invalid_argument("SweepConfig: segment_length < 2");
    if (coefficient != 4 && coefficient != 6)
        throw std::invalid_argument("SweepConfig: coefficient must be 4 or 6");
    if (range_hi > (u64(1) << 34))
        throw std::invalid_argument("SweepConfig: ranges beyond 2^34 are unsupported");
    if (resume && checkpoint_path.empty())
        throw std::invalid_argument("SweepConfig: resume needs a checkpoint path");
}

void SweepSummary::merge(const SweepSummary& o) {
    total_pp += o.total_pp;
    fail_cor42 += o.fail_cor42;
    max_fail_cor42 = std::max(max_fail_cor42, o.max_fail_cor42);
    fail_sieve += o.fail_sieve;
    max_fail_sieve = std::max(max_fail_sieve, o.max_fail_sieve);
    census_pp += o.census_pp;
    fail_cor42_upper += o.fail_cor42_upper;
    max_fail_cor42_upper = std::max(max_fail_cor42_upper, o.max_fail_cor42_upper);
}

std::string summary_json(const SweepSummary& s) {
    return "{\"total_pp\":" + std::to_string(s.total_pp) +
           ",\"fail_cor42\":" + std::to_string(s.fail_cor42) +
           ",\"max_fail_cor42\":" + std::to_string(s.max_fail_cor42) +
           ",\"fail_sieve\":" + std::to_string(s.fail_sieve) +
           ",\"max_fail_sieve\":" + std::to_string(s.max_fail_sieve) +
           ",\"census_pp\":" + std::to_string(s.census_pp) +
           ",\"fail_cor42_upper\":" + std::to_string(s.fail_cor42_upper) +
           ",\"max_fail_cor42_upper\":" + std::to_string(s.max_fail_cor42_upper) + "}";
}

SweepSummary summary_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    SweepSummary s;
    s.total_pp = j.at("total_pp").get<u64>();
    s.fail_cor42 = j.at("fail_cor42").get<u64>();
    s.max_fail_cor42 = j.at("max_fail_cor42").get<u64>();
    s.fail_sieve = j.at("fail_sieve").get<u64>();
    s.max_fail_sieve = j.at("max_fail_sieve").get<u64>();
    s.census_pp = j.at("census_pp").get<u64>();
    s.fail_cor42_upper = j.at("fail_cor42_upper").get<u64>();
    s.max_fail_cor42_upper = j.at("max_fail_cor42_upper").get<u64>();
    return s;
}

std::string record_jsonl(const SweepRecord& rec, const std::vector<u64>* a_exceptions) {
    std::string s = "{\"q\":" + std::to_string(rec.q) + ",\"p\":" + std::to_string(rec.p) +
                    ",\"k\":" + std::to_string(rec.k) + ",\"omega\":" + std::to_string(rec.omega) +
                    ",\"w_qm1\":" + std::to_string(rec.w_qm1) +
                    ",\"w_half\":" + std::to_string(rec.w_half) +
                    ",\"cor42\":" + (rec.cor42 ? "true" : "false") +
                    ",\"sieve\":" + (rec.sieve ? "true" : "false") + ",\"sieving_primes\":[";
    for (std::size_t i = 0; i < rec.sieving_primes.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(rec.sieving_primes[i]);
    }
    s += ']';
    if (a_exceptions != nullptr) {
        s += ",\"a_exceptions\":[";
        for (std::size_t i = 0; i < a_exceptions->size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string((*a_exceptions)[i]);
        }
        s += ']';
    }
    s += '}';
    return s;
}

namespace {

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// proper powers p^e (e >= 2, p odd prime) in (lo, hi], ascending
std::vector<std::pair<u64, std::pair<u64, unsigned>>> odd_proper_powers(u64 lo, u64 hi,
                                                                        const std::vector<u32>& small) {
    std::vector<std::pair<u64, std::pair<u64, unsigned>>> out;
    for (u32 p : small) {
        if (p == 2) continue;
        u64 value = static_cast<u64>(p) * p;
        unsigned e = 2;
        while (value <= hi) {
            if (value > lo) out.push_back({value, {p, e}});
            if (value > hi / p) break;
            value *= p;
            ++e;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

void for_each_odd_prime_power(u64 lo, u64 hi,
                              const std::function<void(u64 q, u64 p, unsigned k)>& fn) {
    if (hi < 3 || hi <= lo) return;
    const u64 root = isqrt_u64(hi);
    const std::vector<u32> small = arith::primes_upto(root);
    const auto powers = odd_proper_powers(lo, hi, small);
    std::size_t next_power = 0;

    const u64 seg_len = u64(1) << 20;
    std::vector<u8> composite;
    for (u64 seg_lo = std::max<u64>(lo + 1, 3); seg_lo <= hi; seg_lo += seg_len) {
        const u64 seg_hi = std::min(hi, seg_lo + seg_len - 1);
        composite.assign(seg_hi - seg_lo + 1, 0);
        for (u32 p : small) {
            u64 start = ((seg_lo + p - 1) / p) * p;
            if (start < static_cast<u64>(p) * p) start = static_cast<u64>(p) * p;
            for (u64 m = start; m <= seg_hi; m += p) composite[m - seg_lo] = 1;
        }
        for (u64 q = seg_lo | 1; q <= seg_hi; q += 2) {
            while (next_power < powers.size() && powers[next_power].first < q) {
                const auto& [pq, pk] = powers[next_power];
                fn(pq, pk.first, pk.second);
                ++next_power;
            }
            if (!composite[q - seg_lo] && q > 2) fn(q, q, 1);
        }
    }
    while (next_power < powers.size()) {
        const auto& [pq, pk] = powers[next_power];
        fn(pq, pk.first, pk.second);
        ++next_power;
    }
}

std::vector<gf::PrimePower> enumerate_odd_prime_powers(u64 lo, u64 hi) {
    std::vector<gf::PrimePower> out;
    for_each_odd_prime_power(
        lo, hi, [&](u64, u64 p, unsigned k) { out.push_back(gf::PrimePower::make(p, k)); });
    return out;
}

SweepRecord evaluate_prime_power(u64 q, u64 p, unsigned k, const std::vector<u64>& qm1_primes,
                                 unsigned coefficient) {
    SweepRecord rec;
    rec.q = q;
    rec.p = p;
    rec.k = k;
    rec.omega = static_cast<unsigned>(qm1_primes.size());
    rec.w_qm1 = u64(1) << rec.omega;

    const u64 half = (q - 1) / 2;
    unsigned omega_half = 0;
    std::vector<u64> half_primes;
    for (u64 pr : qm1_primes) {
        if (half % pr == 0) {
            ++omega_half;
            half_primes.push_back(pr);
        }
    }
    rec.w_half = u64(1) << omega_half;
    // parity consistency: W((q-1)/2) halves exactly when (q-1)/2 is odd
    const u64 expected_half = (half % 2 == 0) ? rec.w_qm1 : rec.w_qm1 / 2;
    if (rec.w_half != expected_half)
        throw std::logic_error("evaluate_prime_power: W parity inconsistency at q=" +
                               std::to_string(q));

    const u128 c = static_cast<u128>(coefficient) * rec.w_qm1 * rec.w_half;
    rec.cor42 = static_cast<u128>(q) > c * c;
    if (rec.cor42) {
        rec.sieve = true;
        return rec;
    }
    if (q < 5) return rec; // q = 3: the estimates need q >= 5, unconditional failure

    const bounds::ConditionInput inp{
        .q = q, .D = coefficient / 2, .n = 1, .N = 2, .r = q - 1, .R = half};
    const auto dec = bounds::choose_sieving_primes(inp, qm1_primes, half_primes);
    rec.sieve = dec.has_value();
    if (dec) rec.sieving_primes = dec->flat_primes();
    return rec;
}

namespace {

struct SegmentResult {
    SweepSummary summary;
    std::string records;
    std::vector<SweepRecord> failures;
};

// Factor-sieve over [lo, hi]: omega[i] counts distinct small-prime factors
// and prodsmall[i] the full small-smooth part, so a residual large prime is
// detectable by prodsmall < value. Entry m is an odd prime power iff after
// the large-prime adjustment omega == 1.
struct SegmentSieve {
    u64 lo, hi;
    std::vector<u8> omega;
    std::vector<u64> prodsmall;

    SegmentSieve(u64 lo_, u64 hi_, const std::vector<u32>& small) : lo(lo_), hi(hi_) {
        const std::size_t n = hi - lo + 1;
        omega.assign(n, 0);
        prodsmall.assign(n, 1);
        for (u32 p : small) {
            if (p > hi) break;
            for (u64 m = ((lo + p - 1) / p) * p; m <= hi; m += p) {
                omega[m - lo] += 1;
                prodsmall[m - lo] *= p;
            }
            u64 pe = static_cast<u64>(p) * p;
            while (pe <= hi) {
                for (u64 m = ((lo + pe - 1) / pe) * pe; m <= hi; m += pe) prodsmall[m - lo] *= p;
                if (pe > hi / p) break;
                pe *= p;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (prodsmall[i] < lo + i) omega[i] += 1; // one residual prime > sqrt(hi)
        }
    }

    unsigned omega_at(u64 m) const { return omega[m - lo]; }
    bool is_prime_power(u64 m) const { return m > 1 && omega[m - lo] == 1; }
    bool small_smooth(u64 m) const { return prodsmall[m - lo] == m; }
};

SegmentResult process_segment(u64 seg_lo, u64 seg_hi, u64 proc_lo, u64 proc_hi,
                              const std::vector<u32>& small, unsigned coefficient) {
    SegmentResult out;
    const u64 arr_lo = std::max<u64>(2, seg_lo - 1); // q-1 of the first q lives one below
    const SegmentSieve sieve(arr_lo, seg_hi, small);

    // census: powers of two never enter the conditions but are part of the
    // range bookkeeping
    for (u64 pe = 2; pe <= std::min(seg_hi, proc_hi); pe *= 2) {
        if (pe >= std::max(seg_lo, proc_lo)) out.summary.census_pp += 1;
        if (pe > (std::min(seg_hi, proc_hi) >> 1)) break;
    }

    std::vector<u64> qm1_primes;
    for (u64 q = std::max(seg_lo, proc_lo) | 1; q <= std::min(seg_hi, proc_hi); q += 2) {
        if (!sieve.is_prime_power(q)) continue;
        out.summary.total_pp += 1;
        out.summary.census_pp += 1;

        const unsigned omega_qm1 = sieve.omega_at(q - 1);
        const u64 w = u64(1) << omega_qm1;
        const u128 c_upper = static_cast<u128>(coefficient) * w * w;
        if (static_cast<u128>(q) <= c_upper * c_upper) {
            out.summary.fail_cor42_upper += 1;
            out.summary.max_fail_cor42_upper = std::max(out.summary.max_fail_cor42_upper, q);
        }

        const u64 w_half = ((q - 1) % 4 == 0) ? w : w / 2;
        const u128 c = static_cast<u128>(coefficient) * w * w_half;
        if (static_cast<u128>(q) > c * c) continue; // primary condition holds

        // full treatment for the failure: factor q-1 and q by trial division
        qm1_primes.clear();
        u64 rest = q - 1;
        for (u32 p : small) {
            if (static_cast<u64>(p) * p > rest) break;
            if (rest % p == 0) {
                qm1_primes.push_back(p);
                while (rest % p == 0) rest /= p;
            }
        }
        if (rest > 1) qm1_primes.push_back(rest);

        u64 qp = q;
        unsigned qk = 1;
        if (sieve.small_smooth(q)) { // proper prime power (or small prime)
            for (u32 p : small) {
                if (q % p == 0) {
                    qp = p;
                    qk = 0;
                    u64 t = q;
                    while (t > 1) {
                        t /= p;
                        ++qk;
                    }
                    break;
                }
            }
        }

        SweepRecord rec = evaluate_prime_power(q, qp, qk, qm1_primes, coefficient);
        out.summary.fail_cor42 += 1;
        out.summary.max_fail_cor42 = std::max(out.summary.max_fail_cor42, q);
        if (!rec.sieve) {
            out.summary.fail_sieve += 1;
            out.summary.max_fail_sieve = std::max(out.summary.max_fail_sieve, q);
        }
        out.records += record_jsonl(rec);
        out.records += '\n';
        out.failures.push_back(std::move(rec));
    }
    return out;
}

} // namespace

SweepSummary run_sweep(const SweepConfig& cfg, const std::function<void(const SweepRecord&)>& on_failure) {
    cfg.check();
    const u64 proc_lo = cfg.lo_inclusive ? cfg.range_lo : cfg.range_lo + 1;
    const u64 proc_hi = cfg.range_hi;

    std::vector<std::pair<u64, u64>> segments;
    for (u64 lo = proc_lo; lo <= proc_hi; lo += cfg.segment_length)
        segments.push_back({lo, std::min(proc_hi, lo + cfg.segment_length - 1)});

    ckpt::RecordSink sink(cfg.records_path, cfg.checkpoint_path, cfg.resume, segments);
    SweepSummary total;
    if (sink.resumed_summary_json())
        total = summary_from_json(*sink.resumed_summary_json());

    u64 num_units = segments.size();
    if (cfg.stop_after_segments > 0)
        num_units = std::min<u64>(num_units, sink.first_pending_segment() + cfg.stop_after_segments);

    const std::vector<u32> small = arith::primes_upto(isqrt_u64(proc_hi));
    const auto t0 = std::chrono::steady_clock::now();

    parallel::run_units_ordered<SegmentResult>(
        num_units, sink.first_pending_segment(), cfg.parallelism,
        [&](u64 u) {
            return process_segment(segments[u].first, segments[u].second, proc_lo, proc_hi, small,
                                   cfg.coefficient);
        },
        [&](u64 u, SegmentResult&& res) {
            total.merge(res.summary);
            sink.commit(segments[u].first, segments[u].second, res.records, summary_json(total));
            if (on_failure) {
                for (const SweepRecord& rec : res.failures) on_failure(rec);
            }
            if (cfg.verbose) {
                const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                std::fprintf(stderr,
                             "[sweep] segment %llu/%llu done (q <= %llu), pp=%llu cor42_fail=%llu "
                             "sieve_fail=%llu, %.1fs\n",
                             static_cast<unsigned long long>(u + 1),
                             static_cast<unsigned long long>(segments.size()),
                             static_cast<unsigned long long>(segments[u].second),
                             static_cast<unsigned long long>(total.total_pp),
                             static_cast<unsigned long long>(total.fail_cor42),
                             static_cast<unsigned long long>(total.fail_sieve), dt / 1000.0);
            }
        });
    return total;
}

} // namespace rnfree::sweep
