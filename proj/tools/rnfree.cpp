#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rnfree/bounds.hpp"
#include "rnfree/curves.hpp"
#include "rnfree/identity_checks.hpp"
#include "rnfree/sweep.hpp"

using namespace rnfree;

namespace {

// conjectured exceptional moduli for the x^3 - ax family; the table command
// recomputes the per-q curve counts from scratch
const std::vector<u64> kConjecturedExceptionalQ{3,  5,  7,  9,  13, 17, 25, 29,
                                                31, 41, 49, 61, 73, 81, 121, 337};

std::string default_checkpoint(const std::string& name) {
    const char* dir = std::getenv("RNFREE_CHECKPOINT_DIR");
    if (dir == nullptr || *dir == '\0') return "";
    return std::string(dir) + "/" + name + ".checkpoint.jsonl";
}

void print_summary(const sweep::SweepSummary& s) {
    std::printf("prime powers (census, incl. powers of two): %llu\n",
                static_cast<unsigned long long>(s.census_pp));
    std::printf("odd prime powers processed:                 %llu\n",
                static_cast<unsigned long long>(s.total_pp));
    std::printf("existence condition failures:               %llu (largest %llu)\n",
                static_cast<unsigned long long>(s.fail_cor42),
                static_cast<unsigned long long>(s.max_fail_cor42));
    std::printf("  with W((q-1)/2) upper-bounded by W(q-1):  %llu (largest %llu)\n",
                static_cast<unsigned long long>(s.fail_cor42_upper),
                static_cast<unsigned long long>(s.max_fail_cor42_upper));
    std::printf("sieve failures (survivors):                 %llu (largest %llu)\n",
                static_cast<unsigned long long>(s.fail_sieve),
                static_cast<unsigned long long>(s.max_fail_sieve));
    std::printf("%s\n", sweep::summary_json(s).c_str());
}

int cmd_verify(u64 rmax, u64 nmax, u64 qmax, bool inject_fault) {
    if (inject_fault) {
        // negative control: mu(4) forced to 1 must break the identity suite
        arith::testhooks::mobius_override_m = 4;
        arith::testhooks::mobius_override_value = 1;
    }
    checks::IdentityOptions opts;
    opts.t_rmax = rmax;
    opts.t_nmax = nmax;
    opts.qmax = qmax;
    const auto results = checks::run_identity_suites(opts);
    for (const auto& r : results) {
        std::printf("[%s] %s (%llu cases)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    static_cast<unsigned long long>(r.cases), r.detail.empty() ? "" : ": ",
                    r.detail.c_str());
    }
    arith::testhooks::mobius_override_m = 0;
    arith::testhooks::mobius_override_value = 0;
    return checks::all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(r,n)-freeness toolkit: character-sum identities, existence conditions, "
                 "prime-power sweeps and primitive-point searches"};
    app.require_subcommand(1);

    // verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the identity suites");
    u64 v_rmax = 2000, v_nmax = 50, v_qmax = 121;
    bool v_fault = false;
    verify->add_option("--rmax", v_rmax, "T(r,n) identity: max r");
    verify->add_option("--nmax", v_nmax, "T(r,n) identity: max n");
    verify->add_option("--qmax", v_qmax, "exhaustive field suites: max q");
    verify->add_flag("--inject-fault", v_fault, "negative control: corrupt one mu value");

    // sweep --------------------------------------------------------------
    auto* sw = app.add_subcommand("sweep", "existence-condition sweep over odd prime powers");
    sweep::SweepConfig cfg;
    cfg.checkpoint_path = default_checkpoint("sweep");
    u64 s_lo = 3, s_hi = 100663296, s_seg = u64(1) << 22;
    unsigned s_coeff = 6, s_jobs = 0;
    bool s_inclusive = false, s_resume = false, s_verbose = false;
    std::string s_out, s_ck = cfg.checkpoint_path;
    sw->add_option("--coeff", s_coeff, "family coefficient D*n*N (4 or 6)")->check(CLI::IsMember({4, 6}));
    sw->add_option("--lo", s_lo, "lower range bound (exclusive unless --include-lo)");
    sw->add_option("--hi", s_hi, "upper range bound (inclusive)");
    sw->add_flag("--include-lo", s_inclusive, "treat --lo as inclusive");
    sw->add_option("--out", s_out, "records file (JSON lines, one row per failing q)");
    sw->add_option("--checkpoint", s_ck, "checkpoint file");
    sw->add_flag("--resume", s_resume, "resume from the checkpoint");
    sw->add_option("--jobs", s_jobs, "worker threads (0 = all cores)");
    sw->add_option("--segment", s_seg, "segment length");
    sw->add_flag("--verbose", s_verbose, "progress output on stderr");

    // curve ----------------------------------------------------------------
    auto* cv = app.add_subcommand("curve", "primitive points on y^2 = x^3 - ax");
    int c_theorem1 = 0;
    bool c_table1 = false, c_scan = false, c_resume = false, c_verbose = false;
    u64 c_hi = 16763671, c_q = 0;
    long long c_a = 1;
    u64 c_count = 0;
    unsigned c_jobs = 0;
    std::string c_out, c_ck = default_checkpoint("curve-scan");
    cv->add_option("--theorem1", c_theorem1, "exceptional q for a = +1 or -1")
        ->check(CLI::IsMember({+1, -1}));
    cv->add_flag("--table1", c_table1, "exceptional-curve counts over the conjectured moduli");
    cv->add_flag("--scan", c_scan, "scan sweep survivors for exceptional a values");
    cv->add_option("--hi", c_hi, "sweep bound for --theorem1/--scan");
    cv->add_option("--count", c_count, "limit --scan to the first N survivors");
    cv->add_option("--q", c_q, "single search: field size");
    cv->add_option("--a", c_a, "single search: curve parameter (integer, reduced mod p)");
    cv->add_option("--out", c_out, "results file (JSON lines)");
    cv->add_option("--checkpoint", c_ck, "checkpoint file for --scan");
    cv->add_flag("--resume", c_resume, "resume --scan from the checkpoint");
    cv->add_option("--jobs", c_jobs, "worker threads (0 = all cores)");
    cv->add_flag("--verbose", c_verbose, "progress output on stderr");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(v_rmax, v_nmax, v_qmax, v_fault);

        if (sw->parsed()) {
            cfg.range_lo = s_lo;
            cfg.range_hi = s_hi;
            cfg.lo_inclusive = s_inclusive;
            cfg.coefficient = s_coeff;
            cfg.segment_length = s_seg;
            cfg.records_path = s_out;
            cfg.checkpoint_path = s_ck;
            cfg.resume = s_resume;
            cfg.parallelism = s_jobs;
            cfg.verbose = s_verbose;
            print_summary(sweep::run_sweep(cfg));
            return 0;
        }

        // curve subcommand
        if (c_theorem1 != 0) {
            const auto exceptional =
                curves::reproduce_theorem1(c_theorem1, c_hi, c_jobs, c_verbose);
            std::printf("exceptional q for a = %+d:", c_theorem1);
            for (u64 q : exceptional) std::printf(" %llu", static_cast<unsigned long long>(q));
            std::printf("\n{\"a\":%d,\"exceptional_q\":[", c_theorem1);
            for (std::size_t i = 0; i < exceptional.size(); ++i)
                std::printf("%s%llu", i ? "," : "", static_cast<unsigned long long>(exceptional[i]));
            std::printf("]}\n");
            return 0;
        }
        if (c_table1) {
            std::printf("q      ");
            for (u64 q : kConjecturedExceptionalQ)
                std::printf("%6llu", static_cast<unsigned long long>(q));
            std::printf("\ncurves ");
            std::string json = "{\"table\":[";
            for (std::size_t i = 0; i < kConjecturedExceptionalQ.size(); ++i) {
                const u64 q = kConjecturedExceptionalQ[i];
                const u64 c = curves::count_exceptional_curves(q);
                std::printf("%6llu", static_cast<unsigned long long>(c));
                json += (i ? "," : "") + std::string("{\"q\":") + std::to_string(q) +
                        ",\"curves\":" + std::to_string(c) + "}";
            }
            std::printf("\n%s]}\n", json.c_str());
            return 0;
        }
        if (c_scan) {
            sweep::SweepConfig scfg;
            scfg.range_lo = 3;
            scfg.lo_inclusive = true;
            scfg.range_hi = c_hi;
            scfg.coefficient = 4;
            scfg.parallelism = c_jobs;
            std::vector<u64> survivors;
            sweep::run_sweep(scfg, [&](const sweep::SweepRecord& rec) {
                if (!rec.sieve) survivors.push_back(rec.q);
            });
            if (c_count > 0 && survivors.size() > c_count) survivors.resize(c_count);
            std::fprintf(stderr, "[scan] %zu survivors to scan\n", survivors.size());
            curves::ScanConfig sc;
            sc.q_list = std::move(survivors);
            sc.out_path = c_out;
            sc.checkpoint_path = c_ck;
            sc.resume = c_resume;
            sc.parallelism = c_jobs;
            sc.verbose = c_verbose;
            curves::conjecture_scan(sc);
            return 0;
        }
        if (c_q != 0) {
            const auto fq = arith::factorize(c_q);
            if (fq.omega() != 1 || c_q % 2 == 0) {
                std::fprintf(stderr, "--q must be an odd prime power\n");
                return 2;
            }
            const gf::Field field =
                gf::Field::build(fq.factors[0].prime, fq.factors[0].exponent);
            const gf::Elem a = field.from_int(c_a);
            if (a == 0) {
                std::fprintf(stderr, "--a reduces to zero in F_q\n");
                return 2;
            }
            const auto pt = curves::find_primitive_point(curves::CurveSpec::cubic_minus_ax(field, a));
            if (pt) {
                std::printf("point (%llu, %llu) on y^2 = x^3 - %lld x over F_%llu\n",
                            static_cast<unsigned long long>(pt->x),
                            static_cast<unsigned long long>(pt->y), c_a,
                            static_cast<unsigned long long>(c_q));
            } else {
                std::printf("no primitive point on y^2 = x^3 - %lld x over F_%llu\n", c_a,
                            static_cast<unsigned long long>(c_q));
            }
            const std::string line = curves::point_jsonl(c_q, a, pt);
            std::printf("%s\n", line.c_str());
            if (!c_out.empty()) {
                std::ofstream out(c_out, std::ios::binary | std::ios::app);
                out << line << '\n';
            }
            return pt ? 0 : 3;
        }
        std::fprintf(stderr, "curve: nothing to do (see --help)\n");
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
