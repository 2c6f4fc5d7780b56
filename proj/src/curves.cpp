#include "rnfree/curves.hpp"

#include <cstdio>
#include <stdexcept>

#include "rnfree/checkpoint.hpp"
#include "rnfree/parallel.hpp"

namespace rnfree::curves {

CurveSpec CurveSpec::cubic_minus_ax(const Field& f, Elem a) {
    if (a == 0) throw std::invalid_argument("CurveSpec: a must be nonzero");
    return CurveSpec{&f, {0, f.neg(a), 0, 1}};
}

CurveSpec CurveSpec::from_poly(const Field& f, gf::ElemPoly poly) {
    poly = gf::poly_trimmed(std::move(poly));
    if (gf::poly_degree(poly) != 3)
        throw std::invalid_argument("CurveSpec: f must be a cubic");
    if (!gf::poly_is_squarefree(f, poly))
        throw std::invalid_argument("CurveSpec: f must be square-free");
    return CurveSpec{&f, std::move(poly)};
}

std::optional<PrimitivePoint> find_primitive_point(const CurveSpec& spec) {
    const Field& f = *spec.field;
    const u64 qm1 = f.qm1();
    const u64 half = qm1 / 2;
    for (Elem x = 1; x < f.q(); ++x) {
        const u64 ex = f.dlog(x);
        if (!f.exponent_is_primitive(ex)) continue;
        const Elem beta = f.eval_poly(spec.f_coeffs, x);
        if (beta == 0) continue;
        const u64 eb = f.dlog(beta);
        if (gcd_u64(qm1, eb) != 2) continue; // f(x) must be 2-primitive
        // beta = g^eb with eb even; the square roots have exponents eb/2 and
        // eb/2 + (q-1)/2, and since gcd(eb, q-1) = 2 at least one is coprime
        // to q-1 (both when 4 | q-1, exactly one otherwise)
        u64 ey = eb / 2;
        if (!f.exponent_is_primitive(ey)) ey += half;
        if (!f.exponent_is_primitive(ey)) continue;
        return PrimitivePoint{x, f.pow(f.generator(), ey)};
    }
    return std::nullopt;
}

std::vector<Elem> exceptional_a_values(const Field& field) {
    std::vector<Elem> out;
    for (Elem a = 1; a < field.q(); ++a) {
        if (!find_primitive_point(CurveSpec::cubic_minus_ax(field, a))) out.push_back(a);
    }
    return out;
}

u64 count_exceptional_curves(const Field& field) { return exceptional_a_values(field).size(); }

u64 count_exceptional_curves(u64 q) {
    const auto f = arith::factorize(q);
    if (f.omega() != 1 || q % 2 == 0)
        throw std::invalid_argument("count_exceptional_curves: q must be an odd prime power");
    const Field field = Field::build(f.factors[0].prime, f.factors[0].exponent);
    return count_exceptional_curves(field);
}

Theorem1Result theorem1_exceptions(const std::vector<u64>& q_values, unsigned parallelism,
                                   bool verbose) {
    struct Unit {
        bool plus_found = false;
        bool minus_found = false;
    };
    Theorem1Result result;
    parallel::run_units_ordered<Unit>(
        q_values.size(), 0, parallelism,
        [&](u64 i) {
            const u64 q = q_values[i];
            const auto fq = arith::factorize(q);
            const Field field = Field::build(fq.factors[0].prime, fq.factors[0].exponent);
            Unit u;
            u.plus_found =
                find_primitive_point(CurveSpec::cubic_minus_ax(field, 1)).has_value();
            u.minus_found =
                find_primitive_point(CurveSpec::cubic_minus_ax(field, field.from_int(-1)))
                    .has_value();
            return u;
        },
        [&](u64 i, Unit&& u) {
            if (!u.plus_found) result.exceptional_plus.push_back(q_values[i]);
            if (!u.minus_found) result.exceptional_minus.push_back(q_values[i]);
            if (verbose && (i + 1) % 500 == 0)
                std::fprintf(stderr, "[curves] %llu/%zu fields searched\n",
                             static_cast<unsigned long long>(i + 1), q_values.size());
        });
    return result;
}

std::vector<u64> reproduce_theorem1(int a_sign, u64 q_max, unsigned parallelism, bool verbose) {
    if (a_sign != 1 && a_sign != -1)
        throw std::invalid_argument("reproduce_theorem1: a must be +1 or -1");
    sweep::SweepConfig cfg;
    cfg.range_lo = 3;
    cfg.lo_inclusive = true;
    cfg.range_hi = q_max;
    cfg.coefficient = 4;
    cfg.parallelism = parallelism;
    cfg.verbose = verbose;
    std::vector<u64> survivors;
    sweep::run_sweep(cfg, [&](const sweep::SweepRecord& rec) {
        if (!rec.sieve) survivors.push_back(rec.q);
    });
    if (verbose)
        std::fprintf(stderr, "[curves] %zu sweep survivors to search\n", survivors.size());
    Theorem1Result res = theorem1_exceptions(survivors, parallelism, verbose);
    return a_sign == 1 ? std::move(res.exceptional_plus) : std::move(res.exceptional_minus);
}

namespace {

struct ScanUnit {
    std::string records;
    u64 exceptional = 0;
};

std::string scan_summary_json(u64 q_done, u64 exceptional) {
    return "{\"q_done\":" + std::to_string(q_done) +
           ",\"exceptional_curves\":" + std::to_string(exceptional) + "}";
}

} // namespace

void conjecture_scan(const ScanConfig& cfg) {
    std::vector<std::pair<u64, u64>> units;
    for (u64 q : cfg.q_list) units.push_back({q, q}); // one segment per q
    ckpt::RecordSink sink(cfg.out_path, cfg.checkpoint_path, cfg.resume, units);

    u64 q_done = 0, exceptional = 0;
    if (sink.resumed_summary_json()) {
        // reparse the cumulative counters
        const std::string& s = *sink.resumed_summary_json();
        const auto grab = [&](const std::string& key) {
            const auto pos = s.find("\"" + key + "\":");
            return std::strtoull(s.c_str() + pos + key.size() + 3, nullptr, 10);
        };
        q_done = grab("q_done");
        exceptional = grab("exceptional_curves");
    }

    u64 num_units = units.size();
    if (cfg.stop_after_units > 0)
        num_units = std::min<u64>(num_units, sink.first_pending_segment() + cfg.stop_after_units);

    parallel::run_units_ordered<ScanUnit>(
        num_units, sink.first_pending_segment(), cfg.parallelism,
        [&](u64 i) {
            const u64 q = cfg.q_list[i];
            const auto fq = arith::factorize(q);
            if (fq.omega() != 1 || q % 2 == 0)
                throw std::invalid_argument("conjecture_scan: q_list must hold odd prime powers");
            const Field field = Field::build(fq.factors[0].prime, fq.factors[0].exponent);
            const auto a_exc = exceptional_a_values(field);
            const auto primes = arith::factorize(q - 1).prime_list();
            sweep::SweepRecord rec = sweep::evaluate_prime_power(
                q, fq.factors[0].prime, fq.factors[0].exponent, primes, cfg.coefficient);
            ScanUnit unit;
            unit.exceptional = a_exc.size();
            unit.records = sweep::record_jsonl(rec, &a_exc);
            unit.records += '\n';
            return unit;
        },
        [&](u64 i, ScanUnit&& unit) {
            q_done += 1;
            exceptional += unit.exceptional;
            sink.commit(units[i].first, units[i].second, unit.records,
                        scan_summary_json(q_done, exceptional));
            if (cfg.verbose && (q_done % 50 == 0))
                std::fprintf(stderr, "[scan] %llu q done\n",
                             static_cast<unsigned long long>(q_done));
        });
}

std::map<u64, std::vector<Elem>> conjecture_scan_collect(const std::vector<u64>& q_list,
                                                         unsigned parallelism) {
    std::map<u64, std::vector<Elem>> out;
    parallel::run_units_ordered<std::vector<Elem>>(
        q_list.size(), 0, parallelism,
        [&](u64 i) {
            const u64 q = q_list[i];
            const auto fq = arith::factorize(q);
            const Field field = Field::build(fq.factors[0].prime, fq.factors[0].exponent);
            return exceptional_a_values(field);
        },
        [&](u64 i, std::vector<Elem>&& exc) { out[q_list[i]] = std::move(exc); });
    return out;
}

std::string point_jsonl(u64 q, Elem a, const std::optional<PrimitivePoint>& pt) {
    std::string s = "{\"q\":" + std::to_string(q) + ",\"a\":" + std::to_string(a);
    if (pt) {
        s += ",\"found\":true,\"x\":" + std::to_string(pt->x) + ",\"y\":" + std::to_string(pt->y);
    } else {
        s += ",\"found\":false";
    }
    s += '}';
    return s;
}

} // namespace rnfree::curves
