#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rnfree/gf.hpp"
#include "rnfree/polyops.hpp"
#include "rnfree/sweep.hpp"

namespace rnfree::curves {

using gf::Elem;
using gf::Field;

// y^2 = f(x) with f a square-free cubic
struct CurveSpec {
    const Field* field = nullptr;
    gf::ElemPoly f_coeffs;

    // x^3 - a x, a != 0
    static CurveSpec cubic_minus_ax(const Field& f, Elem a);
    static CurveSpec from_poly(const Field& f, gf::ElemPoly poly);
};

// both coordinates of multiplicative order q-1
struct PrimitivePoint {
    Elem x = 0;
    Elem y = 0;
};

// Smallest primitive x (by canonical index) such that f(x) is 2-primitive;
// y is recovered from the discrete log of f(x), picking the primitive root
// of the two candidates.
std::optional<PrimitivePoint> find_primitive_point(const CurveSpec& spec);

// all a in F_q^* (canonical indices) whose curve y^2 = x^3 - ax has no
// primitive point
std::vector<Elem> exceptional_a_values(const Field& field);
u64 count_exceptional_curves(const Field& field);
u64 count_exceptional_curves(u64 q);

struct Theorem1Result {
    std::vector<u64> exceptional_plus;  // y^2 = x^3 - x
    std::vector<u64> exceptional_minus; // y^2 = x^3 + x
};
// exhaustive curve search over the given q values (both signs share fields)
Theorem1Result theorem1_exceptions(const std::vector<u64>& q_values, unsigned parallelism = 0,
                                   bool verbose = false);
// full pipeline: coefficient-4 sweep over [3, q_max], then search the survivors
std::vector<u64> reproduce_theorem1(int a_sign, u64 q_max, unsigned parallelism = 0,
                                    bool verbose = false);

struct ScanConfig {
    std::vector<u64> q_list; // odd prime powers, ascending
    unsigned coefficient = 4;
    std::string out_path;
    std::string checkpoint_path;
    bool resume = false;
    unsigned parallelism = 0;
    u64 stop_after_units = 0; // test hook
    bool verbose = false;
};
// per-q exceptional-a scan with checkpointed JSON-lines persistence; records
// extend the sweep row format with an a_exceptions array
void conjecture_scan(const ScanConfig& cfg);
std::map<u64, std::vector<Elem>> conjecture_scan_collect(const std::vector<u64>& q_list,
                                                         unsigned parallelism = 0);

// {q, a, found, x, y} line for the point-results file
std::string point_jsonl(u64 q, Elem a, const std::optional<PrimitivePoint>& pt);

} // namespace rnfree::curves
