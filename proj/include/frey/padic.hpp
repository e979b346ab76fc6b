#pragma once

#include "frey/curve_record.hpp"
#include "frey/frey_curve.hpp"

namespace frey {

// Point count of a long Weierstrass model over F_q (odd q) by the
// quadratic-character sweep over x, plus the point at infinity.
long count_points(const Int& q, const std::array<Int, 5>& a);

struct FrobeniusTrace {
    PrimeIdeal P;
    Int a_P;
};

// a_P = N(P) + 1 - #E(F_q) at a degree-1 prime of good reduction, by
// reduction of the a-invariants and counting. The Weil bound is asserted
// on every computed trace.
FrobeniusTrace trace_of_frobenius(const CurveOverKRecord& E, const PrimeIdeal& P);

// Full 2-torsion forces 4 | #E(F_q) at odd good primes, hence even traces.
bool parity_check(const CurveOverKRecord& E, const PrimeIdeal& P);

// All integers a = +-1 + kp with a^2 <= 4p; equal to {+1, -1} for every
// prime p >= 7.
std::vector<Int> weil_forcing(const Int& p);

enum class PadicVerdict { eliminated, not_forced, bad_reduction_skip };
std::string to_string(PadicVerdict v);

struct PadicCurveResult {
    std::string label;
    PadicVerdict verdict = PadicVerdict::bad_reduction_skip;
    std::string diagnostic;
    std::vector<std::pair<std::string, Int>> traces;  // prime description -> a_P

    bool operator==(const PadicCurveResult& o) const {
        return label == o.label && verdict == o.verdict && diagnostic == o.diagnostic && traces == o.traces;
    }
};

struct PadicEliminationResult {
    Int p = 0;
    bool split_ok = false;
    bool threshold_ok = false;  // p >= 7, so the forced trace set is {+1, -1}
    bool p_min_ok = false;      // p >= configured p_min; recorded, not enforced
    long p_min = 17;
    std::vector<PadicCurveResult> per_curve;

    bool operator==(const PadicEliminationResult& o) const {
        return p == o.p && split_ok == o.split_ok && threshold_ok == o.threshold_ok && p_min_ok == o.p_min_ok &&
               p_min == o.p_min && per_curve == o.per_curve;
    }
};

// For p = +-1 mod r (rejected otherwise, as is p | 2rd): p splits
// completely, every forced trace value is odd for p >= 7, while a curve
// with full 2-torsion and good reduction above p has even traces. A curve
// is eliminated when that contradiction materializes at every prime above
// p; bad reduction above p skips the curve with a diagnostic.
PadicEliminationResult eliminate_p_case(const SolutionContext& ctx, const std::vector<CurveOverKRecord>& curves,
                                        const Int& p);

}  // namespace frey
