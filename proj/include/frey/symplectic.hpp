#pragma once

#include <gmpxx.h>

#include "frey/curve_record.hpp"
#include "frey/frey_curve.hpp"

namespace frey {

using Rational = mpq_class;

// True iff v1*v2*w1*w2 is a nonzero square mod p. A false result rules out
// a p-torsion isomorphism between two curves that are multiplicative at the
// two primes with these discriminant valuations. Requires p coprime to all
// four inputs.
bool lemma16_test(const Int& v1, const Int& v2, const Int& w1, const Int& w2, const Int& p);

enum class NiCase { case_1a, case_1b, case_2 };
std::string to_string(NiCase c);

// Inputs to the n_i formulas. d_exponent is the valuation of the relevant
// part of d at the chosen odd prime; the curve values are the minimal
// discriminant valuations of the external curve at the scenario's prime
// pair. two_adic_d and r_adic_d are the valuations of d at 2 and r; both
// are zero for admissible coefficients, and nonzero values shift the
// congruence classes that make the formulas negative (the guard below
// then fires).
struct NiInputs {
    long d_exponent = 1;
    long curve_val_aux = 1;   // at the prime above 2 (cases 1a/1b) or the odd prime (case 2)
    long curve_val_main = 1;  // at the odd prime (cases 1a/1b) or at p_r (case 2)
    long r = 0;               // case 2 only
    long two_adic_d = 0;
    long r_adic_d = 0;
};

struct NiValue {
    NiCase tag = NiCase::case_1a;
    std::string primes_desc;
    Int value = 0;
};

// case 1a: -2 * v_q(d0) * v_{q2}(dE) * v_q(dE)
// case 1b: -v_q(d1') * v_{q2}(dE) * v_q(dE)
// case 2:  -2 * v_q(d) * r * v_q(dE) * v_{p_r}(dE)
// All inputs must be strictly positive; a non-negative result (possible
// only when the d-valuations at 2 or r are nonzero) raises
// invariant_violation, since the sign is what drives the elimination.
NiValue compute_ni(NiCase tag, const NiInputs& in);

struct DensityReport {
    Int modulus = 8;
    std::vector<Int> residues;
    Rational density = 0;
    long k = 0;
    Int verified_bound = 0;
    std::vector<Int> n_values;
    Rational paper_lower_bound = 0;  // (1/2)^k, recorded but not asserted

    bool operator==(const DensityReport& o) const;
};

// Builds the congruence classes p = 7 mod 8 with (q/p) = 1 for every odd
// prime q dividing the n_i or listed in aux, combined by CRT, and verifies
// exhaustively below verified_bound that every n_i is a non-square at each
// prime in the classes.
DensityReport density_set(const std::vector<Int>& n_values, const std::vector<Int>& aux = {},
                          const Int& verified_bound = Int(100000));

// The unconditioned class p = 7 mod 8, used when no curve contributes.
DensityReport base_density_report(const Int& verified_bound = Int(100000));

struct EliminateOptions {
    bool case2_printed_variant = false;  // use v_{q2}(dE) instead of v_q(dE) in case 2
    Int verified_bound = Int(100000);
};

struct CurveElimination {
    std::string label;
    bool included = false;
    std::string diagnostic;  // reason when skipped
    NiCase case_tag = NiCase::case_1a;
    Int q = 0;               // rational prime under the chosen odd prime
    std::string aux_prime;   // prime used for curve_val_aux
    std::string main_prime;  // prime used for curve_val_main
    long curve_val_aux = 0;
    long curve_val_main = 0;
    bool trusted_valuations = false;
    Int ni = 0;
    std::optional<Int> ni_variant;  // case 2 value under the other convention, when it differs

    bool operator==(const CurveElimination& o) const;
};

struct SymplecticReport {
    long r = 0;
    Int d = 1, d0 = 1, d1 = 1;
    Scenario scenario = Scenario::even_sum;
    long p_min = 17;
    bool case2_printed_variant = false;
    std::vector<CurveElimination> curves;
    DensityReport density;
    bool vacuous = false;
    // primes in the classes below verified_bound and >= p_min for which the
    // lemma test was re-run against every included curve
    long lemma_checked_primes = 0;

    bool operator==(const SymplecticReport& o) const;
};

// The full engine: chooses the case per curve from the divisor structure
// of d and the scenario, computes the n_i, assembles the density report,
// and re-verifies through lemma16_test at every class prime below the
// bound. Curves whose required valuations cannot be resolved are skipped
// with a diagnostic and claim nothing.
SymplecticReport eliminate_symplectic(const SolutionContext& ctx, Scenario scenario,
                                      std::vector<CurveOverKRecord> curves,
                                      const EliminateOptions& options = {});

}  // namespace frey
