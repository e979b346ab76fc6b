#pragma once

#include "frey/cyclotomic.hpp"

namespace frey {

struct SearchWindow {
    long r = 5;
    Int d = 1;
    Int p = 7;
    long height = 10;
};

struct SolutionRecord {
    Int a, b, c;
    bool primitive = false;  // gcd(a, b, c) = 1
    bool trivial = false;    // abc = 0

    bool operator==(const SolutionRecord& o) const {
        return a == o.a && b == o.b && c == o.c && primitive == o.primitive && trivial == o.trivial;
    }
};

// Exhaustive scan of |a|, |b| <= height for a^r + b^r = d*c^p, with a
// residue pre-sieve at primes 1 mod p and an exact p-th-power test on the
// survivors. Pairs are canonicalized to a >= b; the empty result is valid.
std::vector<SolutionRecord> find_solutions(const SearchWindow& w);

struct PrimeClass {
    Int q;
    long residue_mod_r = 0;
};

struct IdentityReport {
    Int a, b;
    long r = 0;
    Int phi_value;
    Int gcd_value;
    bool gcd_ok = false;              // gcd(a+b, phi) is 1 or r
    bool r_valuation_ok = false;      // v_r(phi) = 1 exactly when r | a+b
    bool factor_product_ok = false;   // product of the quadratic factors equals phi
    bool divisor_classes_ok = false;  // every prime divisor is r or 1 mod r
    std::vector<PrimeClass> prime_divisor_classes;
};

// Checks the factorization identities behind the conductor analysis on a
// concrete coprime pair.
IdentityReport verify_cyclotomic_identities(const Int& a, const Int& b, long r);

}  // namespace frey
