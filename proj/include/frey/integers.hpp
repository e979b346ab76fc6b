#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "frey/errors.hpp"

namespace frey {

using Int = mpz_class;

// Canonical representative of a mod n in [0, n).
Int mod_canonical(const Int& a, const Int& n);

bool is_prime(const Int& n);

// All primes < bound, ascending.
std::vector<long> primes_below(long bound);

// Factorization of |n| as prime -> exponent. Trial division up to 10^4,
// then Pollard-Brent rho. n must be nonzero.
std::map<Int, int> factorize(const Int& n);

// Exact q-adic valuation of n (n nonzero, q >= 2).
long int_valuation(Int n, const Int& q);

// Jacobi symbol (a/n) for odd positive n, by binary reciprocity.
int jacobi(Int a, Int n);
int jacobi(long a, long n);

Int power(const Int& base, unsigned long e);

// Exact p-th root when n is a perfect p-th power (sign-aware for odd p).
std::optional<Int> perfect_pth_power(const Int& n, unsigned long p);

// (a^r + b^r) / (a + b) for odd r; requires a + b != 0.
Int homogeneous_cyclotomic(long r, const Int& a, const Int& b);

}  // namespace frey
