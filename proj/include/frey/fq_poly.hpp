#pragma once

#include <vector>

#include "frey/integers.hpp"

namespace frey::fq {

// Polynomials over the prime field F_q, coefficients ascending and
// canonical in [0, q). The zero polynomial is the empty vector.
using Poly = std::vector<Int>;

void trim(Poly& a);
long deg(const Poly& a);
bool is_zero(const Poly& a);
Poly reduce(const std::vector<Int>& coeffs, const Int& q);
Poly constant(const Int& v, const Int& q);

Poly add(const Poly& a, const Poly& b, const Int& q);
Poly sub(const Poly& a, const Poly& b, const Int& q);
Poly mul(const Poly& a, const Poly& b, const Int& q);
Poly scalar_mul(const Int& s, const Poly& a, const Int& q);

// Makes a monic by dividing through the leading coefficient.
Poly make_monic(const Poly& a, const Int& q);

// Division with remainder; b nonzero.
void divmod(const Poly& a, const Poly& b, const Int& q, Poly& quo, Poly& rem);
Poly mod(const Poly& a, const Poly& b, const Int& q);

// Monic gcd.
Poly gcd(Poly a, Poly b, const Int& q);

// base^e mod f.
Poly powmod(const Poly& base, const Int& e, const Poly& f, const Int& q);

Int eval(const Poly& a, const Int& x, const Int& q);

// Full factorization of a nonzero polynomial into monic irreducibles with
// multiplicities (squarefree split, then distinct-degree, then
// Cantor-Zassenhaus equal-degree). Output sorted canonically.
std::vector<std::pair<Poly, int>> factor(const Poly& a, const Int& q);

std::string to_string(const Poly& a, const std::string& var = "x");

}  // namespace frey::fq
