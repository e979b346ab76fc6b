#pragma once

#include <string>
#include <vector>

#include "frey/cyclotomic.hpp"
#include "frey/fq_poly.hpp"

namespace frey {

// A prime of K presented by two generators (q, g(z)) with g monic and
// irreducible mod q. Valid at every rational prime because O_K = Z[z].
struct PrimeIdeal {
    FieldPtr field;
    Int q;
    fq::Poly g;  // monic, canonical coefficients in [0, q)
    int e = 1;   // ramification index
    int f = 1;   // residue degree

    Int norm() const { return power(q, static_cast<unsigned long>(f)); }
    bool lies_above(const Int& rational_prime) const { return q == rational_prime; }
    std::string to_string() const;

    bool operator==(const PrimeIdeal& o) const { return q == o.q && g == o.g; }
    bool operator<(const PrimeIdeal& o) const {
        if (q != o.q) return q < o.q;
        return g < o.g;
    }
};

// Dedekind factorization of a rational prime: psi mod q splits into monic
// irreducibles g_i^{e_i} and q*O_K = prod (q, g_i(z))^{e_i}.
std::vector<PrimeIdeal> factor_prime(const Int& q, const FieldPtr& field);

struct SplittingType {
    std::vector<std::pair<int, int>> ef;  // (e, f) per prime, sorted
    bool completely_split = false;
    bool inert = false;
    bool totally_ramified = false;
};
SplittingType splitting_type(const Int& q, const FieldPtr& field);

// P^k as a full-rank sublattice of O_K = Z^m, with an upper-triangular
// Hermite normal form row basis.
class IdealLattice {
public:
    static IdealLattice power(const PrimeIdeal& P, long k);
    static IdealLattice multiply(const IdealLattice& a, const IdealLattice& b, const FieldPtr& field);
    static IdealLattice from_generator_rows(std::vector<std::vector<Int>> rows, size_t m);

    const std::vector<std::vector<Int>>& basis() const { return rows_; }
    const Int& det() const { return det_; }
    bool contains(const RingElement& x) const;
    bool contains_coords(std::vector<Int> coords) const;
    bool contains_lattice(const IdealLattice& other) const;

    // Coset representatives of O_K modulo this lattice (box below the HNF
    // diagonal); size equals |det|.
    std::vector<RingElement> coset_representatives(const FieldPtr& field) const;

private:
    std::vector<std::vector<Int>> rows_;
    Int det_;
};

// Largest k with x in P^k, by lattice membership with doubling then
// bisection. Throws undefined_valuation on x = 0.
long valuation(const RingElement& x, const PrimeIdeal& P);

// Image of x in O_K/P = F_q[x]/(g).
struct ResidueImage {
    Int q;
    fq::Poly g;
    fq::Poly value;  // degree < f

    bool is_scalar() const { return g.size() == 2; }
    Int scalar() const;  // requires f = 1
    bool operator==(const ResidueImage& o) const { return q == o.q && g == o.g && value == o.value; }
};
ResidueImage reduce_mod(const RingElement& x, const PrimeIdeal& P);

// Primes P with v_P(x) > 0 whose residue characteristic does not divide n.
std::vector<PrimeIdeal> radical_outside(const RingElement& x, const Int& n);
std::vector<PrimeIdeal> radical_outside(const Int& x, const Int& n, const FieldPtr& field);

// The unique (totally ramified) prime above r.
PrimeIdeal ramified_prime(const FieldPtr& field);

}  // namespace frey
