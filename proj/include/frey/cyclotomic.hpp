#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frey/polynomial.hpp"

namespace frey {

class RealCyclotomicField;
using FieldPtr = std::shared_ptr<const RealCyclotomicField>;

// Minimal polynomial over Q of z = zeta_r + zeta_r^(-1), degree (r-1)/2,
// computed exactly by folding 1 + x + ... + x^(r-1) through the half-trace
// recurrence.
ZPoly min_poly_real_cyclotomic(long r);

// The maximal real subfield K of the r-th cyclotomic field, presented as
// Q[z]/(psi) with ring of integers Z[z].
class RealCyclotomicField {
public:
    static FieldPtr make(long r);

    long r() const { return r_; }
    long degree() const { return m_; }
    const ZPoly& min_poly() const { return psi_; }

private:
    explicit RealCyclotomicField(long r);
    long r_;
    long m_;
    ZPoly psi_;
};

// Exact element of Z[z] in the power basis 1, z, ..., z^(m-1). Immutable
// after construction; all arithmetic is pure.
class RingElement {
public:
    RingElement(FieldPtr field, std::vector<Int> coeffs);
    static RingElement zero(const FieldPtr& field);
    static RingElement one(const FieldPtr& field);
    static RingElement from_integer(const FieldPtr& field, const Int& v);
    static RingElement generator(const FieldPtr& field);  // z itself
    // Reduces an arbitrary-degree integer polynomial in z.
    static RingElement from_polynomial(const FieldPtr& field, const ZPoly& p);

    const FieldPtr& field() const { return field_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    ZPoly as_polynomial() const;

    bool is_zero() const;
    bool is_rational_integer() const;
    Int rational_value() const;  // requires is_rational_integer()

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<Int> coeffs_;
};

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a);
RingElement operator*(const RingElement& a, const RingElement& b);
RingElement operator*(const Int& s, const RingElement& a);

// t_k = zeta^k + zeta^(-k) in the z-basis, any integer k.
RingElement half_trace(const FieldPtr& field, long k);

// N_{K/Q}(x), exact, as Res(psi, x(T)).
Int norm(const RingElement& x);

// Image of x under z -> zeta^j + zeta^(-j); requires gcd(j, r) = 1.
RingElement galois_conjugate(const RingElement& x, long j);

// alpha = t_1 - t_2, beta = 2 - t_1, gamma = 2 - t_2. These satisfy
// alpha + beta = gamma, |norm| = r, and alpha*(a+b)^2 + beta*f1 = gamma*f2
// for the quadratic factors f_j below.
struct FreyConstants {
    RingElement alpha, beta, gamma;
};
FreyConstants frey_constants(const FieldPtr& field);

// f_j(a, b) = a^2 + t_j*a*b + b^2; the product over j = 1..m equals
// (a^r + b^r)/(a + b) as a rational integer.
RingElement quadratic_factor(const FieldPtr& field, long j, const Int& a, const Int& b);

}  // namespace frey
