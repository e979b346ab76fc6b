#pragma once

#include <string>
#include <vector>

#include "frey/integers.hpp"

namespace frey {

// Dense integer polynomial, coefficients ascending. The zero polynomial has
// an empty coefficient vector.
struct ZPoly {
    std::vector<Int> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    static ZPoly constant(const Int& v) { return v == 0 ? ZPoly() : ZPoly({v}); }
    static ZPoly monomial(const Int& v, size_t deg);

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    const Int& coeff(size_t i) const;
    void normalize();

    Int eval(const Int& x) const;
    bool operator==(const ZPoly& o) const { return c == o.c; }

    std::string to_string(const std::string& var = "x") const;
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const Int& s, const ZPoly& a);

// Remainder of a modulo a monic divisor, exact over Z.
ZPoly rem_monic(ZPoly a, const ZPoly& m);

ZPoly derivative(const ZPoly& a);

// Res(a, b), exact, via Bareiss elimination of the Sylvester matrix.
Int resultant(const ZPoly& a, const ZPoly& b);

// 1 + x + ... + x^(r-1), the r-th cyclotomic polynomial for prime r.
ZPoly cyclotomic_prime(long r);

}  // namespace frey
