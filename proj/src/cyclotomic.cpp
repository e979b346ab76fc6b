#include "frey/cyclotomic.hpp"

#include <numeric>
#include <sstream>

namespace frey {

ZPoly min_poly_real_cyclotomic(long r) {
    if (r < 5 || !is_prime(Int(r)))
        throw rejected_input("min_poly: r must be a prime >= 5");
    const long m = (r - 1) / 2;
    // x^m + x^(m-1) + ... + 1 + ... + x^(-m) = psi(x + 1/x), so psi is
    // 1 + sum of the Chebyshev-like polynomials T_k with T_0 = 2, T_1 = y,
    // T_k = y*T_{k-1} - T_{k-2}.
    ZPoly y = ZPoly::monomial(1, 1);
    ZPoly t_prev = ZPoly::constant(2);
    ZPoly t_cur = y;
    ZPoly psi = ZPoly::constant(1) + t_cur;
    for (long k = 2; k <= m; ++k) {
        ZPoly t_next = y * t_cur - t_prev;
        psi = psi + t_next;
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    require(psi.degree() == m && psi.is_monic(), "min_poly: folded polynomial is not monic of degree m");
    return psi;
}

RealCyclotomicField::RealCyclotomicField(long r) : r_(r), m_((r - 1) / 2), psi_(min_poly_real_cyclotomic(r)) {}

FieldPtr RealCyclotomicField::make(long r) {
    return FieldPtr(new RealCyclotomicField(r));
}

RingElement::RingElement(FieldPtr field, std::vector<Int> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw rejected_input("RingElement: null field");
    if (coeffs_.size() != static_cast<size_t>(field_->degree()))
        throw rejected_input("RingElement: coefficient vector must have length m");
}

RingElement RingElement::zero(const FieldPtr& field) {
    return RingElement(field, std::vector<Int>(static_cast<size_t>(field->degree()), Int(0)));
}

RingElement RingElement::one(const FieldPtr& field) { return from_integer(field, 1); }

RingElement RingElement::from_integer(const FieldPtr& field, const Int& v) {
    std::vector<Int> c(static_cast<size_t>(field->degree()), Int(0));
    c[0] = v;
    return RingElement(field, c);
}

RingElement RingElement::generator(const FieldPtr& field) {
    std::vector<Int> c(static_cast<size_t>(field->degree()), Int(0));
    if (c.size() < 2) throw rejected_input("generator: field degree must be >= 2");
    c[1] = 1;
    return RingElement(field, c);
}

RingElement RingElement::from_polynomial(const FieldPtr& field, const ZPoly& p) {
    ZPoly red = rem_monic(p, field->min_poly());
    std::vector<Int> c(static_cast<size_t>(field->degree()), Int(0));
    for (size_t i = 0; i < red.c.size(); ++i) c[i] = red.c[i];
    return RingElement(field, c);
}

ZPoly RingElement::as_polynomial() const { return ZPoly(coeffs_); }

bool RingElement::is_zero() const {
    for (const auto& v : coeffs_)
        if (v != 0) return false;
    return true;
}

bool RingElement::is_rational_integer() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Int RingElement::rational_value() const {
    if (!is_rational_integer()) throw rejected_input("rational_value: element is not a rational integer");
    return coeffs_[0];
}

bool RingElement::operator==(const RingElement& o) const {
    return field_->r() == o.field_->r() && coeffs_ == o.coeffs_;
}

std::string RingElement::to_string() const { return as_polynomial().to_string("z"); }

namespace {
void check_same_field(const RingElement& a, const RingElement& b) {
    if (a.field()->r() != b.field()->r())
        throw rejected_input("ring arithmetic: elements belong to different fields");
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    check_same_field(a, b);
    std::vector<Int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
    return RingElement(a.field(), std::move(c));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    check_same_field(a, b);
    std::vector<Int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] - b.coeffs()[i];
    return RingElement(a.field(), std::move(c));
}

RingElement operator-(const RingElement& a) {
    std::vector<Int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs()[i];
    return RingElement(a.field(), std::move(c));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    check_same_field(a, b);
    return RingElement::from_polynomial(a.field(), a.as_polynomial() * b.as_polynomial());
}

RingElement operator*(const Int& s, const RingElement& a) {
    std::vector<Int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs()[i];
    return RingElement(a.field(), std::move(c));
}

RingElement half_trace(const FieldPtr& field, long k) {
    const long r = field->r();
    long kk = k % r;
    if (kk < 0) kk += r;
    if (kk > r - kk) kk = r - kk;  // t_k = t_{-k}
    RingElement t_prev = RingElement::from_integer(field, 2);
    if (kk == 0) return t_prev;
    RingElement z = RingElement::generator(field);
    RingElement t_cur = z;
    for (long i = 2; i <= kk; ++i) {
        RingElement t_next = z * t_cur - t_prev;
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    return t_cur;
}

Int norm(const RingElement& x) {
    if (x.is_zero()) return 0;
    return resultant(x.field()->min_poly(), x.as_polynomial());
}

RingElement galois_conjugate(const RingElement& x, long j) {
    const long r = x.field()->r();
    long jj = j % r;
    if (jj < 0) jj += r;
    if (jj == 0 || std::gcd(jj, r) != 1)
        throw rejected_input("galois_conjugate: index must be coprime to r");
    RingElement image = half_trace(x.field(), jj);
    // Horner evaluation of the coordinate polynomial at z = t_j.
    RingElement acc = RingElement::zero(x.field());
    for (size_t i = x.coeffs().size(); i-- > 0;) {
        acc = acc * image + RingElement::from_integer(x.field(), x.coeffs()[i]);
    }
    return acc;
}

FreyConstants frey_constants(const FieldPtr& field) {
    RingElement t1 = half_trace(field, 1);
    RingElement t2 = half_trace(field, 2);
    RingElement two = RingElement::from_integer(field, 2);
    FreyConstants k{t1 - t2, two - t1, two - t2};
    require(k.alpha + k.beta == k.gamma, "frey_constants: alpha + beta != gamma");
    return k;
}

RingElement quadratic_factor(const FieldPtr& field, long j, const Int& a, const Int& b) {
    RingElement t = half_trace(field, j);
    return RingElement::from_integer(field, a * a + b * b) + (a * b) * t;
}

}  // namespace frey
