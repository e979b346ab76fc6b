#include "frey/polynomial.hpp"

#include <sstream>

namespace frey {

ZPoly ZPoly::monomial(const Int& v, size_t deg) {
    if (v == 0) return ZPoly();
    ZPoly p;
    p.c.assign(deg + 1, Int(0));
    p.c[deg] = v;
    return p;
}

const Int& ZPoly::coeff(size_t i) const {
    static const Int zero = 0;
    return i < c.size() ? c[i] : zero;
}

void ZPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Int ZPoly::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::string ZPoly::to_string(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        const Int& v = c[i];
        if (v == 0) continue;
        Int a = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
    r.normalize();
    return r;
}

ZPoly operator-(const ZPoly& a) {
    ZPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

ZPoly operator*(const Int& s, const ZPoly& a) {
    if (s == 0) return ZPoly();
    ZPoly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

ZPoly rem_monic(ZPoly a, const ZPoly& m) {
    require(m.is_monic(), "rem_monic: divisor must be monic");
    const long dm = m.degree();
    while (a.degree() >= dm) {
        Int lead = a.c.back();
        size_t shift = static_cast<size_t>(a.degree() - dm);
        for (long i = 0; i <= dm; ++i) a.c[shift + static_cast<size_t>(i)] -= lead * m.c[static_cast<size_t>(i)];
        a.normalize();
    }
    return a;
}

ZPoly derivative(const ZPoly& a) {
    ZPoly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = Int(static_cast<long>(i)) * a.c[i];
    r.normalize();
    return r;
}

Int resultant(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const long n = a.degree(), m = b.degree();
    if (n == 0) return power(a.c[0], static_cast<unsigned long>(m));
    if (m == 0) return power(b.c[0], static_cast<unsigned long>(n));

    const long dim = n + m;
    std::vector<std::vector<Int>> s(static_cast<size_t>(dim), std::vector<Int>(static_cast<size_t>(dim), Int(0)));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = a.c[static_cast<size_t>(n - j)];
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) s[static_cast<size_t>(m + i)][static_cast<size_t>(i + j)] = b.c[static_cast<size_t>(m - j)];

    // Bareiss fraction-free elimination; every division below is exact.
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < dim - 1; ++k) {
        if (s[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            long swap_row = -1;
            for (long i = k + 1; i < dim; ++i)
                if (s[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            std::swap(s[static_cast<size_t>(k)], s[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (long i = k + 1; i < dim; ++i) {
            for (long j = k + 1; j < dim; ++j) {
                Int num = s[static_cast<size_t>(i)][static_cast<size_t>(j)] * s[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                          s[static_cast<size_t>(i)][static_cast<size_t>(k)] * s[static_cast<size_t>(k)][static_cast<size_t>(j)];
                mpz_divexact(s[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            s[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = s[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    Int det = s[static_cast<size_t>(dim - 1)][static_cast<size_t>(dim - 1)];
    return sign < 0 ? Int(-det) : det;
}

ZPoly cyclotomic_prime(long r) {
    if (r < 2 || !is_prime(Int(r))) throw rejected_input("cyclotomic_prime: r must be prime");
    ZPoly p;
    p.c.assign(static_cast<size_t>(r), Int(1));
    return p;
}

}  // namespace frey
