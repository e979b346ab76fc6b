#include "frey/fq_poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace frey::fq {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const Poly& a) { return static_cast<long>(a.size()) - 1; }

bool is_zero(const Poly& a) { return a.empty(); }

Poly reduce(const std::vector<Int>& coeffs, const Int& q) {
    Poly r(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) r[i] = mod_canonical(coeffs[i], q);
    trim(r);
    return r;
}

Poly constant(const Int& v, const Int& q) {
    Poly r{mod_canonical(v, q)};
    trim(r);
    return r;
}

Poly add(const Poly& a, const Poly& b, const Int& q) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        Int s = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
        r[i] = mod_canonical(s, q);
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, const Int& q) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        Int s = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
        r[i] = mod_canonical(s, q);
    }
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, const Int& q) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& v : r) v = mod_canonical(v, q);
    trim(r);
    return r;
}

Poly scalar_mul(const Int& s, const Poly& a, const Int& q) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_canonical(s * a[i], q);
    trim(r);
    return r;
}

namespace {
Int inverse_mod(const Int& a, const Int& q) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()) == 0)
        throw rejected_input("fq: attempted inversion of a non-unit (modulus not prime?)");
    return inv;
}
}  // namespace

Poly make_monic(const Poly& a, const Int& q) {
    if (is_zero(a)) return a;
    if (a.back() == 1) return a;
    return scalar_mul(inverse_mod(a.back(), q), a, q);
}

void divmod(const Poly& a, const Poly& b, const Int& q, Poly& quo, Poly& rem) {
    if (is_zero(b)) throw rejected_input("fq: division by zero polynomial");
    rem = a;
    quo.clear();
    const long db = deg(b);
    if (deg(a) < db) return;
    quo.assign(static_cast<size_t>(deg(a) - db) + 1, Int(0));
    Int lead_inv = inverse_mod(b.back(), q);
    while (deg(rem) >= db) {
        size_t shift = static_cast<size_t>(deg(rem) - db);
        Int f = mod_canonical(rem.back() * lead_inv, q);
        quo[shift] = f;
        for (long i = 0; i <= db; ++i) {
            rem[shift + static_cast<size_t>(i)] = mod_canonical(rem[shift + static_cast<size_t>(i)] - f * b[static_cast<size_t>(i)], q);
        }
        trim(rem);
    }
    trim(quo);
}

Poly mod(const Poly& a, const Poly& b, const Int& q) {
    Poly quo, rem;
    divmod(a, b, q, quo, rem);
    return rem;
}

Poly gcd(Poly a, Poly b, const Int& q) {
    while (!is_zero(b)) {
        Poly r = mod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, q);
}

Poly powmod(const Poly& base, const Int& e, const Poly& f, const Int& q) {
    require(e >= 0, "fq::powmod: negative exponent");
    Poly result = constant(1, q);
    Poly acc = mod(base, f, q);
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = mod(mul(result, acc, q), f, q);
        acc = mod(mul(acc, acc, q), f, q);
        exp >>= 1;
    }
    return result;
}

Int eval(const Poly& a, const Int& x, const Int& q) {
    Int acc = 0;
    for (size_t i = a.size(); i-- > 0;) acc = mod_canonical(acc * x + a[i], q);
    return acc;
}

namespace {

Poly derivative_fq(const Poly& a, const Int& q) {
    Poly r;
    if (a.size() <= 1) return r;
    r.resize(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mod_canonical(Int(static_cast<long>(i)) * a[i], q);
    trim(r);
    return r;
}

// f = g(x^q) over the prime field: g has f's coefficients at indices
// divisible by q (Frobenius is the identity on F_q).
Poly qth_root(const Poly& f, const Int& q) {
    unsigned long qq = q.get_ui();
    Poly g((f.size() + qq - 1) / qq);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        require(i % qq == 0, "fq: polynomial is not a q-th power");
        g[i / qq] = f[i];
    }
    trim(g);
    return g;
}

void squarefree_parts(const Poly& f, const Int& q, int mult_scale, std::vector<std::pair<Poly, int>>& out) {
    Poly fp = derivative_fq(f, q);
    if (is_zero(fp)) {
        // all multiplicities divisible by the characteristic
        squarefree_parts(qth_root(f, q), q, mult_scale * static_cast<int>(q.get_ui()), out);
        return;
    }
    Poly c = gcd(f, fp, q);
    Poly w, dummy;
    divmod(f, c, q, w, dummy);
    int i = 1;
    while (deg(w) > 0) {
        Poly y = gcd(w, c, q);
        Poly z;
        divmod(w, y, q, z, dummy);
        if (deg(z) > 0) out.emplace_back(make_monic(z, q), i * mult_scale);
        w = std::move(y);
        Poly cq;
        divmod(c, w, q, cq, dummy);
        c = std::move(cq);
        ++i;
    }
    if (deg(c) > 0) squarefree_parts(qth_root(c, q), q, mult_scale * static_cast<int>(q.get_ui()), out);
}

Poly x_poly(const Int& q) {
    Poly x{Int(0), Int(1)};
    (void)q;
    return x;
}

// Trace map sum_{i<d} a^(2^i) mod f, used for equal-degree splitting in
// characteristic 2.
Poly trace_map_char2(const Poly& a, long d, const Poly& f, const Int& q) {
    Poly acc = mod(a, f, q);
    Poly term = acc;
    for (long i = 1; i < d; ++i) {
        term = powmod(term, 2, f, q);
        acc = add(acc, term, q);
    }
    return acc;
}

void equal_degree_split(const Poly& f, long d, const Int& q, std::mt19937_64& rng, std::vector<Poly>& out) {
    const long n = deg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    Poly factor_found;
    while (true) {
        Poly a(static_cast<size_t>(n));
        for (auto& v : a) {
            Int val = Int(static_cast<unsigned long>(rng() % 1000003));
            v = mod_canonical(val, q);
        }
        trim(a);
        if (deg(a) < 1) continue;
        Poly g = gcd(a, f, q);
        if (deg(g) > 0 && deg(g) < n) {
            factor_found = g;
            break;
        }
        Poly b;
        if (q == 2) {
            b = trace_map_char2(a, d, f, q);
        } else {
            Int e = (power(q, static_cast<unsigned long>(d)) - 1) / 2;
            b = powmod(a, e, f, q);
            b = sub(b, constant(1, q), q);
        }
        g = gcd(b, f, q);
        if (deg(g) > 0 && deg(g) < n) {
            factor_found = g;
            break;
        }
    }
    Poly co, dummy;
    divmod(f, factor_found, q, co, dummy);
    equal_degree_split(factor_found, d, q, rng, out);
    equal_degree_split(make_monic(co, q), d, q, rng, out);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& a, const Int& q) {
    if (is_zero(a)) throw rejected_input("fq::factor: zero polynomial");
    if (!is_prime(q)) throw rejected_input("fq::factor: modulus must be prime");
    std::vector<std::pair<Poly, int>> squarefree;
    Poly f = make_monic(a, q);
    if (deg(f) == 0) return {};
    squarefree_parts(f, q, 1, squarefree);

    std::vector<std::pair<Poly, int>> out;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<unsigned long>(q.get_ui()));
    for (auto& [part, mult] : squarefree) {
        // distinct-degree stage
        Poly u = part;
        Poly h = x_poly(q);
        long d = 0;
        while (deg(u) > 0 && 2 * (d + 1) <= deg(u)) {
            ++d;
            h = powmod(h, q, u, q);  // h = x^(q^d) mod u
            Poly g = gcd(sub(h, x_poly(q), q), u, q);
            if (deg(g) > 0) {
                std::vector<Poly> pieces;
                equal_degree_split(g, d, q, rng, pieces);
                for (auto& p : pieces) out.emplace_back(p, mult);
                Poly quo, rem;
                divmod(u, g, q, quo, rem);
                u = make_monic(quo, q);
                h = mod(h, u, q);
            }
        }
        if (deg(u) > 0) out.emplace_back(u, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (deg(x.first) != deg(y.first)) return deg(x.first) < deg(y.first);
        return x.first < y.first;
    });
    return out;
}

std::string to_string(const Poly& a, const std::string& var) {
    if (is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || a[i] != 1) os << a[i].get_str();
        if (i > 0) {
            if (a[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace frey::fq
