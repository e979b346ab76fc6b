#include "frey/integers.hpp"

#include <algorithm>

namespace frey {

Int mod_canonical(const Int& a, const Int& n) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<long> primes_below(long bound) {
    std::vector<long> out;
    if (bound <= 2) return out;
    std::vector<bool> composite(static_cast<size_t>(bound), false);
    for (long i = 2; i < bound; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i + i; j < bound; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

namespace {

Int pollard_brent(const Int& n, unsigned long seed) {
    // Brent's cycle variant with batched gcds.
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
        // rare cycle failure; retry with new parameters
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    }
}

void factor_into(Int n, std::map<Int, int>& out, unsigned long seed) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_brent(n, seed);
    factor_into(d, out, seed + 1);
    factor_into(n / d, out, seed + 2);
}

}  // namespace

std::map<Int, int> factorize(const Int& n) {
    if (n == 0) throw rejected_input("factorize: zero has no factorization");
    Int m = abs(n);
    std::map<Int, int> out;
    static const std::vector<long> small = primes_below(10000);
    for (long p : small) {
        if (m == 1) break;
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
            out[Int(p)] += 1;
            m /= p;
        }
    }
    if (m > 1) {
        if (is_prime(m))
            out[m] += 1;
        else
            factor_into(m, out, 0x5eedULL);
    }
    return out;
}

long int_valuation(Int n, const Int& q) {
    if (n == 0) throw undefined_valuation("int_valuation: valuation of zero is undefined");
    if (q < 2) throw rejected_input("int_valuation: base must be >= 2");
    long v = 0;
    n = abs(n);
    while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
        n /= q;
        ++v;
    }
    return v;
}

int jacobi(Int a, Int n) {
    if (n <= 0 || n % 2 == 0) throw rejected_input("jacobi: modulus must be odd and positive");
    a = mod_canonical(a, n);
    int s = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long m8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (m8 == 3 || m8 == 5) s = -s;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) s = -s;
        a = mod_canonical(a, n);
    }
    return n == 1 ? s : 0;
}

int jacobi(long a, long n) { return jacobi(Int(a), Int(n)); }

Int power(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::optional<Int> perfect_pth_power(const Int& n, unsigned long p) {
    if (p == 0) throw rejected_input("perfect_pth_power: exponent must be positive");
    if (n == 0) return Int(0);
    if (n < 0 && p % 2 == 0) return std::nullopt;
    Int root;
    int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), p);
    if (exact != 0) return root;
    return std::nullopt;
}

Int homogeneous_cyclotomic(long r, const Int& a, const Int& b) {
    if (a + b == 0) throw rejected_input("homogeneous_cyclotomic: a + b = 0");
    Int num = power(a, static_cast<unsigned long>(r)) + power(b, static_cast<unsigned long>(r));
    Int den = a + b;
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace frey
