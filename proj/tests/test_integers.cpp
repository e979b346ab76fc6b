#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "frey/integers.hpp"

using namespace frey;

namespace {

// Brute-force quadratic residue table, the oracle for the Jacobi symbol at
// prime moduli.
int legendre_by_table(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    std::set<long> squares;
    for (long x = 1; x < p; ++x) squares.insert(x * x % p);
    return squares.count(a) ? 1 : -1;
}

}  // namespace

TEST_CASE("jacobi matches the residue table at prime moduli") {
    CHECK(jacobi(2, 7) == 1);
    CHECK(jacobi(3, 7) == -1);
    CHECK(jacobi(0, 5) == 0);
    for (long p : {3L, 5L, 7L, 11L, 13L, 23L, 41L}) {
        for (long a = -2 * p; a <= 2 * p; ++a) {
            CHECK(jacobi(a, p) == legendre_by_table(a, p));
        }
    }
}

TEST_CASE("jacobi agrees with gmp on composite odd moduli") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        long n = 2 * static_cast<long>(rng() % 100000) + 1;
        long a = static_cast<long>(rng() % 2000000) - 1000000;
        Int ai(a), ni(n);
        CHECK(jacobi(ai, ni) == mpz_jacobi(ai.get_mpz_t(), ni.get_mpz_t()));
    }
}

TEST_CASE("jacobi rejects even or non-positive moduli") {
    CHECK_THROWS_AS(jacobi(3, 8), rejected_input);
    CHECK_THROWS_AS(jacobi(Int(3), Int(-7)), rejected_input);
}

TEST_CASE("factorize recombines and reports primes") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Int n = Int(static_cast<unsigned long>(rng() % 1000000) + 2);
        auto f = factorize(n);
        Int prod = 1;
        for (const auto& [p, e] : f) {
            CHECK(is_prime(p));
            prod *= power(p, static_cast<unsigned long>(e));
        }
        CHECK(prod == n);
    }
    // a product of two 12-digit primes exercises the rho stage
    Int a("100000000003"), b("100000000019");
    auto f = factorize(a * b);
    REQUIRE(f.size() == 2);
    CHECK(f.begin()->first == a);
    CHECK(f.rbegin()->first == b);
}

TEST_CASE("perfect p-th power detection") {
    CHECK(perfect_pth_power(Int(128), 7).value() == 2);
    CHECK(perfect_pth_power(Int(-128), 7).value() == -2);
    CHECK(!perfect_pth_power(Int(100), 7).has_value());
    CHECK(perfect_pth_power(Int(0), 5).value() == 0);
    CHECK(!perfect_pth_power(Int(-4), 2).has_value());
}

TEST_CASE("int_valuation and homogeneous cyclotomic value") {
    CHECK(int_valuation(Int(48), Int(2)) == 4);
    CHECK(int_valuation(Int(-45), Int(3)) == 2);
    CHECK_THROWS_AS(int_valuation(Int(0), Int(3)), undefined_valuation);
    CHECK(homogeneous_cyclotomic(5, Int(2), Int(1)) == 11);
    CHECK(homogeneous_cyclotomic(5, Int(4), Int(1)) == 205);
    CHECK(homogeneous_cyclotomic(5, Int(1), Int(0)) == 1);
    CHECK_THROWS_AS(homogeneous_cyclotomic(5, Int(3), Int(-3)), rejected_input);
}
