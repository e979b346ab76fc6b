#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "frey/cyclotomic.hpp"
#include "frey/prime_ideals.hpp"

using namespace frey;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Numeric oracle: expand prod_j (x - 2cos(2*pi*j/r)) in doubles and round.
std::vector<long> numeric_min_poly(long r) {
    long m = (r - 1) / 2;
    std::vector<double> c{1.0};
    for (long j = 1; j <= m; ++j) {
        double root = 2.0 * std::cos(2.0 * kPi * static_cast<double>(j) / static_cast<double>(r));
        std::vector<double> next(c.size() + 1, 0.0);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= root * c[i];
        }
        c = next;
    }
    std::vector<long> out;
    for (double v : c) {
        double r_ = std::round(v);
        REQUIRE(std::abs(v - r_) < 1e-6);
        out.push_back(static_cast<long>(r_));
    }
    return out;
}

double eval_at(const ZPoly& p, double x) {
    double acc = 0;
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i].get_d();
    return acc;
}

double embed(const RingElement& x, double z_val) {
    double acc = 0;
    for (size_t i = x.coeffs().size(); i-- > 0;) acc = acc * z_val + x.coeffs()[i].get_d();
    return acc;
}

RingElement random_element(const FieldPtr& K, std::mt19937_64& rng, long bound) {
    std::vector<Int> c(static_cast<size_t>(K->degree()));
    for (auto& v : c) v = Int(static_cast<long>(rng() % (2 * bound + 1)) - bound);
    return RingElement(K, c);
}

}  // namespace

TEST_CASE("minimal polynomial matches the numeric root oracle") {
    for (long r : {5L, 7L, 11L, 13L, 17L}) {
        ZPoly psi = min_poly_real_cyclotomic(r);
        auto oracle = numeric_min_poly(r);
        REQUIRE(psi.degree() == (r - 1) / 2);
        REQUIRE(psi.c.size() == oracle.size());
        for (size_t i = 0; i < oracle.size(); ++i) CHECK(psi.c[i] == oracle[i]);
    }
}

TEST_CASE("frozen minimal polynomials for r = 5 and r = 7") {
    CHECK(min_poly_real_cyclotomic(5) == ZPoly({Int(-1), Int(1), Int(1)}));
    CHECK(min_poly_real_cyclotomic(7) == ZPoly({Int(-1), Int(-2), Int(1), Int(1)}));
}

TEST_CASE("min_poly rejects bad input") {
    CHECK_THROWS_AS(min_poly_real_cyclotomic(4), rejected_input);
    CHECK_THROWS_AS(min_poly_real_cyclotomic(3), rejected_input);
    CHECK_THROWS_AS(min_poly_real_cyclotomic(9), rejected_input);
}

TEST_CASE("x^m psi(x + 1/x) equals the prime cyclotomic polynomial, exactly") {
    for (long r : {5L, 7L, 11L, 13L}) {
        ZPoly psi = min_poly_real_cyclotomic(r);
        long m = psi.degree();
        // sum_k psi_k * x^(m-k) * (x^2+1)^k
        ZPoly xsq1({Int(1), Int(0), Int(1)});
        ZPoly acc;
        ZPoly pw = ZPoly::constant(1);
        std::vector<ZPoly> pows;
        for (long k = 0; k <= m; ++k) {
            pows.push_back(pw);
            pw = pw * xsq1;
        }
        for (long k = 0; k <= m; ++k) {
            acc = acc + psi.c[static_cast<size_t>(k)] * (pows[static_cast<size_t>(k)] * ZPoly::monomial(1, static_cast<size_t>(m - k)));
        }
        CHECK(acc == cyclotomic_prime(r));
    }
}

TEST_CASE("numeric roots are simple and lie in (-2, 2)") {
    for (long r : {5L, 7L, 11L, 13L}) {
        ZPoly psi = min_poly_real_cyclotomic(r);
        ZPoly dpsi = derivative(psi);
        for (long j = 1; j <= (r - 1) / 2; ++j) {
            double root = 2.0 * std::cos(2.0 * kPi * j / r);
            CHECK(std::abs(root) < 2.0);
            CHECK(std::abs(eval_at(psi, root)) < 1e-9);
            CHECK(std::abs(eval_at(dpsi, root)) > 1e-3);  // simple root
        }
    }
}

TEST_CASE("half traces for r = 5") {
    auto K = RealCyclotomicField::make(5);
    RingElement z = RingElement::generator(K);
    CHECK(half_trace(K, 1) == z);
    CHECK(half_trace(K, 2) == RingElement(K, {Int(-1), Int(-1)}));
    CHECK(half_trace(K, 3) == half_trace(K, 2));  // 3 = -2 mod 5
    CHECK(half_trace(K, 0) == RingElement::from_integer(K, 2));
}

TEST_CASE("half trace symmetries t_k = t_{-k} = t_{k mod r}") {
    std::mt19937_64 rng(3);
    for (long r : {5L, 7L, 11L}) {
        auto K = RealCyclotomicField::make(r);
        for (int i = 0; i < 50; ++i) {
            long k = static_cast<long>(rng() % 1000) - 500;
            CHECK(half_trace(K, k) == half_trace(K, -k));
            CHECK(half_trace(K, k) == half_trace(K, k % r));
            CHECK(half_trace(K, k) == half_trace(K, k + 7 * r));
        }
    }
}

TEST_CASE("half trace against the complex embedding") {
    for (long r : {5L, 7L, 11L}) {
        auto K = RealCyclotomicField::make(r);
        for (long j = 1; j <= (r - 1) / 2; ++j) {
            double zj = 2.0 * std::cos(2.0 * kPi * j / r);
            for (long k = 0; k < r; ++k) {
                double expected = 2.0 * std::cos(2.0 * kPi * k * j / r);
                CHECK(embed(half_trace(K, k), zj) == doctest::Approx(expected).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("ring arithmetic basics for r = 5") {
    auto K = RealCyclotomicField::make(5);
    RingElement z = RingElement::generator(K);
    RingElement two_minus_z = RingElement::from_integer(K, 2) - z;
    RingElement three_plus_z = RingElement::from_integer(K, 3) + z;
    CHECK(two_minus_z * three_plus_z == RingElement::from_integer(K, 5));
    RingElement x(K, {Int(1), Int(2)});
    CHECK(x * RingElement::one(K) == x);
    CHECK((x * RingElement::zero(K)).is_zero());
}

TEST_CASE("field mismatch is rejected") {
    auto K5 = RealCyclotomicField::make(5);
    auto K7 = RealCyclotomicField::make(7);
    CHECK_THROWS_AS(RingElement::one(K5) * RingElement::one(K7), rejected_input);
    CHECK_THROWS_AS(RingElement::one(K5) + RingElement::one(K7), rejected_input);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(17);
    for (long r : {5L, 7L, 11L}) {
        auto K = RealCyclotomicField::make(r);
        for (int i = 0; i < 60; ++i) {
            RingElement a = random_element(K, rng, 20);
            RingElement b = random_element(K, rng, 20);
            RingElement c = random_element(K, rng, 20);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
        }
        // psi(z) = 0 in the ring
        RingElement z = RingElement::generator(K);
        RingElement acc = RingElement::zero(K);
        const ZPoly& psi = K->min_poly();
        RingElement zp = RingElement::one(K);
        for (size_t i = 0; i < psi.c.size(); ++i) {
            acc = acc + psi.c[i] * zp;
            zp = zp * z;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("norm examples for r = 5") {
    auto K = RealCyclotomicField::make(5);
    RingElement z = RingElement::generator(K);
    CHECK(norm(RingElement::from_integer(K, 2) - z) == 5);
    CHECK(norm(RingElement::one(K)) == 1);
    CHECK(norm(z) == -1);
    CHECK(norm(RingElement::zero(K)) == 0);
}

TEST_CASE("norm is multiplicative and matches the numeric embedding product") {
    std::mt19937_64 rng(23);
    for (long r : {5L, 7L, 11L}) {
        auto K = RealCyclotomicField::make(r);
        for (int i = 0; i < 60; ++i) {
            RingElement a = random_element(K, rng, 8);
            RingElement b = random_element(K, rng, 8);
            CHECK(norm(a * b) == norm(a) * norm(b));
        }
        // numeric oracle on elements with tiny coefficients
        for (int i = 0; i < 40; ++i) {
            RingElement a = random_element(K, rng, 3);
            double prod = 1.0;
            for (long j = 1; j <= (r - 1) / 2; ++j) {
                prod *= embed(a, 2.0 * std::cos(2.0 * kPi * j / r));
            }
            CHECK(norm(a).get_d() == doctest::Approx(prod).epsilon(1e-6));
        }
    }
}

TEST_CASE("frey constants for r = 5, frozen") {
    auto K = RealCyclotomicField::make(5);
    auto k = frey_constants(K);
    CHECK(k.alpha == RingElement(K, {Int(1), Int(2)}));
    CHECK(k.beta == RingElement(K, {Int(2), Int(-1)}));
    CHECK(k.gamma == RingElement(K, {Int(3), Int(1)}));
}

TEST_CASE("frey constants against the zeta expansion, numerically") {
    for (long r : {5L, 7L, 11L, 13L}) {
        auto K = RealCyclotomicField::make(r);
        auto k = frey_constants(K);
        for (long j = 1; j <= (r - 1) / 2; ++j) {
            std::complex<double> zeta = std::polar(1.0, 2.0 * kPi * j / r);
            double zj = 2.0 * std::cos(2.0 * kPi * j / r);
            std::complex<double> alpha = zeta * (1.0 - zeta) * (1.0 - std::pow(zeta, -3));
            std::complex<double> beta = (1.0 - zeta) * (1.0 - 1.0 / zeta);
            std::complex<double> gamma = (1.0 - zeta * zeta) * (1.0 - 1.0 / (zeta * zeta));
            CHECK(embed(k.alpha, zj) == doctest::Approx(alpha.real()).epsilon(1e-9));
            CHECK(std::abs(alpha.imag()) < 1e-9);
            CHECK(embed(k.beta, zj) == doctest::Approx(beta.real()).epsilon(1e-9));
            CHECK(embed(k.gamma, zj) == doctest::Approx(gamma.real()).epsilon(1e-9));
        }
    }
}

TEST_CASE("frey constant norms are r up to sign") {
    for (long r : {5L, 7L, 11L, 13L}) {
        auto K = RealCyclotomicField::make(r);
        auto k = frey_constants(K);
        CHECK(abs(norm(k.alpha)) == r);
        CHECK(abs(norm(k.beta)) == r);
        CHECK(abs(norm(k.gamma)) == r);
    }
}

TEST_CASE("product of alpha, beta, gamma has valuation 3 at the ramified prime") {
    for (long r : {5L, 7L}) {
        auto K = RealCyclotomicField::make(r);
        auto k = frey_constants(K);
        PrimeIdeal pr = ramified_prime(K);
        CHECK(valuation(k.alpha * k.beta * k.gamma, pr) == 3);
        CHECK(valuation(k.alpha, pr) == 1);
        CHECK(valuation(k.beta, pr) == 1);
        CHECK(valuation(k.gamma, pr) == 1);
    }
}

TEST_CASE("galois conjugation") {
    auto K = RealCyclotomicField::make(5);
    RingElement z = RingElement::generator(K);
    RingElement x = RingElement::from_integer(K, 2) - z;
    CHECK(galois_conjugate(x, 2) == RingElement::from_integer(K, 3) + z);
    CHECK(galois_conjugate(x, 1) == x);
    CHECK_THROWS_AS(galois_conjugate(x, 5), rejected_input);
    CHECK_THROWS_AS(galois_conjugate(x, 10), rejected_input);

    std::mt19937_64 rng(31);
    for (long r : {5L, 7L, 11L}) {
        auto Kr = RealCyclotomicField::make(r);
        for (int i = 0; i < 30; ++i) {
            RingElement a = random_element(Kr, rng, 10);
            for (long j = 1; j < r; ++j) {
                CHECK(norm(galois_conjugate(a, j)) == norm(a));
            }
        }
    }
}

TEST_CASE("A + B = C as a polynomial identity in (a, b)") {
    std::mt19937_64 rng(41);
    for (long r : {5L, 7L, 11L, 13L}) {
        auto K = RealCyclotomicField::make(r);
        auto k = frey_constants(K);
        for (int i = 0; i < 100; ++i) {
            Int a(static_cast<long>(rng() % 2001) - 1000);
            Int b(static_cast<long>(rng() % 2001) - 1000);
            RingElement A = (a + b) * (a + b) * k.alpha;
            RingElement B = k.beta * quadratic_factor(K, 2, a, b);
            RingElement C = k.gamma * quadratic_factor(K, 1, a, b);
            CHECK(A + B == C);
        }
    }
}

TEST_CASE("product of the quadratic factors is the homogeneous cyclotomic value") {
    std::mt19937_64 rng(43);
    for (long r : {5L, 7L, 11L, 13L}) {
        auto K = RealCyclotomicField::make(r);
        for (int i = 0; i < 40; ++i) {
            Int a(static_cast<long>(rng() % 401) - 200);
            Int b(static_cast<long>(rng() % 401) - 200);
            if (a + b == 0) continue;
            RingElement prod = RingElement::one(K);
            for (long j = 1; j <= (r - 1) / 2; ++j) prod = prod * quadratic_factor(K, j, a, b);
            REQUIRE(prod.is_rational_integer());
            CHECK(prod.rational_value() == homogeneous_cyclotomic(r, a, b));
        }
    }
}

TEST_CASE("square identity for the half trace at (r+1)/2") {
    // t_{(r+1)/2}^2 = 2 + z, the element whose image certifies squares
    // in the residue ring at 2.
    for (long r : {5L, 7L, 11L, 13L}) {
        auto K = RealCyclotomicField::make(r);
        RingElement t = half_trace(K, (r + 1) / 2);
        RingElement z = RingElement::generator(K);
        CHECK(t * t == RingElement::from_integer(K, 2) + z);
    }
}
