#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frey/prime_ideals.hpp"

using namespace frey;

namespace {

// Independent factorization oracle for psi mod q: exhaustive root search,
// then the cofactor is irreducible iff it has no roots and degree <= 3.
// Covers the fields used by the acceptance sweep (degree <= 3).
struct OracleFactor {
    std::vector<Int> g;  // monic, ascending
    int mult;
};

long oracle_deg(const std::vector<Int>& p) { return static_cast<long>(p.size()) - 1; }

std::vector<Int> oracle_divide_root(const std::vector<Int>& p, const Int& root, const Int& q) {
    // synthetic division by (x - root)
    std::vector<Int> out(p.size() - 1);
    Int carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
        carry = mod_canonical(p[i] + carry * root, q);
        out[i - 1] = carry;
    }
    return out;
}

std::vector<OracleFactor> oracle_factor(std::vector<Int> f, const Int& q) {
    std::vector<OracleFactor> out;
    // peel off roots with multiplicity
    for (Int x = 0; x < q; ++x) {
        int mult = 0;
        while (oracle_deg(f) > 0) {
            Int val = 0;
            for (size_t i = f.size(); i-- > 0;) val = mod_canonical(val * x + f[i], q);
            if (val != 0) break;
            f = oracle_divide_root(f, x, q);
            ++mult;
        }
        if (mult > 0) out.push_back({{mod_canonical(-x, q), Int(1)}, mult});
    }
    if (oracle_deg(f) > 0) {
        REQUIRE(oracle_deg(f) <= 3);  // rootless of degree <= 3 is irreducible
        out.push_back({f, 1});
    }
    std::sort(out.begin(), out.end(), [](const OracleFactor& a, const OracleFactor& b) {
        if (a.g.size() != b.g.size()) return a.g.size() < b.g.size();
        return a.g < b.g;
    });
    return out;
}

RingElement small_product(const FieldPtr& K, std::mt19937_64& rng, int factors) {
    // products of small elements have smooth norms
    RingElement x = RingElement::one(K);
    for (int i = 0; i < factors; ++i) {
        std::vector<Int> c(static_cast<size_t>(K->degree()));
        for (auto& v : c) v = Int(static_cast<long>(rng() % 5) - 2);
        RingElement y(K, c);
        if (y.is_zero()) { --i; continue; }
        x = x * y;
    }
    return x;
}

}  // namespace

TEST_CASE("factorization examples for r = 5") {
    auto K = RealCyclotomicField::make(5);

    auto p11 = factor_prime(Int(11), K);
    REQUIRE(p11.size() == 2);
    CHECK(p11[0].g == fq::Poly{Int(4), Int(1)});  // x - 7
    CHECK(p11[1].g == fq::Poly{Int(8), Int(1)});  // x - 3
    for (const auto& P : p11) {
        CHECK(P.e == 1);
        CHECK(P.f == 1);
        CHECK(P.norm() == 11);
    }

    auto p7 = factor_prime(Int(7), K);
    REQUIRE(p7.size() == 1);
    CHECK(p7[0].e == 1);
    CHECK(p7[0].f == 2);

    auto p5 = factor_prime(Int(5), K);
    REQUIRE(p5.size() == 1);
    CHECK(p5[0].e == 2);
    CHECK(p5[0].f == 1);
    CHECK(p5[0].g == fq::Poly{Int(3), Int(1)});  // x - 2

    CHECK_THROWS_AS(factor_prime(Int(6), K), rejected_input);
}

TEST_CASE("dedekind output matches the exhaustive oracle for q < 500") {
    for (long r : {5L, 7L}) {
        auto K = RealCyclotomicField::make(r);
        for (long q : primes_below(500)) {
            auto got = factor_prime(Int(q), K);
            auto expected = oracle_factor(fq::reduce(K->min_poly().c, Int(q)), Int(q));
            REQUIRE(got.size() == expected.size());
            long efsum = 0;
            for (size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].g == expected[i].g);
                CHECK(got[i].e == expected[i].mult);
                CHECK(got[i].f == oracle_deg(expected[i].g));
                efsum += static_cast<long>(got[i].e) * got[i].f;
            }
            CHECK(efsum == K->degree());
        }
    }
}

TEST_CASE("sum of e*f equals the degree for r up to 13 and q < 500") {
    for (long r : {5L, 7L, 11L, 13L}) {
        auto K = RealCyclotomicField::make(r);
        for (long q : primes_below(500)) {
            long efsum = 0;
            for (const auto& P : factor_prime(Int(q), K)) efsum += static_cast<long>(P.e) * P.f;
            CHECK(efsum == K->degree());
        }
    }
}

TEST_CASE("complete splitting iff q = +-1 mod r, q < 10^4") {
    for (long r : {5L, 7L, 11L, 13L}) {
        auto K = RealCyclotomicField::make(r);
        for (long q : primes_below(10000)) {
            if (q == r) {
                CHECK(splitting_type(Int(q), K).totally_ramified);
                continue;
            }
            bool expect = (q % r == 1) || (q % r == r - 1);
            CHECK(splitting_type(Int(q), K).completely_split == expect);
        }
    }
}

TEST_CASE("splitting examples for r = 5") {
    auto K = RealCyclotomicField::make(5);
    CHECK(splitting_type(Int(19), K).completely_split);
    CHECK(splitting_type(Int(7), K).inert);
    auto st5 = splitting_type(Int(5), K);
    CHECK(st5.totally_ramified);
    CHECK(st5.ef == std::vector<std::pair<int, int>>{{2, 1}});
}

TEST_CASE("ideal lattice determinant and containment") {
    for (long r : {5L, 7L}) {
        auto K = RealCyclotomicField::make(r);
        for (long q : {2L, 3L, 11L, r}) {
            for (const auto& P : factor_prime(Int(q), K)) {
                IdealLattice prev = IdealLattice::power(P, 1);
                CHECK(prev.det() == P.norm());
                for (long k = 2; k <= 5; ++k) {
                    IdealLattice cur = IdealLattice::power(P, k);
                    CHECK(cur.det() == power(P.norm(), static_cast<unsigned long>(k)));
                    CHECK(prev.contains_lattice(cur));  // P^(k) inside P^(k-1)
                    CHECK(!cur.contains_lattice(prev));
                    prev = cur;
                }
            }
        }
    }
}

TEST_CASE("valuation examples for r = 5") {
    auto K = RealCyclotomicField::make(5);
    RingElement z = RingElement::generator(K);
    auto p5 = factor_prime(Int(5), K)[0];
    CHECK(valuation(RingElement::from_integer(K, 2) - z, p5) == 1);

    auto p11 = factor_prime(Int(11), K);
    RingElement x = RingElement(K, {Int(8), Int(-9)});  // 8 - 9z, norm 55
    CHECK(norm(x) == 55);
    CHECK(valuation(x, p11[0]) == 1);  // (11, x - 7): 8 - 9*7 = -55
    CHECK(valuation(x, p11[1]) == 0);  // (11, x - 3): 8 - 9*3 = -19

    CHECK(valuation(RingElement::one(K), p5) == 0);
    CHECK(valuation(RingElement::one(K), p11[0]) == 0);
    CHECK_THROWS_AS(valuation(RingElement::zero(K), p5), undefined_valuation);
}

TEST_CASE("valuation is additive and recovers the norm") {
    std::mt19937_64 rng(53);
    for (long r : {5L, 7L}) {
        auto K = RealCyclotomicField::make(r);
        for (int i = 0; i < 25; ++i) {
            RingElement x = small_product(K, rng, 3);
            RingElement y = small_product(K, rng, 2);
            if (x.is_zero() || y.is_zero()) continue;

            // |N(x)| = prod over P of N(P)^v_P(x)
            Int nx = abs(norm(x));
            if (nx != 1) {
                Int recon = 1;
                for (const auto& [q, e] : factorize(nx)) {
                    (void)e;
                    for (const auto& P : factor_prime(q, K)) {
                        long v = valuation(x, P);
                        recon *= power(P.norm(), static_cast<unsigned long>(v));
                    }
                }
                CHECK(recon == nx);
            }

            // additivity at the primes dividing either factor
            Int nxy = abs(norm(x) * norm(y));
            if (nxy == 1) continue;
            for (const auto& [q, e] : factorize(nxy)) {
                (void)e;
                for (const auto& P : factor_prime(q, K)) {
                    CHECK(valuation(x * y, P) == valuation(x, P) + valuation(y, P));
                }
            }
        }
    }
}

TEST_CASE("residue reduction examples") {
    auto K = RealCyclotomicField::make(5);
    RingElement z = RingElement::generator(K);
    auto p11 = factor_prime(Int(11), K);
    const PrimeIdeal& P7 = p11[0];  // (11, x - 7)
    const PrimeIdeal& P3 = p11[1];  // (11, x - 3)

    CHECK(reduce_mod(RingElement::from_integer(K, 2) - z, P7).scalar() == 6);
    CHECK(reduce_mod(RingElement::zero(K), P7).scalar() == 0);
    CHECK(reduce_mod(z, P3).scalar() == 3);

    // inert prime: residue field F_49, image of z is the class of x
    auto p7 = factor_prime(Int(7), K)[0];
    auto img = reduce_mod(z, p7);
    CHECK(!img.is_scalar());
    CHECK(img.value == fq::Poly{Int(0), Int(1)});
    CHECK_THROWS_AS(img.scalar(), rejected_input);
}

TEST_CASE("radical outside examples") {
    auto K = RealCyclotomicField::make(5);
    RingElement x(K, {Int(8), Int(-9)});
    auto rad = radical_outside(x, Int(10));
    REQUIRE(rad.size() == 1);
    CHECK(rad[0].q == 11);
    CHECK(rad[0].g == fq::Poly{Int(4), Int(1)});  // the conjugate containing 8 - 9z

    CHECK(radical_outside(RingElement::one(K), Int(10)).empty());

    auto rad3 = radical_outside(Int(3), Int(10), K);
    REQUIRE(rad3.size() == 1);
    CHECK(rad3[0].q == 3);
    CHECK(rad3[0].f == 2);

    CHECK_THROWS_AS(radical_outside(RingElement::zero(K), Int(10)), rejected_input);
}

TEST_CASE("coset representatives enumerate the quotient") {
    auto K = RealCyclotomicField::make(5);
    auto p2 = factor_prime(Int(2), K)[0];  // inert
    IdealLattice sq = IdealLattice::power(p2, 2);
    auto reps = sq.coset_representatives(K);
    CHECK(reps.size() == 16);
    // distinct modulo the lattice
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j) CHECK(!sq.contains(reps[i] - reps[j]));
}
