#pragma once

#include <optional>

#include "frey/prime_ideals.hpp"

namespace frey {

enum class Scenario { even_sum, r_divides_sum };
std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& s);

// Parameters of x^r + y^r = d z^p together with an optional concrete
// (a, b, c). The coefficient splits as d = d0 * d1 where a prime divides
// d1 exactly when it is 1 mod r.
struct ContextParams {
    long r = 5;
    Int d = 1;
    std::optional<Int> p;
    std::optional<Int> a;
    std::optional<Int> b;
    std::optional<Int> c;
    long p_min = 17;
};

class SolutionContext {
public:
    explicit SolutionContext(const ContextParams& params);

    const FieldPtr& field() const { return field_; }
    long r() const { return field_->r(); }
    const Int& d() const { return d_; }
    const Int& d0() const { return d0_; }
    const Int& d1() const { return d1_; }
    const std::map<Int, int>& d_factors() const { return d_factors_; }
    long p_min() const { return p_min_; }

    bool has_p() const { return p_.has_value(); }
    const Int& p() const;
    bool has_ab() const { return a_.has_value(); }
    const Int& a() const;
    const Int& b() const;
    Int sum_ab() const { return a() + b(); }
    bool has_c() const { return c_.has_value(); }
    const Int& c() const;

    bool even_sum() const { return sum_ab() % 2 == 0; }
    bool r_divides_sum() const { return sum_ab() % r() == 0; }

private:
    FieldPtr field_;
    Int d_, d0_, d1_;
    std::map<Int, int> d_factors_;
    std::optional<Int> p_, a_, b_, c_;
    long p_min_;
};

// The curve Y^2 = X(X - A)(X + B) with A = alpha*(a+b)^2, B = beta*f1(a,b)
// and C = A + B = gamma*f2(a,b), plus its standard invariants
//   c4 = 2^4 (A^2 + AB + B^2)
//   c6 = 2^5 (2A^3 + 3A^2 B - 3A B^2 - 2B^3)
//   disc = 2^4 (ABC)^2.
struct FreyCurve {
    SolutionContext ctx;
    RingElement A, B, C;
    RingElement c4, c6, disc;
};

FreyCurve build_frey(const SolutionContext& ctx);

enum class ReductionKind { good, multiplicative, outside_paper_case };
std::string to_string(ReductionKind k);

struct LocalReductionType {
    PrimeIdeal P;
    ReductionKind kind = ReductionKind::outside_paper_case;
    std::optional<int> conductor_exponent;
    std::optional<long> min_disc_valuation;
    std::optional<Int> disc_val_mod_p;  // canonical residue, present when computable
};

// Local analysis at P. Away from 2 and r this compares v_P(disc) with
// v_P(c4). At the ramified prime it requires r | a+b, at primes above 2 it
// requires 8 | a+b (rejecting 2 | a+b with 8 not dividing), and performs
// the valuation-triple minimalization, subtracting (4, 6, 12) once.
// Regimes the analysis does not cover come back as outside_paper_case.
LocalReductionType classify_local(const FreyCurve& F, const PrimeIdeal& P);

// Witnessed non-minimality test at a prime above 2 for models in high Tate
// cases: part (a) holds with shift 0 since v_P(b8) = 2*v_P(AB) >= 5, and
// part (b) asks for B - A to be a square modulo P^2, decided by exhaustive
// search over coset representatives.
struct Prop4Result {
    bool passed = false;
    std::optional<RingElement> witness;
};
Prop4Result prop4_nonminimality_check(const FreyCurve& F, const PrimeIdeal& P);

// Conductor skeleton 2^s * p_r^t * c * rad, with s known only when
// 2 | a+b, t known only when r | a+b. rad collects the multiplicative
// primes through a+b away from 2r, c the multiplicative primes through
// B*C away from a+b.
struct ConductorShape {
    std::optional<int> two_part;
    std::optional<int> r_part;
    std::vector<PrimeIdeal> c_part;
    std::vector<PrimeIdeal> rad_part;
    std::vector<LocalReductionType> local;
};
ConductorShape conductor_shape(const FreyCurve& F);

// One candidate level 2^s * p_r^t * rad(d0 * d1') per admissible divisor
// d1' of d1 built from full prime powers.
struct SerreLevel {
    std::optional<int> two_exp;
    std::optional<int> r_exp;
    Int d1_part = 1;
    std::vector<PrimeIdeal> primes;
};
struct SerreLevelSet {
    std::vector<SerreLevel> candidates;
};
SerreLevelSet serre_level_set(const SolutionContext& ctx, Scenario scenario);

// Residue class of the minimal discriminant valuation mod p: -8 at primes
// above 2 (even-sum scenario), -2r at the ramified prime (r | a+b), 4*v_q(d0)
// at multiplicative primes through a+b, and 2(v_P(B) + v_P(C)) at the
// remaining multiplicative primes. Requires ctx.p.
Int disc_val_mod_p(const FreyCurve& F, const PrimeIdeal& P);

}  // namespace frey
