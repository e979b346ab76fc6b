#include "frey/frey_curve.hpp"

#include <algorithm>
#include <limits>

namespace frey {

std::string to_string(Scenario s) {
    return s == Scenario::even_sum ? "even-sum" : "r-divides-sum";
}

Scenario scenario_from_string(const std::string& s) {
    if (s == "even-sum") return Scenario::even_sum;
    if (s == "r-divides-sum") return Scenario::r_divides_sum;
    throw rejected_input("unknown scenario '" + s + "' (expected even-sum or r-divides-sum)");
}

std::string to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::good: return "good";
        case ReductionKind::multiplicative: return "multiplicative";
        default: return "outside-paper-case";
    }
}

SolutionContext::SolutionContext(const ContextParams& params)
    : field_(RealCyclotomicField::make(params.r)),
      d_(params.d),
      p_(params.p),
      a_(params.a),
      b_(params.b),
      c_(params.c),
      p_min_(params.p_min) {
    if (d_ < 1) throw rejected_input("context: d must be positive");
    if (d_ % 2 == 0) throw rejected_input("context: d must be odd");
    if (d_ % params.r == 0) throw rejected_input("context: r must not divide d");
    if (perfect_pth_power(d_, static_cast<unsigned long>(params.r)).has_value())
        throw rejected_input("context: d must not be a perfect r-th power");
    if (p_min_ < 2) throw rejected_input("context: p_min must be at least 2");

    if (p_) {
        if (!is_prime(*p_) || *p_ <= 3) throw rejected_input("context: p must be a prime > 3");
        if (d_ % *p_ == 0) throw rejected_input("context: p must not divide d");
    }
    if (a_.has_value() != b_.has_value())
        throw rejected_input("context: a and b must be given together");
    if (a_) {
        if (gcd(*a_, *b_) != 1) throw rejected_input("context: gcd(a, b) must be 1");
        if (*a_ + *b_ == 0) throw degenerate_curve("context: a + b must be nonzero");
    }
    if (c_) {
        if (!a_ || !p_) throw rejected_input("context: c requires a, b and p");
        Int lhs = power(*a_, static_cast<unsigned long>(params.r)) + power(*b_, static_cast<unsigned long>(params.r));
        if (lhs != d_ * power(*c_, p_->get_ui()))
            throw rejected_input("context: a^r + b^r != d*c^p");
    }

    d0_ = 1;
    d1_ = 1;
    if (d_ > 1) {
        d_factors_ = factorize(d_);
        for (const auto& [q, e] : d_factors_) {
            Int part = power(q, static_cast<unsigned long>(e));
            if (mod_canonical(q, Int(params.r)) == 1)
                d1_ *= part;
            else
                d0_ *= part;
        }
    }
}

const Int& SolutionContext::p() const {
    if (!p_) throw rejected_input("context: no exponent p configured");
    return *p_;
}
const Int& SolutionContext::a() const {
    if (!a_) throw rejected_input("context: no concrete (a, b) configured");
    return *a_;
}
const Int& SolutionContext::b() const {
    if (!b_) throw rejected_input("context: no concrete (a, b) configured");
    return *b_;
}
const Int& SolutionContext::c() const {
    if (!c_) throw rejected_input("context: no c configured");
    return *c_;
}

FreyCurve build_frey(const SolutionContext& ctx) {
    const FieldPtr& K = ctx.field();
    const Int& a = ctx.a();
    const Int& b = ctx.b();
    auto k = frey_constants(K);
    Int s = a + b;
    RingElement A = (s * s) * k.alpha;
    RingElement B = k.beta * quadratic_factor(K, 2, a, b);
    RingElement C = A + B;
    require(C == k.gamma * quadratic_factor(K, 1, a, b), "build_frey: A + B != gamma*f2");

    RingElement A2 = A * A, B2 = B * B, AB = A * B;
    RingElement c4 = Int(16) * (A2 + AB + B2);
    RingElement c6 =
        Int(32) * (Int(2) * (A2 * A) + Int(3) * (A2 * B) - Int(3) * (A * B2) - Int(2) * (B2 * B));
    RingElement abc = A * B * C;
    RingElement disc = Int(16) * (abc * abc);
    require(!disc.is_zero(), "build_frey: discriminant vanished");
    return FreyCurve{ctx, A, B, C, c4, c6, disc};
}

namespace {

constexpr long kInfinity = std::numeric_limits<long>::max() / 2;

long val_or_inf(const RingElement& x, const PrimeIdeal& P) {
    return x.is_zero() ? kInfinity : valuation(x, P);
}

Int canonical_residue(long value, const Int& p) { return mod_canonical(Int(value), p); }

}  // namespace

Prop4Result prop4_nonminimality_check(const FreyCurve& F, const PrimeIdeal& P) {
    if (P.q != 2) throw rejected_input("prop4 check: residue characteristic must be 2");
    if (P.e != 1) throw rejected_input("prop4 check: prime above 2 must be unramified");
    Int s = F.ctx.sum_ab();
    if (mod_canonical(s, Int(8)) != 0) throw rejected_input("prop4 check: requires 8 | a+b");

    // part (a) with shift 0: b8 = -(AB)^2 and v_P(A) >= 6 already
    RingElement ab = F.A * F.B;
    require(valuation(ab * ab, P) >= 5, "prop4 check: b8 valuation unexpectedly small");

    // part (b): search for w with w^2 = B - A modulo P^2
    IdealLattice sq = IdealLattice::power(P, 2);
    RingElement target = F.B - F.A;
    for (const RingElement& cand : sq.coset_representatives(F.ctx.field())) {
        if (sq.contains(cand * cand - target)) return Prop4Result{true, cand};
    }
    return Prop4Result{false, std::nullopt};
}

LocalReductionType classify_local(const FreyCurve& F, const PrimeIdeal& P) {
    LocalReductionType out;
    out.P = P;
    const SolutionContext& ctx = F.ctx;
    const long r = ctx.r();
    Int s = ctx.sum_ab();

    if (P.q != 2 && P.q != r) {
        long vdisc = valuation(F.disc, P);
        if (vdisc == 0) {
            out.kind = ReductionKind::good;
            out.conductor_exponent = 0;
            out.min_disc_valuation = 0;
            return out;
        }
        long vc4 = val_or_inf(F.c4, P);
        if (vc4 == 0) {
            out.kind = ReductionKind::multiplicative;
            out.conductor_exponent = 1;
            out.min_disc_valuation = vdisc;  // c4 is a unit, so the model is minimal here
        } else {
            out.kind = ReductionKind::outside_paper_case;
            return out;
        }
    } else if (P.q == r) {
        if (mod_canonical(s, Int(r)) != 0) {
            out.kind = ReductionKind::outside_paper_case;
            return out;
        }
        long vs = valuation(RingElement::from_integer(ctx.field(), s), P);
        long vc4 = val_or_inf(F.c4, P);
        long vc6 = val_or_inf(F.c6, P);
        long vdisc = valuation(F.disc, P);
        require(vc4 == 4 && vc6 == 6 && vdisc == 10 + 4 * vs,
                "classify_local: unexpected valuation triple at the ramified prime");
        out.kind = ReductionKind::multiplicative;
        out.conductor_exponent = 1;
        out.min_disc_valuation = vdisc - 12;  // one (4, 6, 12) rescaling
        require(*out.min_disc_valuation > 0, "classify_local: non-positive minimal valuation at p_r");
    } else {  // P above 2
        if (mod_canonical(s, Int(2)) != 0) {
            out.kind = ReductionKind::outside_paper_case;
            return out;
        }
        if (mod_canonical(s, Int(8)) != 0)
            throw rejected_input("classify_local: 2 | a+b requires 8 | a+b at primes above 2");
        long vs = valuation(RingElement::from_integer(ctx.field(), s), P);
        long vc4 = val_or_inf(F.c4, P);
        long vc6 = val_or_inf(F.c6, P);
        long vdisc = valuation(F.disc, P);
        require(vc4 == 4 && vc6 == 6 && vdisc == 4 + 4 * vs,
                "classify_local: unexpected valuation triple above 2");
        if (!prop4_nonminimality_check(F, P).passed) {
            out.kind = ReductionKind::outside_paper_case;  // unreachable on valid input
            return out;
        }
        out.kind = ReductionKind::multiplicative;
        out.conductor_exponent = 1;
        out.min_disc_valuation = vdisc - 12;
        require(*out.min_disc_valuation > 0, "classify_local: non-positive minimal valuation above 2");
    }

    if (out.kind == ReductionKind::multiplicative && ctx.has_p()) {
        out.disc_val_mod_p = disc_val_mod_p(F, P);
    }
    return out;
}

ConductorShape conductor_shape(const FreyCurve& F) {
    const SolutionContext& ctx = F.ctx;
    const FieldPtr& K = ctx.field();
    const long r = ctx.r();
    Int s = ctx.sum_ab();

    ConductorShape shape;
    if (s % 2 == 0) shape.two_part = 1;
    if (s % r == 0) shape.r_part = 1;

    for (const auto& P : factor_prime(Int(2), K)) shape.local.push_back(classify_local(F, P));
    shape.local.push_back(classify_local(F, ramified_prime(K)));

    // Odd multiplicative primes away from r divide N(ABC); the rational
    // candidates are the primes of a+b and of (a^r + b^r)/(a+b).
    std::map<Int, int> candidates;
    if (abs(s) != 1) candidates = factorize(s);
    Int phi = homogeneous_cyclotomic(r, ctx.a(), ctx.b());
    if (abs(phi) != 1)
        for (const auto& [q, e] : factorize(phi)) candidates[q] += e;
    for (const auto& [q, e] : candidates) {
        (void)e;
        if (q == 2 || q == r) continue;
        for (const auto& P : factor_prime(q, K)) {
            LocalReductionType lt = classify_local(F, P);
            if (lt.kind == ReductionKind::multiplicative) {
                bool divides_sum = valuation(RingElement::from_integer(K, s), P) > 0;
                (divides_sum ? shape.rad_part : shape.c_part).push_back(P);
            }
            if (lt.kind != ReductionKind::good) shape.local.push_back(lt);
        }
    }
    std::sort(shape.rad_part.begin(), shape.rad_part.end());
    std::sort(shape.c_part.begin(), shape.c_part.end());

    auto rad = radical_outside(RingElement::from_integer(K, s), Int(2 * r));
    require(rad == shape.rad_part, "conductor_shape: radical mismatch");
    return shape;
}

SerreLevelSet serre_level_set(const SolutionContext& ctx, Scenario scenario) {
    const FieldPtr& K = ctx.field();
    SerreLevelSet out;

    std::vector<std::pair<Int, int>> d1_primes;
    for (const auto& [q, e] : ctx.d_factors()) {
        if (mod_canonical(q, Int(ctx.r())) == 1) d1_primes.emplace_back(q, e);
    }

    const size_t subsets = size_t{1} << d1_primes.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
        SerreLevel level;
        if (scenario == Scenario::even_sum)
            level.two_exp = 1;
        else
            level.r_exp = 1;
        Int radicand = ctx.d0();
        for (size_t i = 0; i < d1_primes.size(); ++i) {
            if (mask & (size_t{1} << i)) {
                Int part = power(d1_primes[i].first, static_cast<unsigned long>(d1_primes[i].second));
                level.d1_part *= part;
                radicand *= part;
            }
        }
        if (radicand > 1) {
            for (const auto& [q, e] : factorize(radicand)) {
                (void)e;
                if (q == 2 || q == ctx.r()) continue;
                for (const auto& P : factor_prime(q, K)) level.primes.push_back(P);
            }
        }
        std::sort(level.primes.begin(), level.primes.end());
        out.candidates.push_back(std::move(level));
    }
    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const SerreLevel& a, const SerreLevel& b) { return a.d1_part < b.d1_part; });
    require(!out.candidates.empty(), "serre_level_set: no candidates");
    return out;
}

Int disc_val_mod_p(const FreyCurve& F, const PrimeIdeal& P) {
    const SolutionContext& ctx = F.ctx;
    const Int& p = ctx.p();
    const long r = ctx.r();
    Int s = ctx.sum_ab();

    if (P.q == 2) {
        if (s % 2 != 0) throw rejected_input("disc_val_mod_p: prime above 2 needs the even-sum scenario");
        if (mod_canonical(s, Int(8)) != 0)
            throw rejected_input("disc_val_mod_p: 2 | a+b requires 8 | a+b");
        return canonical_residue(-8, p);
    }
    if (P.q == r) {
        if (s % r != 0) throw rejected_input("disc_val_mod_p: ramified prime needs r | a+b");
        return canonical_residue(-2 * r, p);
    }

    long vdisc = valuation(F.disc, P);
    long vc4 = val_or_inf(F.c4, P);
    if (vdisc == 0 || vc4 != 0)
        throw rejected_input("disc_val_mod_p: " + P.to_string() + " is not multiplicative for this curve");
    long vsum = valuation(RingElement::from_integer(ctx.field(), s), P);
    if (vsum > 0) {
        long e_d0 = ctx.d0() == 1 ? 0 : int_valuation(ctx.d0(), P.q);
        return canonical_residue(4 * e_d0, p);
    }
    long vb = val_or_inf(F.B, P);
    long vc = val_or_inf(F.C, P);
    return canonical_residue(2 * (vb + vc), p);
}

}  // namespace frey
