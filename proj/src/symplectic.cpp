#include "frey/symplectic.hpp"

#include <algorithm>
#include <set>

namespace frey {

bool lemma16_test(const Int& v1, const Int& v2, const Int& w1, const Int& w2, const Int& p) {
    if (!is_prime(p) || p == 2) throw rejected_input("lemma16_test: p must be an odd prime");
    Int prod = v1 * v2 * w1 * w2;
    if (prod == 0 || mod_canonical(prod, p) == 0)
        throw rejected_input("lemma16_test: p must not divide the valuations");
    return jacobi(prod, p) == 1;
}

std::string to_string(NiCase c) {
    switch (c) {
        case NiCase::case_1a: return "1a";
        case NiCase::case_1b: return "1b";
        default: return "2";
    }
}

NiValue compute_ni(NiCase tag, const NiInputs& in) {
    if (in.d_exponent <= 0 || in.curve_val_aux <= 0 || in.curve_val_main <= 0)
        throw rejected_input("compute_ni: valuation inputs must be strictly positive");
    if (in.two_adic_d < 0 || in.r_adic_d < 0)
        throw rejected_input("compute_ni: d-valuations cannot be negative");
    if (tag == NiCase::case_2 && (in.r < 5 || !is_prime(Int(in.r))))
        throw rejected_input("compute_ni: case 2 requires the prime r");

    Int vv = Int(in.curve_val_aux) * Int(in.curve_val_main) * Int(in.d_exponent);
    Int value;
    switch (tag) {
        case NiCase::case_1a:
            // square class of (-8 + 4*v_2(d)) * 4*d_exponent, divided by 16
            value = Int(in.two_adic_d - 2) * vv;
            break;
        case NiCase::case_1b:
            // square class of (-8 + 4*v_2(d)) * 2*d_exponent
            if (in.two_adic_d % 2 == 0)
                value = Int((in.two_adic_d - 2) / 2) * vv;
            else
                value = Int(2 * (in.two_adic_d - 2)) * vv;
            break;
        case NiCase::case_2:
            // the r-adic congruence -2r shifts by 2(r-1)*v_r(d)
            value = Int(-2 * in.r + 2 * (in.r - 1) * in.r_adic_d) * vv;
            break;
    }
    if (value >= 0)
        throw invariant_violation(
            "compute_ni: n_i is not negative; the inputs describe an even d or r | d, "
            "where the congruence argument breaks down");
    NiValue out;
    out.tag = tag;
    out.value = value;
    return out;
}

bool DensityReport::operator==(const DensityReport& o) const {
    return modulus == o.modulus && residues == o.residues && density == o.density && k == o.k &&
           verified_bound == o.verified_bound && n_values == o.n_values && paper_lower_bound == o.paper_lower_bound;
}

namespace {

Rational euler_phi_fraction(const Int& count, const Int& modulus) {
    Int phi = 1;
    for (const auto& [q, e] : factorize(modulus)) phi *= power(q, static_cast<unsigned long>(e - 1)) * (q - 1);
    Rational dens(count, phi);
    dens.canonicalize();
    return dens;
}

// classes c mod 4q with (q/p) = 1 for primes p = c mod 4q, via reciprocity
std::vector<Int> reciprocity_classes(const Int& q) {
    Int modulus = 4 * q;
    std::vector<Int> out;
    for (Int c = 1; c < modulus; c += 2) {
        if (mod_canonical(c, q) == 0) continue;
        int symbol = jacobi(c, q);  // (c/q) = (p/q) for p = c mod q
        int sign = (mod_canonical(q, Int(4)) == 3 && mod_canonical(c, Int(4)) == 3) ? -1 : 1;
        if (symbol * sign == 1) out.push_back(c);
    }
    return out;
}

std::vector<Int> crt_combine(const std::vector<Int>& res_a, const Int& mod_a, const std::vector<Int>& res_b,
                             const Int& mod_b) {
    std::vector<Int> out;
    for (const Int& a : res_a) {
        for (const Int& b : res_b) {
            // x = a mod mod_a, x = b mod mod_b; moduli share only the factor
            // 4 | mod_b when mod_a = 8, handled via the compatibility check
            Int g = gcd(mod_a, mod_b);
            if (mod_canonical(a - b, g) != 0) continue;
            Int lcm_ab = mod_a / g * mod_b;
            // solve by scanning multiples of mod_a (moduli are tiny)
            Int x = a;
            while (mod_canonical(x, mod_b) != b) x += mod_a;
            out.push_back(mod_canonical(x, lcm_ab));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void verify_nonsquares(DensityReport& rep) {
    if (rep.residues.empty()) return;
    long bound = rep.verified_bound.get_si();
    for (long p : primes_below(bound)) {
        Int pp(p);
        if (std::find(rep.residues.begin(), rep.residues.end(), mod_canonical(pp, rep.modulus)) == rep.residues.end())
            continue;
        for (const Int& n : rep.n_values) {
            require(jacobi(n, pp) == -1,
                    "density_set: " + n.get_str() + " is a square mod " + pp.get_str() + ", class construction is wrong");
        }
    }
}

}  // namespace

DensityReport base_density_report(const Int& verified_bound) {
    DensityReport rep;
    rep.modulus = 8;
    rep.residues = {Int(7)};
    rep.density = Rational(1, 4);
    rep.k = 0;
    rep.verified_bound = verified_bound;
    rep.paper_lower_bound = 1;
    return rep;
}

DensityReport density_set(const std::vector<Int>& n_values, const std::vector<Int>& aux, const Int& verified_bound) {
    if (n_values.empty()) throw rejected_input("density_set: no n_i values given");
    for (const Int& n : n_values)
        if (n >= 0) throw invariant_violation("density_set: n_i must be negative (got " + n.get_str() + ")");
    std::set<Int> odd_primes;
    for (const Int& n : n_values) {
        for (const auto& [q, e] : factorize(n)) {
            (void)e;
            if (q != 2) odd_primes.insert(q);
        }
    }
    for (const Int& q : aux) {
        if (q == 2 || !is_prime(q)) throw rejected_input("density_set: aux entries must be odd primes");
        odd_primes.insert(q);
    }

    DensityReport rep;
    rep.modulus = 8;
    rep.residues = {Int(7)};
    for (const Int& q : odd_primes) {
        rep.residues = crt_combine(rep.residues, rep.modulus, reciprocity_classes(q), 4 * q);
        rep.modulus *= q;  // lcm(8, 4q) multiplies the odd part only
    }
    std::sort(rep.residues.begin(), rep.residues.end());
    rep.k = static_cast<long>(n_values.size());
    rep.n_values = n_values;
    rep.verified_bound = verified_bound;
    rep.density = euler_phi_fraction(Int(static_cast<long>(rep.residues.size())), rep.modulus);
    rep.paper_lower_bound = Rational(1, power(Int(2), static_cast<unsigned long>(rep.k)));
    require(rep.density > 0, "density_set: empty class set");
    for (const Int& c : rep.residues) {
        require(gcd(c, rep.modulus) == 1, "density_set: residue not coprime to modulus");
        require(mod_canonical(c, Int(8)) == 7, "density_set: residue not 7 mod 8");
    }
    verify_nonsquares(rep);
    return rep;
}

bool CurveElimination::operator==(const CurveElimination& o) const {
    return label == o.label && included == o.included && diagnostic == o.diagnostic && case_tag == o.case_tag &&
           q == o.q && aux_prime == o.aux_prime && main_prime == o.main_prime && curve_val_aux == o.curve_val_aux &&
           curve_val_main == o.curve_val_main && trusted_valuations == o.trusted_valuations && ni == o.ni &&
           ni_variant == o.ni_variant;
}

bool SymplecticReport::operator==(const SymplecticReport& o) const {
    return r == o.r && d == o.d && d0 == o.d0 && d1 == o.d1 && scenario == o.scenario && p_min == o.p_min &&
           case2_printed_variant == o.case2_printed_variant && curves == o.curves && density == o.density &&
           vacuous == o.vacuous && lemma_checked_primes == o.lemma_checked_primes;
}

namespace {

// first prime above q at which the record's minimal valuation resolves to
// a positive value
struct PrimePick {
    PrimeIdeal P;
    ResolvedValuation rv;
};

std::optional<PrimePick> pick_prime_with_valuation(const CurveOverKRecord& rec, const std::vector<PrimeIdeal>& primes,
                                                   std::string* diagnostic) {
    std::string last_diag;
    for (const auto& P : primes) {
        std::string diag;
        auto rv = resolve_minimal_valuation(rec, P, &diag);
        if (rv && rv->value > 0) return PrimePick{P, *rv};
        if (!diag.empty()) last_diag = diag;
        if (rv && rv->value <= 0) last_diag = "minimal valuation at " + P.to_string() + " is not positive";
    }
    if (diagnostic) *diagnostic = last_diag.empty() ? "no usable prime in the conjugacy class" : last_diag;
    return std::nullopt;
}

}  // namespace

SymplecticReport eliminate_symplectic(const SolutionContext& ctx, Scenario scenario,
                                      std::vector<CurveOverKRecord> curves, const EliminateOptions& options) {
    const FieldPtr& K = ctx.field();
    SymplecticReport rep;
    rep.r = ctx.r();
    rep.d = ctx.d();
    rep.d0 = ctx.d0();
    rep.d1 = ctx.d1();
    rep.scenario = scenario;
    rep.p_min = ctx.p_min();
    rep.case2_printed_variant = options.case2_printed_variant;

    if (ctx.d() == 1) throw rejected_input("eliminate: d = 1 has no Steinberg prime to work with");

    // choose the odd prime of d driving the congruence
    Int q = 0;
    NiCase tag;
    if (scenario == Scenario::even_sum) {
        if (ctx.d0() > 1) {
            q = factorize(ctx.d0()).begin()->first;
            tag = NiCase::case_1a;
        } else {
            q = factorize(ctx.d1()).begin()->first;
            tag = NiCase::case_1b;
        }
    } else {
        q = ctx.d_factors().begin()->first;
        tag = NiCase::case_2;
    }
    long d_exponent = 0;
    if (tag == NiCase::case_1a) d_exponent = int_valuation(ctx.d0(), q);
    if (tag == NiCase::case_1b) d_exponent = int_valuation(ctx.d1(), q);
    if (tag == NiCase::case_2) d_exponent = int_valuation(ctx.d(), q);

    auto primes_above_2 = factor_prime(Int(2), K);
    auto primes_above_q = factor_prime(q, K);
    PrimeIdeal p_r = ramified_prime(K);

    std::vector<Int> n_values;
    for (auto& rec : curves) {
        CurveElimination ce;
        ce.label = rec.label;
        ce.case_tag = tag;
        ce.q = q;
        if (!rec.full_two_torsion) {
            ce.diagnostic = "record does not certify full 2-torsion";
            rep.curves.push_back(std::move(ce));
            continue;
        }

        std::string diag;
        std::optional<PrimePick> aux, main;
        if (tag == NiCase::case_2) {
            aux = options.case2_printed_variant ? pick_prime_with_valuation(rec, primes_above_2, &diag)
                                                : pick_prime_with_valuation(rec, primes_above_q, &diag);
            if (aux) main = pick_prime_with_valuation(rec, {p_r}, &diag);
        } else {
            aux = pick_prime_with_valuation(rec, primes_above_2, &diag);
            if (aux) main = pick_prime_with_valuation(rec, primes_above_q, &diag);
        }
        if (!aux || !main) {
            ce.diagnostic = diag;
            rep.curves.push_back(std::move(ce));
            continue;
        }

        NiInputs in;
        in.d_exponent = d_exponent;
        in.curve_val_aux = aux->rv.value;
        in.curve_val_main = main->rv.value;
        if (tag == NiCase::case_2) in.r = ctx.r();
        NiValue ni = compute_ni(tag, in);

        ce.included = true;
        ce.aux_prime = aux->P.to_string();
        ce.main_prime = main->P.to_string();
        ce.curve_val_aux = aux->rv.value;
        ce.curve_val_main = main->rv.value;
        ce.trusted_valuations = aux->rv.trusted_claim || main->rv.trusted_claim;
        ce.ni = ni.value;

        if (tag == NiCase::case_2) {
            // the other convention for the auxiliary prime, reported when it
            // resolves to a different value
            std::string vdiag;
            auto other = options.case2_printed_variant ? pick_prime_with_valuation(rec, primes_above_q, &vdiag)
                                                       : pick_prime_with_valuation(rec, primes_above_2, &vdiag);
            if (other) {
                NiInputs vin = in;
                vin.curve_val_aux = other->rv.value;
                NiValue vni = compute_ni(tag, vin);
                if (vni.value != ni.value) ce.ni_variant = vni.value;
            }
        }

        n_values.push_back(ni.value);
        rep.curves.push_back(std::move(ce));
    }

    if (n_values.empty()) {
        rep.density = base_density_report(options.verified_bound);
        rep.vacuous = true;
    } else {
        rep.density = density_set(n_values, {}, options.verified_bound);
    }

    // re-run the lemma at every class prime below the bound: the product of
    // the four valuations must be a non-square for every included curve
    Int frey_aux = tag == NiCase::case_2 ? Int(-2 * ctx.r()) : Int(-8);
    long checked = 0;
    for (long pl : primes_below(options.verified_bound.get_si())) {
        Int p(pl);
        if (p < ctx.p_min()) continue;
        if (std::find(rep.density.residues.begin(), rep.density.residues.end(),
                      mod_canonical(p, rep.density.modulus)) == rep.density.residues.end())
            continue;
        bool counted = false;
        for (const auto& ce : rep.curves) {
            if (!ce.included) continue;
            Int frey_main = tag == NiCase::case_1b ? Int(2 * d_exponent) : Int(4 * d_exponent);
            require(!lemma16_test(frey_aux, frey_main, Int(ce.curve_val_aux), Int(ce.curve_val_main), p),
                    "eliminate: lemma test unexpectedly passed at p = " + p.get_str());
            counted = true;
        }
        if (counted) ++checked;
    }
    rep.lemma_checked_primes = checked;
    return rep;
}

}  // namespace frey
