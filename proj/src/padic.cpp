#include "frey/padic.hpp"

#include <algorithm>

#include "frey/parallel.hpp"

namespace frey {

long count_points(const Int& q, const std::array<Int, 5>& a) {
    if (q == 2 || !is_prime(q)) throw rejected_input("count_points: q must be an odd prime");
    // complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    Int b2 = a[0] * a[0] + 4 * a[1];
    Int b4 = 2 * a[3] + a[0] * a[2];
    Int b6 = a[2] * a[2] + 4 * a[4];
    long count = 1;  // point at infinity
    for (Int x = 0; x < q; ++x) {
        Int g = mod_canonical(((4 * x + b2) * x + 2 * b4) * x + b6, q);
        count += 1 + jacobi(g, q);
    }
    return count;
}

FrobeniusTrace trace_of_frobenius(const CurveOverKRecord& E, const PrimeIdeal& P) {
    if (P.f != 1)
        throw rejected_input("trace_of_frobenius: only degree-1 primes are supported (got f = " +
                             std::to_string(P.f) + ")");
    auto triple = minimal_valuation_triple(E, P);
    if (triple.disc != 0) throw rejected_input("trace_of_frobenius: bad reduction at " + P.to_string());
    if (triple.rescalings != 0)
        throw rejected_input("trace_of_frobenius: model is not minimal at " + P.to_string());

    std::array<Int, 5> a_mod;
    for (size_t i = 0; i < 5; ++i) a_mod[i] = reduce_mod(E.a[i], P).scalar();
    long count = count_points(P.q, a_mod);
    FrobeniusTrace t{P, P.q + 1 - count};
    // Weil bound
    require(t.a_P * t.a_P <= 4 * P.q, "trace_of_frobenius: Weil bound violated");
    return t;
}

bool parity_check(const CurveOverKRecord& E, const PrimeIdeal& P) {
    if (!E.full_two_torsion) throw rejected_input("parity_check: curve must have full 2-torsion");
    if (P.q == 2) throw rejected_input("parity_check: residue characteristic must be odd");
    FrobeniusTrace t = trace_of_frobenius(E, P);
    return t.a_P % 2 == 0;
}

std::vector<Int> weil_forcing(const Int& p) {
    if (!is_prime(p)) throw rejected_input("weil_forcing: p must be prime");
    std::vector<Int> out;
    Int bound = 4 * p;
    for (Int k = -2; k <= 2; ++k) {
        for (int sign : {1, -1}) {
            Int a = Int(sign) + k * p;
            if (a * a <= bound) out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(PadicVerdict v) {
    switch (v) {
        case PadicVerdict::eliminated: return "eliminated";
        case PadicVerdict::not_forced: return "not-forced";
        default: return "bad-reduction-skip";
    }
}

PadicEliminationResult eliminate_p_case(const SolutionContext& ctx, const std::vector<CurveOverKRecord>& curves,
                                        const Int& p) {
    const long r = ctx.r();
    if (!is_prime(p)) throw rejected_input("padic: p must be prime");
    Int pm = mod_canonical(p, Int(r));
    if (pm != 1 && pm != r - 1)
        throw rejected_input("padic: p is not +-1 mod r (p = " + p.get_str() + ", r = " + std::to_string(r) + ")");
    if (mod_canonical(Int(2) * r * ctx.d(), p) == 0) throw rejected_input("padic: p divides 2rd");

    PadicEliminationResult out;
    out.p = p;
    out.p_min = ctx.p_min();
    out.p_min_ok = p >= ctx.p_min();
    out.threshold_ok = p >= 7;

    auto st = splitting_type(p, ctx.field());
    out.split_ok = st.completely_split;
    require(out.split_ok, "padic: p = +-1 mod r must split completely");

    auto primes_above = factor_prime(p, ctx.field());
    std::vector<Int> forced = weil_forcing(p);
    bool all_forced_odd = std::all_of(forced.begin(), forced.end(), [](const Int& a) { return a % 2 != 0; });

    out.per_curve.resize(curves.size());
    parallel_for(curves.size(), [&](size_t i) {
        const auto& E = curves[i];
        PadicCurveResult res;
        res.label = E.label;
        bool bad = false;
        for (const auto& P : primes_above) {
            auto triple = minimal_valuation_triple(E, P);
            if (triple.disc != 0 || triple.rescalings != 0) {
                res.verdict = PadicVerdict::bad_reduction_skip;
                res.diagnostic = triple.disc != 0 ? "bad reduction at " + P.to_string()
                                                  : "model not minimal at " + P.to_string();
                bad = true;
                break;
            }
        }
        if (!bad) {
            bool all_even = true;
            for (const auto& P : primes_above) {
                FrobeniusTrace t = trace_of_frobenius(E, P);
                res.traces.emplace_back(P.to_string(), t.a_P);
                if (E.full_two_torsion)
                    require(t.a_P % 2 == 0, "padic: full 2-torsion curve with odd trace at " + P.to_string());
                if (t.a_P % 2 != 0) all_even = false;
            }
            bool contradiction = all_even && all_forced_odd && E.full_two_torsion;
            res.verdict = (contradiction && out.split_ok && out.threshold_ok) ? PadicVerdict::eliminated
                                                                              : PadicVerdict::not_forced;
            if (res.verdict == PadicVerdict::not_forced)
                res.diagnostic = !E.full_two_torsion ? "record does not certify full 2-torsion"
                                                     : "some admissible forced trace is even";
        }
        out.per_curve[i] = std::move(res);
    });
    return out;
}

}  // namespace frey
