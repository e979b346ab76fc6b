#include "frey/curve_record.hpp"

#include <limits>

namespace frey {

WeierstrassInvariants weierstrass_invariants(const std::array<RingElement, 5>& a) {
    const RingElement& a1 = a[0];
    const RingElement& a2 = a[1];
    const RingElement& a3 = a[2];
    const RingElement& a4 = a[3];
    const RingElement& a6 = a[4];

    RingElement b2 = a1 * a1 + Int(4) * a2;
    RingElement b4 = Int(2) * a4 + a1 * a3;
    RingElement b6 = a3 * a3 + Int(4) * a6;
    RingElement b8 = a1 * a1 * a6 + Int(4) * (a2 * a6) - a1 * a3 * a4 + a2 * (a3 * a3) - a4 * a4;
    RingElement c4 = b2 * b2 - Int(24) * b4;
    RingElement c6 = -(b2 * b2 * b2) + Int(36) * (b2 * b4) - Int(216) * b6;
    RingElement disc = -(b2 * b2 * b8) - Int(8) * (b4 * b4 * b4) - Int(27) * (b6 * b6) + Int(9) * (b2 * b4 * b6);

    // 1728 disc = c4^3 - c6^2
    require(Int(1728) * disc == c4 * c4 * c4 - c6 * c6, "weierstrass invariants: 1728-identity failed");
    return WeierstrassInvariants{b2, b4, b6, b8, c4, c6, disc};
}

namespace {

bool cubic_splits_with_roots(const CurveOverKRecord& rec, const std::vector<RingElement>& roots) {
    if (roots.size() != 3) return false;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            if (roots[i] == roots[j]) return false;
    // (X - e1)(X - e2)(X - e3) = X^3 + a2 X^2 + a4 X + a6
    RingElement s1 = roots[0] + roots[1] + roots[2];
    RingElement s2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
    RingElement s3 = roots[0] * roots[1] * roots[2];
    return -s1 == rec.a[1] && s2 == rec.a[3] && -s3 == rec.a[4];
}

// Coefficient-box search for roots of X^3 + a2 X^2 + a4 X + a6; only
// feasible for small field degree.
std::optional<std::vector<RingElement>> search_roots(const CurveOverKRecord& rec, long box) {
    const FieldPtr& K = rec.field;
    const long m = K->degree();
    if (m > 3) return std::nullopt;
    std::vector<RingElement> found;
    std::vector<Int> c(static_cast<size_t>(m), Int(-box));
    while (true) {
        RingElement x(K, c);
        RingElement val = ((x + rec.a[1]) * x + rec.a[3]) * x + rec.a[4];
        if (val.is_zero()) {
            found.push_back(x);
            if (found.size() == 3) return found;
        }
        size_t i = 0;
        while (i < static_cast<size_t>(m)) {
            c[i] += 1;
            if (c[i] <= box) break;
            c[i] = -box;
            ++i;
        }
        if (i == static_cast<size_t>(m)) break;
    }
    return std::nullopt;
}

}  // namespace

void validate_record(CurveOverKRecord& rec) {
    auto inv = weierstrass_invariants(rec.a);
    if (inv.disc.is_zero())
        throw rejected_input("curve '" + rec.label + "': singular model (disc = 0)");
    if (rec.disc.is_zero())
        rec.disc = inv.disc;
    else if (rec.disc != inv.disc)
        throw rejected_input("curve '" + rec.label + "': supplied disc does not match the model");

    if (rec.full_two_torsion) {
        if (!rec.a[0].is_zero() || !rec.a[2].is_zero())
            throw rejected_input("curve '" + rec.label + "': full 2-torsion requires a1 = a3 = 0");
        if (!rec.two_torsion_roots.empty()) {
            if (!cubic_splits_with_roots(rec, rec.two_torsion_roots))
                throw rejected_input("curve '" + rec.label + "': supplied 2-torsion roots do not split the cubic");
        } else {
            auto roots = search_roots(rec, 40);
            if (!roots || !cubic_splits_with_roots(rec, *roots))
                throw rejected_input("curve '" + rec.label +
                                     "': could not verify full 2-torsion (supply two_torsion_roots)");
            rec.two_torsion_roots = *roots;
        }
    }
}

MinimalTriple minimal_valuation_triple(const CurveOverKRecord& rec, const PrimeIdeal& P) {
    constexpr long kInf = std::numeric_limits<long>::max() / 2;
    auto inv = weierstrass_invariants(rec.a);
    MinimalTriple t;
    t.c4 = inv.c4.is_zero() ? kInf : valuation(inv.c4, P);
    t.c6 = inv.c6.is_zero() ? kInf : valuation(inv.c6, P);
    t.disc = valuation(inv.disc, P);
    while (t.c4 >= 4 && t.c6 >= 6 && t.disc >= 12) {
        t.c4 -= 4;
        t.c6 -= 6;
        t.disc -= 12;
        ++t.rescalings;
    }
    return t;
}

std::optional<ResolvedValuation> resolve_minimal_valuation(const CurveOverKRecord& rec, const PrimeIdeal& P,
                                                           std::string* diagnostic) {
    auto inv = weierstrass_invariants(rec.a);
    long vc4 = inv.c4.is_zero() ? std::numeric_limits<long>::max() / 2 : valuation(inv.c4, P);
    long vdisc = valuation(inv.disc, P);
    bool certifiable = vc4 < 4 || vdisc < 12;  // no (4, 6, 12) rescaling possible

    const ClaimedValuation* claim = nullptr;
    for (const auto& cv : rec.claimed_minimal_valuations) {
        if (cv.q == P.q && cv.g == P.g) {
            claim = &cv;
            break;
        }
    }

    if (certifiable) {
        if (claim && claim->value != vdisc) {
            if (diagnostic)
                *diagnostic = "claimed minimal valuation " + std::to_string(claim->value) + " at " + P.to_string() +
                              " contradicts the certified value " + std::to_string(vdisc);
            return std::nullopt;
        }
        return ResolvedValuation{vdisc, false};
    }
    if (claim) return ResolvedValuation{claim->value, true};
    if (diagnostic)
        *diagnostic = "model not certifiably minimal at " + P.to_string() + " and no claimed valuation given";
    return std::nullopt;
}

}  // namespace frey
