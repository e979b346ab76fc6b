#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "frey/prime_ideals.hpp"

namespace frey {

// b- and c-invariants and discriminant of a long Weierstrass model
// [a1, a2, a3, a4, a6] over O_K.
struct WeierstrassInvariants {
    RingElement b2, b4, b6, b8;
    RingElement c4, c6, disc;
};
WeierstrassInvariants weierstrass_invariants(const std::array<RingElement, 5>& a);

// A claimed minimal discriminant valuation at a named prime.
struct ClaimedValuation {
    Int q;
    fq::Poly g;
    long value = 0;
};

// An elliptic curve over K given by an integral model, as supplied by an
// external data file. Isogeny-class representatives enter the pipeline in
// this form.
struct CurveOverKRecord {
    std::string label;
    FieldPtr field;
    std::array<RingElement, 5> a;  // a1, a2, a3, a4, a6
    RingElement disc;
    std::vector<ClaimedValuation> claimed_minimal_valuations;
    bool full_two_torsion = false;
    std::vector<RingElement> two_torsion_roots;  // optional, 3 entries when given

    CurveOverKRecord(std::string label_, FieldPtr field_, std::array<RingElement, 5> a_)
        : label(std::move(label_)), field(field_), a(std::move(a_)), disc(RingElement::zero(field_)) {}
};

// Checks the discriminant formula and, when full_two_torsion is set, that
// a1 = a3 = 0 and the 2-division cubic splits over O_K (supplied roots are
// verified; otherwise a bounded coefficient-box search is attempted).
void validate_record(CurveOverKRecord& rec);

// Resolution of the minimal discriminant valuation of a record at P.
// When the supplied model is certifiably minimal at P (v_P(c4) < 4 or
// v_P(disc) < 12), the claimed value must match the computed one;
// otherwise a claimed value is trusted and flagged.
struct ResolvedValuation {
    long value = 0;
    bool trusted_claim = false;  // true when the claim could not be re-derived
};
std::optional<ResolvedValuation> resolve_minimal_valuation(const CurveOverKRecord& rec, const PrimeIdeal& P,
                                                           std::string* diagnostic = nullptr);

// Valuation triple of the given model at P after repeated (4, 6, 12)
// rescaling; disc entry is the minimal discriminant valuation when the
// model admits one over powers of P.
struct MinimalTriple {
    long c4 = 0;
    long c6 = 0;
    long disc = 0;
    int rescalings = 0;
};
MinimalTriple minimal_valuation_triple(const CurveOverKRecord& rec, const PrimeIdeal& P);

}  // namespace frey
