#include "frey/curve_io.hpp"

#include <fstream>

namespace frey {

namespace {

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw rejected_input("curve file: expected an integer or a decimal string");
}

std::vector<Int> int_vector_from_json(const Json& j) {
    if (!j.is_array()) throw rejected_input("curve file: expected a coefficient array");
    std::vector<Int> out;
    for (const auto& v : j) out.push_back(int_from_json(v));
    return out;
}

RingElement element_from_json(const Json& j, const FieldPtr& field) {
    std::vector<Int> c;
    if (j.is_array())
        c = int_vector_from_json(j);
    else
        c = {int_from_json(j)};
    if (static_cast<long>(c.size()) > field->degree())
        throw rejected_input("curve file: coefficient vector longer than the field degree");
    c.resize(static_cast<size_t>(field->degree()), Int(0));
    return RingElement(field, c);
}

Json element_to_json(const RingElement& x) {
    Json arr = Json::array();
    for (const auto& v : x.coeffs()) arr.push_back(v.get_str());
    return arr;
}

Json int_to_json(const Int& v) { return v.get_str(); }

Json rational_to_json(const Rational& v) {
    Json j;
    j["num"] = v.get_num().get_str();
    j["den"] = v.get_den().get_str();
    return j;
}

Rational rational_from_json(const Json& j) {
    Rational v(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
    v.canonicalize();
    return v;
}

}  // namespace

std::vector<CurveOverKRecord> parse_curve_list(const Json& doc, const FieldPtr& expected_field) {
    if (!doc.is_object() || !doc.contains("curves"))
        throw rejected_input("curve file: top level must be an object with a 'curves' array");
    if (doc.contains("field")) {
        long r = doc.at("field").at("r").get<long>();
        if (r != expected_field->r())
            throw rejected_input("curve file: field r = " + std::to_string(r) + " does not match the requested r = " +
                                 std::to_string(expected_field->r()));
    }
    std::vector<CurveOverKRecord> out;
    for (const auto& cj : doc.at("curves")) {
        std::string label = cj.at("label").get<std::string>();
        const auto& aj = cj.at("a_invariants");
        if (!aj.is_array() || aj.size() != 5)
            throw rejected_input("curve '" + label + "': a_invariants must list a1, a2, a3, a4, a6");
        std::array<RingElement, 5> a{
            element_from_json(aj[0], expected_field), element_from_json(aj[1], expected_field),
            element_from_json(aj[2], expected_field), element_from_json(aj[3], expected_field),
            element_from_json(aj[4], expected_field)};
        CurveOverKRecord rec(label, expected_field, a);
        if (cj.contains("disc")) rec.disc = element_from_json(cj.at("disc"), expected_field);
        rec.full_two_torsion = cj.value("full_two_torsion", false);
        if (cj.contains("two_torsion_roots")) {
            for (const auto& rj : cj.at("two_torsion_roots"))
                rec.two_torsion_roots.push_back(element_from_json(rj, expected_field));
        }
        if (cj.contains("minimal_valuations")) {
            for (const auto& vj : cj.at("minimal_valuations")) {
                ClaimedValuation cv;
                cv.q = int_from_json(vj.at("q"));
                cv.g = fq::reduce(int_vector_from_json(vj.at("g")), cv.q);
                cv.value = vj.at("v").get<long>();
                rec.claimed_minimal_valuations.push_back(std::move(cv));
            }
        }
        validate_record(rec);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CurveOverKRecord> load_curve_file(const std::string& path, const FieldPtr& expected_field) {
    std::ifstream in(path);
    if (!in) throw rejected_input("cannot open curve file '" + path + "'");
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw rejected_input("curve file '" + path + "': " + e.what());
    }
    return parse_curve_list(doc, expected_field);
}

Json to_json(const DensityReport& rep) {
    Json j;
    j["modulus"] = int_to_json(rep.modulus);
    Json res = Json::array();
    for (const auto& c : rep.residues) res.push_back(int_to_json(c));
    j["residues"] = res;
    j["density"] = rational_to_json(rep.density);
    j["k"] = rep.k;
    j["verified_bound"] = int_to_json(rep.verified_bound);
    Json ns = Json::array();
    for (const auto& n : rep.n_values) ns.push_back(int_to_json(n));
    j["n_values"] = ns;
    j["paper_lower_bound"] = rational_to_json(rep.paper_lower_bound);
    return j;
}

DensityReport density_report_from_json(const Json& j) {
    DensityReport rep;
    rep.modulus = Int(j.at("modulus").get<std::string>());
    for (const auto& c : j.at("residues")) rep.residues.push_back(Int(c.get<std::string>()));
    rep.density = rational_from_json(j.at("density"));
    rep.k = j.at("k").get<long>();
    rep.verified_bound = Int(j.at("verified_bound").get<std::string>());
    for (const auto& n : j.at("n_values")) rep.n_values.push_back(Int(n.get<std::string>()));
    rep.paper_lower_bound = rational_from_json(j.at("paper_lower_bound"));
    return rep;
}

Json to_json(const SymplecticReport& rep) {
    Json j;
    j["r"] = rep.r;
    j["d"] = int_to_json(rep.d);
    j["d0"] = int_to_json(rep.d0);
    j["d1"] = int_to_json(rep.d1);
    j["scenario"] = to_string(rep.scenario);
    j["p_min"] = rep.p_min;
    j["case2_printed_variant"] = rep.case2_printed_variant;
    j["vacuous"] = rep.vacuous;
    j["lemma_checked_primes"] = rep.lemma_checked_primes;
    j["density"] = to_json(rep.density);
    Json curves = Json::array();
    for (const auto& ce : rep.curves) {
        Json cj;
        cj["label"] = ce.label;
        cj["included"] = ce.included;
        cj["diagnostic"] = ce.diagnostic;
        cj["case"] = to_string(ce.case_tag);
        cj["q"] = int_to_json(ce.q);
        cj["aux_prime"] = ce.aux_prime;
        cj["main_prime"] = ce.main_prime;
        cj["curve_val_aux"] = ce.curve_val_aux;
        cj["curve_val_main"] = ce.curve_val_main;
        cj["trusted_valuations"] = ce.trusted_valuations;
        cj["n_i"] = int_to_json(ce.ni);
        if (ce.ni_variant) cj["n_i_variant"] = int_to_json(*ce.ni_variant);
        curves.push_back(cj);
    }
    j["curves"] = curves;
    return j;
}

SymplecticReport symplectic_report_from_json(const Json& j) {
    SymplecticReport rep;
    rep.r = j.at("r").get<long>();
    rep.d = Int(j.at("d").get<std::string>());
    rep.d0 = Int(j.at("d0").get<std::string>());
    rep.d1 = Int(j.at("d1").get<std::string>());
    rep.scenario = scenario_from_string(j.at("scenario").get<std::string>());
    rep.p_min = j.at("p_min").get<long>();
    rep.case2_printed_variant = j.at("case2_printed_variant").get<bool>();
    rep.vacuous = j.at("vacuous").get<bool>();
    rep.lemma_checked_primes = j.at("lemma_checked_primes").get<long>();
    rep.density = density_report_from_json(j.at("density"));
    for (const auto& cj : j.at("curves")) {
        CurveElimination ce;
        ce.label = cj.at("label").get<std::string>();
        ce.included = cj.at("included").get<bool>();
        ce.diagnostic = cj.at("diagnostic").get<std::string>();
        std::string tag = cj.at("case").get<std::string>();
        ce.case_tag = tag == "1a" ? NiCase::case_1a : tag == "1b" ? NiCase::case_1b : NiCase::case_2;
        ce.q = Int(cj.at("q").get<std::string>());
        ce.aux_prime = cj.at("aux_prime").get<std::string>();
        ce.main_prime = cj.at("main_prime").get<std::string>();
        ce.curve_val_aux = cj.at("curve_val_aux").get<long>();
        ce.curve_val_main = cj.at("curve_val_main").get<long>();
        ce.trusted_valuations = cj.at("trusted_valuations").get<bool>();
        ce.ni = Int(cj.at("n_i").get<std::string>());
        if (cj.contains("n_i_variant")) ce.ni_variant = Int(cj.at("n_i_variant").get<std::string>());
        rep.curves.push_back(std::move(ce));
    }
    return rep;
}

Json to_json(const PadicEliminationResult& rep) {
    Json j;
    j["p"] = int_to_json(rep.p);
    j["split_ok"] = rep.split_ok;
    j["threshold_ok"] = rep.threshold_ok;
    j["p_min_ok"] = rep.p_min_ok;
    j["p_min"] = rep.p_min;
    Json curves = Json::array();
    for (const auto& cr : rep.per_curve) {
        Json cj;
        cj["label"] = cr.label;
        cj["verdict"] = to_string(cr.verdict);
        cj["diagnostic"] = cr.diagnostic;
        Json traces = Json::array();
        for (const auto& [pd, ap] : cr.traces) {
            Json tj;
            tj["prime"] = pd;
            tj["a_P"] = int_to_json(ap);
            traces.push_back(tj);
        }
        cj["traces"] = traces;
        curves.push_back(cj);
    }
    j["curves"] = curves;
    return j;
}

PadicEliminationResult padic_result_from_json(const Json& j) {
    PadicEliminationResult rep;
    rep.p = Int(j.at("p").get<std::string>());
    rep.split_ok = j.at("split_ok").get<bool>();
    rep.threshold_ok = j.at("threshold_ok").get<bool>();
    rep.p_min_ok = j.at("p_min_ok").get<bool>();
    rep.p_min = j.at("p_min").get<long>();
    for (const auto& cj : j.at("curves")) {
        PadicCurveResult cr;
        cr.label = cj.at("label").get<std::string>();
        std::string v = cj.at("verdict").get<std::string>();
        cr.verdict = v == "eliminated" ? PadicVerdict::eliminated
                                       : v == "not-forced" ? PadicVerdict::not_forced : PadicVerdict::bad_reduction_skip;
        cr.diagnostic = cj.at("diagnostic").get<std::string>();
        for (const auto& tj : cj.at("traces"))
            cr.traces.emplace_back(tj.at("prime").get<std::string>(), Int(tj.at("a_P").get<std::string>()));
        rep.per_curve.push_back(std::move(cr));
    }
    return rep;
}

Json to_json(const std::vector<SolutionRecord>& solutions) {
    Json arr = Json::array();
    for (const auto& s : solutions) {
        Json sj;
        sj["a"] = int_to_json(s.a);
        sj["b"] = int_to_json(s.b);
        sj["c"] = int_to_json(s.c);
        sj["primitive"] = s.primitive;
        sj["trivial"] = s.trivial;
        arr.push_back(sj);
    }
    Json j;
    j["solutions"] = arr;
    return j;
}

std::vector<SolutionRecord> solutions_from_json(const Json& j) {
    std::vector<SolutionRecord> out;
    for (const auto& sj : j.at("solutions")) {
        SolutionRecord s;
        s.a = Int(sj.at("a").get<std::string>());
        s.b = Int(sj.at("b").get<std::string>());
        s.c = Int(sj.at("c").get<std::string>());
        s.primitive = sj.at("primitive").get<bool>();
        s.trivial = sj.at("trivial").get<bool>();
        out.push_back(std::move(s));
    }
    return out;
}

Json to_json(const IdentityReport& rep) {
    Json j;
    j["a"] = int_to_json(rep.a);
    j["b"] = int_to_json(rep.b);
    j["r"] = rep.r;
    j["phi"] = int_to_json(rep.phi_value);
    j["gcd"] = int_to_json(rep.gcd_value);
    j["gcd_ok"] = rep.gcd_ok;
    j["r_valuation_ok"] = rep.r_valuation_ok;
    j["factor_product_ok"] = rep.factor_product_ok;
    j["divisor_classes_ok"] = rep.divisor_classes_ok;
    Json cls = Json::array();
    for (const auto& pc : rep.prime_divisor_classes) {
        Json cj;
        cj["q"] = int_to_json(pc.q);
        cj["residue_mod_r"] = pc.residue_mod_r;
        cls.push_back(cj);
    }
    j["prime_divisor_classes"] = cls;
    return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace frey
