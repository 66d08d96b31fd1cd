#include "gwzero/distinguish.hpp"

#include <sstream>

#include <json.hpp>

#include "gwzero/errors.hpp"
#include "gwzero/gw.hpp"
#include "gwzero/sixfold.hpp"

namespace gwzero {

namespace {

using nlohmann::json;

json json_int(const Z& z) {
    if (fits_i64(z)) return json(static_cast<std::int64_t>(z.get_si()));
    return json(to_string(z));
}

json invariants_json(const std::optional<HomeoInvariants>& inv) {
    if (!inv) return json(nullptr);
    return json{{"rank", inv->rank},
                {"signature", {inv->sig.plus, inv->sig.minus}},
                {"parity", to_string(inv->parity)},
                {"simply_connected", inv->simply_connected}};
}

std::string failing_flags(const std::vector<HypothesisFlag>& flags) {
    std::string out;
    for (const auto& f : flags) {
        if (f.holds) continue;
        if (!out.empty()) out += "; ";
        out += f.name;
    }
    return out;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Distinguished: return "Distinguished";
        case Verdict::Indistinguishable: return "Indistinguishable";
        case Verdict::HypothesesNotMet: return "HypothesesNotMet";
        case Verdict::NotDetermined: return "NotDetermined";
    }
    return "NotDetermined";
}

HomeoComparison check_homeomorphic(const Manifold4& x1, const Manifold4& x2) {
    HomeoComparison cmp;
    cmp.first = homeo_invariants(x1);
    cmp.second = homeo_invariants(x2);
    if (!cmp.first || !cmp.second) {
        cmp.note = "not determined: " + (!cmp.first ? x1.name() : x2.name()) +
                   " is not simply connected, so the Freedman criterion does not apply";
        return cmp;
    }
    const bool equal = *cmp.first == *cmp.second;
    cmp.homeomorphic = equal;
    cmp.note = equal ? "Freedman: the (rank, signature, parity) tuples agree over simply "
                       "connected manifolds; homeomorphic"
                     : "the invariant tuples differ; not homeomorphic";
    return cmp;
}

DistinguishReport distinguish_stabilized(const Manifold4& x1, const Manifold4& x2) {
    DistinguishReport r;
    r.first_name = x1.name();
    r.second_name = x2.name();
    r.homeo = check_homeomorphic(x1, x2);

    if (!r.homeo.homeomorphic.has_value()) {
        r.verdict = Verdict::NotDetermined;
        r.detail = r.homeo.note;
        return r;
    }

    r.hypotheses.push_back({"b2+(" + x1.name() + ") > 1", x1.b2_plus() > 1});
    r.hypotheses.push_back({"b2+(" + x2.name() + ") > 1", x2.b2_plus() > 1});
    r.hypotheses.push_back({"homeomorphic (Freedman invariants agree)", *r.homeo.homeomorphic});
    r.hypotheses.push_back({"exactly one factor is minimal", x1.minimal() != x2.minimal()});

    const bool b_ok = x1.b2_plus() > 1 && x2.b2_plus() > 1;
    const bool homeo_ok = *r.homeo.homeomorphic;

    if (b_ok && homeo_ok && x1.minimal() && x2.minimal()) {
        r.verdict = Verdict::Indistinguishable;
        r.detail = "both factors are minimal: genus-zero invariants of the stabilizations in "
                   "pushforward classes of embedded spheres vanish on both sides and cannot "
                   "separate the symplectic structures";
        r.citations = {
            "Freedman: homeomorphism of the simply connected factors from the invariant tuple",
            "Wall; Jupp: " + x1.name() + " x S2 and " + x2.name() + " x S2 are diffeomorphic",
            "Theorem 3.5: the relevant invariants vanish for both minimal factors"};
        return r;
    }

    if (!(b_ok && homeo_ok && (x1.minimal() != x2.minimal()))) {
        r.verdict = Verdict::HypothesesNotMet;
        r.detail = "failing hypotheses: " + failing_flags(r.hypotheses);
        return r;
    }

    const Manifold4& blown = x1.minimal() ? x2 : x1;
    const Manifold4& minimal = x1.minimal() ? x1 : x2;

    const Stabilized6 s = stabilize(blown);
    const Class2 e = blown.exceptional_classes().front();
    const GWQuery6 q{&s, pushforward(e), {pd_of_pushforward(s, e)}};
    const Evaluation ev = eval_6(q);
    const Evaluation red = reduce_via_axioms(q);
    if (!ev.value.is_integer() || !red.value.is_integer()) {
        r.verdict = Verdict::NotDetermined;
        r.detail = "witness evaluation was not determined: " + ev.value.str();
        return r;
    }

    Witness w;
    w.nonminimal_space = blown.name() + " x S2";
    w.minimal_space = minimal.name() + " x S2";
    w.query = "GW_{[E-bar],1}(PD([E-bar])) on " + w.nonminimal_space;
    w.value = ev.value.value();
    w.confirmations = {"eval_6 (Lemma 3.2): " + ev.value.str(),
                       "reduce_via_axioms: " + red.value.str() +
                           (ev.value == red.value ? " (agree)" : " (DISAGREE)")};
    w.vanishing_statement =
        "Theorem 3.5: " + minimal.name() + " is minimal, so every genus-zero invariant of " +
        w.minimal_space + " in pushforward classes of embedded spheres vanishes; the image of "
        "the witness query under any diffeomorphism evaluates to 0";
    w.vanishing_value = 0;
    r.witness = std::move(w);

    r.verdict = Verdict::Distinguished;
    r.detail = "the stabilizations are diffeomorphic but not symplectic deformation "
               "equivalent: the witness invariant is -1 on " + blown.name() +
               " x S2 and the corresponding invariants of " + minimal.name() +
               " x S2 all vanish";
    r.citations = {
        "Freedman: homeomorphism of the simply connected factors from the invariant tuple",
        "Wall; Jupp: " + x1.name() + " x S2 and " + x2.name() + " x S2 are diffeomorphic",
        "Lemma 3.2: the witness invariant equals -1 on " + r.witness->nonminimal_space,
        "Wall, Theorem 9: the homotopy class of compatible almost complex structures is "
        "preserved by the diffeomorphism",
        "Theorem 3.5: the corresponding invariants vanish on " + r.witness->minimal_space,
        "Corollary 3.8: diffeomorphic but not symplectic deformation equivalent"};
    return r;
}

std::string to_text(const DistinguishReport& r) {
    std::ostringstream out;
    out << "distinguish: " << r.first_name << " vs " << r.second_name << "\n";
    if (r.homeo.homeomorphic.has_value())
        out << "homeomorphic: " << (*r.homeo.homeomorphic ? "yes" : "no") << " (" << r.homeo.note
            << ")\n";
    else
        out << "homeomorphic: not determined (" << r.homeo.note << ")\n";
    for (const auto& inv : {std::make_pair(r.first_name, r.homeo.first),
                            std::make_pair(r.second_name, r.homeo.second)}) {
        if (!inv.second) continue;
        out << "  " << inv.first << ": rank " << inv.second->rank << ", signature ("
            << inv.second->sig.plus << "," << inv.second->sig.minus << "), "
            << to_string(inv.second->parity) << "\n";
    }
    if (!r.hypotheses.empty()) {
        out << "hypotheses:\n";
        for (const auto& f : r.hypotheses)
            out << "  [" << (f.holds ? "ok" : "--") << "] " << f.name << "\n";
    }
    out << "verdict: " << to_string(r.verdict) << "\n";
    out << "detail: " << r.detail << "\n";
    if (r.witness) {
        out << "witness:\n";
        out << "  nonvanishing: " << r.witness->query << " = " << to_string(r.witness->value)
            << "\n";
        for (const auto& c : r.witness->confirmations) out << "    " << c << "\n";
        out << "  vanishing: " << r.witness->vanishing_statement << " (value "
            << to_string(r.witness->vanishing_value) << ")\n";
    }
    if (!r.citations.empty()) {
        out << "citations:\n";
        for (const auto& c : r.citations) out << "  - " << c << "\n";
    }
    return out.str();
}

std::string to_json(const DistinguishReport& r) {
    json j;
    j["first"] = {{"name", r.first_name}, {"invariants", invariants_json(r.homeo.first)}};
    j["second"] = {{"name", r.second_name}, {"invariants", invariants_json(r.homeo.second)}};
    j["homeomorphic"] =
        r.homeo.homeomorphic.has_value() ? json(*r.homeo.homeomorphic) : json(nullptr);
    j["homeo_note"] = r.homeo.note;
    j["hypotheses"] = json::array();
    for (const auto& f : r.hypotheses)
        j["hypotheses"].push_back({{"name", f.name}, {"holds", f.holds}});
    j["verdict"] = to_string(r.verdict);
    j["detail"] = r.detail;
    if (r.witness) {
        j["witness"] = {{"nonminimal_space", r.witness->nonminimal_space},
                        {"minimal_space", r.witness->minimal_space},
                        {"query", r.witness->query},
                        {"value", json_int(r.witness->value)},
                        {"confirmations", r.witness->confirmations},
                        {"vanishing_statement", r.witness->vanishing_statement},
                        {"vanishing_value", json_int(r.witness->vanishing_value)}};
    } else {
        j["witness"] = nullptr;
    }
    j["citations"] = r.citations;
    return j.dump(2);
}

}  // namespace gwzero
