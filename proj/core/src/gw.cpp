#include "gwzero/gw.hpp"

#include <numeric>

#include "gwzero/errors.hpp"

namespace gwzero {

namespace {

i64 degree_sum_4(const std::vector<CohoClass4>& ins) {
    i64 s = 0;
    for (const auto& a : ins) s += a.degree;
    return s;
}

i64 degree_sum_6(const std::vector<CohoClass6>& ins) {
    i64 s = 0;
    for (const auto& a : ins) s += a.degree;
    return s;
}

bool has_degree_zero_4(const std::vector<CohoClass4>& ins) {
    for (const auto& a : ins)
        if (a.degree == 0) return true;
    return false;
}

bool has_degree_zero_6(const std::vector<CohoClass6>& ins) {
    for (const auto& a : ins)
        if (a.degree == 0) return true;
    return false;
}

void push_condition_1(std::vector<std::string>& trace, bool ok) {
    if (ok)
        trace.push_back("Condition (1): satisfied");
    else
        trace.push_back(
            "Condition (1): not verified (imprimitive class with vanishing c1 pairing); "
            "continuing with the closed forms");
}

void push_dimension(std::vector<std::string>& trace, const Z& dim, i64 sum) {
    trace.push_back("moduli dimension 2n - 6 + 2 c1[A] + 2k = " + to_string(dim) +
                    "; insertion degrees sum to " + std::to_string(sum));
}

Evaluation done(GWValue v, std::vector<std::string> trace) {
    return Evaluation{std::move(v), std::move(trace)};
}

}  // namespace

Z moduli_dim(const Manifold4& x, const Class2& cls, int k) {
    return Z(-2) + 2 * x.c1_pairing(cls) + 2 * Z(k);
}

Z moduli_dim(const Stabilized6& s, const Class6& cls, int k) {
    return 2 * s.c1_pairing(cls) + 2 * Z(k);
}

bool dimension_condition(const GWQuery4& q) {
    return moduli_dim(*q.space, q.cls, q.k()) == degree_sum_4(q.insertions);
}

bool dimension_condition(const GWQuery6& q) {
    return moduli_dim(*q.space, q.cls, q.k()) == degree_sum_6(q.insertions);
}

bool condition_1(const Manifold4& x, const Class2& cls) {
    if (cls.is_zero()) throw ZeroClassError("Condition (1) is undefined for the zero class");
    if (x.c1_pairing(cls) != 0) return true;
    return is_primitive(cls);
}

bool condition_1(const Stabilized6& s, const Class6& cls) {
    if (cls.is_zero()) throw ZeroClassError("Condition (1) is undefined for the zero class");
    if (s.c1_pairing(cls) != 0) return true;
    Class2 flat{cls.base.coords};
    flat.coords.push_back(cls.fiber);
    return is_primitive(flat);
}

bool semipositive_ok(const Manifold4&) { return true; }
bool semipositive_ok(const Stabilized6&) { return true; }

std::optional<GWValue> apply_fundamental_class(const GWQuery4& q) {
    if (q.cls.is_zero() || q.insertions.empty()) return std::nullopt;
    if (has_degree_zero_4(q.insertions)) return GWValue::integer(0);
    return std::nullopt;
}

std::optional<GWValue> apply_fundamental_class(const GWQuery6& q) {
    if (q.cls.is_zero() || q.insertions.empty()) return std::nullopt;
    if (has_degree_zero_6(q.insertions)) return GWValue::integer(0);
    return std::nullopt;
}

std::optional<DivisorStep4> apply_divisor(const GWQuery4& q) {
    if (q.cls.is_zero() || q.insertions.empty()) return std::nullopt;
    if (q.insertions.back().degree != 2) return std::nullopt;
    DivisorStep4 step{pair_deg2(*q.space, q.insertions.back(), q.cls), q};
    step.reduced.insertions.pop_back();
    return step;
}

std::optional<DivisorStep6> apply_divisor(const GWQuery6& q) {
    if (q.cls.is_zero() || q.insertions.empty()) return std::nullopt;
    if (q.insertions.back().degree != 2) return std::nullopt;
    DivisorStep6 step{pair_deg2(*q.space, q.insertions.back(), q.cls), q};
    step.reduced.insertions.pop_back();
    return step;
}

Evaluation eval_4(const GWQuery4& q) {
    const Manifold4& x = *q.space;
    std::vector<std::string> trace;
    trace.push_back("semipositivity: real dimension 4 <= 6");

    if (q.cls.is_zero()) {
        trace.push_back("zero class: GW_{0,k} = 0 by convention");
        return done(GWValue::integer(0), std::move(trace));
    }
    push_condition_1(trace, condition_1(x, q.cls));

    if (q.k() >= 1 && has_degree_zero_4(q.insertions)) {
        trace.push_back("Lemma 1.1: a degree-0 insertion forces the invariant to vanish");
        return done(GWValue::integer(0), std::move(trace));
    }

    const Z dim = moduli_dim(x, q.cls, q.k());
    const i64 sum = degree_sum_4(q.insertions);
    push_dimension(trace, dim, sum);
    if (dim != sum) {
        trace.push_back("dimension condition fails: value 0");
        return done(GWValue::integer(0), std::move(trace));
    }
    trace.push_back("dimension condition holds");

    if (is_exceptional_class(x, q.cls)) {
        trace.push_back("class is a registered exceptional sphere class");
        if (!x.simply_connected()) {
            trace.push_back("Theorem 2.3: hypothesis failure (manifold not simply connected)");
            return done(
                GWValue::not_determined("Theorem 2.3 requires a simply connected manifold"),
                std::move(trace));
        }
        if (q.k() == 0) {
            trace.push_back("Example 2.1: exceptional class with k = 0; value 1");
            return done(GWValue::integer(1), std::move(trace));
        }
        bool all_deg2 = true;
        for (const auto& a : q.insertions)
            if (a.degree != 2) all_deg2 = false;
        if (!all_deg2) {
            trace.push_back("Theorem 2.3: an insertion lies outside H^2; value 0");
            return done(GWValue::integer(0), std::move(trace));
        }
        Z product = 1;
        for (const auto& a : q.insertions) product *= pair_deg2(x, a, q.cls);
        trace.push_back("Theorem 2.3: value = (alpha_1 . [E]) ... (alpha_k . [E]) = " +
                        to_string(product));
        return done(GWValue::integer(product), std::move(trace));
    }

    if (x.simply_connected() && x.b2_plus() > 1) {
        if (auto sphere = registered_sphere(x, q.cls);
            sphere && sphere->embedded_sphere_rep) {
            trace.push_back(
                "Theorem 2.5: non-exceptional class of an embedded sphere with b2+ > 1; "
                "value 0");
            return done(GWValue::integer(0), std::move(trace));
        }
    }

    trace.push_back("no closed form applies");
    return done(GWValue::not_determined("outside the hypotheses of Theorems 2.3/2.5"),
                std::move(trace));
}

Evaluation eval_6(const GWQuery6& q) {
    const Stabilized6& s = *q.space;
    std::vector<std::string> trace;
    trace.push_back("semipositivity: real dimension 6 <= 6");

    if (q.cls.is_zero()) {
        trace.push_back("zero class: GW_{0,k} = 0 by convention");
        return done(GWValue::integer(0), std::move(trace));
    }
    push_condition_1(trace, condition_1(s, q.cls));

    if (q.cls.fiber != 0) {
        trace.push_back("class has a nonzero fiber component");
        return done(GWValue::not_determined("closed forms cover pushforward classes only"),
                    std::move(trace));
    }

    if (q.k() >= 1 && has_degree_zero_6(q.insertions)) {
        trace.push_back("Lemma 1.1: a degree-0 insertion forces the invariant to vanish");
        return done(GWValue::integer(0), std::move(trace));
    }

    const Z dim = moduli_dim(s, q.cls, q.k());
    const i64 sum = degree_sum_6(q.insertions);
    push_dimension(trace, dim, sum);
    if (dim != sum) {
        trace.push_back("dimension condition fails: value 0");
        return done(GWValue::integer(0), std::move(trace));
    }
    trace.push_back("dimension condition holds");

    const Manifold4& base = s.base();
    if (is_exceptional_class(base, q.cls.base)) {
        trace.push_back("class is the pushforward of a registered exceptional sphere class");
        if (!base.simply_connected()) {
            trace.push_back("Theorem 3.5: hypothesis failure (base not simply connected)");
            return done(
                GWValue::not_determined("Theorem 3.5 requires a simply connected base"),
                std::move(trace));
        }
        int deg4 = 0, deg2 = 0, other = 0;
        const CohoClass6* beta = nullptr;
        for (const auto& a : q.insertions) {
            if (a.degree == 4) {
                ++deg4;
                beta = &a;
            } else if (a.degree == 2) {
                ++deg2;
            } else {
                ++other;
            }
        }
        if (deg4 != 1 || other != 0) {
            trace.push_back(
                "Theorem 3.5: insertions must comprise a unique degree-4 class plus "
                "degree-2 classes; value 0");
            return done(GWValue::integer(0), std::move(trace));
        }
        Z value = pair_deg4(s, *beta, sweep_cycle(q.cls.base));
        const Class6 pushed = pushforward(q.cls.base);
        for (const auto& a : q.insertions)
            if (a.degree == 2) value *= pair_deg2(s, a, pushed);
        trace.push_back(
            "Corollary 3.6: value = (beta . [E x S2]) * prod_i (alpha_i . [E-bar]) = " +
            to_string(value));
        return done(GWValue::integer(value), std::move(trace));
    }

    if (base.simply_connected() && base.b2_plus() > 1) {
        if (auto sphere = registered_sphere(base, q.cls.base);
            sphere && sphere->embedded_sphere_rep) {
            trace.push_back(
                "Theorem 3.4: pushforward of a non-exceptional embedded sphere class with "
                "b2+ > 1; value 0");
            return done(GWValue::integer(0), std::move(trace));
        }
    }

    trace.push_back("no closed form applies");
    return done(GWValue::not_determined("outside the hypotheses of Theorems 3.4/3.5"),
                std::move(trace));
}

Evaluation reduce_via_axioms(const GWQuery4& q) {
    const Manifold4& x = *q.space;
    std::vector<std::string> trace;
    trace.push_back("axiom-reduction oracle (Lemmas 1.1 and 1.2)");

    if (!is_exceptional_class(x, q.cls)) {
        trace.push_back("class is not a registered exceptional sphere class");
        return done(GWValue::not_determined("oracle requires a registered exceptional class"),
                    std::move(trace));
    }

    std::vector<CohoClass4> work = q.insertions;
    Z acc = 1;
    for (;;) {
        if (!work.empty() && has_degree_zero_4(work)) {
            trace.push_back("Lemma 1.1: degree-0 insertion; value 0");
            return done(GWValue::integer(0), std::move(trace));
        }
        if (work.empty()) {
            trace.push_back("Example 2.1: base case k = 0; value 1");
            return done(GWValue::integer(acc), std::move(trace));
        }
        int peel = -1;
        for (int i = static_cast<int>(work.size()) - 1; i >= 0; --i) {
            if (work[static_cast<std::size_t>(i)].degree == 2) {
                peel = i;
                break;
            }
        }
        if (peel < 0) {
            trace.push_back("no axiom applies and no base case is reached");
            return done(GWValue::not_determined("irreducible query"), std::move(trace));
        }
        const Z m = pair_deg2(x, work[static_cast<std::size_t>(peel)], q.cls);
        trace.push_back("Lemma 1.2: peel insertion " + std::to_string(peel + 1) +
                        ", multiplier " + to_string(m));
        acc *= m;
        work.erase(work.begin() + peel);
    }
}

Evaluation reduce_via_axioms(const GWQuery6& q) {
    const Stabilized6& s = *q.space;
    std::vector<std::string> trace;
    trace.push_back("axiom-reduction oracle (Lemmas 1.1 and 1.2)");

    if (q.cls.fiber != 0 || !is_exceptional_class(s.base(), q.cls.base)) {
        trace.push_back("class is not the pushforward of a registered exceptional class");
        return done(
            GWValue::not_determined("oracle requires an exceptional pushforward class"),
            std::move(trace));
    }

    std::vector<CohoClass6> work = q.insertions;
    Z acc = 1;
    for (;;) {
        if (!work.empty() && has_degree_zero_6(work)) {
            trace.push_back("Lemma 1.1: degree-0 insertion; value 0");
            return done(GWValue::integer(0), std::move(trace));
        }
        if (work.empty()) {
            trace.push_back("dimension condition: base case k = 0 with c1 pairing 1; value 0");
            return done(GWValue::integer(0), std::move(trace));
        }
        if (work.size() == 1 && work.front().degree == 4) {
            const Z base_value = pair_deg4(s, work.front(), sweep_cycle(q.cls.base));
            trace.push_back("Theorem 3.5 base case: k = 1, value = beta . [E x S2] = " +
                            to_string(base_value));
            acc *= base_value;
            return done(GWValue::integer(acc), std::move(trace));
        }
        int peel = -1;
        for (int i = static_cast<int>(work.size()) - 1; i >= 0; --i) {
            if (work[static_cast<std::size_t>(i)].degree == 2) {
                peel = i;
                break;
            }
        }
        if (peel < 0) {
            trace.push_back("no axiom applies and no base case is reached");
            return done(GWValue::not_determined("irreducible query"), std::move(trace));
        }
        const Z m = pair_deg2(s, work[static_cast<std::size_t>(peel)], q.cls);
        trace.push_back("Lemma 1.2: peel insertion " + std::to_string(peel + 1) +
                        ", multiplier " + to_string(m));
        acc *= m;
        work.erase(work.begin() + peel);
    }
}

}  // namespace gwzero
