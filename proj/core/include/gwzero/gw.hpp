#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwzero/fourmanifold.hpp"
#include "gwzero/gwvalue.hpp"
#include "gwzero/sixfold.hpp"

namespace gwzero {

/// A genus-zero Gromov-Witten query GW_{[A],k}(alpha_1, ..., alpha_k) on a
/// 4-manifold. The space is borrowed, not owned.
struct GWQuery4 {
    const Manifold4* space = nullptr;
    Class2 cls;
    std::vector<CohoClass4> insertions;

    int k() const { return static_cast<int>(insertions.size()); }
};

/// The same query shape on a stabilization X x S2.
struct GWQuery6 {
    const Stabilized6* space = nullptr;
    Class6 cls;
    std::vector<CohoClass6> insertions;

    int k() const { return static_cast<int>(insertions.size()); }
};

/// A computed value together with a human-readable trace of the rules that
/// fired, in order. Trace lines cite the statements they rest on (Lemma 1.1,
/// Theorem 2.3, ...).
struct Evaluation {
    GWValue value;
    std::vector<std::string> trace;
};

/// Expected dimension 2n - 6 + 2 c1[A] + 2k of the genus-zero moduli
/// pseudocycle, with 2n the real dimension of the space.
Z moduli_dim(const Manifold4& x, const Class2& cls, int k);
Z moduli_dim(const Stabilized6& s, const Class6& cls, int k);

/// True iff the insertion degrees sum to the moduli dimension.
bool dimension_condition(const GWQuery4& q);
bool dimension_condition(const GWQuery6& q);

/// Condition (1): no divisor class B with [A] = m[B] and c1[B] = 0. When the
/// c1 pairing is nonzero this holds outright; when it vanishes we require
/// primitivity (conservative: sphericality of B is not tracked).
/// Throws ZeroClassError on the zero class.
bool condition_1(const Manifold4& x, const Class2& cls);
bool condition_1(const Stabilized6& s, const Class6& cls);

/// Semipositivity holds for every space this library models (real dimension
/// at most six).
bool semipositive_ok(const Manifold4& x);
bool semipositive_ok(const Stabilized6& s);

/// Fundamental class axiom (Lemma 1.1): a degree-0 insertion with k >= 1 and
/// a nonzero class forces the invariant to vanish.
std::optional<GWValue> apply_fundamental_class(const GWQuery4& q);
std::optional<GWValue> apply_fundamental_class(const GWQuery6& q);

struct DivisorStep4 {
    Z multiplier;
    GWQuery4 reduced;
};
struct DivisorStep6 {
    Z multiplier;
    GWQuery6 reduced;
};

/// Divisor axiom (Lemma 1.2): if the last insertion has degree 2, peel it
/// and return its pairing with the class. None when the preconditions
/// (nonzero class, k >= 1, degree-2 tail) fail.
std::optional<DivisorStep4> apply_divisor(const GWQuery4& q);
std::optional<DivisorStep6> apply_divisor(const GWQuery6& q);

/// Closed-form evaluator for 4-manifold queries (Example 2.1, Theorem 2.3,
/// Theorem 2.5, plus the axioms and conventions). First matching rule wins.
Evaluation eval_4(const GWQuery4& q);

/// Closed-form evaluator for stabilization queries (Lemma 3.2, Theorem 3.3,
/// Theorem 3.5, Corollary 3.6).
Evaluation eval_6(const GWQuery6& q);

/// Independent oracle: reduce via the two axioms alone down to the base
/// cases k = 0 (4-manifold, value 1), k = 1 with a single degree-4 insertion
/// (6-fold, value = pairing with [E x S2]) or k = 0 (6-fold, value 0).
/// Requires an exceptional class (or exceptional pushforward); stuck states
/// yield NotDetermined("irreducible query").
Evaluation reduce_via_axioms(const GWQuery4& q);
Evaluation reduce_via_axioms(const GWQuery6& q);

}  // namespace gwzero
