#pragma once

#include <string>
#include <vector>

#include "gwzero/fourmanifold.hpp"

namespace gwzero {

/// Second homology class of X x S2: a pushforward part in the base basis
/// plus an integer multiple of the fiber class f = [. x S2].
struct Class6 {
    Class2 base;
    i64 fiber = 0;

    bool is_zero() const { return fiber == 0 && base.is_zero(); }
    friend bool operator==(const Class6&, const Class6&) = default;
};

/// Fourth homology class of X x S2 in the basis [X x pt], {e_i x S2}.
struct H4Class6 {
    i64 point_coeff = 0;
    IVec sweep;

    friend bool operator==(const H4Class6&, const H4Class6&) = default;
};

/// Cohomology class of X x S2, as pairing data against the explicit H2/H4
/// bases. Degree 2: a functional on the base H2 plus a coefficient of tau
/// (the S2-area generator). Degree 4: a coefficient of the base top class
/// plus a base-H2 functional tensored with tau. Degrees 0 and 6: a single
/// integer.
struct CohoClass6 {
    int degree = 0;
    IVec phi;            // degree 2
    i64 lam = 0;         // degree 2
    i64 vol_coeff = 0;   // degree 4
    IVec psi;            // degree 4
    i64 scalar = 0;      // degree 0 or 6

    static CohoClass6 unit(i64 c) { return {0, {}, 0, 0, {}, c}; }
    static CohoClass6 deg2(IVec phi, i64 lam) { return {2, std::move(phi), lam, 0, {}, 0}; }
    static CohoClass6 deg4(i64 vol, IVec psi) { return {4, {}, 0, vol, std::move(psi), 0}; }
    static CohoClass6 top(i64 c) { return {6, {}, 0, 0, {}, c}; }

    friend bool operator==(const CohoClass6&, const CohoClass6&) = default;
};

/// The product X x S2 with Kunneth-graded cohomology. Held by value; the
/// inverse Gram matrix of the base is cached for the triple intersection
/// form.
class Stabilized6 {
public:
    explicit Stabilized6(Manifold4 base);

    const Manifold4& base() const { return base_; }
    bool simply_connected() const { return base_.simply_connected(); }
    int base_rank() const { return base_.rank(); }
    int h2_rank() const { return base_.rank() + 1; }
    const ZMat& inverse_gram() const { return inverse_gram_; }

    /// c1(X x S2) pairing: <c1(X), a> + 2b.
    Z c1_pairing(const Class6& c) const;

private:
    Manifold4 base_;
    ZMat inverse_gram_;
};

Stabilized6 stabilize(const Manifold4& x);

/// Pushforward of a base class under the inclusion X x {pt} -> X x S2.
Class6 pushforward(const Class2& a);

/// [B x S2] in the H4 basis.
H4Class6 sweep_cycle(const Class2& b);

/// [X x pt] in the H4 basis.
H4Class6 point_cycle(const Stabilized6& s);

// The pd_* maps and the triple product rely on the odd cohomology of the
// product vanishing; they throw HypothesisError when the base is not
// simply connected.

/// Degree-4 Poincare dual of a pushforward class: pairs with [B x S2] as
/// A.B and with [X x pt] as 0.
CohoClass6 pd_of_pushforward(const Stabilized6& s, const Class2& a);

/// Degree-2 Poincare dual of [A x S2]: pairs with pushforwards as A.B and
/// with the fiber class as 0.
CohoClass6 pd_of_sweep(const Stabilized6& s, const Class2& a);

/// Degree-4 Poincare dual of the fiber class: pairs with [X x pt] as 1 and
/// with every [B x S2] as 0.
CohoClass6 pd_of_fiber(const Stabilized6& s);

/// The S2-area generator tau as a degree-2 class.
CohoClass6 tau_class(const Stabilized6& s);

/// Evaluate a degree-2 class on an H2 class. Throws DegreeError otherwise.
Z pair_deg2(const Stabilized6& s, const CohoClass6& alpha, const Class6& c);

/// Evaluate a degree-4 class on an H4 class. Throws DegreeError otherwise.
Z pair_deg4(const Stabilized6& s, const CohoClass6& beta, const H4Class6& c4);

/// <a u b u c, [X x S2]> for degree-2 classes, expanded through the
/// Kunneth decomposition with tau^2 = 0.
Z triple_product(const Stabilized6& s, const CohoClass6& a, const CohoClass6& b,
                 const CohoClass6& c);

}  // namespace gwzero
