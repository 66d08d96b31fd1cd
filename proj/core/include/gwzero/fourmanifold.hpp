#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwzero/gwvalue.hpp"
#include "gwzero/lattice.hpp"

namespace gwzero {

/// A second homology class together with its minimal-genus metadata. The
/// embedded_sphere_rep flag asserts that the class is represented by an
/// embedded connected J-holomorphic sphere; that is trusted input, not a
/// derived fact.
struct SphereClass {
    Class2 cls;
    i64 genus = 0;
    bool embedded_sphere_rep = false;

    friend bool operator==(const SphereClass&, const SphereClass&) = default;
};

/// Comparison tuple for the homeomorphism criterion on closed simply
/// connected 4-manifolds: equal tuples are reported homeomorphic.
struct HomeoInvariants {
    int rank = 0;
    Signature sig;
    Parity parity = Parity::Even;
    bool simply_connected = true;

    friend bool operator==(const HomeoInvariants&, const HomeoInvariants&) = default;
};

/// Closed symplectic 4-manifold modeled by its intersection lattice, the
/// pairing functional of the first Chern class, and registered class
/// metadata. Immutable; blow_up returns a new manifold.
class Manifold4 {
public:
    Manifold4(std::string name, BilinearLattice lattice, IVec c1, bool simply_connected,
              bool minimal, std::vector<Class2> exceptional_classes = {},
              std::vector<SphereClass> sphere_classes = {});

    const std::string& name() const { return name_; }
    const BilinearLattice& lattice() const { return lattice_; }
    const IVec& c1() const { return c1_; }
    bool simply_connected() const { return simply_connected_; }
    bool minimal() const { return minimal_; }
    const std::vector<Class2>& exceptional_classes() const { return exceptional_; }
    const std::vector<SphereClass>& sphere_classes() const { return spheres_; }

    /// Non-fatal validation notes (characteristic-vector congruence).
    const std::vector<std::string>& warnings() const { return warnings_; }

    int rank() const { return lattice_.rank(); }
    const Signature& sig() const { return sig_; }
    int b2_plus() const { return sig_.plus; }

    /// <c1, A> for a class in this manifold's basis.
    Z c1_pairing(const Class2& a) const;

private:
    std::string name_;
    BilinearLattice lattice_;
    IVec c1_;
    bool simply_connected_;
    bool minimal_;
    std::vector<Class2> exceptional_;
    std::vector<SphereClass> spheres_;
    std::vector<std::string> warnings_;
    Signature sig_;
};

/// Blowup: adds a <-1> summand with the given basis label, extends c1 by +1
/// on the new class, registers the new class as an exceptional sphere, and
/// clears minimality. Throws LabelError if the label is taken.
Manifold4 blow_up(const Manifold4& y, const std::string& label);

/// c1 pairing forced by adjunction for an embedded genus-g representative:
/// A.A + 2 - 2g.
Z adjunction_c1(const Manifold4& x, const Class2& a, i64 genus);

/// True iff the class is registered as exceptional (registration is
/// authoritative). When the class passes the arithmetic test (A.A = -1,
/// c1.A = 1, primitive) without being registered, *note is set to a
/// diagnostic if non-null.
bool is_exceptional_class(const Manifold4& x, const Class2& a, std::string* note = nullptr);

/// Registered minimal-genus metadata for a class, if any.
std::optional<SphereClass> registered_sphere(const Manifold4& x, const Class2& a);

/// The homeomorphism comparison tuple; nullopt when the manifold is not
/// simply connected (the criterion does not apply).
std::optional<HomeoInvariants> homeo_invariants(const Manifold4& x);

/// Taubes point count A.A + 1 - g([A]); NotDetermined when g([A]) = 1,
/// which the bridge excludes. Throws HypothesisError when no genus
/// metadata is registered for the class.
GWValue taubes_k(const Manifold4& x, const SphereClass& a);
GWValue taubes_k(const Manifold4& x, const Class2& a);

struct SWResult {
    int value = 0;       // always +1 under the fixed sign convention
    IVec sw_class;       // coordinates of 2[E] + c1 in the homology basis
};

/// Seiberg-Witten value of the blowup class 2[E] + c1(X) for a registered
/// exceptional class. Throws HypothesisError otherwise.
SWResult sw_of_exceptional(const Manifold4& x, const Class2& e);

/// Homology coordinates of the Poincare dual of c1 (integral because the
/// form is unimodular).
IVec c1_homology_coords(const Manifold4& x);

// Cohomology classes of a 4-manifold, represented by pairing data:
// degree 0 and 4 classes by a single integer coefficient (of the unit and
// of PD([point]) respectively), degree 2 classes by their value vector on
// the H2 basis.
struct CohoClass4 {
    int degree = 0;
    IVec phi;        // degree 2 only
    i64 scalar = 0;  // degree 0 or 4

    static CohoClass4 unit(i64 c) { return {0, {}, c}; }
    static CohoClass4 deg2(IVec values) { return {2, std::move(values), 0}; }
    static CohoClass4 point(i64 c) { return {4, {}, c}; }

    friend bool operator==(const CohoClass4&, const CohoClass4&) = default;
};

/// Degree-2 Poincare dual of a homology class: the functional pair(A, .).
CohoClass4 pd_class(const Manifold4& x, const Class2& a);

/// Evaluate a degree-2 class on a homology class. Throws DegreeError on any
/// other degree.
Z pair_deg2(const Manifold4& x, const CohoClass4& alpha, const Class2& a);

}  // namespace gwzero
