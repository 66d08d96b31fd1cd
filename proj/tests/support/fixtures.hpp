#pragma once

// Shared fixture manifolds. Every numeric claim is re-derivable from the
// Gram matrices: squares and c1 pairings are stated in comments so the
// adjunction bookkeeping (2g - 2 = A.A - c1.A) can be checked by eye.

#include <vector>

#include "gwzero/fourmanifold.hpp"
#include "gwzero/manifest.hpp"
#include "gwzero/numeric.hpp"

namespace fixtures {

// K3: 3H + 2E8-, c1 = 0, minimal, simply connected.
inline gwzero::Manifold4 make_k3() {
    return gwzero::Manifold4("K3", gwzero::parse_form_expression("3H+2E8-"),
                             gwzero::IVec(22, 0), true, true);
}

// One-point blowup of K3; basis gains the exceptional class E at index 22.
inline gwzero::Manifold4 make_x1() { return blow_up(make_k3(), "E"); }

inline gwzero::Class2 x1_exceptional() {
    gwzero::IVec e(23, 0);
    e[22] = 1;
    return {e};
}

// X2: 3<1> + 20<-1> with characteristic c1 = (1,...,1); homeomorphic to X1
// (rank 23, signature (3,20), odd) but minimal. Registered sphere class
// B = p1 + n1 (indices 0 and 3): B.B = 0, c1.B = 2, so genus 0 by
// adjunction; B is not exceptional (B.B != -1).
inline gwzero::Manifold4 make_x2() {
    gwzero::IVec b(23, 0);
    b[0] = 1;
    b[3] = 1;
    return gwzero::Manifold4("X2", gwzero::parse_form_expression("3<1>+20<-1>"),
                             gwzero::IVec(23, 1), true, true, {},
                             {gwzero::SphereClass{{b}, 0, true}});
}

inline gwzero::Class2 x2_sphere() {
    gwzero::IVec b(23, 0);
    b[0] = 1;
    b[3] = 1;
    return {b};
}

// CP2 # 8 CP2-bar: <1> + 8<-1>, c1 = (3,1,...,1), b2+ = 1. Registered line
// class h = p (index 0): h.h = 1, c1.h = 3, genus 0. Minimal as recorded:
// no exceptional classes are registered.
inline gwzero::Manifold4 make_cp2_8() {
    gwzero::IVec c1{3, 1, 1, 1, 1, 1, 1, 1, 1};
    gwzero::IVec h(9, 0);
    h[0] = 1;
    return gwzero::Manifold4("P8", gwzero::parse_form_expression("<1>+8<-1>"), c1, true,
                             true, {}, {gwzero::SphereClass{{h}, 0, true}});
}

// A minimal record with the same invariants profile family but rank 10:
// <1> + 9<-1>, c1 = (3,1,...,1), b2+ = 1.
inline gwzero::Manifold4 make_p9_minimal() {
    gwzero::IVec c1(10, 1);
    c1[0] = 3;
    return gwzero::Manifold4("D9", gwzero::parse_form_expression("<1>+9<-1>"), c1, true,
                             true);
}

// X1 with an extra registered non-exceptional sphere class
// A = u + 2v + 2E (indices 0, 1, 22): A.A = 2*1*2 - 4 = 0, c1.A = 2,
// genus 0 by adjunction, primitive, and A.A != -1.
inline gwzero::Manifold4 make_x1a() {
    gwzero::Manifold4 x1 = make_x1();
    gwzero::IVec a(23, 0);
    a[0] = 1;
    a[1] = 2;
    a[22] = 2;
    auto spheres = x1.sphere_classes();
    spheres.push_back(gwzero::SphereClass{{a}, 0, true});
    return gwzero::Manifold4("X1A", x1.lattice(), x1.c1(), true, false,
                             x1.exceptional_classes(), spheres);
}

inline gwzero::Class2 x1a_sphere() {
    gwzero::IVec a(23, 0);
    a[0] = 1;
    a[1] = 2;
    a[22] = 2;
    return {a};
}

}  // namespace fixtures
