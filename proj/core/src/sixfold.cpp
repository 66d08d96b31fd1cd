#include "gwzero/sixfold.hpp"

#include <utility>

#include "gwzero/errors.hpp"

namespace gwzero {

namespace {

void require_degree(const CohoClass6& c, int degree, const char* what) {
    if (c.degree != degree)
        throw DegreeError(std::string(what) + ": expected a degree-" + std::to_string(degree) +
                          " class, got degree " + std::to_string(c.degree));
}

void require_size(const IVec& v, int rank, const char* what) {
    if (static_cast<int>(v.size()) != rank)
        throw DimensionError(std::string(what) + ": coordinate length " +
                             std::to_string(v.size()) + " does not match base rank " +
                             std::to_string(rank));
}

// x^T (G^-1) y over the base intersection form.
Z quad_inverse(const ZMat& inv, const IVec& x, const IVec& y) {
    Z total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Z row = 0;
        for (std::size_t j = 0; j < y.size(); ++j) row += inv[i][j] * y[j];
        total += Z(x[i]) * row;
    }
    return total;
}

}  // namespace

Stabilized6::Stabilized6(Manifold4 base)
    : base_(std::move(base)), inverse_gram_(inverse_unimodular(base_.lattice())) {}

Z Stabilized6::c1_pairing(const Class6& c) const {
    return base_.c1_pairing(c.base) + 2 * Z(c.fiber);
}

Stabilized6 stabilize(const Manifold4& x) { return Stabilized6(x); }

Class6 pushforward(const Class2& a) { return Class6{a, 0}; }

H4Class6 sweep_cycle(const Class2& b) { return H4Class6{0, b.coords}; }

H4Class6 point_cycle(const Stabilized6& s) {
    return H4Class6{1, IVec(static_cast<std::size_t>(s.base_rank()), 0)};
}

CohoClass6 pd_of_pushforward(const Stabilized6& s, const Class2& a) {
    if (!s.simply_connected())
        throw HypothesisError("pd_of_pushforward: base is not simply connected");
    require_size(a.coords, s.base_rank(), "pd_of_pushforward");
    return CohoClass6::deg4(0, pairing_functional(s.base().lattice(), a));
}

CohoClass6 pd_of_sweep(const Stabilized6& s, const Class2& a) {
    if (!s.simply_connected())
        throw HypothesisError("pd_of_sweep: base is not simply connected");
    require_size(a.coords, s.base_rank(), "pd_of_sweep");
    return CohoClass6::deg2(pairing_functional(s.base().lattice(), a), 0);
}

CohoClass6 pd_of_fiber(const Stabilized6& s) {
    if (!s.simply_connected())
        throw HypothesisError("pd_of_fiber: base is not simply connected");
    return CohoClass6::deg4(1, IVec(static_cast<std::size_t>(s.base_rank()), 0));
}

CohoClass6 tau_class(const Stabilized6& s) {
    return CohoClass6::deg2(IVec(static_cast<std::size_t>(s.base_rank()), 0), 1);
}

Z pair_deg2(const Stabilized6& s, const CohoClass6& alpha, const Class6& c) {
    require_degree(alpha, 2, "pair_deg2");
    require_size(alpha.phi, s.base_rank(), "pair_deg2");
    require_size(c.base.coords, s.base_rank(), "pair_deg2");
    Z total = Z(alpha.lam) * c.fiber;
    for (std::size_t i = 0; i < alpha.phi.size(); ++i)
        total += Z(alpha.phi[i]) * c.base.coords[i];
    return total;
}

Z pair_deg4(const Stabilized6& s, const CohoClass6& beta, const H4Class6& c4) {
    require_degree(beta, 4, "pair_deg4");
    require_size(beta.psi, s.base_rank(), "pair_deg4");
    require_size(c4.sweep, s.base_rank(), "pair_deg4");
    Z total = Z(beta.vol_coeff) * c4.point_coeff;
    for (std::size_t i = 0; i < beta.psi.size(); ++i)
        total += Z(beta.psi[i]) * c4.sweep[i];
    return total;
}

Z triple_product(const Stabilized6& s, const CohoClass6& a, const CohoClass6& b,
                 const CohoClass6& c) {
    if (!s.simply_connected())
        throw HypothesisError("triple_product: base is not simply connected");
    require_degree(a, 2, "triple_product");
    require_degree(b, 2, "triple_product");
    require_degree(c, 2, "triple_product");
    const int rank = s.base_rank();
    require_size(a.phi, rank, "triple_product");
    require_size(b.phi, rank, "triple_product");
    require_size(c.phi, rank, "triple_product");
    // Expand (a_phi + a_lam tau)(b_phi + b_lam tau)(c_phi + c_lam tau) with
    // tau^2 = 0 and any base product of degree > 4 vanishing: only the
    // tau x (phi u phi') terms survive, and <phi u phi', [X]> = phi G^-1 phi'.
    const ZMat& inv = s.inverse_gram();
    Z total = quad_inverse(inv, a.phi, b.phi) * c.lam;
    total += quad_inverse(inv, a.phi, c.phi) * b.lam;
    total += quad_inverse(inv, b.phi, c.phi) * a.lam;
    return total;
}

}  // namespace gwzero
