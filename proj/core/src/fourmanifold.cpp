#include "gwzero/fourmanifold.hpp"

#include <algorithm>
#include <utility>

namespace gwzero {

namespace {

Class2 basis_class(int rank, int index)
{
    Class2 c{IVec(rank, 0)};
    c.coords[index] = 1;
    return c;
}

IVec extend_by_zero(const IVec& v)
{
    IVec out = v;
    out.push_back(0);
    return out;
}

}  // namespace

Manifold4::Manifold4(std::string name, BilinearLattice lattice, IVec c1, bool simply_connected,
                     bool minimal, std::vector<Class2> exceptional_classes,
                     std::vector<SphereClass> sphere_classes)
    : name_(std::move(name)),
      lattice_(std::move(lattice)),
      c1_(std::move(c1)),
      simply_connected_(simply_connected),
      minimal_(minimal),
      exceptional_(std::move(exceptional_classes)),
      spheres_(std::move(sphere_classes))
{
    const auto n = static_cast<std::size_t>(lattice_.rank());
    if (c1_.size() != n)
        throw ValidationError(name_ + ": c1 length does not match rank");
    if (!is_unimodular(lattice_))
        throw ValidationError(name_ + ": intersection form must be unimodular");

    for (const Class2& e : exceptional_) {
        if (e.coords.size() != n)
            throw DimensionError(name_ + ": exceptional class has wrong length");
        if (pair(lattice_, e, e) != -1)
            throw ValidationError(name_ + ": exceptional class must have square -1");
        if (c1_pairing(e) != 1)
            throw ValidationError(name_ + ": exceptional class must pair to 1 with c1");
        if (!is_primitive(e))
            throw ValidationError(name_ + ": exceptional class must be primitive");
    }
    if (minimal_ && !exceptional_.empty())
        throw ValidationError(name_ + ": minimal manifold cannot register exceptional classes");
    if (!minimal_ && exceptional_.empty())
        throw ValidationError(name_ + ": non-minimal manifold must register an exceptional class");

    for (const SphereClass& s : spheres_) {
        if (s.cls.coords.size() != n)
            throw DimensionError(name_ + ": sphere class has wrong length");
        if (s.genus < 0)
            throw ValidationError(name_ + ": sphere class genus must be nonnegative");
        if (s.embedded_sphere_rep && s.genus != 0)
            throw ValidationError(name_ + ": embedded sphere representative requires genus 0");
    }

    // Exceptional classes always carry genus-0 embedded-sphere metadata.
    for (const Class2& e : exceptional_) {
        auto it = std::find_if(spheres_.begin(), spheres_.end(),
                               [&](const SphereClass& s) { return s.cls == e; });
        if (it == spheres_.end())
            spheres_.push_back(SphereClass{e, 0, true});
        else if (it->genus != 0)
            throw ValidationError(name_ + ": exceptional class registered with nonzero genus");
    }

    sig_ = signature(lattice_);

    // Characteristic-vector congruence, c1.x = x.x mod 2 on basis vectors;
    // failures signal suspect input but are not fatal.
    for (int i = 0; i < lattice_.rank(); ++i) {
        const i64 self = lattice_.entry(i, i);
        if (((c1_[i] - self) % 2 + 2) % 2 != 0)
            warnings_.push_back("c1 is not characteristic on basis vector '" +
                                lattice_.basis_labels()[i] + "': c1 = " + std::to_string(c1_[i]) +
                                ", square = " + std::to_string(self));
    }
}

Z Manifold4::c1_pairing(const Class2& a) const
{
    if (a.coords.size() != c1_.size())
        throw DimensionError(name_ + ": class length does not match rank");
    return dot(c1_, a.coords);
}

Manifold4 blow_up(const Manifold4& y, const std::string& label)
{
    const auto& labels = y.lattice().basis_labels();
    if (std::find(labels.begin(), labels.end(), label) != labels.end())
        throw LabelError(y.name() + ": basis label '" + label + "' already in use");

    BilinearLattice lattice = direct_sum(y.lattice(), BilinearLattice({{-1}}, {label}));

    // c1(X) = c1(Y) - PD[E] pairs with E as -(E.E) = 1.
    IVec c1 = extend_by_zero(y.c1());
    c1.back() = 1;

    std::vector<Class2> exceptional;
    for (const Class2& e : y.exceptional_classes())
        exceptional.push_back(Class2{extend_by_zero(e.coords)});
    Class2 e_new = basis_class(lattice.rank(), lattice.rank() - 1);
    exceptional.push_back(e_new);

    std::vector<SphereClass> spheres;
    for (const SphereClass& s : y.sphere_classes())
        spheres.push_back(SphereClass{Class2{extend_by_zero(s.cls.coords)}, s.genus,
                                      s.embedded_sphere_rep});
    spheres.push_back(SphereClass{e_new, 0, true});

    return Manifold4(y.name() + "#" + label, std::move(lattice), std::move(c1),
                     y.simply_connected(), /*minimal=*/false, std::move(exceptional),
                     std::move(spheres));
}

Z adjunction_c1(const Manifold4& x, const Class2& a, i64 genus)
{
    return pair(x.lattice(), a, a) + 2 - 2 * Z(genus);
}

bool is_exceptional_class(const Manifold4& x, const Class2& a, std::string* note)
{
    const auto& reg = x.exceptional_classes();
    if (std::find(reg.begin(), reg.end(), a) != reg.end())
        return true;
    if (note && !a.is_zero() && pair(x.lattice(), a, a) == -1 && x.c1_pairing(a) == 1 &&
        is_primitive(a))
        *note = "arithmetically exceptional but unregistered";
    return false;
}

std::optional<SphereClass> registered_sphere(const Manifold4& x, const Class2& a)
{
    for (const SphereClass& s : x.sphere_classes())
        if (s.cls == a)
            return s;
    return std::nullopt;
}

std::optional<HomeoInvariants> homeo_invariants(const Manifold4& x)
{
    if (!x.simply_connected())
        return std::nullopt;
    return HomeoInvariants{x.rank(), x.sig(), parity(x.lattice()), true};
}

GWValue taubes_k(const Manifold4& x, const SphereClass& a)
{
    if (a.genus == 1)
        return GWValue::not_determined("Remark 2.6 requires g([A]) != 1");
    return GWValue::integer(pair(x.lattice(), a.cls, a.cls) + 1 - Z(a.genus));
}

GWValue taubes_k(const Manifold4& x, const Class2& a)
{
    auto meta = registered_sphere(x, a);
    if (!meta)
        throw HypothesisError(x.name() + ": no minimal-genus metadata registered for the class");
    return taubes_k(x, *meta);
}

IVec c1_homology_coords(const Manifold4& x)
{
    // PD(c1) solves gram * k = c1; integral since |det| = 1.
    const ZMat inv = inverse_unimodular(x.lattice());
    const int n = x.rank();
    IVec out(n, 0);
    for (int i = 0; i < n; ++i) {
        Z acc = 0;
        for (int j = 0; j < n; ++j)
            acc += inv[i][j] * Z(x.c1()[j]);
        if (!fits_i64(acc))
            throw Error("c1 homology coordinate overflows 64 bits");
        out[i] = static_cast<i64>(acc.get_si());
    }
    return out;
}

SWResult sw_of_exceptional(const Manifold4& x, const Class2& e)
{
    if (!is_exceptional_class(x, e))
        throw HypothesisError(x.name() + ": class is not a registered exceptional class");
    const IVec k = c1_homology_coords(x);
    SWResult r;
    r.value = 1;  // GW_{[E],0} = 1 and the sign convention fixes SW = +1
    r.sw_class.resize(e.coords.size());
    for (std::size_t i = 0; i < e.coords.size(); ++i)
        r.sw_class[i] = 2 * e.coords[i] + k[i];
    return r;
}

CohoClass4 pd_class(const Manifold4& x, const Class2& a)
{
    return CohoClass4::deg2(pairing_functional(x.lattice(), a));
}

Z pair_deg2(const Manifold4& x, const CohoClass4& alpha, const Class2& a)
{
    if (alpha.degree != 2)
        throw DegreeError("pair_deg2 requires a degree-2 class");
    if (alpha.phi.size() != a.coords.size() ||
        a.coords.size() != static_cast<std::size_t>(x.rank()))
        throw DimensionError("degree-2 pairing: length mismatch");
    return dot(alpha.phi, a.coords);
}

}  // namespace gwzero
