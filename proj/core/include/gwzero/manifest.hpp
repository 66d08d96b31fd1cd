#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gwzero/fourmanifold.hpp"
#include "gwzero/gw.hpp"
#include "gwzero/sixfold.hpp"

namespace gwzero {

/// Serialized cohomology class, dimension-agnostic: the fields used depend
/// on the degree and on whether the query targets a 4-manifold or a
/// stabilization.
struct InsertionSpec {
    int degree = 0;
    IVec phi;        // degree 2
    i64 lam = 0;     // degree 2, 6-fold only
    i64 vol = 0;     // degree 4, 6-fold only
    IVec psi;        // degree 4, 6-fold only
    i64 scalar = 0;  // degree 0, 6, or 4-manifold degree 4

    friend bool operator==(const InsertionSpec&, const InsertionSpec&) = default;
};

struct SphereClassSpec {
    IVec cls;
    i64 genus = 0;
    bool embedded_sphere_rep = false;

    friend bool operator==(const SphereClassSpec&, const SphereClassSpec&) = default;
};

/// One manifold entry: the intersection form is given either as a named
/// form expression ("3H+2E8-", "<1>+8<-1>", ...) or as an explicit gram
/// matrix with optional basis labels.
struct ManifoldSpec {
    std::string name;
    std::string form;
    IMat gram;
    std::vector<std::string> labels;
    IVec c1;
    bool simply_connected = true;
    bool minimal = true;
    std::vector<IVec> exceptional_classes;
    std::vector<SphereClassSpec> sphere_classes;
};

/// One query entry. The space is a manifold name, or a name suffixed with
/// "xS2" for its stabilization; for stabilizations the class vector carries
/// the fiber coefficient as its last entry.
struct QuerySpec {
    std::string space;
    IVec cls;
    std::vector<InsertionSpec> insertions;
};

struct Manifest {
    int version = 1;
    std::vector<ManifoldSpec> manifolds;
    std::vector<QuerySpec> queries;
};

/// Parse a named form expression: summands separated by '+', each an
/// optional positive count followed by one of "<1>", "<-1>", "H", "E8-".
/// Throws ManifestError on malformed input.
BilinearLattice parse_form_expression(const std::string& expr);

Manifest parse_manifest(const std::string& json_text);
Manifest load_manifest(const std::string& path);

/// Build the Manifold4 for one entry (named form or explicit gram; explicit
/// grams default to labels e1..en).
Manifold4 build_manifold(const ManifoldSpec& spec);

/// Owns the manifolds (and lazily built stabilizations) a manifest
/// describes, and resolves query entries against them.
class Workspace {
public:
    explicit Workspace(const Manifest& m);

    const Manifold4& manifold(const std::string& name) const;
    const Stabilized6& stabilized(const std::string& name);
    std::vector<std::string> manifold_names() const;

private:
    std::map<std::string, Manifold4> manifolds_;
    std::map<std::string, Stabilized6> stabilized_;
};

using ResolvedQuery = std::variant<GWQuery4, GWQuery6>;

/// Resolve a query entry to a typed query borrowing the workspace's spaces.
/// Throws ManifestError on unknown names or shape mismatches.
ResolvedQuery resolve_query(Workspace& ws, const QuerySpec& spec);

/// Manifest fragment (version + one manifold entry, explicit gram) that
/// round-trips through parse_manifest/build_manifold.
std::string manifold_to_json(const Manifold4& x);

/// Canonical JSON for one evaluation result, including the trace.
std::string evaluation_to_json(const std::string& space, const GWValue& value,
                               const std::vector<std::string>& trace);

}  // namespace gwzero
