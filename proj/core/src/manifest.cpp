#include "gwzero/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "gwzero/errors.hpp"

namespace gwzero {

namespace {

using nlohmann::json;

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

const json& require_field(const json& j, const char* key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end())
        throw ManifestError(ctx + ": missing required field \"" + key + "\"");
    return *it;
}

i64 as_i64(const json& j, const std::string& ctx) {
    if (!j.is_number_integer())
        throw ManifestError(ctx + ": expected an integer");
    return j.get<std::int64_t>();
}

IVec as_ivec(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw ManifestError(ctx + ": expected an integer array");
    IVec v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(as_i64(e, ctx));
    return v;
}

IMat as_imat(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw ManifestError(ctx + ": expected an array of integer rows");
    IMat m;
    m.reserve(j.size());
    for (const auto& row : j) m.push_back(as_ivec(row, ctx));
    return m;
}

std::string as_string(const json& j, const std::string& ctx) {
    if (!j.is_string()) throw ManifestError(ctx + ": expected a string");
    return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& ctx) {
    if (!j.is_boolean()) throw ManifestError(ctx + ": expected a boolean");
    return j.get<bool>();
}

InsertionSpec parse_insertion(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ManifestError(ctx + ": insertion must be an object");
    InsertionSpec ins;
    ins.degree = static_cast<int>(as_i64(require_field(j, "degree", ctx), ctx));
    if (auto it = j.find("phi"); it != j.end()) ins.phi = as_ivec(*it, ctx + ".phi");
    if (auto it = j.find("lam"); it != j.end()) ins.lam = as_i64(*it, ctx + ".lam");
    if (auto it = j.find("vol"); it != j.end()) ins.vol = as_i64(*it, ctx + ".vol");
    if (auto it = j.find("psi"); it != j.end()) ins.psi = as_ivec(*it, ctx + ".psi");
    if (auto it = j.find("scalar"); it != j.end()) ins.scalar = as_i64(*it, ctx + ".scalar");
    return ins;
}

ManifoldSpec parse_manifold_entry(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ManifestError(ctx + ": manifold entry must be an object");
    ManifoldSpec spec;
    spec.name = as_string(require_field(j, "name", ctx), ctx + ".name");
    const std::string mctx = ctx + " (" + spec.name + ")";
    const bool has_form = j.contains("form");
    const bool has_gram = j.contains("gram");
    if (has_form == has_gram)
        throw ManifestError(mctx + ": exactly one of \"form\" and \"gram\" is required");
    if (has_form) spec.form = as_string(j.at("form"), mctx + ".form");
    if (has_gram) spec.gram = as_imat(j.at("gram"), mctx + ".gram");
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_array()) throw ManifestError(mctx + ".labels: expected a string array");
        for (const auto& l : *it) spec.labels.push_back(as_string(l, mctx + ".labels"));
    }
    if (auto it = j.find("c1"); it != j.end()) spec.c1 = as_ivec(*it, mctx + ".c1");
    if (auto it = j.find("simply_connected"); it != j.end())
        spec.simply_connected = as_bool(*it, mctx + ".simply_connected");
    if (auto it = j.find("minimal"); it != j.end())
        spec.minimal = as_bool(*it, mctx + ".minimal");
    if (auto it = j.find("exceptional_classes"); it != j.end()) {
        if (!it->is_array())
            throw ManifestError(mctx + ".exceptional_classes: expected an array");
        for (const auto& e : *it)
            spec.exceptional_classes.push_back(as_ivec(e, mctx + ".exceptional_classes"));
    }
    if (auto it = j.find("sphere_classes"); it != j.end()) {
        if (!it->is_array()) throw ManifestError(mctx + ".sphere_classes: expected an array");
        for (const auto& e : *it) {
            const std::string sctx = mctx + ".sphere_classes";
            SphereClassSpec s;
            s.cls = as_ivec(require_field(e, "class", sctx), sctx + ".class");
            if (auto g = e.find("genus"); g != e.end()) s.genus = as_i64(*g, sctx + ".genus");
            if (auto r = e.find("embedded_sphere_rep"); r != e.end())
                s.embedded_sphere_rep = as_bool(*r, sctx + ".embedded_sphere_rep");
            spec.sphere_classes.push_back(std::move(s));
        }
    }
    return spec;
}

json value_json(const GWValue& v) {
    if (v.is_integer()) {
        json out{{"kind", "integer"}};
        if (fits_i64(v.value()))
            out["value"] = static_cast<std::int64_t>(v.value().get_si());
        else
            out["value"] = to_string(v.value());
        return out;
    }
    return json{{"kind", "not_determined"}, {"reason", v.reason()}};
}

}  // namespace

BilinearLattice parse_form_expression(const std::string& expr) {
    // getline-style splitting silently drops a trailing separator; reject it.
    const std::string whole = trimmed(expr);
    if (!whole.empty() && whole.back() == '+')
        throw ManifestError("trailing '+' in form expression \"" + expr + "\"");
    std::vector<std::string> tokens;
    std::string current;
    std::istringstream in(expr);
    while (std::getline(in, current, '+')) tokens.push_back(trimmed(current));
    if (tokens.empty()) throw ManifestError("empty form expression");

    BilinearLattice acc;
    for (const auto& token : tokens) {
        if (token.empty()) throw ManifestError("empty summand in form expression \"" + expr + "\"");
        std::size_t i = 0;
        while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
        long count = 1;
        if (i > 0) {
            try {
                count = std::stol(token.substr(0, i));
            } catch (const std::exception&) {
                throw ManifestError("bad multiplicity in form summand \"" + token + "\"");
            }
        }
        if (count < 1) throw ManifestError("multiplicity must be positive in \"" + token + "\"");
        const BilinearLattice factor = named_form(trimmed(token.substr(i)));
        for (long c = 0; c < count; ++c) acc = direct_sum(acc, factor);
    }
    return acc;
}

Manifest parse_manifest(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ManifestError(std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ManifestError("manifest root must be an object");

    Manifest m;
    m.version = static_cast<int>(as_i64(require_field(j, "version", "manifest"), "manifest.version"));
    if (m.version != 1)
        throw ManifestError("unsupported manifest version " + std::to_string(m.version));

    const json& manifolds = require_field(j, "manifolds", "manifest");
    if (!manifolds.is_array()) throw ManifestError("manifest.manifolds must be an array");
    for (std::size_t i = 0; i < manifolds.size(); ++i)
        m.manifolds.push_back(
            parse_manifold_entry(manifolds[i], "manifolds[" + std::to_string(i) + "]"));

    if (auto it = j.find("queries"); it != j.end()) {
        if (!it->is_array()) throw ManifestError("manifest.queries must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& q = (*it)[i];
            const std::string ctx = "queries[" + std::to_string(i) + "]";
            if (!q.is_object()) throw ManifestError(ctx + ": query must be an object");
            QuerySpec spec;
            spec.space = as_string(require_field(q, "space", ctx), ctx + ".space");
            spec.cls = as_ivec(require_field(q, "class", ctx), ctx + ".class");
            if (auto ins = q.find("insertions"); ins != q.end()) {
                if (!ins->is_array()) throw ManifestError(ctx + ".insertions: expected an array");
                for (std::size_t a = 0; a < ins->size(); ++a)
                    spec.insertions.push_back(parse_insertion(
                        (*ins)[a], ctx + ".insertions[" + std::to_string(a) + "]"));
            }
            m.queries.push_back(std::move(spec));
        }
    }
    return m;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ManifestError("cannot open manifest file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str());
}

Manifold4 build_manifold(const ManifoldSpec& spec) {
    BilinearLattice lattice;
    if (!spec.form.empty()) {
        lattice = parse_form_expression(spec.form);
    } else {
        std::vector<std::string> labels = spec.labels;
        if (labels.empty())
            for (std::size_t i = 0; i < spec.gram.size(); ++i)
                labels.push_back("e" + std::to_string(i + 1));
        lattice = BilinearLattice(spec.gram, std::move(labels));
    }

    IVec c1 = spec.c1;
    if (c1.empty()) c1.assign(static_cast<std::size_t>(lattice.rank()), 0);

    std::vector<Class2> exceptional;
    exceptional.reserve(spec.exceptional_classes.size());
    for (const auto& e : spec.exceptional_classes) exceptional.push_back(Class2{e});

    std::vector<SphereClass> spheres;
    spheres.reserve(spec.sphere_classes.size());
    for (const auto& s : spec.sphere_classes)
        spheres.push_back(SphereClass{Class2{s.cls}, s.genus, s.embedded_sphere_rep});

    return Manifold4(spec.name, std::move(lattice), std::move(c1), spec.simply_connected,
                     spec.minimal, std::move(exceptional), std::move(spheres));
}

Workspace::Workspace(const Manifest& m) {
    for (const auto& spec : m.manifolds) {
        if (manifolds_.count(spec.name))
            throw ManifestError("duplicate manifold name: " + spec.name);
        manifolds_.emplace(spec.name, build_manifold(spec));
    }
}

const Manifold4& Workspace::manifold(const std::string& name) const {
    auto it = manifolds_.find(name);
    if (it == manifolds_.end()) throw ManifestError("unknown manifold: " + name);
    return it->second;
}

const Stabilized6& Workspace::stabilized(const std::string& name) {
    auto it = stabilized_.find(name);
    if (it != stabilized_.end()) return it->second;
    const Manifold4& base = manifold(name);
    return stabilized_.emplace(name, stabilize(base)).first->second;
}

std::vector<std::string> Workspace::manifold_names() const {
    std::vector<std::string> names;
    names.reserve(manifolds_.size());
    for (const auto& [name, _] : manifolds_) names.push_back(name);
    return names;
}

namespace {

CohoClass4 to_coho4(const InsertionSpec& ins, int rank, const std::string& ctx) {
    switch (ins.degree) {
        case 0: return CohoClass4::unit(ins.scalar);
        case 2:
            if (static_cast<int>(ins.phi.size()) != rank)
                throw ManifestError(ctx + ": degree-2 phi length " +
                                    std::to_string(ins.phi.size()) + " does not match rank " +
                                    std::to_string(rank));
            return CohoClass4::deg2(ins.phi);
        case 4: return CohoClass4::point(ins.scalar);
        default:
            throw ManifestError(ctx + ": unsupported degree " + std::to_string(ins.degree) +
                                " for a 4-manifold insertion");
    }
}

CohoClass6 to_coho6(const InsertionSpec& ins, int rank, const std::string& ctx) {
    switch (ins.degree) {
        case 0: return CohoClass6::unit(ins.scalar);
        case 2:
            if (static_cast<int>(ins.phi.size()) != rank)
                throw ManifestError(ctx + ": degree-2 phi length " +
                                    std::to_string(ins.phi.size()) + " does not match rank " +
                                    std::to_string(rank));
            return CohoClass6::deg2(ins.phi, ins.lam);
        case 4:
            if (static_cast<int>(ins.psi.size()) != rank)
                throw ManifestError(ctx + ": degree-4 psi length " +
                                    std::to_string(ins.psi.size()) + " does not match rank " +
                                    std::to_string(rank));
            return CohoClass6::deg4(ins.vol, ins.psi);
        case 6: return CohoClass6::top(ins.scalar);
        default:
            throw ManifestError(ctx + ": unsupported degree " + std::to_string(ins.degree) +
                                " for a stabilization insertion");
    }
}

}  // namespace

ResolvedQuery resolve_query(Workspace& ws, const QuerySpec& spec) {
    const auto names = ws.manifold_names();
    const bool direct = std::find(names.begin(), names.end(), spec.space) != names.end();
    constexpr const char* suffix = "xS2";
    const std::size_t slen = 3;

    if (!direct && spec.space.size() > slen &&
        spec.space.compare(spec.space.size() - slen, slen, suffix) == 0) {
        const std::string base_name = spec.space.substr(0, spec.space.size() - slen);
        const Stabilized6& s = ws.stabilized(base_name);
        const int rank = s.base_rank();
        if (static_cast<int>(spec.cls.size()) != rank + 1)
            throw ManifestError(spec.space + ": class vector needs " + std::to_string(rank) +
                                " base entries plus a fiber coefficient");
        Class6 cls;
        cls.base.coords.assign(spec.cls.begin(), spec.cls.end() - 1);
        cls.fiber = spec.cls.back();
        GWQuery6 q{&s, std::move(cls), {}};
        for (std::size_t i = 0; i < spec.insertions.size(); ++i)
            q.insertions.push_back(to_coho6(spec.insertions[i], rank,
                                            spec.space + ".insertions[" + std::to_string(i) + "]"));
        return q;
    }

    const Manifold4& x = ws.manifold(spec.space);
    if (static_cast<int>(spec.cls.size()) != x.rank())
        throw ManifestError(spec.space + ": class vector length " +
                            std::to_string(spec.cls.size()) + " does not match rank " +
                            std::to_string(x.rank()));
    GWQuery4 q{&x, Class2{spec.cls}, {}};
    for (std::size_t i = 0; i < spec.insertions.size(); ++i)
        q.insertions.push_back(to_coho4(spec.insertions[i], x.rank(),
                                        spec.space + ".insertions[" + std::to_string(i) + "]"));
    return q;
}

std::string manifold_to_json(const Manifold4& x) {
    json entry;
    entry["name"] = x.name();
    entry["gram"] = x.lattice().gram();
    entry["labels"] = x.lattice().basis_labels();
    entry["c1"] = x.c1();
    entry["simply_connected"] = x.simply_connected();
    entry["minimal"] = x.minimal();
    json exc = json::array();
    for (const auto& e : x.exceptional_classes()) exc.push_back(e.coords);
    entry["exceptional_classes"] = exc;
    json spheres = json::array();
    for (const auto& s : x.sphere_classes())
        spheres.push_back({{"class", s.cls.coords},
                           {"genus", s.genus},
                           {"embedded_sphere_rep", s.embedded_sphere_rep}});
    entry["sphere_classes"] = spheres;

    json root;
    root["version"] = 1;
    root["manifolds"] = json::array({entry});
    return root.dump(2);
}

std::string evaluation_to_json(const std::string& space, const GWValue& value,
                               const std::vector<std::string>& trace) {
    json j;
    j["space"] = space;
    j["value"] = value_json(value);
    j["trace"] = trace;
    return j.dump(2);
}

}  // namespace gwzero
