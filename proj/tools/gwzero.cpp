#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwzero/distinguish.hpp"
#include "gwzero/errors.hpp"
#include "gwzero/gw.hpp"
#include "gwzero/manifest.hpp"
#include "gwzero/oracle_suite.hpp"

namespace {

using nlohmann::json;
using namespace gwzero;

constexpr int kExitInput = 2;
constexpr int kExitOracle = 3;

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

std::string vec_str(const IVec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

int run_info(const std::string& manifest_path, const std::string& name) {
    Workspace ws(load_manifest(manifest_path));
    const Manifold4& x = ws.manifold(name);

    std::cout << "name:             " << x.name() << "\n";
    std::cout << "rank:             " << x.rank() << "\n";
    std::cout << "signature:        (" << x.sig().plus << "," << x.sig().minus << "), integer "
              << (x.sig().plus - x.sig().minus) << "\n";
    std::cout << "b2+:              " << x.b2_plus() << "\n";
    std::cout << "parity:           " << to_string(parity(x.lattice())) << "\n";
    std::cout << "simply connected: " << (x.simply_connected() ? "yes" : "no") << "\n";
    std::cout << "minimal:          " << (x.minimal() ? "yes" : "no") << "\n";
    std::cout << "c1 functional:    " << vec_str(x.c1()) << "\n";
    if (x.exceptional_classes().empty()) {
        std::cout << "exceptional classes: none\n";
    } else {
        std::cout << "exceptional classes:\n";
        for (const auto& e : x.exceptional_classes()) std::cout << "  " << vec_str(e.coords) << "\n";
    }
    if (!x.sphere_classes().empty()) {
        std::cout << "sphere classes:\n";
        for (const auto& s : x.sphere_classes())
            std::cout << "  " << vec_str(s.cls.coords) << " genus " << s.genus
                      << (s.embedded_sphere_rep ? " (embedded sphere)" : "") << "\n";
    }
    for (const auto& w : x.warnings()) std::cout << "warning: " << w << "\n";
    return 0;
}

int run_blowup(const std::string& manifest_path, const std::string& name,
               const std::string& label, const std::string& out_path) {
    Workspace ws(load_manifest(manifest_path));
    const Manifold4 blown = blow_up(ws.manifold(name), label);
    const std::string text = manifold_to_json(blown);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInput;
        }
        out << text << "\n";
    }
    return 0;
}

int run_eval(const std::string& manifest_path, int query_index, bool with_oracle, bool with_trace,
             bool as_json) {
    const Manifest m = load_manifest(manifest_path);
    Workspace ws(m);
    if (m.queries.empty()) {
        std::cerr << "error: manifest has no queries\n";
        return kExitInput;
    }
    if (query_index >= static_cast<int>(m.queries.size())) {
        std::cerr << "error: query index " << query_index << " out of range (have "
                  << m.queries.size() << " queries)\n";
        return kExitInput;
    }

    int exit_code = 0;
    json out_array = json::array();
    for (std::size_t i = 0; i < m.queries.size(); ++i) {
        if (query_index >= 0 && static_cast<int>(i) != query_index) continue;
        const QuerySpec& spec = m.queries[i];
        const ResolvedQuery rq = resolve_query(ws, spec);

        Evaluation ev{GWValue::integer(0), {}};
        Evaluation red{GWValue::integer(0), {}};
        if (const auto* q4 = std::get_if<GWQuery4>(&rq)) {
            ev = eval_4(*q4);
            if (with_oracle) red = reduce_via_axioms(*q4);
        } else {
            const auto& q6 = std::get<GWQuery6>(rq);
            ev = eval_6(q6);
            if (with_oracle) red = reduce_via_axioms(q6);
        }

        const bool comparable =
            with_oracle && ev.value.is_integer() && red.value.is_integer();
        const bool disagree = comparable && ev.value.value() != red.value.value();
        if (disagree) exit_code = kExitOracle;

        if (as_json) {
            json entry{{"index", i},
                       {"space", spec.space},
                       {"value", value_json(ev.value)},
                       {"trace", ev.trace}};
            if (with_oracle) {
                entry["oracle"] = value_json(red.value);
                entry["agree"] = comparable ? json(!disagree) : json(nullptr);
            }
            out_array.push_back(std::move(entry));
        } else {
            std::cout << "query " << i << " on " << spec.space << ": GW = " << ev.value.str()
                      << "\n";
            if (with_oracle) {
                std::cout << "  oracle: " << red.value.str()
                          << (comparable ? (disagree ? " (DISAGREE)" : " (AGREE)")
                                         : " (not comparable)")
                          << "\n";
            }
            if (with_trace) {
                std::cout << "  trace:\n";
                for (const auto& line : ev.trace) std::cout << "    - " << line << "\n";
            }
        }
    }
    if (as_json) std::cout << out_array.dump(2) << "\n";
    if (exit_code == kExitOracle)
        std::cerr << "error: evaluator and axiom-reduction oracle disagree\n";
    return exit_code;
}

int run_distinguish(const std::string& manifest_path, const std::string& first,
                    const std::string& second, bool as_json) {
    Workspace ws(load_manifest(manifest_path));
    const DistinguishReport r = distinguish_stabilized(ws.manifold(first), ws.manifold(second));
    if (as_json)
        std::cout << to_json(r) << "\n";
    else
        std::cout << to_text(r);
    return 0;
}

int run_check(bool seed_given, std::uint64_t seed, int count) {
    OracleCheckConfig cfg;
    cfg.count = count;
    if (seed_given) {
        cfg.seed = seed;
    } else if (const char* env = std::getenv("GWZERO_SEED")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            std::cerr << "error: GWZERO_SEED is not an unsigned integer: " << env << "\n";
            return kExitInput;
        }
        cfg.seed = parsed;
    }

    const OracleCheckReport rep = run_oracle_check(cfg);
    std::cout << "oracle-check: seed " << rep.seed << ", " << rep.total << " random queries\n";
    std::cout << "  compared: " << rep.compared << "  skipped (NotDetermined): " << rep.skipped
              << "  disagreements: " << rep.disagreements << "\n";
    for (const auto& f : rep.failures) std::cout << "  FAIL " << f << "\n";

    const PermutationCheckReport perm = run_permutation_check(6);
    std::cout << "permutation check: " << perm.total << " cases, " << perm.mismatches
              << " mismatches\n";
    for (const auto& f : perm.failures) std::cout << "  FAIL " << f << "\n";

    if (rep.ok() && perm.ok()) {
        std::cout << "OK\n";
        return 0;
    }
    std::cout << "FAIL\n";
    return kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact genus-zero Gromov-Witten invariants of blowup 4-manifolds and their "
                 "stabilizations X x S2"};
    app.require_subcommand(1);

    std::string manifest_path, name, second, label, out_path;
    int query_index = -1;
    bool with_oracle = false, with_trace = false, as_json = false;
    std::uint64_t seed = 1729;
    int count = 1000;

    auto* info = app.add_subcommand("info", "Show the invariants of a manifold");
    info->add_option("-m,--manifest", manifest_path, "Manifest JSON file")->required();
    info->add_option("name", name, "Manifold name")->required();

    auto* blowup = app.add_subcommand("blowup", "Blow up a manifold; emit manifest JSON");
    blowup->add_option("-m,--manifest", manifest_path, "Manifest JSON file")->required();
    blowup->add_option("name", name, "Manifold name")->required();
    blowup->add_option("label", label, "Basis label for the new exceptional class")->required();
    blowup->add_option("-o,--out", out_path, "Write the fragment to this file");

    auto* eval = app.add_subcommand("eval", "Evaluate the manifest's GW queries");
    eval->add_option("-m,--manifest", manifest_path, "Manifest JSON file")->required();
    eval->add_option("-q,--query", query_index, "Evaluate only this query index");
    eval->add_flag("--oracle", with_oracle, "Also run the axiom-reduction oracle and compare");
    eval->add_flag("--trace", with_trace, "Print the rules that fired");
    eval->add_flag("--json", as_json, "Emit canonical JSON");

    auto* dist = app.add_subcommand("distinguish", "Compare two stabilized manifolds");
    dist->add_option("-m,--manifest", manifest_path, "Manifest JSON file")->required();
    dist->add_option("first", name, "First manifold name")->required();
    dist->add_option("second", second, "Second manifold name")->required();
    dist->add_flag("--json", as_json, "Emit canonical JSON");

    auto* check =
        app.add_subcommand("oracle-check", "Randomized evaluator/oracle equivalence suite");
    auto* seed_opt = check->add_option("--seed", seed, "RNG seed (overrides GWZERO_SEED)");
    check->add_option("--count", count, "Number of random queries")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitInput;
    }

    try {
        if (app.got_subcommand(info)) return run_info(manifest_path, name);
        if (app.got_subcommand(blowup)) return run_blowup(manifest_path, name, label, out_path);
        if (app.got_subcommand(eval))
            return run_eval(manifest_path, query_index, with_oracle, with_trace, as_json);
        if (app.got_subcommand(dist)) return run_distinguish(manifest_path, name, second, as_json);
        if (app.got_subcommand(check)) return run_check(seed_opt->count() > 0, seed, count);
    } catch (const gwzero::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
