#include <string>
#include <variant>

#include <doctest.h>
#include <json.hpp>

#include "gwzero/distinguish.hpp"
#include "gwzero/gw.hpp"
#include "gwzero/manifest.hpp"
#include "support/fixtures.hpp"

using namespace gwzero;

TEST_CASE("parse_form_expression") {
    CHECK(parse_form_expression("H").rank() == 2);
    CHECK(parse_form_expression("3H+2E8-").rank() == 22);
    CHECK(parse_form_expression("<1>+8<-1>").rank() == 9);
    CHECK(parse_form_expression("3<1>+20<-1>").rank() == 23);
    CHECK(parse_form_expression(" 3H + 2E8- ").rank() == 22);
    CHECK(parse_form_expression("1H").rank() == 2);
    CHECK(signature(parse_form_expression("H+E8-+<1>")) == Signature{2, 9});

    CHECK_THROWS_AS(parse_form_expression(""), ManifestError);
    CHECK_THROWS_AS(parse_form_expression("   "), ManifestError);
    CHECK_THROWS_AS(parse_form_expression("0H"), ManifestError);
    CHECK_THROWS_AS(parse_form_expression("3"), ManifestError);
    CHECK_THROWS_AS(parse_form_expression("E9"), ManifestError);
    CHECK_THROWS_AS(parse_form_expression("H+"), ManifestError);
    CHECK_THROWS_AS(parse_form_expression("+H"), ManifestError);
    CHECK_THROWS_AS(parse_form_expression("2x<1>"), ManifestError);
}

namespace {

const char* kPairLike = R"({
  "version": 1,
  "manifolds": [
    {"name": "A", "form": "H", "c1": [0, 0]},
    {"name": "B", "gram": [[1, 0], [0, -1]], "c1": [1, 1]}
  ],
  "queries": [
    {"space": "A", "class": [1, 0], "insertions": []},
    {"space": "AxS2", "class": [1, 0, 2], "insertions": [{"degree": 2, "phi": [1, 0], "lam": 3}]}
  ]
})";

}  // namespace

TEST_CASE("parse_manifest: structure and defaults") {
    const Manifest m = parse_manifest(kPairLike);
    CHECK(m.version == 1);
    REQUIRE(m.manifolds.size() == 2);
    CHECK(m.manifolds[0].form == "H");
    CHECK(m.manifolds[0].simply_connected);  // defaults
    CHECK(m.manifolds[0].minimal);
    CHECK(m.manifolds[1].gram == IMat{{1, 0}, {0, -1}});
    REQUIRE(m.queries.size() == 2);
    CHECK(m.queries[1].space == "AxS2");
    CHECK(m.queries[1].insertions[0].lam == 3);

    // Explicit grams default to labels e1..en; a named form keeps its labels.
    Workspace ws(m);
    CHECK(ws.manifold("B").lattice().basis_labels() ==
          std::vector<std::string>{"e1", "e2"});
    CHECK(ws.manifold("A").lattice().basis_labels() == std::vector<std::string>{"u", "v"});
    CHECK(ws.manifold("A").c1() == IVec{0, 0});
    CHECK(ws.manifold_names() == std::vector<std::string>{"A", "B"});
}

TEST_CASE("parse_manifest: malformed input") {
    CHECK_THROWS_AS(parse_manifest("not json"), ManifestError);
    CHECK_THROWS_AS(parse_manifest("[]"), ManifestError);
    CHECK_THROWS_AS(parse_manifest(R"({"manifolds": []})"), ManifestError);  // no version
    CHECK_THROWS_AS(parse_manifest(R"({"version": 2, "manifolds": []})"), ManifestError);
    CHECK_THROWS_AS(parse_manifest(R"({"version": 1})"), ManifestError);  // no manifolds
    CHECK_THROWS_AS(parse_manifest(R"({"version": 1, "manifolds": [{"name": "A"}]})"),
                    ManifestError);  // neither form nor gram
    CHECK_THROWS_AS(
        parse_manifest(
            R"({"version": 1, "manifolds": [{"name": "A", "form": "H", "gram": [[1]]}]})"),
        ManifestError);  // both
    CHECK_THROWS_AS(
        parse_manifest(R"({"version": 1, "manifolds": [{"form": "H"}]})"),
        ManifestError);  // nameless
    CHECK_THROWS_AS(
        parse_manifest(
            R"({"version": 1, "manifolds": [{"name": "A", "form": "H", "c1": ["x"]}]})"),
        ManifestError);  // non-integer c1
    CHECK_THROWS_AS(
        parse_manifest(
            R"({"version": 1, "manifolds": [{"name": "A", "form": "H"}], "queries": [{"space": "A"}]})"),
        ManifestError);  // query without class
}

TEST_CASE("Workspace: duplicates, lookups, lazy stabilizations") {
    CHECK_THROWS_AS(Workspace(parse_manifest(
                        R"({"version": 1, "manifolds": [
                            {"name": "A", "form": "H"}, {"name": "A", "form": "H"}]})")),
                    ManifestError);

    Workspace ws(parse_manifest(kPairLike));
    CHECK_THROWS_AS(ws.manifold("missing"), ManifestError);
    const Stabilized6& s1 = ws.stabilized("A");
    const Stabilized6& s2 = ws.stabilized("A");
    CHECK(&s1 == &s2);  // cached, pointer-stable
    CHECK(s1.base().name() == "A");
}

TEST_CASE("resolve_query: 4-manifold and stabilization shapes") {
    Workspace ws(parse_manifest(kPairLike));
    const Manifest m = parse_manifest(kPairLike);

    auto q0 = resolve_query(ws, m.queries[0]);
    REQUIRE(std::holds_alternative<GWQuery4>(q0));
    const auto& q4 = std::get<GWQuery4>(q0);
    CHECK(q4.space == &ws.manifold("A"));
    CHECK(q4.cls.coords == IVec{1, 0});
    CHECK(q4.k() == 0);

    auto q1 = resolve_query(ws, m.queries[1]);
    REQUIRE(std::holds_alternative<GWQuery6>(q1));
    const auto& q6 = std::get<GWQuery6>(q1);
    CHECK(q6.cls.base.coords == IVec{1, 0});
    CHECK(q6.cls.fiber == 2);
    REQUIRE(q6.k() == 1);
    CHECK(q6.insertions[0].lam == 3);

    // Shape errors.
    QuerySpec bad_len{"A", IVec{1}, {}};
    CHECK_THROWS_AS(resolve_query(ws, bad_len), ManifestError);
    QuerySpec bad_len6{"AxS2", IVec{1, 0}, {}};
    CHECK_THROWS_AS(resolve_query(ws, bad_len6), ManifestError);
    QuerySpec unknown{"CxS2", IVec{1, 0, 0}, {}};
    CHECK_THROWS_AS(resolve_query(ws, unknown), ManifestError);
    QuerySpec bad_deg{"A", IVec{1, 0}, {InsertionSpec{3, {}, 0, 0, {}, 0}}};
    CHECK_THROWS_AS(resolve_query(ws, bad_deg), ManifestError);
    QuerySpec deg6_on_4{"A", IVec{1, 0}, {InsertionSpec{6, {}, 0, 0, {}, 1}}};
    CHECK_THROWS_AS(resolve_query(ws, deg6_on_4), ManifestError);
    QuerySpec short_phi{"A", IVec{1, 0}, {InsertionSpec{2, IVec{1}, 0, 0, {}, 0}}};
    CHECK_THROWS_AS(resolve_query(ws, short_phi), ManifestError);
    QuerySpec short_psi{"AxS2", IVec{1, 0, 0}, {InsertionSpec{4, {}, 0, 0, IVec{1}, 0}}};
    CHECK_THROWS_AS(resolve_query(ws, short_psi), ManifestError);
}

TEST_CASE("the bundled pair manifest reproduces the headline values") {
    const Manifest m = load_manifest(std::string(GWZERO_MANIFEST_DIR) + "/pair.json");
    Workspace ws(m);
    REQUIRE(m.queries.size() == 4);

    const Z expected[] = {Z(1), Z(-1), Z(-1), Z(1)};
    for (std::size_t i = 0; i < m.queries.size(); ++i) {
        auto rq = resolve_query(ws, m.queries[i]);
        const Evaluation ev = std::holds_alternative<GWQuery4>(rq)
                                  ? eval_4(std::get<GWQuery4>(rq))
                                  : eval_6(std::get<GWQuery6>(rq));
        CAPTURE(i);
        REQUIRE(ev.value.is_integer());
        CHECK(ev.value.value() == expected[i]);
    }

    const auto& x1 = ws.manifold("X1");
    const auto& x2 = ws.manifold("X2");
    CHECK_FALSE(x1.minimal());
    CHECK(x2.minimal());
    CHECK(*check_homeomorphic(x1, x2).homeomorphic);
}

TEST_CASE("manifold_to_json round-trips through the parser") {
    for (const auto& x : {fixtures::make_x1(), fixtures::make_x2(), fixtures::make_cp2_8()}) {
        const std::string text = manifold_to_json(x);
        const Manifest m = parse_manifest(text);
        REQUIRE(m.manifolds.size() == 1);
        const Manifold4 rebuilt = build_manifold(m.manifolds[0]);
        CHECK(rebuilt.name() == x.name());
        CHECK(rebuilt.lattice().gram() == x.lattice().gram());
        CHECK(rebuilt.lattice().basis_labels() == x.lattice().basis_labels());
        CHECK(rebuilt.c1() == x.c1());
        CHECK(rebuilt.minimal() == x.minimal());
        CHECK(rebuilt.exceptional_classes() == x.exceptional_classes());
        CHECK(rebuilt.sphere_classes() == x.sphere_classes());
    }
}

TEST_CASE("evaluation_to_json carries value and trace") {
    const auto x1 = fixtures::make_x1();
    const auto ev = eval_4(GWQuery4{&x1, fixtures::x1_exceptional(), {}});
    const auto j = nlohmann::json::parse(evaluation_to_json("K3#E", ev.value, ev.trace));
    CHECK(j.at("space") == "K3#E");
    CHECK(j.at("value").at("kind") == "integer");
    CHECK(j.at("value").at("value") == 1);
    CHECK(j.at("trace").is_array());
    CHECK_FALSE(j.at("trace").empty());

    const auto nd = GWValue::not_determined("why not");
    const auto jn = nlohmann::json::parse(evaluation_to_json("S", nd, {}));
    CHECK(jn.at("value").at("kind") == "not_determined");
    CHECK(jn.at("value").at("reason") == "why not");
}
