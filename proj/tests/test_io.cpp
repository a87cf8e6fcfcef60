#include <doctest.h>

#include "esdef/errors.hpp"
#include "esdef/parse.hpp"
#include "esdef/report_io.hpp"

#include <json.hpp>

using namespace esdef;
using Json = nlohmann::ordered_json;

namespace {

Json parse(const std::string& s)
{
    REQUIRE(!s.empty());
    REQUIRE(s.back() == '\n');
    return Json::parse(s);
}

}  // namespace

TEST_CASE("tree json")
{
    const EssentialTree t = resolve(parse_poly("y2-x3"));
    const Json j = parse(render_tree(t, Format::Json));
    CHECK(j["schema"] == "esdef.tree/1");
    CHECK(j["polynomial"] == "y2-x3");
    CHECK(j["smooth"] == false);
    CHECK(j["deg_zs"] == 5);
    CHECK(j["free_vertices"] == 1);
    REQUIRE(j["points"].size() == t.points.size());
    CHECK(j["points"][0]["parent"].is_null());
    CHECK(j["points"][0]["m"] == 2);
    CHECK(j["points"][0]["m_hat"] == 2);
    for (const auto& p : j["points"])
        for (const char* key : {"id", "level", "kind", "essential", "field", "weight", "chart", "m", "m_hat",
                                "m_tilde", "proximate_to", "children", "strict_transform"})
            CHECK_MESSAGE(p.contains(key), key);
}

TEST_CASE("ideals json")
{
    const LocalPoly f = parse_poly("y2-x3");
    const Json j = parse(render_ideals(f, deformation_ideals(f), Format::Json));
    CHECK(j["schema"] == "esdef.ideals/1");
    const Json& I = j["ideals"];
    CHECK(I["tjurina"]["colength"] == 2);
    CHECK(I["fixed_tjurina"]["colength"] == 4);
    CHECK(I["s"]["colength"] == 5);
    CHECK(I["es_fix"]["colength"] == 4);
    CHECK(I["es"]["colength"] == 2);
    CHECK(I["s"]["truncation"].is_number_integer());
    CHECK(I["tjurina"]["truncation"].is_null());
    // generators parse back to the same ideal
    std::vector<LocalPoly> gens;
    for (const auto& g : I["s"]["generators"])
        gens.push_back(parse_poly(g.get<std::string>()));
    CHECK(ideal_equal(IdealPresentation(gens), deformation_ideals(f).s.ideal));
}

TEST_CASE("invariants json")
{
    const InvariantReport r = invariant_report(parse_poly("(y3+x7)*(y3+x10)"));
    const Json j = parse(render_report(r, Format::Json));
    CHECK(j["schema"] == "esdef.invariants/1");
    CHECK(j["mu"] == 71);
    CHECK(j["tau"] == 59);
    CHECK(j["tau_fix"] == 61);
    CHECK(j["tau_es"] == 52);
    CHECK(j["tau_es_fix"] == 54);
    CHECK(j["tau_s"] == 57);
    CHECK(j["hilbert_dim"]["consensus"] == true);
    CHECK(j["hilbert_dim"]["by_quotient"] == 3);
    CHECK(j["straightness"]["straight"] == true);
    CHECK(j["audit"].size() == r.audit.size());
}

TEST_CASE("audit json")
{
    const LocalPoly f = parse_poly("y2-x3");
    const Json j = parse(render_audit(f, claims_audit(f), Format::Json));
    CHECK(j["schema"] == "esdef.audit/1");
    bool found = false;
    for (const auto& e : j["entries"]) {
        CHECK(e.contains("claim"));
        if (e["id"] == "chain.ea_fix_in_s") {
            found = true;
            CHECK(e["status"] == "fails");
            CHECK(e["witness"] == "xy");
        }
    }
    CHECK(found);
}

TEST_CASE("newton json")
{
    const Json j = parse(render_newton(newton_report(parse_poly("y2-x3")), Format::Json));
    CHECK(j["schema"] == "esdef.newton/1");
    CHECK(j["sqh"]["w1"] == 2);
    CHECK(j["sqh"]["w2"] == 3);
    CHECK(j["sqh"]["d"] == 6);
    CHECK(j["nnd"] == true);
    CHECK(j["es_basis"].empty());

    const Json bad = parse(render_newton(newton_report(parse_poly("(y2-x3)^2-x7")), Format::Json));
    CHECK(bad["nnd"] == false);
    CHECK(bad["es_basis"].is_null());
    CHECK(bad["es_basis_error"] != "");
}

TEST_CASE("graph json and dot")
{
    const EssentialTree t = resolve(parse_poly("y2-x3"));
    const Json j = parse(render_graph(t, Format::Json));
    CHECK(j["schema"] == "esdef.graph/1");
    CHECK(j["nodes"].size() == t.points.size());
    CHECK(j["edges"].size() == t.points.size() - 1);
    CHECK(j["proximities"].size() == 1);
    const std::string dot = render_graph(t, Format::Dot);
    CHECK(dot.rfind("digraph cluster {", 0) == 0);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("q2 -> q0 [style=dashed") != std::string::npos);
    CHECK(dot.find("q_1 : m=1, m\u0302=3, level=1, free") != std::string::npos);
    CHECK(dot.find("q3") == std::string::npos);  // the marker is not drawn
    CHECK(dot.substr(dot.size() - 2) == "}\n");
}

TEST_CASE("dot is refused outside the graph")
{
    const LocalPoly f = parse_poly("xy");
    CHECK_THROWS_AS(render_tree(resolve(f), Format::Dot), Error);
    CHECK_THROWS_AS(render_audit(f, claims_audit(f), Format::Dot), Error);
    CHECK_THROWS_AS(render_corpus({}, Format::Dot), Error);
}

TEST_CASE("text renderers end with a newline and are deterministic")
{
    const LocalPoly f = parse_poly("x3+y4");
    const std::string a = render_report(invariant_report(f), Format::Text);
    CHECK(a == render_report(invariant_report(f), Format::Text));
    CHECK(a.back() == '\n');
    CHECK(render_tree(resolve(f), Format::Text).back() == '\n');
    CHECK(render_newton(newton_report(f), Format::Text).back() == '\n');
}

TEST_CASE("corpus rendering")
{
    CorpusOptions opt;
    opt.filter = "cusp";
    const auto rows = run_corpus(opt);
    const std::string text = render_corpus(rows, Format::Text);
    CHECK(text == render_corpus(run_corpus(opt), Format::Text));
    CHECK(text.find("all fixtures pass") != std::string::npos);
    const Json j = parse(render_corpus(rows, Format::Json));
    CHECK(j["schema"] == "esdef.corpus/1");
    CHECK(j["passed"] == true);
    CHECK(j["fixtures"].size() == rows.size());
}

TEST_CASE("smooth germs render")
{
    const LocalPoly f = parse_poly("y+x2");
    const Json j = parse(render_tree(resolve(f), Format::Json));
    CHECK(j["smooth"] == true);
    CHECK(j["deg_zs"] == 0);
    CHECK(j["points"].empty());
    CHECK(parse(render_graph(resolve(f), Format::Json))["nodes"].empty());
    CHECK(parse(render_report(invariant_report(f), Format::Json))["mu"] == 0);
}
