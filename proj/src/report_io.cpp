#include "esdef/report_io.hpp"

#include "esdef/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace esdef {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* schema_prefix = "esdef.";

std::string text(const LocalPoly& p)
{
    return p.to_string(MonomialOrder::Local);
}

Json schema(const char* kind)
{
    return std::string(schema_prefix) + kind + "/1";
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

void require_not_dot(Format format, const char* what)
{
    if (format == Format::Dot)
        throw Error(ErrorCode::InvalidArgument, std::string("dot output is only available for graph, not ") + what);
}

const char* chart_name(ChartKind k)
{
    switch (k) {
    case ChartKind::Root: return "root";
    case ChartKind::Affine: return "affine";
    case ChartKind::Infinity: return "infinity";
    }
    return "?";
}

const char* point_kind(const InfinitelyNearPoint& p)
{
    if (!p.essential)
        return "marker";
    if (p.parent < 0)
        return "root";
    return p.satellite() ? "satellite" : "free";
}

Json point_json(const InfinitelyNearPoint& p)
{
    Json j;
    j["id"] = p.id;
    j["level"] = p.level;
    j["parent"] = p.parent < 0 ? Json(nullptr) : Json(p.parent);
    j["kind"] = point_kind(p);
    j["essential"] = p.essential;
    j["field"] = p.field ? p.field->describe() : std::string("Q");
    j["weight"] = p.weight;
    j["chart"] = chart_name(p.chart);
    j["direction"] = p.chart == ChartKind::Affine ? Json(p.direction.to_string()) : Json(nullptr);
    j["direction_poly"] = p.chart == ChartKind::Root ? Json(nullptr) : Json(p.direction_poly.to_string("c"));
    j["m"] = p.m;
    j["m_hat"] = p.m_hat;
    j["m_tilde"] = p.m_tilde;
    j["proximate_to"] = p.proximate_to;
    j["children"] = p.children;
    j["strict_transform"] = p.strict.to_string(MonomialOrder::Local);
    return j;
}

Json ideal_json(const IdealPresentation& I, std::optional<int> D, std::optional<long> kernel)
{
    Json j;
    Json gens = Json::array();
    for (const auto& g : I.basis().elements)
        gens.push_back(text(g));
    j["generators"] = gens;
    const auto c = colength(I);
    j["colength"] = c ? Json(*c) : Json(nullptr);
    Json stair = Json::array();
    if (c)
        for (const auto& m : quotient_monomials(I))
            stair.push_back(m.to_string());
    j["staircase"] = stair;
    Json leads = Json::array();
    for (const auto& m : I.basis().leads)
        leads.push_back(m.to_string());
    j["leading_monomials"] = leads;
    j["truncation"] = D ? Json(*D) : Json(nullptr);
    j["kernel_dimension"] = kernel ? Json(*kernel) : Json(nullptr);
    return j;
}

Json entry_json(const AuditEntry& e)
{
    Json j;
    j["id"] = e.id;
    j["claim"] = e.claim;
    j["status"] = std::string(to_string(e.status));
    j["detail"] = e.detail;
    j["witness"] = e.witness ? Json(*e.witness) : Json(nullptr);
    return j;
}

std::string pad(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ")
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

std::string audit_text(const std::vector<AuditEntry>& entries)
{
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "  " << pad(e.id, 28) << pad(std::string(to_string(e.status)), 15) << e.detail;
        if (e.witness)
            os << " [witness " << *e.witness << "]";
        os << "\n";
    }
    return os.str();
}

}  // namespace

NewtonReport newton_report(const LocalPoly& f)
{
    NewtonReport r;
    r.f = f;
    try {
        r.diagram = newton_diagram(f);
    } catch (const Error& e) {
        r.diagram_error = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    try {
        r.sqh = is_sqh(f);
    } catch (const Error&) {
        r.sqh.reset();
    }
    try {
        r.nnd = is_nnd(f);
    } catch (const Error& e) {
        r.nnd_error = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    try {
        r.es_basis = es_basis_newton(f);
    } catch (const Error& e) {
        r.es_basis_error = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    return r;
}

std::string render_tree(const EssentialTree& tree, Format format)
{
    require_not_dot(format, "resolve");
    if (format == Format::Json) {
        Json j;
        j["schema"] = schema("tree");
        j["polynomial"] = text(tree.f);
        j["smooth"] = tree.smooth();
        Json pts = Json::array();
        for (const auto& p : tree.points)
            pts.push_back(point_json(p));
        j["points"] = pts;
        j["free_vertices"] = free_vertex_count(tree);
        j["satellites"] = satellite_count(tree);
        j["deg_zs"] = degree_formula(tree);
        j["encoding"] = tree.smooth() ? std::string() : cluster_graph(tree).encoding;
        return dump(j);
    }
    std::ostringstream os;
    os << "f = " << text(tree.f) << "\n";
    if (tree.smooth()) {
        os << "smooth germ: empty essential tree\n";
        return os.str();
    }
    os << pad("point", 7) << pad("level", 6) << pad("parent", 7) << pad("kind", 10) << pad("m", 4) << pad("m_hat", 6)
       << pad("m_tilde", 8) << pad("weight", 7) << "proximate to\n";
    for (const auto& p : tree.points) {
        std::vector<std::string> prox;
        for (int t : p.proximate_to)
            prox.push_back("q" + std::to_string(t));
        os << pad("q" + std::to_string(p.id), 7) << pad(std::to_string(p.level), 6)
           << pad(p.parent < 0 ? "-" : "q" + std::to_string(p.parent), 7) << pad(point_kind(p), 10)
           << pad(std::to_string(p.m), 4) << pad(std::to_string(p.m_hat), 6) << pad(std::to_string(p.m_tilde), 8)
           << pad(std::to_string(p.weight), 7) << join(prox) << "\n";
    }
    os << "free vertices " << free_vertex_count(tree) << ", satellites " << satellite_count(tree) << ", deg Z^s "
       << degree_formula(tree) << "\n";
    os << "encoding " << cluster_graph(tree).encoding << "\n";
    return os.str();
}

std::string render_ideals(const LocalPoly& f, const DeformationIdeals& I, Format format)
{
    require_not_dot(format, "ideals");
    struct Item {
        const char* name;
        const IdealPresentation* ideal;
        std::optional<int> D;
        std::optional<long> kernel;
    };
    const Item items[] = {
        {"tjurina", &I.tjurina, std::nullopt, std::nullopt},
        {"fixed_tjurina", &I.fixed_tjurina, std::nullopt, std::nullopt},
        {"s", &I.s.ideal, I.s.D, I.s.kernel_dimension},
        {"es_fix", &I.es_fix.ideal, I.es_fix.D, I.es_fix.kernel_dimension},
        {"es", &I.es, std::nullopt, std::nullopt},
    };
    if (format == Format::Json) {
        Json j;
        j["schema"] = schema("ideals");
        j["polynomial"] = text(f);
        Json ideals;
        for (const auto& it : items)
            ideals[it.name] = ideal_json(*it.ideal, it.D, it.kernel);
        j["ideals"] = ideals;
        return dump(j);
    }
    std::ostringstream os;
    os << "f = " << text(f) << "\n";
    for (const auto& it : items) {
        const auto c = colength(*it.ideal);
        os << it.name << ": colength " << (c ? std::to_string(*c) : "infinite");
        if (it.D)
            os << ", truncation D = " << *it.D;
        os << "\n";
        std::vector<std::string> gens;
        for (const auto& g : it.ideal->basis().elements)
            gens.push_back(text(g));
        os << "  <" << join(gens) << ">\n";
    }
    return os.str();
}

std::string render_report(const InvariantReport& r, Format format)
{
    require_not_dot(format, "invariants");
    if (format == Format::Json) {
        Json j;
        j["schema"] = schema("invariants");
        j["polynomial"] = text(r.f);
        j["smooth"] = r.smooth;
        j["mu"] = r.mu;
        j["tau"] = r.tau;
        j["tau_fix"] = r.tau_fix;
        j["tau_es"] = r.tau_es;
        j["tau_es_fix"] = r.tau_es_fix;
        j["tau_s"] = r.tau_s;
        j["deg_zs"] = r.deg_zs;
        j["m"] = r.m;
        j["m_hat"] = r.m_hat;
        j["free_vertices"] = r.free_vertices;
        j["satellites"] = r.satellites;
        if (r.hilbert) {
            Json h;
            h["by_free_vertices"] = r.hilbert->by_free_vertices;
            h["by_quotient"] = r.hilbert->by_quotient;
            h["by_degree_formula"] = r.hilbert->by_degree_formula;
            h["by_tau_s"] = r.hilbert->by_tau_s;
            h["consensus"] = r.hilbert->consensus;
            h["diagnostics"] = r.hilbert->diagnostics;
            j["hilbert_dim"] = h;
        } else {
            j["hilbert_dim"] = nullptr;
        }
        if (r.straightness) {
            Json s;
            s["straight"] = r.straightness->straight;
            s["witness"] = r.straightness->witness ? Json(text(*r.straightness->witness)) : Json(nullptr);
            s["failed_inclusion"] = r.straightness->side;
            j["straightness"] = s;
        } else {
            j["straightness"] = nullptr;
        }
        j["tau_fix_minus_tau_s"] = r.straight_dim_signed;
        j["dim_s_mod_intersection"] = r.s_mod_intersection;
        Json audit = Json::array();
        for (const auto& e : r.audit)
            audit.push_back(entry_json(e));
        j["audit"] = audit;
        return dump(j);
    }
    std::ostringstream os;
    os << "f = " << text(r.f) << "\n";
    if (r.smooth) {
        os << "smooth germ: all invariants vanish\n";
    } else {
        os << "mu=" << r.mu << " tau=" << r.tau << " tau_fix=" << r.tau_fix << " tau^es=" << r.tau_es
           << " tau^es_fix=" << r.tau_es_fix << " tau^s=" << r.tau_s << " deg Z^s=" << r.deg_zs << "\n";
        os << "m=(" << join(r.m) << ") m_hat=(" << join(r.m_hat) << ")\n";
        os << "free=" << r.free_vertices << " satellites=" << r.satellites << "\n";
        if (r.hilbert)
            os << "dim H^s_0: " << r.hilbert->by_free_vertices << " " << r.hilbert->by_quotient << " "
               << r.hilbert->by_degree_formula << " " << r.hilbert->by_tau_s << " ("
               << (r.hilbert->consensus ? "consensus" : "WARNING no consensus: " + r.hilbert->diagnostics) << ")\n";
        if (r.straightness) {
            os << "straight: " << (r.straightness->straight ? "yes" : "no");
            if (r.straightness->witness)
                os << " (" << r.straightness->side << ", witness " << text(*r.straightness->witness) << ")";
            os << "\n";
        }
        os << "tau_fix - tau^s = " << r.straight_dim_signed << ", dim I^s/(I^s meet I^ea_fix) = "
           << r.s_mod_intersection << "\n";
    }
    os << "audit:\n" << audit_text(r.audit);
    return os.str();
}

std::string render_audit(const LocalPoly& f, const std::vector<AuditEntry>& entries, Format format)
{
    require_not_dot(format, "audit");
    long failed = 0;
    for (const auto& e : entries)
        failed += e.status == AuditStatus::Fails;
    if (format == Format::Json) {
        Json j;
        j["schema"] = schema("audit");
        j["polynomial"] = text(f);
        Json arr = Json::array();
        for (const auto& e : entries)
            arr.push_back(entry_json(e));
        j["entries"] = arr;
        j["failed"] = failed;
        return dump(j);
    }
    std::ostringstream os;
    os << "f = " << text(f) << "\n" << audit_text(entries) << failed << " failed\n";
    return os.str();
}

std::string render_newton(const NewtonReport& r, Format format)
{
    require_not_dot(format, "newton");
    if (format == Format::Json) {
        Json j;
        j["schema"] = schema("newton");
        j["polynomial"] = text(r.f);
        if (r.diagram) {
            Json d;
            Json faces = Json::array();
            for (const auto& fc : r.diagram->faces) {
                Json x;
                x["functional"] = fc.to_string();
                x["lambda"] = fc.lambda.get_str();
                x["c"] = fc.c.get_str();
                x["left"] = fc.left.to_string();
                x["right"] = fc.right.to_string();
                faces.push_back(x);
            }
            d["faces"] = faces;
            Json verts = Json::array();
            for (const auto& v : r.diagram->vertices)
                verts.push_back({v.a, v.b});
            d["vertices"] = verts;
            j["diagram"] = d;
        } else {
            j["diagram"] = nullptr;
        }
        j["diagram_error"] = r.diagram_error;
        if (r.sqh)
            j["sqh"] = {{"w1", r.sqh->w1}, {"w2", r.sqh->w2}, {"d", r.sqh->d}};
        else
            j["sqh"] = nullptr;
        j["nnd"] = r.nnd ? Json(*r.nnd) : Json(nullptr);
        j["nnd_error"] = r.nnd_error;
        if (r.es_basis) {
            Json b = Json::array();
            for (const auto& m : *r.es_basis)
                b.push_back(text(m));
            j["es_basis"] = b;
        } else {
            j["es_basis"] = nullptr;
        }
        j["es_basis_error"] = r.es_basis_error;
        return dump(j);
    }
    std::ostringstream os;
    os << "f = " << text(r.f) << "\n";
    if (r.diagram) {
        os << "faces:\n";
        for (const auto& fc : r.diagram->faces)
            os << "  " << fc.to_string() << "  (" << fc.left.to_string() << " .. " << fc.right.to_string() << ")\n";
    } else {
        os << "diagram: " << r.diagram_error << "\n";
    }
    os << "semiquasihomogeneous: ";
    if (r.sqh)
        os << "weights (" << r.sqh->w1 << "," << r.sqh->w2 << ";" << r.sqh->d << ")\n";
    else
        os << "no\n";
    os << "Newton nondegenerate: " << (r.nnd ? (*r.nnd ? "yes" : "no") : r.nnd_error) << "\n";
    if (r.es_basis) {
        std::vector<std::string> b;
        for (const auto& m : *r.es_basis)
            b.push_back(text(m));
        os << "basis of I^es/<f, j(f)> (" << b.size() << "): " << join(b) << "\n";
    } else {
        os << "basis of I^es/<f, j(f)>: " << r.es_basis_error << "\n";
    }
    return os.str();
}

std::string render_graph(const EssentialTree& tree, Format format)
{
    const ClusterGraph g = tree.smooth() ? ClusterGraph{} : cluster_graph(tree);
    if (format == Format::Dot) {
        std::ostringstream os;
        os << "digraph cluster {\n  node [shape=circle];\n";
        for (const auto& p : tree.points) {
            if (!p.essential)
                continue;
            os << "  q" << p.id << " [label=\"q_" << p.id << " : m=" << p.m << ", m\u0302=" << p.m_hat
               << ", level=" << p.level << ", " << point_kind(p);
            if (p.weight > 1)
                os << ", weight=" << p.weight;
            os << "\"" << (p.satellite() ? ", shape=doublecircle" : "") << "];\n";
        }
        for (const auto& p : tree.points)
            if (p.essential && p.parent >= 0)
                os << "  q" << p.parent << " -> q" << p.id << ";\n";
        for (const auto& [q, p] : g.proximities)
            os << "  q" << q << " -> q" << p << " [style=dashed, constraint=false];\n";
        os << "}\n";
        return os.str();
    }
    if (format == Format::Json) {
        Json j;
        j["schema"] = schema("graph");
        j["polynomial"] = text(tree.f);
        Json nodes = Json::array();
        for (const auto& p : tree.points)
            nodes.push_back({{"id", p.id}, {"m", p.m}, {"weight", p.weight}, {"kind", point_kind(p)}});
        j["nodes"] = nodes;
        Json edges = Json::array();
        for (const auto& p : tree.points)
            if (p.parent >= 0)
                edges.push_back({p.parent, p.id});
        j["edges"] = edges;
        Json prox = Json::array();
        for (const auto& [q, p] : g.proximities)
            prox.push_back({q, p});
        j["proximities"] = prox;
        j["encoding"] = g.encoding;
        return dump(j);
    }
    std::ostringstream os;
    os << "f = " << text(tree.f) << "\n";
    for (const auto& p : tree.points)
        if (p.parent >= 0)
            os << "  q" << p.parent << " -> q" << p.id << " (" << point_kind(p) << ", m=" << p.m << ")\n";
    for (const auto& [q, p] : g.proximities)
        os << "  q" << q << " proximate to q" << p << "\n";
    os << "encoding " << g.encoding << "\n";
    return os.str();
}

std::string render_corpus(const std::vector<CorpusRow>& rows, Format format)
{
    require_not_dot(format, "corpus");
    auto status = [](RowStatus s) {
        switch (s) {
        case RowStatus::Pass: return "pass";
        case RowStatus::Fail: return "FAIL";
        case RowStatus::Info: return "info";
        }
        return "?";
    };
    bool all = true;
    for (const auto& r : rows)
        all = all && r.passed();
    if (format == Format::Json) {
        Json j;
        j["schema"] = schema("corpus");
        Json fx = Json::array();
        for (const auto& r : rows) {
            Json x;
            x["name"] = r.fixture;
            x["polynomial"] = r.polynomial;
            x["passed"] = r.passed();
            Json cells = Json::array();
            for (const auto& c : r.cells)
                cells.push_back({{"check", c.check}, {"status", status(c.status)}, {"detail", c.detail}});
            x["checks"] = cells;
            fx.push_back(x);
        }
        j["fixtures"] = fx;
        j["passed"] = all;
        return dump(j);
    }
    // matrix: one column per check name in first-seen order
    std::vector<std::string> columns;
    for (const auto& r : rows)
        for (const auto& c : r.cells)
            if (std::find(columns.begin(), columns.end(), c.check) == columns.end())
                columns.push_back(c.check);
    std::ostringstream os;
    os << "columns:\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << "  " << std::setw(2) << i + 1 << " " << columns[i] << "\n";
    os << pad("fixture", 20);
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << std::setw(3) << i + 1;
    os << "  result\n";
    for (const auto& r : rows) {
        os << pad(r.fixture, 20);
        for (const auto& col : columns) {
            const CorpusCell* cell = nullptr;
            for (const auto& c : r.cells)
                if (c.check == col)
                    cell = &c;
            const char* mark = !cell ? "  ." : cell->status == RowStatus::Pass ? "  +" : cell->status == RowStatus::Fail ? "  X" : "  i";
            os << mark;
        }
        os << "  " << (r.passed() ? "pass" : "FAIL") << "\n";
    }
    os << "legend: + pass, X fail, i informational, . not computed\n";
    for (const auto& r : rows)
        for (const auto& c : r.cells)
            if (c.status == RowStatus::Fail)
                os << "FAIL " << r.fixture << " " << c.check << ": " << c.detail << "\n";
    // straightness search: verdicts of every fixture where it was computed
    int checked = 0;
    std::string non_straight;
    for (const auto& r : rows)
        for (const auto& c : r.cells)
            if (c.check == "straight.verdict" && c.detail.rfind("value", 0) == 0) {
                ++checked;
                if (c.detail.find("not straight") != std::string::npos)
                    non_straight += " " + r.fixture;
            }
    os << "straightness checked on " << checked << " fixtures, non-straight:"
       << (non_straight.empty() ? " none" : non_straight) << "\n";
    os << (all ? "all fixtures pass" : "regressions present") << "\n";
    return os.str();
}

}  // namespace esdef
