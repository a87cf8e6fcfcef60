#include "esdef/corpus.hpp"

#include "esdef/errors.hpp"
#include "esdef/parse.hpp"

#include <chrono>

namespace esdef {

namespace {

// deg Z^s from classical multiplicity sequences:
// y^2 - x^(2k+1): 2 (k times), 1, 1; x^3 + y^4: 3, 1, 1, 1; x^3 + y^5: 3, 2, 1, 1;
// x^4 - y^5: 4, 1, 1, 1, 1; ordinary m-fold point: m; the branch with
// Puiseux characteristic (4; 6, 7): 4, 2, 2, 1, 1. Milnor numbers of the
// quartics from mu = 2 delta - r + 1 with their Puiseux expansions.
// Sheared fixtures are the same germs after a coordinate change, where
// they stop being Newton non-degenerate.
std::vector<Fixture> make_fixtures()
{
    return {
        {"node", "xy", 1, 1, 3, 0, true},
        {"cusp", "y2-x3", 2, 2, 5, 1, true},
        {"A4", "y2-x5", 4, 4, 8, std::nullopt, true},
        {"A6", "y2-x7", 6, 6, 11, std::nullopt, true},
        {"D4", "x2y+y3", 4, 4, 6, 0, true},
        {"D5", "x2y+y4", 5, 5, std::nullopt, std::nullopt, true},
        {"E6", "x3+y4", 6, 6, 9, std::nullopt, true},
        {"E7", "x3+xy3", 7, 7, std::nullopt, std::nullopt, true},
        {"E8", "x3+y5", 8, 8, 11, std::nullopt, true},
        {"ordinary3", "x3+y3", 4, 4, 6, 0, true},
        {"ordinary4", "x4+y4", 9, 9, 10, 0, true},
        {"ordinary5", "x5+y5", 16, 16, 15, 0, true},
        {"x3-y5", "x3-y5", 8, 8, 11, std::nullopt, true},
        {"x4-y5", "x4-y5", 12, 12, 14, std::nullopt, true},
        {"big", "(y3+x7)*(y3+x10)", 71, 59, 57, std::nullopt, true},
        {"ordinary3-split", "x3-xy2", 4, 4, 6, 0, false},
        {"two-cusps", "(y2-x3)*(y2-x5)", std::nullopt, std::nullopt, std::nullopt, std::nullopt, false},
        {"transversal-cusps", "(x2-y3)*(y2-x3)", std::nullopt, std::nullopt, std::nullopt, std::nullopt, false},
        {"two-branch-quartic", "(y2-x3)^2-x7", 17, std::nullopt, std::nullopt, std::nullopt, false},
        {"branch-4-6-7", "(y2-x3)^2-4x5y-x7", 16, std::nullopt, 18, std::nullopt, false},
        {"branch-6-8-9", "(y3-x4)^2-x9", std::nullopt, std::nullopt, std::nullopt, std::nullopt, false},
        {"x4+x2y2+y5", "x4+x2y2+y5", std::nullopt, std::nullopt, std::nullopt, std::nullopt, false},
        {"cusp-sheared", "(y+x)^2-x3", 2, 2, 5, 1, false},
        {"A4-sheared", "(y+x2)^2-x5", 4, 4, 8, std::nullopt, false},
        {"E6-sheared", "(y+x)^3+x4", 6, 6, 9, std::nullopt, false},
        {"tacnode-pair", "(y-x)^2*(y+x)^2+x6", 13, std::nullopt, std::nullopt, std::nullopt, false},
        {"smooth", "y+x2", 0, 0, 0, 0, false},
    };
}

// Tree checks are grouped by the prefix validate_tree uses.
struct TreeGroup {
    const char* check;
    const char* prefix;
};

constexpr TreeGroup tree_groups[] = {
    {"proximity-equality", "proximity equality"},
    {"proximity-recursion", "m-hat recursion"},
    {"m-tilde", "m-tilde"},
    {"markers", "terminal marker"},
};

// Audit entries that document open questions or values rather than claims
// the corpus must satisfy.
bool informational(const AuditEntry& e)
{
    return e.id == "chain.ea_fix_in_s" || e.status == AuditStatus::Value ||
           e.status == AuditStatus::NotApplicable || e.id.rfind("tree.", 0) == 0;
}

void expect(CorpusRow& row, const char* check, const std::optional<long>& expected, long actual)
{
    if (!expected)
        return;
    row.cells.push_back({check, *expected == actual ? RowStatus::Pass : RowStatus::Fail,
                         "expected " + std::to_string(*expected) + ", got " + std::to_string(actual)});
}

}  // namespace

const std::vector<Fixture>& corpus_fixtures()
{
    static const std::vector<Fixture> fixtures = make_fixtures();
    return fixtures;
}

bool CorpusRow::passed() const
{
    for (const auto& c : cells)
        if (c.status == RowStatus::Fail)
            return false;
    return true;
}

CorpusRow run_fixture(const Fixture& fx, const CorpusOptions& options)
{
    CorpusRow row;
    row.fixture = fx.name;
    row.polynomial = fx.polynomial;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const LocalPoly f = parse_poly(fx.polynomial);

        EssentialTree tree = resolve(f);
        if (options.fault && options.fault->fixture == fx.name) {
            const auto& fault = *options.fault;
            if (fault.point < 0 || static_cast<std::size_t>(fault.point) >= tree.points.size())
                throw Error(ErrorCode::InvalidArgument, "fault injection point q" + std::to_string(fault.point) +
                                                            " does not exist in " + fx.name);
            tree.points[static_cast<std::size_t>(fault.point)].m_hat += fault.delta;
        }
        const auto checks = validate_tree(tree);
        for (const auto& g : tree_groups) {
            CorpusCell cell{g.check, RowStatus::Pass, ""};
            int n = 0;
            for (const auto& c : checks) {
                if (c.name.rfind(g.prefix, 0) != 0)
                    continue;
                ++n;
                if (!c.ok) {
                    cell.status = RowStatus::Fail;
                    cell.detail += (cell.detail.empty() ? "" : "; ") + c.name + ": " + c.detail;
                }
            }
            if (cell.status == RowStatus::Pass)
                cell.detail = std::to_string(n) + (n == 1 ? " check" : " checks");
            row.cells.push_back(std::move(cell));
        }

        const InvariantReport r = invariant_report(f, options.audit);
        expect(row, "mu", fx.mu, r.mu);
        expect(row, "tau", fx.tau, r.tau);
        expect(row, "deg-zs", fx.deg_zs, r.deg_zs);
        expect(row, "free-vertices", fx.free_vertices, r.free_vertices);
        for (const auto& e : r.audit) {
            if (e.id.rfind("tree.", 0) == 0)
                continue;
            CorpusCell cell{e.id, RowStatus::Info, std::string(to_string(e.status))};
            if (!informational(e))
                cell.status = e.status == AuditStatus::Holds ? RowStatus::Pass : RowStatus::Fail;
            if (!e.detail.empty())
                cell.detail += ": " + e.detail;
            if (e.witness)
                cell.detail += " [witness " + *e.witness + "]";
            row.cells.push_back(std::move(cell));
        }
    } catch (const Error& e) {
        row.cells.push_back({"error", RowStatus::Fail, std::string(error_code_name(e.code())) + ": " + e.what()});
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

std::vector<CorpusRow> run_corpus(const CorpusOptions& options)
{
    if (options.filter && options.filter->empty())
        throw Error(ErrorCode::InvalidArgument, "empty corpus filter");
    std::vector<CorpusRow> rows;
    for (const auto& fx : corpus_fixtures())
        if (!options.filter || fx.name.find(*options.filter) != std::string::npos)
            rows.push_back(run_fixture(fx, options));
    if (rows.empty())
        throw Error(ErrorCode::InvalidArgument, "corpus filter '" + *options.filter + "' matches no fixture");
    if (options.fault) {
        bool found = false;
        for (const auto& r : rows)
            found = found || r.fixture == options.fault->fixture;
        if (!found)
            throw Error(ErrorCode::InvalidArgument, "fault injection names unknown fixture " + options.fault->fixture);
    }
    return rows;
}

}  // namespace esdef
