#include "esdef/errors.hpp"
#include "esdef/parse.hpp"
#include "esdef/report_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace esdef;

namespace {

enum Exit { ok = 0, input_error = 2, audit_failed = 3, internal_error = 4 };

struct Job {
    std::string polynomial;
    std::string file;
    std::string format = "text";
    bool strict = false;
    std::uint64_t seed = AuditOptions{}.seed;
    std::optional<int> trunc;
    std::optional<std::string> filter;
    std::string fault;
};

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::Json;
    if (s == "dot")
        return Format::Dot;
    return Format::Text;
}

LocalPoly read_input(const Job& job)
{
    if (!job.polynomial.empty() && !job.file.empty())
        throw Error(ErrorCode::InvalidArgument, "give the polynomial either inline or with --file, not both");
    if (!job.file.empty()) {
        std::ifstream in(job.file);
        if (!in)
            throw Error(ErrorCode::InvalidArgument, "cannot read " + job.file);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_poly(ss.str());
    }
    if (job.polynomial.empty())
        throw Error(ErrorCode::InvalidArgument, "missing polynomial (positional argument or --file)");
    return parse_poly(job.polynomial);
}

FaultInjection parse_fault(const std::string& s)
{
    const auto a = s.find(':');
    const auto b = s.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos)
        throw Error(ErrorCode::InvalidArgument, "--inject-mhat expects fixture:point:delta");
    try {
        return {s.substr(0, a), std::stoi(s.substr(a + 1, b - a - 1)), std::stoi(s.substr(b + 1))};
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "--inject-mhat expects integer point and delta");
    }
}

bool any_failed(const std::vector<AuditEntry>& entries)
{
    for (const auto& e : entries)
        if (e.status == AuditStatus::Fails)
            return true;
    return false;
}

int run(const std::string& command, const Job& job)
{
    const Format format = parse_format(job.format);
    if (format == Format::Dot && command != "graph")
        throw Error(ErrorCode::InvalidArgument, "--format dot is only valid for graph");
    const AuditOptions audit{job.seed, job.trunc};

    if (command == "corpus") {
        CorpusOptions opt;
        opt.filter = job.filter;
        opt.audit = audit;
        if (!job.fault.empty())
            opt.fault = parse_fault(job.fault);
        const auto rows = run_corpus(opt);
        std::cout << render_corpus(rows, format);
        for (const auto& r : rows)
            if (!r.passed())
                return audit_failed;
        return ok;
    }

    const LocalPoly f = read_input(job);
    if (command == "resolve") {
        std::cout << render_tree(resolve(f), format);
    } else if (command == "graph") {
        std::cout << render_graph(resolve(f), format);
    } else if (command == "ideals") {
        std::cout << render_ideals(f, deformation_ideals(f, job.trunc), format);
    } else if (command == "newton") {
        std::cout << render_newton(newton_report(f), format);
    } else if (command == "invariants") {
        const InvariantReport r = invariant_report(f, audit);
        std::cout << render_report(r, format);
        if (job.strict && any_failed(r.audit))
            return audit_failed;
    } else if (command == "audit") {
        const auto entries = claims_audit(f, audit);
        std::cout << render_audit(f, entries, format);
        if (job.strict && any_failed(entries))
            return audit_failed;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equisingular deformation ideals of plane curve germs"};
    app.require_subcommand(1);
    Job job;

    const std::pair<const char*, const char*> commands[] = {
        {"resolve", "essential tree of the minimal embedded resolution"},
        {"invariants", "invariant report with Hilbert dimensions and audit table"},
        {"ideals", "Tjurina, fixed Tjurina, I^s, I^es_fix and I^es"},
        {"newton", "Newton diagram, SQH/NND tests and a monomial basis of I^es/<f, j(f)>"},
        {"audit", "evaluate the identity and inclusion claims"},
        {"graph", "cluster graph (text, json or dot)"},
        {"corpus", "run the regression corpus"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (std::string(name) != "corpus") {
            sub->add_option("polynomial", job.polynomial, "polynomial in x, y with rational coefficients");
            sub->add_option("--file", job.file, "read the polynomial from a file");
        } else {
            sub->add_option("--filter", job.filter, "substring of fixture names to run");
            sub->add_option("--inject-mhat", job.fault, "fault injection fixture:point:delta on a stored m-hat");
        }
        sub->add_option("--format", job.format, "output format")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        sub->add_flag("--strict", job.strict, "exit 3 when an audit entry fails");
        sub->add_option("--seed", job.seed, "seed for sampled checks");
        sub->add_option("--trunc", job.trunc, "truncation degree override");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error[usage]: " << e.what() << "\n";
        return input_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, job);
    } catch (const Error& e) {
        std::cerr << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return e.code() == ErrorCode::InternalInconsistency ? internal_error : input_error;
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        return internal_error;
    }
}
