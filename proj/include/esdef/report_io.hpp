#pragma once

#include "esdef/corpus.hpp"
#include "esdef/newton.hpp"

#include <string>

namespace esdef {

enum class Format { Json, Text, Dot };

/// Newton data for the `newton` command; each part records its own failure.
struct NewtonReport {
    LocalPoly f;
    std::optional<NewtonDiagram> diagram;
    std::string diagram_error;
    std::optional<QuasiHomogeneousType> sqh;
    std::optional<bool> nnd;
    std::string nnd_error;
    std::optional<std::vector<LocalPoly>> es_basis;
    std::string es_basis_error;
};

NewtonReport newton_report(const LocalPoly& f);

// Every renderer returns one complete document terminated by a newline.
// Dot is only accepted by render_graph (InvalidArgument elsewhere).
std::string render_tree(const EssentialTree& tree, Format format);
std::string render_ideals(const LocalPoly& f, const DeformationIdeals& ideals, Format format);
std::string render_report(const InvariantReport& report, Format format);
std::string render_audit(const LocalPoly& f, const std::vector<AuditEntry>& entries, Format format);
std::string render_newton(const NewtonReport& report, Format format);
std::string render_graph(const EssentialTree& tree, Format format);
std::string render_corpus(const std::vector<CorpusRow>& rows, Format format);

}  // namespace esdef
