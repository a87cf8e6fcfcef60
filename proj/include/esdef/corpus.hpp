#pragma once

#include "esdef/audit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace esdef {

/// A regression germ. Expected values are hand-derived oracles (Milnor
/// numbers of weighted homogeneous germs, classical multiplicity sequences);
/// absent values are only checked for internal consistency.
struct Fixture {
    std::string name;
    std::string polynomial;
    std::optional<long> mu, tau, deg_zs, free_vertices;
    bool acceptance = true;  // member of the acceptance corpus
};

const std::vector<Fixture>& corpus_fixtures();

enum class RowStatus { Pass, Fail, Info };

struct CorpusCell {
    std::string check;
    RowStatus status = RowStatus::Info;
    std::string detail;
};

struct CorpusRow {
    std::string fixture;
    std::string polynomial;
    double seconds = 0;
    std::vector<CorpusCell> cells;

    bool passed() const;
};

/// Adds `delta` to the stored m-hat of one point of one fixture before the
/// tree is validated.
struct FaultInjection {
    std::string fixture;
    int point = 0;
    int delta = 1;
};

struct CorpusOptions {
    std::optional<std::string> filter;  // substring of the fixture name; empty is rejected
    std::optional<FaultInjection> fault;
    AuditOptions audit;
};

/// InvalidArgument for an empty filter or one matching no fixture.
std::vector<CorpusRow> run_corpus(const CorpusOptions& options = {});

/// One fixture on its own (used by run_corpus and by the acceptance suite).
CorpusRow run_fixture(const Fixture& fixture, const CorpusOptions& options = {});

}  // namespace esdef
