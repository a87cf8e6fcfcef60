#pragma once

#include "esdef/ideals.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace esdef {

enum class AuditStatus { Holds, Fails, NotApplicable, Value };

std::string_view to_string(AuditStatus status);

struct AuditEntry {
    std::string id;     // stable key, e.g. "chain.ea_fix_in_s"
    std::string claim;  // human-readable statement
    AuditStatus status = AuditStatus::NotApplicable;
    std::string detail;
    std::optional<std::string> witness;  // polynomial text
};

struct HilbertDimension {
    long by_free_vertices = 0;
    long by_quotient = 0;        // dim I^es_fix / I^s from the truncated kernels
    long by_degree_formula = 0;  // deg Z^s - tau^es - 2
    long by_tau_s = 0;           // tau^s - tau^es_fix
    bool consensus = false;
    std::string diagnostics;     // filled on disagreement
};

struct StraightnessVerdict {
    bool straight = false;
    std::optional<LocalPoly> witness;  // generator with nonzero normal form
    std::string side;                  // which inclusion failed
};

struct AuditOptions {
    std::uint64_t seed = 20240917;
    std::optional<int> trunc;
};

struct InvariantReport {
    LocalPoly f;
    bool smooth = false;
    long mu = 0, tau = 0, tau_fix = 0, tau_es = 0, tau_es_fix = 0, tau_s = 0, deg_zs = 0;
    std::vector<int> m, m_hat;  // essential points, in tree order
    long free_vertices = 0, satellites = 0;
    std::optional<HilbertDimension> hilbert;
    std::optional<StraightnessVerdict> straightness;
    long straight_dim_signed = 0;        // tau_fix - tau^s
    long s_mod_intersection = 0;         // dim I^s / (I^s meet I^ea_fix)
    std::vector<AuditEntry> audit;
};

HilbertDimension hilbert_dim(const DeformationIdeals& ideals);
HilbertDimension hilbert_dim(const LocalPoly& f);

/// I^es against <f, j(f)> + I^s, both inclusions.
StraightnessVerdict straightness_check(const DeformationIdeals& ideals);
StraightnessVerdict straightness_check(const LocalPoly& f);

/// Every entry is evaluated on its own; errors become failed entries.
std::vector<AuditEntry> claims_audit(const LocalPoly& f, const AuditOptions& options = {});

/// mu(f + t g) at each sample; two seeded random rationals when `samples` is empty.
std::vector<std::pair<Rational, long>> milnor_drop_check(const LocalPoly& f, const LocalPoly& g,
                                                         std::vector<Rational> samples = {},
                                                         std::uint64_t seed = AuditOptions{}.seed);

InvariantReport invariant_report(const LocalPoly& f, const AuditOptions& options = {});

/// Seeded rationals p/q with 1 <= |p|, q <= 97, pairwise distinct.
std::vector<Rational> sample_rationals(std::uint64_t seed, std::size_t count);

}  // namespace esdef
