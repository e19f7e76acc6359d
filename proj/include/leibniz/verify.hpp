#pragma once

#include "leibniz/families.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

enum class ReportFamily { ngf1, ngf2, ngf3, flb, slb };

std::string_view family_name(ReportFamily f);
std::size_t family_min_dim(ReportFamily f);

struct VerifyOptions {
    std::vector<ReportFamily> families = {ReportFamily::ngf1, ReportFamily::ngf2,
                                          ReportFamily::ngf3, ReportFamily::flb,
                                          ReportFamily::slb};
    std::size_t n_min = 6;
    std::size_t n_max = 10;
    std::size_t samples = 5;   // per listed case per n, plus as many free draws per n
    std::uint64_t seed = 1;
    SampleMode mode = SampleMode::small_int;
};

struct ReportRow {
    std::string family;
    std::size_t n = 0;
    std::string params;
    std::vector<std::string> cases;     // matched case labels, e.g. "n+1.2"
    std::vector<std::size_t> expected;  // distinct claimed dims, ascending; empty = uncovered
    std::size_t computed = 0;
    std::optional<bool> agrees;         // set iff exactly one dimension is claimed
    bool hard = false;                  // row participates in the exit-status gate
    bool hard_ok = true;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t agreed = 0;
    std::size_t disagreed = 0;
    std::size_t uncovered = 0;
    std::size_t multi_matched = 0;  // rows matching more than one listed case
};

struct VerificationReport {
    std::vector<ReportRow> rows;
    ReportSummary summary;
    bool all_hard_ok = true;
};

/// Sweeps the requested families, comparing solved derivation dimensions
/// against the claimed ones. NGF rows and the hard-flagged FLb/SLb cases
/// gate all_hard_ok; everything else is audited and reported only. Output
/// is a pure function of the options: rows come in a fixed order (family,
/// n, case table order, sample index, then free draws) and all sampling is
/// seeded.
VerificationReport run_verify(const VerifyOptions& opts);

/// Header: family,n,params,cases,expected,computed,agrees. Summary and the
/// itemized disagreed/uncovered/multi-matched rows follow as '#' lines.
std::string report_csv(const VerificationReport& r);

std::string report_json(const VerificationReport& r);

}  // namespace leibniz
