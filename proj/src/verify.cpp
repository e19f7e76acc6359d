#include "leibniz/verify.hpp"

#include "leibniz/derivations.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace leibniz {

std::string_view family_name(ReportFamily f) {
    switch (f) {
        case ReportFamily::ngf1: return "ngf1";
        case ReportFamily::ngf2: return "ngf2";
        case ReportFamily::ngf3: return "ngf3";
        case ReportFamily::flb: return "flb";
        case ReportFamily::slb: return "slb";
    }
    throw std::logic_error("family_name: bad family");
}

std::size_t family_min_dim(ReportFamily f) {
    switch (f) {
        case ReportFamily::ngf1:
        case ReportFamily::ngf2: return 3;
        case ReportFamily::ngf3: return 4;
        case ReportFamily::flb:
        case ReportFamily::slb: return 5;
    }
    throw std::logic_error("family_min_dim: bad family");
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    v ^= v >> 31;
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational get(const std::map<std::size_t, Rational>& m, std::size_t i) {
    auto it = m.find(i);
    return it == m.end() ? Rational(0) : it->second;
}

std::string flb_params_str(std::size_t n, const FlbParams& p) {
    std::ostringstream os;
    os << "theta=" << p.theta.str();
    for (std::size_t i = 4; i <= n - 1; ++i) os << ";alpha" << i << "=" << get(p.alpha, i).str();
    os << ";alphan=" << p.alpha_n.str();
    return os.str();
}

std::string slb_params_str(std::size_t n, const SlbParams& p) {
    std::ostringstream os;
    os << "gamma=" << p.gamma.str();
    for (std::size_t i = 3; i <= n - 1; ++i) os << ";beta" << i << "=" << get(p.beta, i).str();
    return os.str();
}

std::string case_label(const CaseMatch& m) {
    return std::string(tier_label(m.tier)) + "." + std::to_string(m.case_index);
}

void fill_classified(ReportRow& row, const std::vector<CaseMatch>& matched, std::size_t n) {
    std::vector<std::size_t> dims;
    for (const auto& m : matched) {
        row.cases.push_back(case_label(m));
        dims.push_back(tier_dim(m.tier, n));
    }
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    row.expected = std::move(dims);
    if (row.expected.size() == 1) row.agrees = row.expected.front() == row.computed;
}

ReportRow ngf_row(ReportFamily f, std::size_t n, int alpha) {
    ReportRow row;
    row.family = std::string(family_name(f));
    row.n = n;
    Algebra a = [&] {
        switch (f) {
            case ReportFamily::ngf1: return ngf1(n);
            case ReportFamily::ngf2: return ngf2(n);
            default:
                row.params = "alpha=" + std::to_string(alpha);
                return ngf3(n, alpha);
        }
    }();
    const NgfFamily nf = f == ReportFamily::ngf1  ? NgfFamily::ngf1
                         : f == ReportFamily::ngf2 ? NgfFamily::ngf2
                                                    : NgfFamily::ngf3;
    row.cases = {"ngf"};
    row.expected = {expected_dim_ngf(nf, n)};
    row.computed = der_dim(a);
    row.agrees = row.expected.front() == row.computed;
    row.hard = true;
    row.hard_ok = *row.agrees;
    return row;
}

}  // namespace

VerificationReport run_verify(const VerifyOptions& opts) {
    if (opts.n_min > opts.n_max) throw std::invalid_argument("run_verify: n_min > n_max");
    VerificationReport rep;
    auto wanted = [&](ReportFamily f) {
        return std::find(opts.families.begin(), opts.families.end(), f) != opts.families.end();
    };
    // fixed family order keeps reports reproducible regardless of flag order
    for (ReportFamily f : {ReportFamily::ngf1, ReportFamily::ngf2, ReportFamily::ngf3,
                           ReportFamily::flb, ReportFamily::slb}) {
        if (!wanted(f)) continue;
        for (std::size_t n = std::max(opts.n_min, family_min_dim(f)); n <= opts.n_max; ++n) {
            switch (f) {
                case ReportFamily::ngf1:
                case ReportFamily::ngf2:
                    rep.rows.push_back(ngf_row(f, n, 0));
                    break;
                case ReportFamily::ngf3:
                    rep.rows.push_back(ngf_row(f, n, 0));
                    if (n % 2 == 0) rep.rows.push_back(ngf_row(f, n, 1));
                    break;
                case ReportFamily::flb: {
                    for (const auto& info : flb_cases()) {
                        if (!flb_case_instantiable(info.tier, info.case_index, n)) continue;
                        for (std::size_t s = 0; s < opts.samples; ++s) {
                            const auto p = sample_flb(info.tier, info.case_index, n,
                                                      mix(opts.seed, s), opts.mode);
                            ReportRow row;
                            row.family = "flb";
                            row.n = n;
                            row.params = flb_params_str(n, p);
                            row.computed = der_dim(flb(n, p));
                            fill_classified(row, classify_flb(n, p), n);
                            row.hard = info.hard;
                            row.hard_ok = !info.hard || row.computed == tier_dim(info.tier, n);
                            rep.rows.push_back(std::move(row));
                        }
                    }
                    for (std::size_t s = 0; s < opts.samples; ++s) {
                        const auto p = sample_flb_random(n, mix(opts.seed, s), opts.mode);
                        ReportRow row;
                        row.family = "flb";
                        row.n = n;
                        row.params = flb_params_str(n, p);
                        row.computed = der_dim(flb(n, p));
                        fill_classified(row, classify_flb(n, p), n);
                        rep.rows.push_back(std::move(row));
                    }
                    break;
                }
                case ReportFamily::slb: {
                    for (const auto& info : slb_cases()) {
                        if (!slb_case_instantiable(info.tier, info.case_index, n)) continue;
                        for (std::size_t s = 0; s < opts.samples; ++s) {
                            const auto p = sample_slb(info.tier, info.case_index, n,
                                                      mix(opts.seed, s), opts.mode);
                            ReportRow row;
                            row.family = "slb";
                            row.n = n;
                            row.params = slb_params_str(n, p);
                            row.computed = der_dim(slb(n, p));
                            fill_classified(row, classify_slb(n, p), n);
                            row.hard = info.hard;
                            row.hard_ok = !info.hard || row.computed == tier_dim(info.tier, n);
                            rep.rows.push_back(std::move(row));
                        }
                    }
                    for (std::size_t s = 0; s < opts.samples; ++s) {
                        const auto p = sample_slb_random(n, mix(opts.seed, s), opts.mode);
                        ReportRow row;
                        row.family = "slb";
                        row.n = n;
                        row.params = slb_params_str(n, p);
                        row.computed = der_dim(slb(n, p));
                        fill_classified(row, classify_slb(n, p), n);
                        rep.rows.push_back(std::move(row));
                    }
                    break;
                }
            }
        }
    }

    for (const auto& row : rep.rows) {
        ++rep.summary.total;
        if (row.agrees.has_value()) {
            if (*row.agrees)
                ++rep.summary.agreed;
            else
                ++rep.summary.disagreed;
        }
        if (row.expected.empty()) ++rep.summary.uncovered;
        if (row.cases.size() > 1) ++rep.summary.multi_matched;
        if (!row.hard_ok) rep.all_hard_ok = false;
    }
    return rep;
}

namespace {

std::string join(const std::vector<std::string>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

std::string expected_str(const ReportRow& row) {
    if (row.expected.empty()) return "uncovered";
    std::vector<std::string> parts;
    for (auto d : row.expected) parts.push_back(std::to_string(d));
    return join(parts, '|');
}

std::string agrees_str(const ReportRow& row) {
    if (!row.agrees.has_value()) return "";
    return *row.agrees ? "true" : "false";
}

}  // namespace

std::string report_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "family,n,params,cases,expected,computed,agrees\n";
    for (const auto& row : r.rows) {
        os << row.family << ',' << row.n << ',' << row.params << ',' << join(row.cases, '|') << ','
           << expected_str(row) << ',' << row.computed << ',' << agrees_str(row) << '\n';
    }
    const auto& s = r.summary;
    os << "# summary total=" << s.total << " agreed=" << s.agreed << " disagreed=" << s.disagreed
       << " uncovered=" << s.uncovered << " multi_matched=" << s.multi_matched
       << " hard_ok=" << (r.all_hard_ok ? "true" : "false") << '\n';
    for (const auto& row : r.rows) {
        if (row.agrees.has_value() && !*row.agrees)
            os << "# disagreed: " << row.family << " n=" << row.n << " params=" << row.params
               << " expected=" << expected_str(row) << " computed=" << row.computed << '\n';
    }
    for (const auto& row : r.rows) {
        if (row.expected.empty())
            os << "# uncovered: " << row.family << " n=" << row.n << " params=" << row.params
               << " computed=" << row.computed << '\n';
    }
    for (const auto& row : r.rows) {
        if (row.cases.size() > 1)
            os << "# multi_matched: " << row.family << " n=" << row.n << " params=" << row.params
               << " cases=" << join(row.cases, '|') << " computed=" << row.computed << '\n';
    }
    return os.str();
}

std::string report_json(const VerificationReport& r) {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    nlohmann::json disagreed = nlohmann::json::array();
    nlohmann::json uncovered = nlohmann::json::array();
    nlohmann::json multi = nlohmann::json::array();
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const auto& row = r.rows[i];
        nlohmann::json jrow;
        jrow["family"] = row.family;
        jrow["n"] = row.n;
        jrow["params"] = row.params;
        jrow["cases"] = row.cases;
        if (row.expected.empty())
            jrow["expected"] = "uncovered";
        else if (row.expected.size() == 1)
            jrow["expected"] = row.expected.front();
        else
            jrow["expected"] = row.expected;
        jrow["computed"] = row.computed;
        if (row.agrees.has_value())
            jrow["agrees"] = *row.agrees;
        else
            jrow["agrees"] = nullptr;
        jrow["hard"] = row.hard;
        doc["rows"].push_back(std::move(jrow));
        if (row.agrees.has_value() && !*row.agrees) disagreed.push_back(i);
        if (row.expected.empty()) uncovered.push_back(i);
        if (row.cases.size() > 1) multi.push_back(i);
    }
    doc["summary"] = {{"total", r.summary.total},
                      {"agreed", r.summary.agreed},
                      {"disagreed", r.summary.disagreed},
                      {"uncovered", r.summary.uncovered},
                      {"multi_matched", r.summary.multi_matched},
                      {"hard_ok", r.all_hard_ok},
                      {"disagreed_rows", std::move(disagreed)},
                      {"uncovered_rows", std::move(uncovered)},
                      {"multi_matched_rows", std::move(multi)}};
    return doc.dump(2) + "\n";
}

}  // namespace leibniz
