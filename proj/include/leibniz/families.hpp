#pragma once

#include "leibniz/algebra.hpp"

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

namespace leibniz {

// The three naturally graded filiform families. All generators produce the
// tables verbatim; every other product is zero.

/// [e1,e1] = e3, [e_i,e1] = e_{i+1} for 2 <= i <= n-1. Requires n >= 3.
Algebra ngf1(std::size_t n);

/// [e1,e1] = e3, [e_i,e1] = e_{i+1} for 3 <= i <= n-1. Requires n >= 3.
Algebra ngf2(std::size_t n);

/// [e_i,e1] = -[e1,e_i] = e_{i+1} and
/// [e_i,e_{n+1-i}] = -[e_{n+1-i},e_i] = alpha*(-1)^{i+1} e_n, 2 <= i <= n-1.
/// alpha must be 0 or 1, and 0 when n is odd. Requires n >= 4.
Algebra ngf3(std::size_t n, int alpha);

/// Parameters of the first filiform non-Lie class:
///   [e1,e1] = e3
///   [e_i,e1] = e_{i+1},                                  2 <= i <= n-1
///   [e1,e2] = a4 e4 + ... + a_{n-1} e_{n-1} + theta e_n
///   [e_j,e2] = a4 e_{j+2} + ... + a_{n+2-j} e_n,         2 <= j <= n-2
/// The j = 2 row references a coefficient on e_n that the named parameter
/// list does not include; it is exposed here as `alpha_n` and defaults to
/// zero.
struct FlbParams {
    std::map<std::size_t, Rational> alpha;  // keys in 4..n-1; missing = 0
    Rational alpha_n;
    Rational theta;
};

/// Parameters of the second filiform non-Lie class:
///   [e1,e1] = e3
///   [e_i,e1] = e_{i+1},                                  3 <= i <= n-1
///   [e1,e2] = b3 e4 + ... + b_{n-1} e_n
///   [e2,e2] = gamma e_n
///   [e_j,e2] = b3 e_{j+2} + ... + b_{n+1-j} e_n,         3 <= j <= n-2
struct SlbParams {
    std::map<std::size_t, Rational> beta;  // keys in 3..n-1; missing = 0
    Rational gamma;
};

/// Requires n >= 5; throws on parameter indices outside 4..n-1.
Algebra flb(std::size_t n, const FlbParams& p);

/// Requires n >= 5; throws on parameter indices outside 3..n-1.
Algebra slb(std::size_t n, const SlbParams& p);

enum class NgfFamily { ngf1, ngf2, ngf3 };

/// n+1, n+2 and 2n-1 respectively.
std::size_t expected_dim_ngf(NgfFamily f, std::size_t n);

/// Dimension expression a case table row claims, evaluated via tier_dim.
enum class DimTier { n_minus_1, n_exact, n_plus_1, n_plus_2, two_n_minus_1 };

std::size_t tier_dim(DimTier t, std::size_t n);
std::string_view tier_label(DimTier t);  // "n-1", "n", "n+1", "n+2", "2n-1"

struct CaseMatch {
    DimTier tier;
    std::size_t case_index;  // 1-based position within the tier
    friend bool operator==(const CaseMatch&, const CaseMatch&) = default;
};

// Case classifiers for the two parameterized families. Each case is a
// zero/nonzero predicate on (theta, alpha_4..alpha_{n-1}) resp.
// (gamma, beta_3..beta_{n-1}), implemented literally as printed in the
// dimension tables. All matching cases are returned in table order; an
// empty result means no listed case covers the parameter vector, and more
// than one entry means the listed cases overlap on it. The classifiers
// never consult the solver; the verify harness is what judges agreement.
std::vector<CaseMatch> classify_flb(std::size_t n, const FlbParams& p);
std::vector<CaseMatch> classify_slb(std::size_t n, const SlbParams& p);

struct CaseInfo {
    DimTier tier;
    std::size_t case_index;
    bool hard;  // dimension claim enforced by the verify exit status
};

/// All listed cases in table order (tiers high to low, as printed).
const std::vector<CaseInfo>& flb_cases();
const std::vector<CaseInfo>& slb_cases();

/// Whether a case has at least one satisfying parameter vector at this n.
bool flb_case_instantiable(DimTier tier, std::size_t case_index, std::size_t n);
bool slb_case_instantiable(DimTier tier, std::size_t case_index, std::size_t n);

enum class SampleMode { small_int, rational };

/// Deterministic sampler for a listed case: nonzero slots draw from
/// {+-1,+-2,+-3} (small_int) or small fractions p/q with q in 1..3
/// (rational); zero slots are exactly 0. classify_* of the result always
/// contains the requested case. Throws std::invalid_argument when the case
/// has no satisfying vector at this n.
FlbParams sample_flb(DimTier tier, std::size_t case_index, std::size_t n,
                     std::uint64_t seed, SampleMode mode = SampleMode::small_int);
SlbParams sample_slb(DimTier tier, std::size_t case_index, std::size_t n,
                     std::uint64_t seed, SampleMode mode = SampleMode::small_int);

/// Unconstrained draws over the same parameter space (slots may be zero),
/// used by the harness to measure coverage of the case tables.
FlbParams sample_flb_random(std::size_t n, std::uint64_t seed,
                            SampleMode mode = SampleMode::small_int);
SlbParams sample_slb_random(std::size_t n, std::uint64_t seed,
                            SampleMode mode = SampleMode::small_int);

}  // namespace leibniz
