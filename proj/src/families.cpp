#include "leibniz/families.hpp"

#include <random>
#include <stdexcept>

namespace leibniz {

namespace {

Rational get(const std::map<std::size_t, Rational>& m, std::size_t i) {
    auto it = m.find(i);
    return it == m.end() ? Rational(0) : it->second;
}

void check_param_range(const std::map<std::size_t, Rational>& m, std::size_t lo,
                       std::size_t hi, const char* what) {
    for (const auto& [i, v] : m)
        if (i < lo || i > hi) throw std::invalid_argument(std::string(what) + ": parameter index out of range");
}

}  // namespace

Algebra ngf1(std::size_t n) {
    if (n < 3) throw std::invalid_argument("ngf1: need n >= 3");
    Algebra a(n);
    a.add_term(1, 1, 3, Rational(1));
    for (std::size_t i = 2; i <= n - 1; ++i) a.add_term(i, 1, i + 1, Rational(1));
    return a;
}

Algebra ngf2(std::size_t n) {
    if (n < 3) throw std::invalid_argument("ngf2: need n >= 3");
    Algebra a(n);
    a.add_term(1, 1, 3, Rational(1));
    for (std::size_t i = 3; i <= n - 1; ++i) a.add_term(i, 1, i + 1, Rational(1));
    return a;
}

Algebra ngf3(std::size_t n, int alpha) {
    if (n < 4) throw std::invalid_argument("ngf3: need n >= 4");
    if (alpha != 0 && alpha != 1) throw std::invalid_argument("ngf3: alpha must be 0 or 1");
    if (alpha == 1 && n % 2 != 0)
        throw std::invalid_argument("ngf3: alpha = 1 requires even n");
    Algebra a(n);
    for (std::size_t i = 2; i <= n - 1; ++i) {
        a.add_term(i, 1, i + 1, Rational(1));
        a.add_term(1, i, i + 1, Rational(-1));
    }
    if (alpha == 1) {
        // writing the single formula for every ordered pair (i, n+1-i)
        // reproduces both signed equalities when n is even
        for (std::size_t i = 2; i <= n - 1; ++i)
            a.add_term(i, n + 1 - i, n, Rational(i % 2 == 0 ? -1 : 1));
    }
    return a;
}

Algebra flb(std::size_t n, const FlbParams& p) {
    if (n < 5) throw std::invalid_argument("flb: need n >= 5");
    check_param_range(p.alpha, 4, n - 1, "flb");
    Algebra a(n);
    a.add_term(1, 1, 3, Rational(1));
    for (std::size_t i = 2; i <= n - 1; ++i) a.add_term(i, 1, i + 1, Rational(1));
    for (std::size_t m = 4; m <= n - 1; ++m) a.add_term(1, 2, m, get(p.alpha, m));
    a.add_term(1, 2, n, p.theta);
    for (std::size_t j = 2; j <= n - 2; ++j)
        for (std::size_t m = 4; m <= n + 2 - j; ++m) {
            const Rational c = m <= n - 1 ? get(p.alpha, m) : p.alpha_n;  // m = n only at j = 2
            a.add_term(j, 2, j + m - 2, c);
        }
    return a;
}

Algebra slb(std::size_t n, const SlbParams& p) {
    if (n < 5) throw std::invalid_argument("slb: need n >= 5");
    check_param_range(p.beta, 3, n - 1, "slb");
    Algebra a(n);
    a.add_term(1, 1, 3, Rational(1));
    for (std::size_t i = 3; i <= n - 1; ++i) a.add_term(i, 1, i + 1, Rational(1));
    for (std::size_t m = 3; m <= n - 1; ++m) a.add_term(1, 2, m + 1, get(p.beta, m));
    a.add_term(2, 2, n, p.gamma);
    for (std::size_t j = 3; j <= n - 2; ++j)
        for (std::size_t m = 3; m <= n + 1 - j; ++m) a.add_term(j, 2, j + m - 1, get(p.beta, m));
    return a;
}

std::size_t expected_dim_ngf(NgfFamily f, std::size_t n) {
    switch (f) {
        case NgfFamily::ngf1: return n + 1;
        case NgfFamily::ngf2: return n + 2;
        case NgfFamily::ngf3: return 2 * n - 1;
    }
    throw std::logic_error("expected_dim_ngf: bad family");
}

std::size_t tier_dim(DimTier t, std::size_t n) {
    switch (t) {
        case DimTier::n_minus_1: return n - 1;
        case DimTier::n_exact: return n;
        case DimTier::n_plus_1: return n + 1;
        case DimTier::n_plus_2: return n + 2;
        case DimTier::two_n_minus_1: return 2 * n - 1;
    }
    throw std::logic_error("tier_dim: bad tier");
}

std::string_view tier_label(DimTier t) {
    switch (t) {
        case DimTier::n_minus_1: return "n-1";
        case DimTier::n_exact: return "n";
        case DimTier::n_plus_1: return "n+1";
        case DimTier::n_plus_2: return "n+2";
        case DimTier::two_n_minus_1: return "2n-1";
    }
    throw std::logic_error("tier_label: bad tier");
}

namespace {

enum class Req { zero, nonzero };

// Zero/nonzero requirement on one full parameter vector: `head` constrains
// theta (FLb) resp. gamma (SLb), `slots` the indexed coefficients starting
// at the family's first index.
struct ParamPattern {
    Req head;
    std::vector<Req> slots;
};

// One printed case, as a shape over the parameter vector:
//   plain:     every slot not named in `fixed` gets `rest`
//   single_nz: within [q_lo, n-1] exactly one slot is nonzero
//   single_z:  within [q_lo, n-1] exactly one slot is zero
//   suffix:    within [q_lo, n-1] slots below some l are zero, from l on
//              nonzero; `parity` +1 keeps only l with n = 2l-1, -1 only
//              l with n != 2l-1
// `fixed` indices are absolute when positive and n+idx when negative
// (so -1 names the top coefficient).
struct Shape {
    enum class Kind { plain, single_nz, single_z, suffix };
    Req head;
    Kind kind;
    Req rest = Req::zero;
    std::vector<std::pair<int, Req>> fixed;
    std::size_t q_lo = 0;
    int parity = 0;
};

struct CaseDef {
    DimTier tier;
    std::size_t index;
    bool hard;
    Shape shape;
};

std::vector<ParamPattern> build_patterns(const Shape& s, std::size_t n, std::size_t first) {
    const std::size_t last = n - 1;
    if (last < first) return {};
    const std::size_t count = last - first + 1;

    std::vector<std::pair<std::size_t, Req>> fixed;
    for (const auto& [rel, req] : s.fixed) {
        const std::size_t idx = rel > 0 ? static_cast<std::size_t>(rel) : n - static_cast<std::size_t>(-rel);
        if (idx < first || idx > last) return {};
        fixed.emplace_back(idx, req);
    }
    auto apply_fixed = [&](ParamPattern& p) {
        std::vector<char> seen(count, 0);
        for (const auto& [idx, req] : fixed) {
            const std::size_t pos = idx - first;
            if (seen[pos] && p.slots[pos] != req) return false;  // contradictory at this n
            p.slots[pos] = req;
            seen[pos] = 1;
        }
        return true;
    };

    std::vector<ParamPattern> out;
    auto emit = [&](ParamPattern p) {
        if (apply_fixed(p)) out.push_back(std::move(p));
    };

    switch (s.kind) {
        case Shape::Kind::plain:
            emit(ParamPattern{s.head, std::vector<Req>(count, s.rest)});
            break;
        case Shape::Kind::single_nz:
            for (std::size_t i = s.q_lo; i <= last; ++i) {
                ParamPattern p{s.head, std::vector<Req>(count, Req::zero)};
                p.slots[i - first] = Req::nonzero;
                emit(std::move(p));
            }
            break;
        case Shape::Kind::single_z:
            for (std::size_t i = s.q_lo; i <= last; ++i) {
                ParamPattern p{s.head, std::vector<Req>(count, Req::nonzero)};
                p.slots[i - first] = Req::zero;
                emit(std::move(p));
            }
            break;
        case Shape::Kind::suffix:
            for (std::size_t l = s.q_lo; l <= last; ++l) {
                if (s.parity == 1 && n != 2 * l - 1) continue;
                if (s.parity == -1 && n == 2 * l - 1) continue;
                ParamPattern p{s.head, std::vector<Req>(count, Req::nonzero)};
                for (std::size_t i = s.q_lo; i < l; ++i) p.slots[i - first] = Req::zero;
                emit(std::move(p));
            }
            break;
    }
    return out;
}

constexpr Req Z = Req::zero;
constexpr Req NZ = Req::nonzero;
using K = Shape::Kind;

const std::vector<CaseDef>& flb_table() {
    static const std::vector<CaseDef> t = {
        {DimTier::n_plus_1, 1, false, {Z, K::plain, Z, {}, 0, 0}},
        {DimTier::n_plus_1, 2, false, {NZ, K::single_nz, Z, {{4, NZ}, {5, NZ}}, 6, 0}},
        {DimTier::n_plus_1, 3, false, {Z, K::single_nz, Z, {{4, NZ}, {5, NZ}}, 6, 0}},
        {DimTier::n_plus_1, 4, false, {NZ, K::single_nz, Z, {{4, Z}, {5, Z}}, 6, 0}},
        {DimTier::n_plus_1, 5, false, {Z, K::single_nz, Z, {{4, Z}, {5, Z}}, 6, 0}},
        {DimTier::n_plus_1, 6, false, {NZ, K::single_z, Z, {}, 4, 0}},
        {DimTier::n_plus_1, 7, false, {Z, K::single_z, Z, {}, 4, 0}},
        {DimTier::n_plus_1, 8, false, {NZ, K::suffix, Z, {{4, NZ}, {5, NZ}, {6, Z}}, 7, 0}},
        {DimTier::n_plus_1, 9, false, {Z, K::suffix, Z, {{4, NZ}, {5, NZ}, {6, Z}}, 7, 0}},
        {DimTier::n_exact, 1, true, {NZ, K::plain, NZ, {}, 0, 0}},
        {DimTier::n_exact, 2, false, {NZ, K::plain, Z, {}, 0, 0}},
        {DimTier::n_exact, 3, false, {Z, K::plain, Z, {{4, NZ}, {5, NZ}}, 0, 0}},
        {DimTier::n_exact, 4, false, {NZ, K::suffix, Z, {{4, Z}}, 5, 0}},
        {DimTier::n_minus_1, 1, false, {NZ, K::plain, Z, {{4, NZ}, {5, NZ}}, 0, 0}},
        {DimTier::n_minus_1, 2, false, {NZ, K::plain, Z, {{4, Z}, {5, NZ}}, 0, 0}},
    };
    return t;
}

const std::vector<CaseDef>& slb_table() {
    static const std::vector<CaseDef> t = {
        {DimTier::n_plus_2, 1, true, {Z, K::plain, Z, {}, 0, 0}},
        {DimTier::n_plus_2, 2, false, {Z, K::single_nz, Z, {}, 3, 0}},
        {DimTier::n_plus_1, 1, false, {NZ, K::plain, Z, {}, 0, 0}},
        {DimTier::n_plus_1, 2, false, {Z, K::plain, NZ, {}, 0, 0}},
        {DimTier::n_plus_1, 3, false, {NZ, K::suffix, Z, {}, 3, 1}},
        {DimTier::n_plus_1, 4, false, {NZ, K::plain, NZ, {}, 0, 0}},
        {DimTier::n_plus_1, 5, false, {NZ, K::single_nz, Z, {}, 3, 0}},
        {DimTier::n_plus_1, 6, false, {NZ, K::single_z, Z, {}, 3, 0}},
        {DimTier::n_plus_1, 7, false, {Z, K::single_z, Z, {}, 3, 0}},
        {DimTier::n_exact, 1, false, {NZ, K::suffix, Z, {}, 3, -1}},
        {DimTier::n_exact, 2, false, {NZ, K::plain, Z, {{-1, NZ}}, 0, 0}},
        {DimTier::n_exact, 3, false, {NZ, K::plain, Z, {{-1, Z}, {-2, NZ}}, 0, 0}},
        {DimTier::n_exact, 4, false, {Z, K::plain, Z, {{-1, Z}, {-2, NZ}}, 0, 0}},
        {DimTier::n_exact, 5, false, {NZ, K::plain, Z, {{-1, NZ}, {-2, NZ}}, 0, 0}},
        {DimTier::n_minus_1, 1, true, {Z, K::plain, Z, {{-1, NZ}, {-2, NZ}}, 0, 0}},
        {DimTier::n_minus_1, 2, false, {Z, K::plain, Z, {{3, NZ}}, 0, 0}},
    };
    return t;
}

struct Signature {
    bool head_nonzero;
    std::vector<bool> slots_nonzero;
};

bool matches(const ParamPattern& p, const Signature& sig) {
    if ((p.head == Req::nonzero) != sig.head_nonzero) return false;
    for (std::size_t i = 0; i < p.slots.size(); ++i)
        if ((p.slots[i] == Req::nonzero) != static_cast<bool>(sig.slots_nonzero[i])) return false;
    return true;
}

std::vector<CaseMatch> classify(const std::vector<CaseDef>& table, std::size_t n,
                                std::size_t first, const Signature& sig) {
    std::vector<CaseMatch> out;
    for (const auto& def : table) {
        for (const auto& p : build_patterns(def.shape, n, first)) {
            if (matches(p, sig)) {
                out.push_back({def.tier, def.index});
                break;
            }
        }
    }
    return out;
}

Signature flb_signature(std::size_t n, const FlbParams& p) {
    Signature sig{!p.theta.is_zero(), {}};
    for (std::size_t i = 4; i <= n - 1; ++i) sig.slots_nonzero.push_back(!get(p.alpha, i).is_zero());
    return sig;
}

Signature slb_signature(std::size_t n, const SlbParams& p) {
    Signature sig{!p.gamma.is_zero(), {}};
    for (std::size_t i = 3; i <= n - 1; ++i) sig.slots_nonzero.push_back(!get(p.beta, i).is_zero());
    return sig;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    v ^= v >> 31;
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// avoids std::uniform_int_distribution so that sampled parameters are
// identical across standard library implementations
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

Rational draw_nonzero(std::mt19937_64& rng, SampleMode mode) {
    long p = 1 + static_cast<long>(below(rng, 3));
    if (below(rng, 2) == 1) p = -p;
    if (mode == SampleMode::rational) {
        const long q = 1 + static_cast<long>(below(rng, 3));
        return Rational(p, q);
    }
    return Rational(p);
}

Rational draw_any(std::mt19937_64& rng, SampleMode mode) {
    const long p = static_cast<long>(below(rng, 7)) - 3;
    if (mode == SampleMode::rational && p != 0) {
        const long q = 1 + static_cast<long>(below(rng, 3));
        return Rational(p, q);
    }
    return Rational(p);
}

const CaseDef& find_case(const std::vector<CaseDef>& table, DimTier tier, std::size_t index,
                         const char* what) {
    for (const auto& def : table)
        if (def.tier == tier && def.index == index) return def;
    throw std::invalid_argument(std::string(what) + ": no such case");
}

ParamPattern pick_pattern(const CaseDef& def, std::size_t n, std::size_t first,
                          std::mt19937_64& rng, const char* what) {
    auto patterns = build_patterns(def.shape, n, first);
    if (patterns.empty())
        throw std::invalid_argument(std::string(what) + ": case not instantiable at this dimension");
    return patterns[below(rng, patterns.size())];
}

}  // namespace

std::vector<CaseMatch> classify_flb(std::size_t n, const FlbParams& p) {
    if (n < 5) throw std::invalid_argument("classify_flb: need n >= 5");
    check_param_range(p.alpha, 4, n - 1, "classify_flb");
    return classify(flb_table(), n, 4, flb_signature(n, p));
}

std::vector<CaseMatch> classify_slb(std::size_t n, const SlbParams& p) {
    if (n < 5) throw std::invalid_argument("classify_slb: need n >= 5");
    check_param_range(p.beta, 3, n - 1, "classify_slb");
    return classify(slb_table(), n, 3, slb_signature(n, p));
}

const std::vector<CaseInfo>& flb_cases() {
    static const std::vector<CaseInfo> infos = [] {
        std::vector<CaseInfo> out;
        for (const auto& def : flb_table()) out.push_back({def.tier, def.index, def.hard});
        return out;
    }();
    return infos;
}

const std::vector<CaseInfo>& slb_cases() {
    static const std::vector<CaseInfo> infos = [] {
        std::vector<CaseInfo> out;
        for (const auto& def : slb_table()) out.push_back({def.tier, def.index, def.hard});
        return out;
    }();
    return infos;
}

bool flb_case_instantiable(DimTier tier, std::size_t case_index, std::size_t n) {
    const auto& def = find_case(flb_table(), tier, case_index, "flb_case_instantiable");
    return !build_patterns(def.shape, n, 4).empty();
}

bool slb_case_instantiable(DimTier tier, std::size_t case_index, std::size_t n) {
    const auto& def = find_case(slb_table(), tier, case_index, "slb_case_instantiable");
    return !build_patterns(def.shape, n, 3).empty();
}

FlbParams sample_flb(DimTier tier, std::size_t case_index, std::size_t n,
                     std::uint64_t seed, SampleMode mode) {
    const auto& def = find_case(flb_table(), tier, case_index, "sample_flb");
    std::uint64_t h = mix(seed, 0xf1b);
    h = mix(h, static_cast<std::uint64_t>(tier));
    h = mix(h, case_index);
    h = mix(h, n);
    std::mt19937_64 rng(h);
    const ParamPattern p = pick_pattern(def, n, 4, rng, "sample_flb");
    FlbParams out;
    out.theta = p.head == Req::nonzero ? draw_nonzero(rng, mode) : Rational(0);
    for (std::size_t i = 4; i <= n - 1; ++i)
        out.alpha[i] = p.slots[i - 4] == Req::nonzero ? draw_nonzero(rng, mode) : Rational(0);
    return out;
}

SlbParams sample_slb(DimTier tier, std::size_t case_index, std::size_t n,
                     std::uint64_t seed, SampleMode mode) {
    const auto& def = find_case(slb_table(), tier, case_index, "sample_slb");
    std::uint64_t h = mix(seed, 0x51b);
    h = mix(h, static_cast<std::uint64_t>(tier));
    h = mix(h, case_index);
    h = mix(h, n);
    std::mt19937_64 rng(h);
    const ParamPattern p = pick_pattern(def, n, 3, rng, "sample_slb");
    SlbParams out;
    out.gamma = p.head == Req::nonzero ? draw_nonzero(rng, mode) : Rational(0);
    for (std::size_t i = 3; i <= n - 1; ++i)
        out.beta[i] = p.slots[i - 3] == Req::nonzero ? draw_nonzero(rng, mode) : Rational(0);
    return out;
}

FlbParams sample_flb_random(std::size_t n, std::uint64_t seed, SampleMode mode) {
    std::mt19937_64 rng(mix(mix(seed, 0xf1bf), n));
    FlbParams out;
    out.theta = draw_any(rng, mode);
    for (std::size_t i = 4; i <= n - 1; ++i) out.alpha[i] = draw_any(rng, mode);
    return out;
}

SlbParams sample_slb_random(std::size_t n, std::uint64_t seed, SampleMode mode) {
    std::mt19937_64 rng(mix(mix(seed, 0x51bf), n));
    SlbParams out;
    out.gamma = draw_any(rng, mode);
    for (std::size_t i = 3; i <= n - 1; ++i) out.beta[i] = draw_any(rng, mode);
    return out;
}

}  // namespace leibniz
