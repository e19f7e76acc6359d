#include "leibniz/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace leibniz {

namespace {

// Divide the row by the gcd of its coefficients and make the leading
// coefficient positive. Keeps stored rows primitive and canonical.
void make_primitive(SparseIntRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [col, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(row.front().second) < 0) g = -g;
    if (g != 1) {
        for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

// a*row - b*other, merged by column.
SparseIntRow combine(const SparseIntRow& row, const mpz_class& a,
                     const SparseIntRow& other, const mpz_class& b) {
    SparseIntRow out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0;
    std::size_t j = 0;
    mpz_class t;
    while (i < row.size() && j < other.size()) {
        const auto ci = row[i].first;
        const auto cj = other[j].first;
        if (ci < cj) {
            out.emplace_back(ci, a * row[i].second);
            ++i;
        } else if (cj < ci) {
            out.emplace_back(cj, -(b * other[j].second));
            ++j;
        } else {
            t = a * row[i].second - b * other[j].second;
            if (sgn(t) != 0) out.emplace_back(ci, t);
            ++i;
            ++j;
        }
    }
    for (; i < row.size(); ++i) out.emplace_back(row[i].first, a * row[i].second);
    for (; j < other.size(); ++j) out.emplace_back(other[j].first, -(b * other[j].second));
    return out;
}

// r -= q * other on sparse rational rows.
SparseRatRow rat_submul(const SparseRatRow& r, const Rational& q, const SparseRatRow& other) {
    SparseRatRow out;
    out.reserve(r.size() + other.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < r.size() && j < other.size()) {
        const auto ci = r[i].first;
        const auto cj = other[j].first;
        if (ci < cj) {
            out.push_back(r[i]);
            ++i;
        } else if (cj < ci) {
            out.emplace_back(cj, -(q * other[j].second));
            ++j;
        } else {
            Rational v = r[i].second - q * other[j].second;
            if (!v.is_zero()) out.emplace_back(ci, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < r.size(); ++i) out.push_back(r[i]);
    for (; j < other.size(); ++j) out.emplace_back(other[j].first, -(q * other[j].second));
    return out;
}

}  // namespace

SparseIntRow to_int_row(const Vec& row) {
    mpz_class scale = 1;
    for (const auto& v : row) {
        if (!v.is_zero()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.den().get_mpz_t());
    }
    SparseIntRow out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_zero()) continue;
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), scale.get_mpz_t(), row[i].den().get_mpz_t());
        out.emplace_back(static_cast<std::uint32_t>(i), row[i].num() * f);
    }
    return out;
}

EchelonForm::EchelonForm(std::size_t cols)
    : cols_(cols), col_owner_(cols, -1) {}

void EchelonForm::reduce(SparseIntRow& row) const {
    while (!row.empty()) {
        const auto lead = row.front().first;
        const auto owner = col_owner_[lead];
        if (owner < 0) return;
        const SparseIntRow& e = rows_[static_cast<std::size_t>(owner)];
        const mpz_class& a = e.front().second;  // positive
        const mpz_class& b = row.front().second;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        row = combine(row, a / g, e, b / g);
        make_primitive(row);
    }
}

bool EchelonForm::add_row(const Vec& row) {
    if (row.size() != cols_) throw std::invalid_argument("EchelonForm: row length mismatch");
    return add_row(to_int_row(row));
}

bool EchelonForm::add_row(SparseIntRow row) {
    make_primitive(row);
    reduce(row);
    if (row.empty()) return false;
    const auto lead = row.front().first;
    col_owner_[lead] = static_cast<std::int32_t>(rows_.size());
    pivots_.push_back(lead);
    rows_.push_back(std::move(row));
    return true;
}

bool EchelonForm::reduces_to_zero(const Vec& row) const {
    if (row.size() != cols_) throw std::invalid_argument("EchelonForm: row length mismatch");
    SparseIntRow r = to_int_row(row);
    make_primitive(r);
    reduce(r);
    return r.empty();
}

std::vector<std::size_t> EchelonForm::pivot_cols() const {
    std::vector<std::size_t> out(pivots_.begin(), pivots_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SparseRatRow> EchelonForm::rref_rows() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });

    std::vector<SparseRatRow> out(rows_.size());
    for (std::size_t t = rows_.size(); t-- > 0;) {
        const SparseIntRow& src = rows_[order[t]];
        const mpz_class& pivot_val = src.front().second;
        SparseRatRow r;
        r.reserve(src.size());
        for (const auto& [col, v] : src) r.emplace_back(col, Rational(v, pivot_val));
        // clear entries sitting over later pivots
        for (std::size_t u = t + 1; u < rows_.size(); ++u) {
            const auto pcol = pivots_[order[u]];
            auto it = std::lower_bound(r.begin(), r.end(), pcol,
                                       [](const auto& term, std::uint32_t c) { return term.first < c; });
            if (it != r.end() && it->first == pcol) r = rat_submul(r, it->second, out[u]);
        }
        out[t] = std::move(r);
    }
    return out;
}

std::vector<Vec> EchelonForm::kernel() const {
    const auto rrows = rref_rows();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots_) is_pivot[p] = true;

    std::vector<Vec> out;
    for (std::uint32_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_);
        v[f] = Rational(1);
        for (const auto& r : rrows) {
            auto it = std::lower_bound(r.begin(), r.end(), f,
                                       [](const auto& term, std::uint32_t c) { return term.first < c; });
            if (it != r.end() && it->first == f) v[r.front().first] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace leibniz
