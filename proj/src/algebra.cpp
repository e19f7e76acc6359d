#include "leibniz/algebra.hpp"

#include "leibniz/echelon.hpp"

#include <sstream>
#include <stdexcept>

namespace leibniz {

void Algebra::check_index(std::size_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("Algebra: basis index out of range");
}

void Algebra::add_term(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (c.is_zero()) return;
    auto& terms = tensor_[{i, j}];
    auto [it, inserted] = terms.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
    if (terms.empty()) tensor_.erase({i, j});
}

const Algebra::Terms& Algebra::product(std::size_t i, std::size_t j) const {
    static const Terms empty;
    auto it = tensor_.find({i, j});
    return it == tensor_.end() ? empty : it->second;
}

Element Algebra::basis_element(std::size_t i) const {
    check_index(i);
    Element e(n_);
    e[i - 1] = Rational(1);
    return e;
}

Element bracket(const Algebra& a, const Element& x, const Element& y) {
    if (x.size() != a.dim() || y.size() != a.dim())
        throw std::invalid_argument("bracket: coordinate length mismatch");
    Element out(a.dim());
    for (const auto& [pair, terms] : a.tensor()) {
        const Rational& xi = x[pair.first - 1];
        if (xi.is_zero()) continue;
        const Rational& yj = y[pair.second - 1];
        if (yj.is_zero()) continue;
        const Rational coeff = xi * yj;
        for (const auto& [k, c] : terms) out[k - 1] += coeff * c;
    }
    return out;
}

Element leibniz_defect(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
    const Element ei = a.basis_element(i);
    const Element ej = a.basis_element(j);
    const Element ek = a.basis_element(k);
    Element out = bracket(a, ei, bracket(a, ej, ek));
    const Element lhs1 = bracket(a, bracket(a, ei, ej), ek);
    const Element lhs2 = bracket(a, bracket(a, ei, ek), ej);
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += lhs2[t] - lhs1[t];
    return out;
}

std::optional<LeibnizWitness> check_leibniz(const Algebra& a) {
    const auto n = a.dim();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                Element d = leibniz_defect(a, i, j, k);
                for (const auto& v : d)
                    if (!v.is_zero()) return LeibnizWitness{i, j, k, std::move(d)};
            }
    return std::nullopt;
}

bool is_lie(const Algebra& a) {
    // antisymmetry: c_{ijk} = -c_{jik}; Leibniz then implies Jacobi
    for (const auto& [pair, terms] : a.tensor()) {
        const auto& opposite = a.product(pair.second, pair.first);
        if (opposite.size() != terms.size()) return false;
        for (const auto& [k, c] : terms) {
            auto it = opposite.find(k);
            if (it == opposite.end() || it->second != -c) return false;
        }
    }
    return !check_leibniz(a).has_value();
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    EchelonForm ech(ambient);
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw std::invalid_argument("Subspace::span: length mismatch");
        ech.add_row(v);
    }
    Matrix basis(ech.rank(), ambient);
    const auto rows = ech.rref_rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, v] : rows[r]) basis.at(r, col) = v;
    return Subspace(ambient, std::move(basis));
}

Subspace Subspace::full(std::size_t ambient) {
    return Subspace(ambient, Matrix::identity(ambient));
}

bool Subspace::contains(const Vec& v) const {
    std::vector<Vec> rows;
    rows.reserve(basis_.rows());
    for (std::size_t r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
    return in_span(rows, v);
}

std::vector<Subspace> lower_central_series(const Algebra& a) {
    const auto n = a.dim();
    std::vector<Subspace> series{Subspace::full(n)};
    while (true) {
        const Subspace& prev = series.back();
        std::vector<Vec> products;
        for (std::size_t r = 0; r < prev.dim(); ++r) {
            const Vec x = prev.basis().row(r);
            for (std::size_t j = 1; j <= n; ++j) products.push_back(bracket(a, x, a.basis_element(j)));
        }
        Subspace next = Subspace::span(n, products);
        const bool stabilized = next == prev;
        series.push_back(std::move(next));
        if (stabilized || series.back().dim() == 0) break;
    }
    return series;
}

std::vector<std::size_t> series_dims(const Algebra& a) {
    std::vector<std::size_t> dims;
    for (const auto& s : lower_central_series(a)) dims.push_back(s.dim());
    return dims;
}

bool is_nilpotent(const Algebra& a) {
    return lower_central_series(a).back().dim() == 0;
}

bool is_filiform(const Algebra& a) {
    const auto n = a.dim();
    const auto dims = series_dims(a);
    // after the list ends the series is constant
    auto dim_at = [&](std::size_t i) { return dims[std::min(i - 1, dims.size() - 1)]; };
    for (std::size_t i = 2; i <= n; ++i)
        if (dim_at(i) != n - i) return false;
    return true;
}

std::vector<std::size_t> gradation_dims(const Algebra& a) {
    if (!is_nilpotent(a)) throw std::domain_error("gradation_dims: algebra is not nilpotent");
    const auto dims = series_dims(a);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) out.push_back(dims[i] - dims[i + 1]);
    return out;
}

std::string format_element(const Element& x) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        const Rational mag = abs(x[i]);
        if (first) {
            if (x[i].sign() < 0) os << "-";
            first = false;
        } else {
            os << (x[i].sign() < 0 ? " - " : " + ");
        }
        if (mag != Rational(1)) os << mag.str() << "*";
        os << "e" << (i + 1);
    }
    if (first) return "0";
    return os.str();
}

}  // namespace leibniz
