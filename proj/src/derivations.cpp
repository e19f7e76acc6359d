#include "leibniz/derivations.hpp"

#include "leibniz/echelon.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace leibniz {

namespace {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
using RowMap = std::map<std::uint32_t, Rational>;

// Nonzero rows of the constraint system, keyed by equation triple (i,j,k)
// so iteration is lexicographic. Column layout: d_k^l at (l-1)*n + (k-1).
std::map<Triple, RowMap> assemble_rows(const Algebra& a) {
    const std::size_t n = a.dim();
    std::map<Triple, RowMap> rows;
    auto col = [n](std::size_t k, std::size_t l) {
        return static_cast<std::uint32_t>((l - 1) * n + (k - 1));
    };
    for (const auto& [pair, terms] : a.tensor()) {
        const auto [p, q] = pair;
        // d([e_i,e_j]) contributes +c_{ij}^m at d_k^m for each k
        for (std::size_t k = 1; k <= n; ++k)
            for (const auto& [m, c] : terms) rows[{p, q, k}][col(k, m)] += c;
        // [d(e_i),e_j] contributes -c_{mj}^k at d_m^i; here (m,j) = (p,q)
        for (const auto& [k, c] : terms)
            for (std::size_t i = 1; i <= n; ++i) rows[{i, q, k}][col(p, i)] -= c;
        // [e_i,d(e_j)] contributes -c_{im}^k at d_m^j; here (i,m) = (p,q)
        for (const auto& [k, c] : terms)
            for (std::size_t j = 1; j <= n; ++j) rows[{p, j, k}][col(q, j)] -= c;
    }
    return rows;
}

SparseIntRow to_sparse_int(const RowMap& row) {
    mpz_class scale = 1;
    for (const auto& [c, v] : row)
        if (!v.is_zero()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.den().get_mpz_t());
    SparseIntRow out;
    for (const auto& [c, v] : row) {
        if (v.is_zero()) continue;
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), scale.get_mpz_t(), v.den().get_mpz_t());
        out.emplace_back(c, v.num() * f);
    }
    return out;
}

}  // namespace

Matrix derivation_constraint_matrix(const Algebra& a) {
    const std::size_t n = a.dim();
    Matrix m(n * n * n, n * n);
    for (const auto& [triple, row] : assemble_rows(a)) {
        const auto [i, j, k] = triple;
        const std::size_t r = ((i - 1) * n + (j - 1)) * n + (k - 1);
        for (const auto& [c, v] : row)
            if (!v.is_zero()) m.at(r, c) = v;
    }
    return m;
}

DerivationBasis der_basis(const Algebra& a) {
    const std::size_t n = a.dim();
    EchelonForm ech(n * n);
    for (const auto& [triple, row] : assemble_rows(a)) ech.add_row(to_sparse_int(row));
    DerivationBasis basis;
    basis.n = n;
    for (const auto& v : ech.kernel()) basis.matrices.push_back(unflatten_column_major(n, v));
    return basis;
}

std::size_t der_dim(const Algebra& a) {
    const std::size_t n = a.dim();
    const std::size_t unknowns = n * n;
    EchelonForm ech(unknowns);
    for (const auto& [triple, row] : assemble_rows(a)) {
        ech.add_row(to_sparse_int(row));
        if (ech.rank() == unknowns) break;
    }
    return unknowns - ech.rank();
}

bool is_derivation(const Algebra& a, const DerivationMatrix& d) {
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n)
        throw std::invalid_argument("is_derivation: matrix size does not match algebra");
    for (std::size_t i = 1; i <= n; ++i) {
        const Element di = d.col(i - 1);
        for (std::size_t j = 1; j <= n; ++j) {
            Element lhs = mat_vec(d, bracket(a, a.basis_element(i), a.basis_element(j)));
            const Element r1 = bracket(a, di, a.basis_element(j));
            const Element r2 = bracket(a, a.basis_element(i), d.col(j - 1));
            for (std::size_t t = 0; t < n; ++t) {
                if (lhs[t] != r1[t] + r2[t]) return false;
            }
        }
    }
    return true;
}

DerivationMatrix right_mul(const Algebra& a, const Element& z) {
    const std::size_t n = a.dim();
    if (z.size() != n) throw std::invalid_argument("right_mul: coordinate length mismatch");
    Matrix m(n, n);
    for (std::size_t l = 1; l <= n; ++l) {
        const Element image = bracket(a, a.basis_element(l), z);
        for (std::size_t k = 0; k < n; ++k) m.at(k, l - 1) = image[k];
    }
    return m;
}

std::vector<DerivationMatrix> ngf1_analytic_der_basis(std::size_t n) {
    if (n < 3) throw std::invalid_argument("ngf1_analytic_der_basis: need n >= 3");
    std::vector<DerivationMatrix> out;
    // all matrix units below are 1-based, hence the -1 shifts
    Matrix v1(n, n);
    v1.at(0, 0) = Rational(1);
    for (std::size_t i = 2; i <= n; ++i) v1.at(i - 1, i - 1) = Rational(static_cast<long>(i - 1));
    out.push_back(std::move(v1));
    for (std::size_t k = 2; k <= n - 1; ++k) {
        Matrix vk(n, n);
        vk.at(k - 1, 0) = Rational(1);
        for (std::size_t i = k; i <= n; ++i) vk.at(i - 1, i - k + 2 - 1) = Rational(1);
        out.push_back(std::move(vk));
    }
    out.push_back(Matrix::unit(n, n - 1, 0));  // E_n1
    out.push_back(Matrix::unit(n, n - 1, 1));  // E_n2
    return out;
}

Vec flatten_column_major(const Matrix& d) {
    const std::size_t n = d.rows();
    Vec v(n * d.cols());
    for (std::size_t l = 0; l < d.cols(); ++l)
        for (std::size_t k = 0; k < n; ++k) v[l * n + k] = d.at(k, l);
    return v;
}

DerivationMatrix unflatten_column_major(std::size_t n, const Vec& v) {
    if (v.size() != n * n) throw std::invalid_argument("unflatten_column_major: bad length");
    Matrix d(n, n);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) d.at(k, l) = v[l * n + k];
    return d;
}

}  // namespace leibniz
