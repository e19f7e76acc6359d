#pragma once

#include "leibniz/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// Element of an algebra, as coordinates in the basis e_1..e_n.
using Element = Vec;

/// Finite-dimensional algebra given by structure constants on a fixed
/// basis e_1..e_n:  [e_i, e_j] = sum_k c_{ijk} e_k.
///
/// Basis indices are 1-based everywhere in this API, matching the standard
/// mathematical convention; only nonzero coefficients are stored, and a
/// missing (i, j) pair means the product is zero.
class Algebra {
public:
    using Terms = std::map<std::size_t, Rational>;
    using Tensor = std::map<std::pair<std::size_t, std::size_t>, Terms>;

    explicit Algebra(std::size_t n) : n_(n) {}

    std::size_t dim() const { return n_; }

    /// Accumulates c onto c_{ijk}; erases the entry if the sum is zero.
    /// Indices must lie in 1..n.
    void add_term(std::size_t i, std::size_t j, std::size_t k, const Rational& c);

    /// Structure constants of [e_i, e_j]; empty map when the product is zero.
    const Terms& product(std::size_t i, std::size_t j) const;

    const Tensor& tensor() const { return tensor_; }

    Element basis_element(std::size_t i) const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.n_ == b.n_ && a.tensor_ == b.tensor_;
    }

private:
    void check_index(std::size_t i) const;

    std::size_t n_;
    Tensor tensor_;
};

/// Bilinear extension of the structure tensor; throws std::invalid_argument
/// on coordinate-length mismatch.
Element bracket(const Algebra& a, const Element& x, const Element& y);

/// [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]; the zero element
/// exactly when the Leibniz identity holds on that basis triple.
Element leibniz_defect(const Algebra& a, std::size_t i, std::size_t j, std::size_t k);

struct LeibnizWitness {
    std::size_t i, j, k;
    Element defect;
};

/// Scans all n^3 basis triples; returns the lexicographically first failing
/// triple, or nullopt when the Leibniz identity holds everywhere.
std::optional<LeibnizWitness> check_leibniz(const Algebra& a);

/// True iff the tensor is antisymmetric and the Leibniz identity holds;
/// together those make the bracket a Lie bracket.
bool is_lie(const Algebra& a);

/// Subspace of the coordinate space, stored as the reduced row-echelon
/// basis of its span so that equal subspaces compare equal.
class Subspace {
public:
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    bool contains(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(std::size_t ambient, Matrix basis)
        : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_;
    Matrix basis_;  // dim x ambient, RREF, no zero rows
};

/// L^1 = L, L^{k+1} = [L^k, L]. The returned list ends with the first zero
/// term or with the first repeated term, whichever comes first, so it is
/// finite for non-nilpotent algebras too.
std::vector<Subspace> lower_central_series(const Algebra& a);

std::vector<std::size_t> series_dims(const Algebra& a);

/// True iff the lower central series reaches the zero subspace.
bool is_nilpotent(const Algebra& a);

/// True iff dim L^i = n - i for all 2 <= i <= n.
bool is_filiform(const Algebra& a);

/// Dimensions of the quotients L^i / L^{i+1}; throws std::domain_error on a
/// non-nilpotent algebra.
std::vector<std::size_t> gradation_dims(const Algebra& a);

/// Human-readable linear combination, e.g. "e3 + 2*e4", or "0".
std::string format_element(const Element& x);

}  // namespace leibniz
